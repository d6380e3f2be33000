// Copyright 2026 The ptbox Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <utility>

namespace ptbox {

// Number of worker threads to use. Precedence: explicit request > PTBOX_THREADS
// environment variable > OpenMP default. Always >= 1; 1 when built without OpenMP.
int resolve_threads(int requested = 0);

namespace detail {
void parallel_for_impl(int n, int threads, void* ctx, void (*body)(void*, int));
}

// Runs body(i) for i in [0, n). threads <= 1 is the serial reference path: a plain
// loop, no OpenMP involvement. Iterations must be independent; each writes its own
// output slot, so results are identical regardless of thread count.
template <class F>
void parallel_for(int n, int threads, F&& body) {
  if (threads <= 1) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  detail::parallel_for_impl(n, threads, &body,
                            [](void* ctx, int i) { (*static_cast<F*>(ctx))(i); });
}

}  // namespace ptbox
