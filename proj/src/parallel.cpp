// Copyright 2026 The ptbox Authors
// SPDX-License-Identifier: Apache-2.0

#include "ptbox/parallel.hpp"

#include <algorithm>
#include <cstdlib>

#ifdef PTBOX_HAVE_OPENMP
#include <omp.h>
#endif

namespace ptbox {

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("PTBOX_THREADS")) {
    int n = std::atoi(env);
    if (n > 0) return n;
  }
#ifdef PTBOX_HAVE_OPENMP
  return std::max(1, omp_get_max_threads());
#else
  return 1;
#endif
}

namespace detail {

void parallel_for_impl(int n, int threads, void* ctx, void (*body)(void*, int)) {
#ifdef PTBOX_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (int i = 0; i < n; ++i) body(ctx, i);
#else
  (void)threads;
  for (int i = 0; i < n; ++i) body(ctx, i);
#endif
}

}  // namespace detail
}  // namespace ptbox
