// Copyright 2026 The ptbox Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <vector>

#include "ptbox/parallel.hpp"

using namespace ptbox;

TEST_CASE("explicit thread requests win over the environment") {
  CHECK(resolve_threads(3) == 3);
  CHECK(resolve_threads(1) == 1);

  ::setenv("PTBOX_THREADS", "5", 1);
  CHECK(resolve_threads(0) == 5);
  CHECK(resolve_threads(2) == 2);

  ::setenv("PTBOX_THREADS", "not-a-number", 1);
  CHECK(resolve_threads(0) >= 1);

  ::unsetenv("PTBOX_THREADS");
  CHECK(resolve_threads(0) >= 1);
}

TEST_CASE("serial and parallel loops fill identical outputs") {
  const int n = 1000;
  std::vector<double> serial(n, 0.0), parallel(n, 0.0);
  auto work = [](int i) {
    double acc = 0.0;
    for (int k = 1; k <= 50; ++k) acc += std::sin(double(i) / k);
    return acc;
  };
  parallel_for(n, 1, [&](int i) { serial[i] = work(i); });
  parallel_for(n, 4, [&](int i) { parallel[i] = work(i); });
  for (int i = 0; i < n; ++i) CHECK(serial[i] == parallel[i]);
}

TEST_CASE("degenerate loop bounds are handled") {
  int count = 0;
  parallel_for(0, 4, [&](int) { ++count; });
  CHECK(count == 0);
  parallel_for(1, 8, [&](int i) { count += i + 1; });
  CHECK(count == 1);
}
