// Copyright 2026 The ptbox Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ptbox/matelem.hpp"

using namespace ptbox;

namespace {
constexpr double kPi = std::numbers::pi;
const double kPi2 = kPi * kPi;
const double kPi4 = kPi2 * kPi2;
}  // namespace

TEST_CASE("x elements: frozen values and exact parity zeros") {
  CHECK(x_element(1, 2) ==
        doctest::Approx(-32.0 / (9.0 * kPi2)).epsilon(1e-15));
  CHECK(x_element(1, 2) * x_element(1, 2) ==
        doctest::Approx(1024.0 / (81.0 * kPi4)).epsilon(1e-14));
  CHECK(x_element(2, 3) == doctest::Approx(-96.0 / (25.0 * kPi2)).epsilon(1e-15));
  CHECK(x_element(1, 1) == 0.0);
  CHECK(x_element(1, 3) == 0.0);
  CHECK(x_element(2, 4) == 0.0);
  CHECK(x_element(4, 7) == x_element(7, 4));
}

TEST_CASE("x^2 elements: frozen values and exact parity zeros") {
  CHECK(x2_element(1, 1) ==
        doctest::Approx(1.0 / 3.0 - 2.0 / kPi2).epsilon(1e-15));
  CHECK(x2_element(1, 1) > 0.0);
  CHECK(x2_element(1, 1) < 1.0 / 3.0);
  CHECK(x2_element(1, 3) == doctest::Approx(3.0 / (2.0 * kPi2)).epsilon(1e-15));
  CHECK(x2_element(1, 2) == 0.0);
  CHECK(x2_element(3, 6) == 0.0);
  CHECK(x2_element(2, 6) == x2_element(6, 2));
}

TEST_CASE("Gauss-Legendre rule integrates exactly and symmetrically") {
  const auto rule = gauss_legendre(64);
  REQUIRE(rule.nodes.size() == 64);
  double total = 0.0, x2 = 0.0;
  for (size_t i = 0; i < rule.nodes.size(); ++i) {
    total += rule.weights[i];
    x2 += rule.weights[i] * rule.nodes[i] * rule.nodes[i];
    CHECK(rule.nodes[i] == doctest::Approx(-rule.nodes[63 - i]).epsilon(1e-15));
  }
  CHECK(total == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(x2 == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("closed forms agree with the quadrature oracle up to k,m = 20") {
  const ElementTables tables(20);
  double worst = 0.0;
  for (int p = 0; p <= 2; ++p)
    for (int k = 1; k <= 20; ++k)
      for (int m = 1; m <= 20; ++m)
        worst = std::max(worst, std::abs(tables.table(p)(k, m) -
                                         quadrature_oracle(p, k, m)));
  CHECK(worst <= 1e-12);
}

TEST_CASE("element tables are symmetric with exact forbidden entries") {
  const OneDimElementTable t1(1, 12);
  const OneDimElementTable t2(2, 12);
  for (int k = 1; k <= 12; ++k)
    for (int m = 1; m <= 12; ++m) {
      CHECK(t1(k, m) == t1(m, k));
      CHECK(t2(k, m) == t2(m, k));
      if ((k + m) % 2 == 1) {
        CHECK(t1(k, m) == x_element(k, m));
        CHECK(t2(k, m) == 0.0);
      } else {
        CHECK(t1(k, m) == 0.0);
        CHECK(t2(k, m) == x2_element(k, m));
      }
    }
  CHECK_THROWS_AS(t1(0, 1), std::out_of_range);
  CHECK_THROWS_AS(t1(1, 13), std::out_of_range);
}

TEST_CASE("higher exponents fall back to quadrature with exact parity zeros") {
  const OneDimElementTable t3(3, 8);
  CHECK(t3(1, 1) == 0.0);
  CHECK(t3(2, 4) == 0.0);
  CHECK(t3(1, 2) == doctest::Approx(quadrature_oracle(3, 1, 2)).epsilon(1e-15));
  CHECK(std::abs(t3(1, 2)) > 1e-3);
}
