// Copyright 2026 The ptbox Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <numbers>

#include "ptbox/boxbasis.hpp"
#include "ptbox/matelem.hpp"

using namespace ptbox;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("unperturbed energies are (m^2+n^2) pi^2 / 4") {
  CHECK(unperturbed_energy({1, 1}) == doctest::Approx(kPi * kPi / 2).epsilon(1e-15));
  CHECK(unperturbed_energy({1, 2}) ==
        doctest::Approx(5.0 * kPi * kPi / 4).epsilon(1e-15));
  CHECK(unperturbed_energy({20, 20}) ==
        doctest::Approx(200.0 * kPi * kPi).epsilon(1e-15));
  CHECK(energy_key({3, 4}) == 25);
  CHECK_THROWS_AS(unperturbed_energy({0, 1}), std::invalid_argument);
}

TEST_CASE("mode ordering is ascending energy with lexicographic ties") {
  const auto modes = all_modes({3});
  REQUIRE(modes.size() == 9);
  const std::vector<Mode> expect = {{1, 1}, {1, 2}, {2, 1}, {2, 2}, {1, 3},
                                    {3, 1}, {2, 3}, {3, 2}, {3, 3}};
  for (size_t i = 0; i < expect.size(); ++i) CHECK(modes[i] == expect[i]);
  CHECK(basis_size({20}) == 400);
  CHECK_THROWS_AS(basis_size({1}), std::invalid_argument);
}

TEST_CASE("eigenfunctions are normalized and orthogonal on [-1,1]") {
  const auto rule = gauss_legendre(64);
  for (int m : {1, 2, 7}) {
    for (int k : {1, 2, 7}) {
      double acc = 0.0;
      for (size_t i = 0; i < rule.nodes.size(); ++i)
        acc += rule.weights[i] * eval_1d(m, rule.nodes[i]) *
               eval_1d(k, rule.nodes[i]);
      CHECK(std::abs(acc - (m == k ? 1.0 : 0.0)) <= 1e-14);
    }
  }
}

TEST_CASE("1-d modes have parity (-1)^(m+1) about the box center") {
  for (int m = 1; m <= 6; ++m) {
    const double sign = (m % 2 == 1) ? 1.0 : -1.0;
    for (double x : {0.13, 0.5, 0.97}) {
      CHECK(eval_1d(m, -x) ==
            doctest::Approx(sign * eval_1d(m, x)).epsilon(1e-13));
    }
  }
  CHECK(eval({2, 3}, 0.2, -0.4) ==
        doctest::Approx(eval_1d(2, 0.2) * eval_1d(3, -0.4)).epsilon(1e-15));
}

TEST_CASE("degenerate groups split into singletons, pairs and accidentals") {
  const auto groups = degenerate_groups({7});
  size_t members = 0;
  bool saw_accidental = false;
  for (const auto& g : groups) {
    members += g.members.size();
    for (const Mode& mode : g.members)
      CHECK(unperturbed_energy(mode) == doctest::Approx(g.energy).epsilon(1e-15));
    if (g.members.size() == 1) CHECK(g.kind == GroupKind::Singleton);
    if (g.kind == GroupKind::SymmetryPair) {
      REQUIRE(g.members.size() == 2);
      CHECK(g.members[0].m == g.members[1].n);
      CHECK(g.members[0].n == g.members[1].m);
    }
    if (g.members.size() == 3) {
      saw_accidental = true;
      CHECK(g.kind == GroupKind::Accidental);
      CHECK(g.members[0] == Mode{1, 7});
      CHECK(g.members[1] == Mode{5, 5});
      CHECK(g.members[2] == Mode{7, 1});
    }
  }
  CHECK(members == 49);
  CHECK(saw_accidental);
}

TEST_CASE("distinct energies never merge at tight tolerance") {
  for (const auto& g : degenerate_groups({12}, 1e-12)) {
    const auto key = energy_key(g.members.front());
    for (const Mode& mode : g.members) CHECK(energy_key(mode) == key);
  }
}
