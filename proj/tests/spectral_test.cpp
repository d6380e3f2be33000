// Copyright 2026 The ptbox Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>
#include <complex>
#include <random>
#include <vector>

#include "ptbox/assembler.hpp"
#include "ptbox/spectral.hpp"

using namespace ptbox;
using spectral::CharPoly;
using Complex = std::complex<double>;

TEST_CASE("diagonal matrices return their entries sorted by (Re, Im)") {
  Eigen::MatrixXcd H = Eigen::MatrixXcd::Zero(4, 4);
  H(0, 0) = Complex{3.0, 0.0};
  H(1, 1) = Complex{1.0, 2.0};
  H(2, 2) = Complex{1.0, -2.0};
  H(3, 3) = Complex{-5.0, 0.5};
  const auto s = spectral::eigen(H);
  REQUIRE(s.eigenvalues.size() == 4);
  CHECK(std::abs(s.eigenvalues(0) - Complex{-5.0, 0.5}) <= 1e-14);
  CHECK(std::abs(s.eigenvalues(1) - Complex{1.0, -2.0}) <= 1e-14);
  CHECK(std::abs(s.eigenvalues(2) - Complex{1.0, 2.0}) <= 1e-14);
  CHECK(std::abs(s.eigenvalues(3) - Complex{3.0, 0.0}) <= 1e-14);
  CHECK(!s.has_vectors());
}

TEST_CASE("imaginary off-diagonal coupling gives the exact +/- i a c pair") {
  const double a = 0.37, c = 0.8;
  Eigen::MatrixXcd H = Eigen::MatrixXcd::Zero(2, 2);
  H(0, 1) = Complex{0.0, a * c};
  H(1, 0) = Complex{0.0, a * c};
  const auto s = spectral::eigen(H, true);
  REQUIRE(s.has_vectors());
  CHECK(std::abs(s.eigenvalues(0) - Complex{0.0, -a * c}) <= 1e-14);
  CHECK(std::abs(s.eigenvalues(1) - Complex{0.0, a * c}) <= 1e-14);
  for (int k = 0; k < 2; ++k) {
    CHECK(s.residuals(k) <= 1e-14);
    CHECK(s.eigenvectors.col(k).norm() == doctest::Approx(1.0).epsilon(1e-12));
    const Eigen::VectorXcd r =
        H * s.eigenvectors.col(k) - s.eigenvalues(k) * s.eigenvectors.col(k);
    CHECK(r.norm() <= 1e-14);
  }
}

TEST_CASE("residuals are small for an assembled block") {
  const BasisSpec spec{8};
  const ElementTables tables(spec.max_index);
  const auto block =
      assemble_block(spec, {Group::C2v, Irrep::A1}, PotentialSpec::xy(2.0), tables);
  const auto s = spectral::eigen(block, true);
  REQUIRE(s.eigenvalues.size() == block.dim());
  CHECK(s.residuals.maxCoeff() <= 1e-12);
  for (int k = 1; k < block.dim(); ++k) {
    const bool ordered =
        s.eigenvalues(k - 1).real() < s.eigenvalues(k).real() ||
        (s.eigenvalues(k - 1).real() == s.eigenvalues(k).real() &&
         s.eigenvalues(k - 1).imag() <= s.eigenvalues(k).imag());
    CHECK(ordered);
  }
}

TEST_CASE("characteristic polynomial matches a hand expansion at n = 3") {
  Eigen::MatrixXcd H(3, 3);
  H << Complex{2, 0}, Complex{0, 1}, Complex{0, 0},
       Complex{0, 1}, Complex{3, 0}, Complex{1, 0},
       Complex{0, 0}, Complex{1, 0}, Complex{5, 0};
  // det(lambda I - H) = lambda^3 - tr lambda^2 + s2 lambda - det.
  const Complex tr = H(0, 0) + H(1, 1) + H(2, 2);
  const Complex s2 = H(0, 0) * H(1, 1) - H(0, 1) * H(1, 0) +
                     H(0, 0) * H(2, 2) - H(0, 2) * H(2, 0) +
                     H(1, 1) * H(2, 2) - H(1, 2) * H(2, 1);
  const Complex det = H(0, 0) * (H(1, 1) * H(2, 2) - H(1, 2) * H(2, 1)) -
                      H(0, 1) * (H(1, 0) * H(2, 2) - H(1, 2) * H(2, 0)) +
                      H(0, 2) * (H(1, 0) * H(2, 1) - H(1, 1) * H(2, 0));
  const CharPoly p = spectral::char_poly(H);
  REQUIRE(p.degree() == 3);
  CHECK(std::abs(p.coeffs[3] - Complex{1, 0}) == 0.0);
  CHECK(std::abs(p.coeffs[2] + tr) <= 1e-13);
  CHECK(std::abs(p.coeffs[1] - s2) <= 1e-13);
  CHECK(std::abs(p.coeffs[0] + det) <= 1e-13);
  // Every eigenvalue is a root.
  const auto s = spectral::eigen(H);
  for (int k = 0; k < 3; ++k)
    CHECK(std::abs(spectral::evaluate(p, s.eigenvalues(k))) <= 1e-11);
}

TEST_CASE("characteristic polynomial refuses dimensions beyond its guard") {
  const Eigen::MatrixXcd H = Eigen::MatrixXcd::Identity(37, 37);
  CHECK_THROWS_AS(spectral::char_poly(H), std::invalid_argument);
  CHECK_NOTHROW(spectral::char_poly(Eigen::MatrixXcd::Identity(36, 36)));
}

TEST_CASE("optimal assignment recovers a permutation of perturbed values") {
  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> unif(-4.0, 4.0);
  const int n = 12;
  Eigen::VectorXcd from(n);
  for (int i = 0; i < n; ++i) from(i) = Complex{unif(rng), unif(rng)};
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  Eigen::VectorXcd to(n);
  for (int i = 0; i < n; ++i)
    to(perm[i]) = from(i) + Complex{1e-6 * unif(rng), 1e-6 * unif(rng)};
  const auto sigma = spectral::optimal_assignment(from, to);
  REQUIRE(int(sigma.size()) == n);
  for (int i = 0; i < n; ++i) CHECK(sigma[i] == perm[i]);
  CHECK(spectral::multiset_distance(from, to) <= 1e-5);
}

TEST_CASE("min cost assignment beats the identity matching when it should") {
  Eigen::MatrixXd cost(2, 2);
  cost << 10.0, 1.0,
          1.0, 10.0;
  const auto sigma = spectral::min_cost_assignment(cost);
  CHECK(sigma[0] == 1);
  CHECK(sigma[1] == 0);
}

TEST_CASE("multiset distance of identical spectra is zero") {
  Eigen::VectorXcd v(3);
  v << Complex{1, 1}, Complex{2, -1}, Complex{0, 0};
  CHECK(spectral::multiset_distance(v, v) == 0.0);
}

TEST_CASE("conjugation pairing accepts mirrored spectra and rejects shifts") {
  const BasisSpec spec{6};
  const ElementTables tables(spec.max_index);
  const auto b1 =
      assemble_block(spec, {Group::C2v, Irrep::B1}, PotentialSpec::xy(1.5), tables);
  const auto b2 =
      assemble_block(spec, {Group::C2v, Irrep::B2}, PotentialSpec::xy(1.5), tables);
  const auto s1 = spectral::eigen(b1);
  const auto s2 = spectral::eigen(b2);
  const auto ok = spectral::conjugation_pairing(s1, s2, 1e-8);
  CHECK(ok.matched);
  CHECK(ok.worst_distance <= 1e-8);
  CHECK(ok.pairs.size() == size_t(b1.dim()));

  auto shifted = s2;
  shifted.eigenvalues.array() += Complex{1e-3, 0.0};
  const auto bad = spectral::conjugation_pairing(s1, shifted, 1e-8);
  CHECK(!bad.matched);
  CHECK(bad.worst_distance >= 1e-4);
}

TEST_CASE("eigen solves of the same block are deterministic") {
  const BasisSpec spec{10};
  const ElementTables tables(spec.max_index);
  const auto block =
      assemble_block(spec, {Group::C2, Irrep::A}, PotentialSpec::xyy(3.0), tables);
  const auto s1 = spectral::eigen(block);
  const auto s2 = spectral::eigen(block);
  CHECK((s1.eigenvalues - s2.eigenvalues).cwiseAbs().maxCoeff() == 0.0);
}
