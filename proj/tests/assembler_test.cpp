// Copyright 2026 The ptbox Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "ptbox/assembler.hpp"
#include "ptbox/matelem.hpp"

using namespace ptbox;

namespace {

constexpr double kPi = 3.14159265358979323846;

// 2-D Gauss-Legendre quadrature of <f| x^p y^q |h> over [-1,1]^2.
double quad_element(int p, int q, const SymFunction& f, const SymFunction& h) {
  static const QuadratureRule rule = gauss_legendre(64);
  double sum = 0.0;
  for (size_t i = 0; i < rule.nodes.size(); ++i) {
    const double x = rule.nodes[i];
    const double wx = rule.weights[i] * std::pow(x, p);
    double inner = 0.0;
    for (size_t j = 0; j < rule.nodes.size(); ++j) {
      const double y = rule.nodes[j];
      inner += rule.weights[j] * std::pow(y, q) * eval(f, x, y) * eval(h, x, y);
    }
    sum += wx * inner;
  }
  return sum;
}

}  // namespace

TEST_CASE("symmetry group selection by exponent pattern") {
  CHECK(symmetry_group(PotentialFamily::xy()) == Group::C2v);
  CHECK(symmetry_group(PotentialFamily::xyy()) == Group::C2);
  CHECK(symmetry_group(PotentialSpec{3, 3, {0, 1}}) == Group::C2v);
  CHECK(symmetry_group(PotentialSpec{3, 2, {0, 1}}) == Group::C2);
  CHECK_THROWS_AS(symmetry_group(PotentialSpec{2, 2, {0, 1}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(symmetry_group(PotentialSpec{2, 1, {0, 1}}),
                  std::invalid_argument);
}

TEST_CASE("potential elements agree with a 2-D quadrature oracle") {
  const ElementTables tables(6);
  std::vector<SymFunction> fns = {
      make_single({1, 1}),          make_single({2, 2}),
      make_single({1, 2}),          make_single({3, 4}),
      make_pair(SymKind::Plus, {1, 2}).fn,  make_pair(SymKind::Minus, {1, 2}).fn,
      make_pair(SymKind::Plus, {1, 3}).fn,  make_pair(SymKind::Minus, {1, 3}).fn,
      make_pair(SymKind::Plus, {2, 4}).fn,  make_pair(SymKind::Minus, {3, 4}).fn,
  };
  for (auto [p, q] : {std::pair{1, 1}, std::pair{1, 2}, std::pair{2, 2}}) {
    for (const auto& f : fns)
      for (const auto& h : fns) {
        const double got = potential_element(tables, p, q, f, h);
        const double want = quad_element(p, q, f, h);
        CHECK(std::abs(got - want) <= 1e-12);
        // Symmetric in its arguments.
        CHECK(got == potential_element(tables, p, q, h, f));
      }
  }
}

TEST_CASE("full assembly reproduces the lowest xy coupling exactly") {
  const BasisSpec spec{2};
  const ElementTables tables(spec.max_index);
  const double a = 0.7;
  const auto block = assemble_full(spec, PotentialSpec::xy(a), tables);
  REQUIRE(block.dim() == 4);
  REQUIRE(!block.irrep.has_value());
  // all_modes order for M=2: (1,1), (1,2), (2,1), (2,2).
  const double c = 1024.0 / (81.0 * kPi * kPi * kPi * kPi);
  const std::complex<double> ia{0.0, a};
  for (int i = 0; i < 4; ++i) {
    CHECK(block.matrix(i, i).real() ==
          doctest::Approx(unperturbed_energy(block.basis[i])).epsilon(1e-15));
    CHECK(block.matrix(i, i).imag() == 0.0);
  }
  CHECK(std::abs(block.matrix(1, 2) - ia * c) <= 1e-15);
  CHECK(std::abs(block.matrix(2, 1) - ia * c) <= 1e-15);
  CHECK(std::abs(block.matrix(0, 3) - ia * 1024.0 / (81.0 * std::pow(kPi, 4))) <=
        1e-15);
  CHECK(block.matrix(0, 1) == std::complex<double>{0.0, 0.0});
  CHECK(block.matrix(0, 2) == std::complex<double>{0.0, 0.0});
}

TEST_CASE("one-dimensional B1/B2 blocks at M=2 carry opposite couplings") {
  const BasisSpec spec{2};
  const ElementTables tables(spec.max_index);
  const double a = 1.3;
  const auto b1 =
      assemble_block(spec, {Group::C2v, Irrep::B1}, PotentialSpec::xy(a), tables);
  const auto b2 =
      assemble_block(spec, {Group::C2v, Irrep::B2}, PotentialSpec::xy(a), tables);
  REQUIRE(b1.dim() == 1);
  REQUIRE(b2.dim() == 1);
  const double e0 = 5.0 * kPi * kPi / 4.0;
  const double c = 1024.0 / (81.0 * std::pow(kPi, 4));
  CHECK(std::abs(b1.matrix(0, 0) - std::complex<double>{e0, a * c}) <= 1e-12);
  CHECK(std::abs(b2.matrix(0, 0) - std::complex<double>{e0, -a * c}) <= 1e-12);
  CHECK(b1.matrix(0, 0) == std::conj(b2.matrix(0, 0)));
}

TEST_CASE("couplings between distinct irrep blocks vanish exactly") {
  const BasisSpec spec{6};
  const ElementTables tables(spec.max_index);
  CHECK(cross_irrep_residual(spec, PotentialSpec::xy(1.0), tables) == 0.0);
  CHECK(cross_irrep_residual(spec, PotentialSpec::xyy(1.0), tables) == 0.0);
}

TEST_CASE("adapted transform of the full matrix is block diagonal") {
  const BasisSpec spec{5};
  const ElementTables tables(spec.max_index);
  for (const PotentialFamily fam : {PotentialFamily::xy(), PotentialFamily::xyy()}) {
    const PotentialSpec pot = fam.at(0.9);
    const Group group = symmetry_group(pot);
    const auto full = assemble_full(spec, pot, tables);
    const Eigen::MatrixXd U = adaptation_matrix(spec, group);
    const Eigen::MatrixXcd T = U.transpose() * full.matrix * U;

    int offset = 0;
    std::vector<std::pair<int, int>> spans;
    for (Irrep irrep : irreps_of(group)) {
      const auto block = assemble_block(spec, {group, irrep}, pot, tables);
      const int n = block.dim();
      // Diagonal block reproduces the direct per-irrep assembly.
      const double dev =
          (T.block(offset, offset, n, n) - block.matrix).cwiseAbs().maxCoeff();
      CHECK(dev <= 1e-12);
      spans.push_back({offset, n});
      offset += n;
    }
    REQUIRE(offset == full.dim());
    for (size_t bi = 0; bi < spans.size(); ++bi)
      for (size_t bj = 0; bj < spans.size(); ++bj) {
        if (bi == bj) continue;
        const double off = T.block(spans[bi].first, spans[bj].first,
                                   spans[bi].second, spans[bj].second)
                               .cwiseAbs()
                               .maxCoeff();
        CHECK(off <= 1e-13);
      }
  }
}

TEST_CASE("coupling matrix is independent of the thread count") {
  const BasisSpec spec{8};
  const ElementTables tables(spec.max_index);
  const auto basis = build_basis(spec, {Group::C2, Irrep::A});
  const Eigen::MatrixXd serial = coupling_matrix(basis, 1, 2, tables, 1);
  const Eigen::MatrixXd parallel = coupling_matrix(basis, 1, 2, tables, 4);
  REQUIRE(serial.rows() == parallel.rows());
  CHECK((serial - parallel).cwiseAbs().maxCoeff() == 0.0);
  CHECK((serial - serial.transpose()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("assembler validates its inputs") {
  const BasisSpec spec{4};
  const ElementTables tables(spec.max_index);
  CHECK_THROWS_AS(
      assemble_block(spec, {Group::C2, Irrep::A}, PotentialSpec::xy(1.0), tables),
      std::invalid_argument);
  const ElementTables small(3);
  CHECK_THROWS_AS(assemble_full(spec, PotentialSpec::xy(1.0), small),
                  std::invalid_argument);
}
