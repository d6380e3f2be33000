// Copyright 2026 The ptbox Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <optional>
#include <vector>

#include "ptbox/boxbasis.hpp"
#include "ptbox/matelem.hpp"
#include "ptbox/pointgroup.hpp"

namespace ptbox {

// H = p_x^2 + p_y^2 + g x^p y^q on the box, hbar = 2m = 1. The PT-symmetric
// models use purely imaginary coupling g = i a.
struct PotentialSpec {
  int p = 1;
  int q = 1;
  std::complex<double> g{0.0, 0.0};

  static PotentialSpec xy(double a) { return {1, 1, {0.0, a}}; }
  static PotentialSpec xyy(double a) { return {1, 2, {0.0, a}}; }
};

// One-parameter family g = i a at fixed exponents.
struct PotentialFamily {
  int p = 1;
  int q = 1;

  PotentialSpec at(double a) const { return {p, q, {0.0, a}}; }
  static PotentialFamily xy() { return {1, 1}; }
  static PotentialFamily xyy() { return {1, 2}; }
  friend bool operator==(const PotentialFamily&, const PotentialFamily&) = default;
};

// Spatial symmetry group of x^p y^q that survives multiplication by i:
// p == q odd -> C2v (diagonal mirrors), p odd / q even -> C2 {E, y -> -y}.
// Other exponent patterns are outside the block-diagonalization contract.
Group symmetry_group(const PotentialSpec& pot);
inline Group symmetry_group(const PotentialFamily& fam) {
  return symmetry_group(fam.at(1.0));
}

struct HamiltonianBlock {
  BasisSpec spec;
  std::optional<IrrepLabel> irrep;  // nullopt: full product basis
  PotentialSpec potential;
  std::vector<SymFunction> basis;
  Eigen::MatrixXcd matrix;

  int dim() const { return int(basis.size()); }
};

// <f | x^p y^q | h> expanded over the +/- pair terms; parity-forbidden 1-D
// factors are exact zeros, so symmetry-forbidden couplings vanish exactly.
double potential_element(const ElementTables& tables, int p, int q,
                         const SymFunction& f, const SymFunction& h);

// Real symmetric coupling matrix C_ij = <f_i | x^p y^q | f_j>.
Eigen::MatrixXd coupling_matrix(const std::vector<SymFunction>& basis, int p,
                                int q, const ElementTables& tables,
                                int threads = 0);

// H over the full product basis (all_modes order): diag(E0) + g C.
HamiltonianBlock assemble_full(const BasisSpec& spec, const PotentialSpec& pot,
                               const ElementTables& tables, int threads = 0);

// H restricted to one symmetry block of symmetry_group(pot).
HamiltonianBlock assemble_block(const BasisSpec& spec, IrrepLabel label,
                                const PotentialSpec& pot,
                                const ElementTables& tables, int threads = 0);

// Largest |<f|V|h>| over all pairs of distinct irrep blocks; identically zero
// when the symmetry bookkeeping is right.
double cross_irrep_residual(const BasisSpec& spec, const PotentialSpec& pot,
                            const ElementTables& tables);

}  // namespace ptbox
