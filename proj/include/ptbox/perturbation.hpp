// Copyright 2026 The ptbox Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

#include "ptbox/assembler.hpp"
#include "ptbox/boxbasis.hpp"
#include "ptbox/matelem.hpp"
#include "ptbox/pointgroup.hpp"

namespace ptbox {

// Degenerate first-order theory: diagonalize the perturbation restricted to
// one unperturbed degenerate group. Corrections are g * weights[k].
struct FirstOrderResult {
  DegenerateGroup group;
  Eigen::MatrixXd restriction;  // W_ij = <phi_i | x^p y^q | phi_j>, real symmetric
  Eigen::VectorXd weights;      // eigenvalues of W, ascending
  std::vector<std::complex<double>> corrections;
};

FirstOrderResult first_order(const DegenerateGroup& group,
                             const PotentialSpec& pot,
                             const ElementTables& tables);

// Closed form for the x y first-order splitting of the symmetry pair
// (m, n = m + 2j + 1): the corrections are +/- i a * this value.
double pair_splitting_magnitude(int m, int j);

// Central finite difference d E / d a at a = 0 for one tracked block level,
// against the first-order prediction i * w. Levels that are degenerate at
// a = 0 within the block are compared rank-by-rank in ascending Im slope.
// rel_error is relative for a nonzero prediction, absolute otherwise.
struct SlopeCheck {
  std::complex<double> fd_slope;
  std::complex<double> predicted;
  double rel_error = 0.0;
};

SlopeCheck slope_check(const BasisSpec& spec, IrrepLabel label, int level,
                       const PotentialFamily& family, double a_small,
                       const ElementTables& tables);

// Dichotomy at infinitesimal coupling, decided from computed first-order
// weights over every degenerate group of the truncated basis: any nonzero
// weight means complex eigenvalues for arbitrarily small a.
enum class PhaseKind { BrokenAtOrigin, RealWindowExpected };

struct PhaseVerdict {
  PhaseKind kind = PhaseKind::RealWindowExpected;
  double max_abs_weight = 0.0;
  std::string summary;
};

PhaseVerdict classify_phase_transition(const PotentialFamily& family,
                                       const BasisSpec& spec,
                                       const ElementTables& tables);

std::string to_string(PhaseKind kind);

}  // namespace ptbox
