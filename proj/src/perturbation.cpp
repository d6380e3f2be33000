// Copyright 2026 The ptbox Authors
// SPDX-License-Identifier: Apache-2.0

#include "ptbox/perturbation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "ptbox/spectral.hpp"

namespace ptbox {

FirstOrderResult first_order(const DegenerateGroup& group,
                             const PotentialSpec& pot,
                             const ElementTables& tables) {
  const int n = int(group.members.size());
  if (n == 0) throw std::invalid_argument("empty degenerate group");
  const OneDimElementTable& Xp = tables.table(pot.p);
  const OneDimElementTable& Xq = tables.table(pot.q);

  FirstOrderResult result;
  result.group = group;
  result.restriction.resize(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Mode a = group.members[i], b = group.members[j];
      result.restriction(i, j) = Xp(a.m, b.m) * Xq(a.n, b.n);
    }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(result.restriction);
  result.weights = solver.eigenvalues();
  result.corrections.reserve(n);
  for (int k = 0; k < n; ++k)
    result.corrections.push_back(pot.g * result.weights[k]);
  return result;
}

double pair_splitting_magnitude(int m, int j) {
  if (m < 1 || j < 0) throw std::invalid_argument("need m >= 1, j >= 0");
  constexpr double pi = std::numbers::pi;
  const double num = 256.0 * double(m) * m * double(m + 2 * j + 1) * (m + 2 * j + 1);
  const double d1 = double(2 * j + 1);
  const double d2 = double(2 * m + 2 * j + 1);
  return num / (pi * pi * pi * pi * d1 * d1 * d1 * d1 * d2 * d2 * d2 * d2);
}

SlopeCheck slope_check(const BasisSpec& spec, IrrepLabel label, int level,
                       const PotentialFamily& family, double a_small,
                       const ElementTables& tables) {
  if (a_small <= 0.0) throw std::invalid_argument("a_small must be positive");
  const auto basis = build_basis(spec, label);
  const int n = int(basis.size());
  if (level < 0 || level >= n) throw std::out_of_range("level outside block");

  // Levels sharing the tracked level's exact E0 key split together.
  const auto key = energy_key(basis[level].mode);
  std::vector<int> degenerate_set;
  for (int i = 0; i < n; ++i)
    if (energy_key(basis[i].mode) == key) degenerate_set.push_back(i);
  const int rank = int(std::lower_bound(degenerate_set.begin(),
                                        degenerate_set.end(), level) -
                       degenerate_set.begin());
  const int s = int(degenerate_set.size());

  const Eigen::MatrixXd C =
      coupling_matrix(basis, family.p, family.q, tables, 1);
  Eigen::MatrixXd W(s, s);
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j)
      W(i, j) = C(degenerate_set[i], degenerate_set[j]);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(W);
  const Eigen::VectorXd w = solver.eigenvalues();

  Eigen::VectorXcd e0(n);
  for (int i = 0; i < n; ++i) e0[i] = unperturbed_energy(basis[i]);
  const auto plus =
      spectral::eigen(assemble_block(spec, label, family.at(a_small), tables, 1));
  const auto minus =
      spectral::eigen(assemble_block(spec, label, family.at(-a_small), tables, 1));

  const auto sp = spectral::optimal_assignment(e0, plus.eigenvalues);
  const auto sm = spectral::optimal_assignment(e0, minus.eigenvalues);
  Eigen::VectorXcd p_vals(s), m_vals(s);
  for (int i = 0; i < s; ++i) {
    p_vals[i] = plus.eigenvalues[sp[degenerate_set[i]]];
    m_vals[i] = minus.eigenvalues[sm[degenerate_set[i]]];
  }

  const double e0_val = unperturbed_energy(basis[level]);
  double gap = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i)
    if (energy_key(basis[i].mode) != key)
      gap = std::min(gap, std::abs(unperturbed_energy(basis[i]) - e0_val));
  double moved = 0.0;
  for (int i = 0; i < s; ++i)
    moved = std::max({moved, std::abs(p_vals[i] - e0_val),
                      std::abs(m_vals[i] - e0_val)});
  if (moved >= gap / 2.0)
    throw std::runtime_error(
        "a_small too large: degenerate set cannot be tracked past its "
        "neighbors");

  const auto pair = spectral::optimal_assignment(p_vals, m_vals.conjugate());
  std::vector<std::complex<double>> fd(s);
  for (int i = 0; i < s; ++i)
    fd[i] = (p_vals[i] - m_vals[pair[i]]) / (2.0 * a_small);
  std::sort(fd.begin(), fd.end(), [](auto a, auto b) {
    if (a.imag() != b.imag()) return a.imag() < b.imag();
    return a.real() < b.real();
  });

  SlopeCheck check;
  check.fd_slope = fd[rank];
  check.predicted = std::complex<double>(0.0, 1.0) * w[rank];
  const double denom = std::abs(check.predicted);
  check.rel_error = std::abs(check.fd_slope - check.predicted) /
                    (denom > 0.0 ? denom : 1.0);
  return check;
}

PhaseVerdict classify_phase_transition(const PotentialFamily& family,
                                       const BasisSpec& spec,
                                       const ElementTables& tables) {
  const PotentialSpec pot = family.at(1.0);
  PhaseVerdict verdict;
  double witness_energy = 0.0;
  for (const DegenerateGroup& group : degenerate_groups(spec)) {
    const auto fo = first_order(group, pot, tables);
    const double w = fo.weights.cwiseAbs().maxCoeff();
    if (w > verdict.max_abs_weight) {
      verdict.max_abs_weight = w;
      witness_energy = group.energy;
    }
  }
  if (verdict.max_abs_weight > 1e-12) {
    verdict.kind = PhaseKind::BrokenAtOrigin;
    verdict.summary =
        "first-order corrections are imaginary and nonzero (largest weight " +
        std::to_string(verdict.max_abs_weight) + " at E0 = " +
        std::to_string(witness_energy) +
        "): complex eigenvalues for arbitrarily small a";
  } else {
    verdict.kind = PhaseKind::RealWindowExpected;
    verdict.summary =
        "every first-order correction vanishes: the spectrum stays real up to "
        "a finite coupling threshold";
  }
  return verdict;
}

std::string to_string(PhaseKind kind) {
  return kind == PhaseKind::BrokenAtOrigin ? "broken-at-origin" : "real-window-expected";
}

}  // namespace ptbox
