// Copyright 2026 The ptbox Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "ptbox/assembler.hpp"
#include "ptbox/boxbasis.hpp"
#include "ptbox/matelem.hpp"
#include "ptbox/pointgroup.hpp"

namespace ptbox {

struct SweepConfig {
  double a_min = 0.0;
  double a_max = 100.0;
  double step = 0.5;
  int max_halvings = 8;  // adaptive refinement depth cap per interval
  int threads = 0;
};

// Labeled eigenvalue trajectories over the coupling grid. levels[k][b][l] is
// the eigenvalue of block b at a_values[k] carrying trajectory label l; labels
// start from the (Re, Im)-sorted spectrum at a_min and are continued from
// point to point by minimum-total-distance assignment. Intervals where levels
// attract each other faster than they separate are bisected (up to
// max_halvings) and the midpoints included in the output grid.
struct SweepResult {
  PotentialFamily family;
  BasisSpec spec;
  std::vector<IrrepLabel> irreps;
  std::vector<double> a_values;
  std::vector<std::vector<Eigen::VectorXcd>> levels;

  int block_count() const { return int(irreps.size()); }
  int point_count() const { return int(a_values.size()); }
};

SweepResult sweep(const PotentialFamily& family, const BasisSpec& spec,
                  const SweepConfig& config, const ElementTables& tables);

// A coalescence where a real trajectory pair turns into a complex-conjugate
// pair as a grows, refined by bisection to bracket_width <= bracket_target.
struct ExceptionalPoint {
  IrrepLabel irrep;
  int label_low = 0;
  int label_high = 0;
  double a_c = 0.0;
  std::complex<double> energy;  // pair mean at the bracket's real side
  double bracket_width = 0.0;
  double im_below = 0.0;  // max pair |Im| at the real end of the bracket
  double im_above = 0.0;  // max pair |Im| at the complex end
};

struct EpScanConfig {
  double im_threshold = 1e-9;   // |Im| above this counts as complex
  double bracket_target = 1e-6;
  double conj_slack = 1e-6;     // partner must satisfy |E_p - conj(E_l)| <= this
  int max_label = 16;           // only trajectories with label < max_label seed a scan
  int threads = 0;
};

// Scans every block of a labeled sweep for real -> complex crossings, pairs
// each with its conjugate partner, and bisects the bracketing interval.
// Results are ordered by (block, a_c, label_low).
std::vector<ExceptionalPoint> find_exceptional_points(
    const SweepResult& sr, const ElementTables& tables,
    const EpScanConfig& config = {});

// Spot checks on both sides of one refined exceptional point, at a_c -+ delta:
// the pair must be real below and a conjugate pair above.
struct EpInvariants {
  double below_max_im = 0.0;
  double above_min_im = 0.0;
  double above_conj_residual = 0.0;
};

EpInvariants ep_invariants(const ExceptionalPoint& ep,
                           const PotentialFamily& family, const BasisSpec& spec,
                           const ElementTables& tables, double delta = 1e-4);

// Antiunitary bookkeeping for one eigenlevel: where Ax maps its eigenvector,
// and whether that image is the level itself (unbroken) or a partner level
// (broken). Levels that are numerically degenerate within a block can make the
// overlap attribution ambiguous; away from such points the verdict is sharp.
struct PtVerdict {
  IrrepLabel irrep;
  int level = 0;
  std::complex<double> energy;
  bool broken = false;
  IrrepLabel partner_irrep;
  int partner_level = 0;
  double overlap = 0.0;                  // |<u_partner, Ax v>|
  double partner_energy_mismatch = 0.0;  // |E_partner - conj(E)|
  bool im_consistent = true;             // (|Im E| > im_tol) == broken
};

std::vector<PtVerdict> pt_breaking_report(const PotentialFamily& family,
                                          double a, const BasisSpec& spec,
                                          const ElementTables& tables,
                                          double im_tol = 1e-9);

}  // namespace ptbox
