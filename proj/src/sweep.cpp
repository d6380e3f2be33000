// Copyright 2026 The ptbox Authors
// SPDX-License-Identifier: Apache-2.0

#include "ptbox/sweep.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

#include "ptbox/parallel.hpp"
#include "ptbox/spectral.hpp"

namespace ptbox {

namespace {

struct BlockCtx {
  IrrepLabel label;
  std::vector<SymFunction> basis;
  Eigen::VectorXd e0;
  Eigen::MatrixXd C;
};

BlockCtx make_block(IrrepLabel label, const PotentialFamily& family,
                    const BasisSpec& spec, const ElementTables& tables,
                    int threads) {
  BlockCtx ctx;
  ctx.label = label;
  ctx.basis = build_basis(spec, label);
  ctx.e0.resize(ctx.basis.size());
  for (int i = 0; i < int(ctx.basis.size()); ++i)
    ctx.e0[i] = unperturbed_energy(ctx.basis[i]);
  ctx.C = coupling_matrix(ctx.basis, family.p, family.q, tables, threads);
  return ctx;
}

std::vector<BlockCtx> make_blocks(const PotentialFamily& family,
                                  const BasisSpec& spec,
                                  const ElementTables& tables, int threads) {
  const Group group = symmetry_group(family);
  std::vector<BlockCtx> blocks;
  for (Irrep irrep : irreps_of(group))
    blocks.push_back(make_block({group, irrep}, family, spec, tables, threads));
  return blocks;
}

Eigen::VectorXcd solve_sorted(const BlockCtx& ctx, double a) {
  Eigen::MatrixXcd H =
      std::complex<double>(0.0, a) * ctx.C.cast<std::complex<double>>();
  H.diagonal() += ctx.e0.cast<std::complex<double>>();
  return spectral::eigen(H).eigenvalues;
}

Eigen::VectorXcd permute(const Eigen::VectorXcd& raw,
                         const std::vector<int>& sigma) {
  Eigen::VectorXcd out(raw.size());
  for (int i = 0; i < int(raw.size()); ++i) out[i] = raw[sigma[i]];
  return out;
}

// Assignment quality degrades when a trajectory pair closes in on itself
// faster than the step resolves: gap decisively shrinking and small against
// the per-step motion. Coalesced or exactly degenerate pairs cannot be
// sharpened further and are ignored.
bool needs_refine(const Eigen::VectorXcd& L, const Eigen::VectorXcd& R) {
  const int n = int(L.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double gap_l = std::abs(L[i] - L[j]);
      if (gap_l <= 1e-10) continue;
      const double gap_r = std::abs(R[i] - R[j]);
      if (gap_r >= 0.5 * gap_l) continue;
      const double motion = std::max(std::abs(R[i] - L[i]), std::abs(R[j] - L[j]));
      if (gap_r < 4.0 * motion) return true;
    }
  return false;
}

struct SweepBuilder {
  const std::vector<BlockCtx>& blocks;
  int max_halvings;
  std::vector<double> out_a;
  std::vector<std::vector<Eigen::VectorXcd>> out_levels;

  std::vector<Eigen::VectorXcd> solve_all(double a) const {
    std::vector<Eigen::VectorXcd> raw(blocks.size());
    for (size_t b = 0; b < blocks.size(); ++b) raw[b] = solve_sorted(blocks[b], a);
    return raw;
  }

  void process(double a_l, std::vector<Eigen::VectorXcd> labeled_l, double a_r,
               const std::vector<Eigen::VectorXcd>& raw_r, int depth) {
    std::vector<Eigen::VectorXcd> labeled_r(blocks.size());
    bool refine = false;
    for (size_t b = 0; b < blocks.size(); ++b) {
      const auto sigma = spectral::optimal_assignment(labeled_l[b], raw_r[b]);
      labeled_r[b] = permute(raw_r[b], sigma);
      if (!refine && depth < max_halvings)
        refine = needs_refine(labeled_l[b], labeled_r[b]);
    }
    if (refine) {
      const double a_m = 0.5 * (a_l + a_r);
      const auto raw_m = solve_all(a_m);
      process(a_l, std::move(labeled_l), a_m, raw_m, depth + 1);
      process(a_m, out_levels.back(), a_r, raw_r, depth + 1);
    } else {
      out_a.push_back(a_r);
      out_levels.push_back(std::move(labeled_r));
    }
  }
};

}  // namespace

SweepResult sweep(const PotentialFamily& family, const BasisSpec& spec,
                  const SweepConfig& config, const ElementTables& tables) {
  if (config.step <= 0.0) throw std::invalid_argument("sweep step must be > 0");
  if (config.a_max < config.a_min)
    throw std::invalid_argument("sweep needs a_max >= a_min");
  const int threads = resolve_threads(config.threads);
  const auto blocks = make_blocks(family, spec, tables, threads);
  const int nb = int(blocks.size());

  std::vector<double> grid;
  for (int k = 0;; ++k) {
    const double a = config.a_min + k * config.step;
    if (a > config.a_max - config.step * 1e-9) break;
    grid.push_back(a);
  }
  grid.push_back(config.a_max);
  const int np = int(grid.size());

  std::vector<std::vector<Eigen::VectorXcd>> raw(np);
  for (auto& r : raw) r.resize(nb);
  parallel_for(np * nb, threads, [&](int idx) {
    raw[idx / nb][idx % nb] = solve_sorted(blocks[idx % nb], grid[idx / nb]);
  });

  SweepBuilder builder{blocks, config.max_halvings, {}, {}};
  builder.out_a.push_back(grid[0]);
  builder.out_levels.push_back(raw[0]);
  for (int k = 0; k + 1 < np; ++k)
    builder.process(grid[k], builder.out_levels.back(), grid[k + 1], raw[k + 1],
                    0);

  SweepResult sr;
  sr.family = family;
  sr.spec = spec;
  for (const auto& ctx : blocks) sr.irreps.push_back(ctx.label);
  sr.a_values = std::move(builder.out_a);
  sr.levels = std::move(builder.out_levels);
  return sr;
}

namespace {

struct Candidate {
  int b = 0;
  int label = 0;    // trajectory that turns complex
  int partner = 0;  // its conjugate partner
  int k = 0;        // left grid index of the bracketing interval
};

ExceptionalPoint refine_candidate(const Candidate& c, const SweepResult& sr,
                                  const BlockCtx& ctx,
                                  const EpScanConfig& cfg) {
  double lo = sr.a_values[c.k], hi = sr.a_values[c.k + 1];
  Eigen::VectorXcd real_side = sr.levels[c.k][c.b];
  Eigen::VectorXcd complex_side = sr.levels[c.k + 1][c.b];
  const auto pair_im = [&](const Eigen::VectorXcd& v) {
    return std::max(std::abs(v[c.label].imag()), std::abs(v[c.partner].imag()));
  };

  int iters = 0;
  while (hi - lo > cfg.bracket_target && iters++ < 80) {
    const double mid = 0.5 * (lo + hi);
    const auto raw = solve_sorted(ctx, mid);
    const auto sigma = spectral::optimal_assignment(real_side, raw);
    Eigen::VectorXcd labeled = permute(raw, sigma);
    if (pair_im(labeled) > cfg.im_threshold) {
      hi = mid;
      complex_side = std::move(labeled);
    } else {
      lo = mid;
      real_side = std::move(labeled);
    }
  }

  ExceptionalPoint ep;
  ep.irrep = ctx.label;
  ep.label_low = std::min(c.label, c.partner);
  ep.label_high = std::max(c.label, c.partner);
  ep.a_c = 0.5 * (lo + hi);
  ep.bracket_width = hi - lo;
  ep.energy = 0.5 * (real_side[c.label] + real_side[c.partner]);
  ep.im_below = pair_im(real_side);
  ep.im_above = pair_im(complex_side);
  return ep;
}

}  // namespace

std::vector<ExceptionalPoint> find_exceptional_points(
    const SweepResult& sr, const ElementTables& tables,
    const EpScanConfig& cfg) {
  const auto blocks = make_blocks(sr.family, sr.spec, tables, 1);
  const double thr = cfg.im_threshold;

  std::vector<Candidate> candidates;
  std::set<std::array<int, 4>> seen;
  for (int b = 0; b < sr.block_count(); ++b) {
    const int n = int(sr.levels[0][b].size());
    const int nl = std::min(cfg.max_label, n);
    for (int k = 0; k + 1 < sr.point_count(); ++k) {
      const auto& left = sr.levels[k][b];
      const auto& right = sr.levels[k + 1][b];
      for (int l = 0; l < nl; ++l) {
        if (std::abs(left[l].imag()) > thr || std::abs(right[l].imag()) <= thr)
          continue;
        // conjugate partner at the complex side
        int p = -1;
        double best = std::numeric_limits<double>::infinity();
        for (int j = 0; j < n; ++j) {
          if (j == l) continue;
          const double d = std::abs(right[j] - std::conj(right[l]));
          if (d < best) {
            best = d;
            p = j;
          }
        }
        if (p < 0 || best > cfg.conj_slack) continue;  // no coalescing partner
        if (std::abs(left[p].imag()) > thr) continue;  // partner already complex
        if (!seen.insert({b, std::min(l, p), std::max(l, p), k}).second) continue;
        candidates.push_back({b, l, p, k});
      }
    }
  }

  std::vector<ExceptionalPoint> eps(candidates.size());
  parallel_for(int(candidates.size()), resolve_threads(cfg.threads), [&](int i) {
    eps[i] = refine_candidate(candidates[i], sr, blocks[candidates[i].b], cfg);
  });

  std::sort(eps.begin(), eps.end(),
            [](const ExceptionalPoint& x, const ExceptionalPoint& y) {
              if (!(x.irrep == y.irrep))
                return to_string(x.irrep) < to_string(y.irrep);
              if (x.a_c != y.a_c) return x.a_c < y.a_c;
              return x.label_low < y.label_low;
            });
  return eps;
}

EpInvariants ep_invariants(const ExceptionalPoint& ep,
                           const PotentialFamily& family, const BasisSpec& spec,
                           const ElementTables& tables, double delta) {
  const BlockCtx ctx = make_block(ep.irrep, family, spec, tables, 1);
  const auto pick_pair = [&](const Eigen::VectorXcd& v) {
    int i1 = -1, i2 = -1;
    double d1 = std::numeric_limits<double>::infinity(), d2 = d1;
    for (int i = 0; i < int(v.size()); ++i) {
      const double d = std::abs(v[i] - ep.energy);
      if (d < d1) {
        d2 = d1, i2 = i1;
        d1 = d, i1 = i;
      } else if (d < d2) {
        d2 = d, i2 = i;
      }
    }
    return std::pair<int, int>{i1, i2};
  };

  EpInvariants inv;
  const auto below = solve_sorted(ctx, ep.a_c - delta);
  const auto [b1, b2] = pick_pair(below);
  inv.below_max_im =
      std::max(std::abs(below[b1].imag()), std::abs(below[b2].imag()));
  const auto above = solve_sorted(ctx, ep.a_c + delta);
  const auto [a1, a2] = pick_pair(above);
  inv.above_min_im =
      std::min(std::abs(above[a1].imag()), std::abs(above[a2].imag()));
  inv.above_conj_residual = std::abs(above[a1] - std::conj(above[a2]));
  return inv;
}

std::vector<PtVerdict> pt_breaking_report(const PotentialFamily& family,
                                          double a, const BasisSpec& spec,
                                          const ElementTables& tables,
                                          double im_tol) {
  const Group group = symmetry_group(family);
  const auto irreps = irreps_of(group);
  const int nb = int(irreps.size());

  std::vector<std::vector<SymFunction>> bases(nb);
  std::vector<spectral::Spectrum> spectra(nb);
  for (int b = 0; b < nb; ++b) {
    const IrrepLabel label{group, irreps[b]};
    bases[b] = build_basis(spec, label);
    spectra[b] = spectral::eigen(
        assemble_block(spec, label, family.at(a), tables), true);
  }
  auto block_of = [&](Irrep irrep) {
    for (int b = 0; b < nb; ++b)
      if (irreps[b] == irrep) return b;
    throw std::logic_error("irrep not in group");
  };

  // Ax maps each basis function to a basis function of one partner block.
  struct BlockMap {
    int target = 0;
    std::vector<int> index;
    std::vector<int> sign;
  };
  std::vector<BlockMap> maps(nb);
  for (int b = 0; b < nb; ++b) {
    BlockMap map;
    map.target = -1;
    for (int i = 0; i < int(bases[b].size()); ++i) {
      const auto r = apply_antiunitary(Antiunitary::Ax, bases[b][i]);
      const int t = block_of(classify(group, r.image).irrep);
      if (map.target < 0) map.target = t;
      if (map.target != t)
        throw std::logic_error("antiunitary image straddles blocks");
      const auto& tb = bases[t];
      const auto it = std::find(tb.begin(), tb.end(), r.image);
      if (it == tb.end())
        throw std::logic_error("antiunitary image missing from target basis");
      map.index.push_back(int(it - tb.begin()));
      map.sign.push_back(r.sign);
    }
    maps[b] = std::move(map);
  }

  std::vector<PtVerdict> verdicts;
  for (int b = 0; b < nb; ++b) {
    const int n = int(bases[b].size());
    const int t = maps[b].target;
    const int nt = int(bases[t].size());
    for (int j = 0; j < n; ++j) {
      const Eigen::VectorXcd v = spectra[b].eigenvectors.col(j);
      Eigen::VectorXcd w = Eigen::VectorXcd::Zero(nt);
      for (int i = 0; i < n; ++i)
        w[maps[b].index[i]] = double(maps[b].sign[i]) * std::conj(v[i]);

      int best = 0;
      double best_ov = -1.0;
      for (int k = 0; k < nt; ++k) {
        const double ov = std::abs(spectra[t].eigenvectors.col(k).dot(w));
        if (ov > best_ov) {
          best_ov = ov;
          best = k;
        }
      }

      PtVerdict verdict;
      verdict.irrep = {group, irreps[b]};
      verdict.level = j;
      verdict.energy = spectra[b].eigenvalues[j];
      verdict.broken = !(t == b && best == j);
      verdict.partner_irrep = {group, irreps[t]};
      verdict.partner_level = best;
      verdict.overlap = best_ov;
      verdict.partner_energy_mismatch =
          std::abs(spectra[t].eigenvalues[best] - std::conj(verdict.energy));
      verdict.im_consistent =
          (std::abs(verdict.energy.imag()) > im_tol) == verdict.broken;
      verdicts.push_back(verdict);
    }
  }
  return verdicts;
}

}  // namespace ptbox
