// Copyright 2026 The ptbox Authors
// SPDX-License-Identifier: Apache-2.0

#include "ptbox/assembler.hpp"

#include <array>
#include <stdexcept>

#include "ptbox/parallel.hpp"

namespace ptbox {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

struct Term {
  double coeff;
  Mode mode;
};

// phi, phi+ or phi- as a sum of one or two product modes.
std::array<Term, 2> expand(const SymFunction& f, int& count) {
  if (f.kind == SymKind::Single) {
    count = 1;
    return {Term{1.0, f.mode}, Term{}};
  }
  count = 2;
  const double s = (f.kind == SymKind::Plus) ? kInvSqrt2 : -kInvSqrt2;
  return {Term{kInvSqrt2, f.mode}, Term{s, {f.mode.n, f.mode.m}}};
}

}  // namespace

Group symmetry_group(const PotentialSpec& pot) {
  if (pot.p < 1 || pot.q < 1)
    throw std::invalid_argument("potential exponents must be >= 1");
  const bool p_odd = pot.p % 2 == 1, q_odd = pot.q % 2 == 1;
  if (pot.p == pot.q && p_odd) return Group::C2v;
  if (p_odd && !q_odd) return Group::C2;
  throw std::invalid_argument(
      "no block contract for x^" + std::to_string(pot.p) + " y^" +
      std::to_string(pot.q) +
      " (supported: p == q odd, or p odd with q even)");
}

double potential_element(const ElementTables& tables, int p, int q,
                         const SymFunction& f, const SymFunction& h) {
  const OneDimElementTable& Xp = tables.table(p);
  const OneDimElementTable& Xq = tables.table(q);

  // For p == q the mirrored cross products coincide, so the +/- algebra
  // collapses to integer prefactors and forbidden couplings cancel exactly
  // instead of to rounding noise.
  if (p == q) {
    const auto ks = [](const SymFunction& x) {
      return x.kind == SymKind::Minus ? -1 : 1;
    };
    const int a = f.mode.m, b = f.mode.n, c = h.mode.m, d = h.mode.n;
    if (f.kind != SymKind::Single && h.kind != SymKind::Single) {
      const int s = ks(f), t = ks(h);
      return 0.5 * ((1 + s * t) * Xp(a, c) * Xp(b, d) +
                    (s + t) * Xp(a, d) * Xp(b, c));
    }
    if (f.kind == SymKind::Single && h.kind != SymKind::Single && a == b)
      return kInvSqrt2 * (1 + ks(h)) * Xp(a, c) * Xp(a, d);
    if (h.kind == SymKind::Single && f.kind != SymKind::Single && c == d)
      return kInvSqrt2 * (1 + ks(f)) * Xp(a, c) * Xp(b, c);
  }

  int nf = 0, nh = 0;
  const auto tf = expand(f, nf);
  const auto th = expand(h, nh);
  double acc = 0.0;
  for (int i = 0; i < nf; ++i)
    for (int j = 0; j < nh; ++j) {
      const double xp = Xp(tf[i].mode.m, th[j].mode.m);
      if (xp == 0.0) continue;  // keep symmetry-forbidden couplings exact
      const double xq = Xq(tf[i].mode.n, th[j].mode.n);
      if (xq == 0.0) continue;
      acc += tf[i].coeff * th[j].coeff * xp * xq;
    }
  return acc;
}

Eigen::MatrixXd coupling_matrix(const std::vector<SymFunction>& basis, int p,
                                int q, const ElementTables& tables,
                                int threads) {
  const int n = int(basis.size());
  Eigen::MatrixXd C(n, n);
  parallel_for(n, resolve_threads(threads), [&](int i) {
    for (int j = 0; j < n; ++j)
      C(i, j) = potential_element(tables, p, q, basis[i], basis[j]);
  });
  return C;
}

namespace {

HamiltonianBlock assemble(const BasisSpec& spec, std::optional<IrrepLabel> label,
                          std::vector<SymFunction> basis,
                          const PotentialSpec& pot, const ElementTables& tables,
                          int threads) {
  if (tables.max_index() < spec.max_index)
    throw std::invalid_argument("element tables smaller than basis truncation");
  HamiltonianBlock block{spec, label, pot, std::move(basis), {}};
  const Eigen::MatrixXd C =
      coupling_matrix(block.basis, pot.p, pot.q, tables, threads);
  block.matrix = pot.g * C.cast<std::complex<double>>();
  for (int i = 0; i < block.dim(); ++i)
    block.matrix(i, i) += unperturbed_energy(block.basis[i]);
  return block;
}

}  // namespace

HamiltonianBlock assemble_full(const BasisSpec& spec, const PotentialSpec& pot,
                               const ElementTables& tables, int threads) {
  std::vector<SymFunction> basis;
  for (Mode mode : all_modes(spec)) basis.push_back(make_single(mode));
  return assemble(spec, std::nullopt, std::move(basis), pot, tables, threads);
}

HamiltonianBlock assemble_block(const BasisSpec& spec, IrrepLabel label,
                                const PotentialSpec& pot,
                                const ElementTables& tables, int threads) {
  const Group group = symmetry_group(pot);
  if (label.group != group)
    throw std::invalid_argument("irrep " + to_string(label) +
                                " does not belong to the potential's group " +
                                to_string(group));
  return assemble(spec, label, build_basis(spec, label), pot, tables, threads);
}

double cross_irrep_residual(const BasisSpec& spec, const PotentialSpec& pot,
                            const ElementTables& tables) {
  const Group group = symmetry_group(pot);
  const auto irreps = irreps_of(group);
  std::vector<std::vector<SymFunction>> bases;
  for (Irrep irrep : irreps) bases.push_back(build_basis(spec, {group, irrep}));
  double worst = 0.0;
  for (size_t a = 0; a < bases.size(); ++a)
    for (size_t b = a + 1; b < bases.size(); ++b)
      for (const SymFunction& f : bases[a])
        for (const SymFunction& h : bases[b]) {
          const double v = std::abs(potential_element(tables, pot.p, pot.q, f, h));
          if (v > worst) worst = v;
        }
  return worst;
}

}  // namespace ptbox
