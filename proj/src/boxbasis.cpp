// Copyright 2026 The ptbox Authors
// SPDX-License-Identifier: Apache-2.0

#include "ptbox/boxbasis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ptbox {

namespace {
constexpr double kPi = std::numbers::pi;

void require_mode(Mode mode) {
  if (mode.m < 1 || mode.n < 1)
    throw std::invalid_argument("Mode indices must be >= 1");
}
}  // namespace

double unperturbed_energy(Mode mode) {
  require_mode(mode);
  return double(energy_key(mode)) * kPi * kPi / 4.0;
}

double eval_1d(int m, double x) {
  return std::sin(m * kPi * (x + 1.0) / 2.0);
}

double eval(Mode mode, double x, double y) {
  require_mode(mode);
  return eval_1d(mode.m, x) * eval_1d(mode.n, y);
}

int basis_size(const BasisSpec& spec) {
  if (spec.max_index < 2)
    throw std::invalid_argument("BasisSpec.max_index must be >= 2");
  return spec.max_index * spec.max_index;
}

std::vector<Mode> all_modes(const BasisSpec& spec) {
  const int M = spec.max_index;
  std::vector<Mode> modes;
  modes.reserve(basis_size(spec));
  for (int m = 1; m <= M; ++m)
    for (int n = 1; n <= M; ++n) modes.push_back({m, n});
  std::sort(modes.begin(), modes.end(), [](Mode a, Mode b) {
    auto ka = energy_key(a), kb = energy_key(b);
    if (ka != kb) return ka < kb;
    return a < b;
  });
  return modes;
}

std::vector<DegenerateGroup> degenerate_groups(const BasisSpec& spec,
                                               double tol) {
  const auto modes = all_modes(spec);
  std::vector<DegenerateGroup> groups;
  for (const Mode& mode : modes) {
    const double e = unperturbed_energy(mode);
    const bool same_key =
        !groups.empty() && energy_key(groups.back().members.back()) == energy_key(mode);
    const bool within_tol = !groups.empty() && e - groups.back().energy <= tol;
    if (same_key || within_tol) {
      groups.back().members.push_back(mode);
    } else {
      groups.push_back({e, {mode}, GroupKind::Singleton});
    }
  }
  for (auto& g : groups) {
    std::sort(g.members.begin(), g.members.end());
    if (g.members.size() == 1) {
      g.kind = GroupKind::Singleton;
    } else if (g.members.size() == 2 && g.members[0].m == g.members[1].n &&
               g.members[0].n == g.members[1].m) {
      g.kind = GroupKind::SymmetryPair;
    } else {
      g.kind = GroupKind::Accidental;
    }
  }
  return groups;
}

}  // namespace ptbox
