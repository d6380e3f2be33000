// Copyright 2026 The ptbox Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace ptbox {

// One eigenfunction phi_{mn}(x,y) = phi_m(x) phi_n(y) of the square box
// [-1,1]^2 with Dirichlet walls, phi_m(x) = sin(m pi (x+1)/2). m,n >= 1.
struct Mode {
  int m = 1;
  int n = 1;
  friend auto operator<=>(const Mode&, const Mode&) = default;
};

// Exact integer degeneracy key m^2 + n^2.
inline std::int64_t energy_key(Mode mode) {
  return std::int64_t(mode.m) * mode.m + std::int64_t(mode.n) * mode.n;
}

// E0_{mn} = (m^2 + n^2) pi^2 / 4.
double unperturbed_energy(Mode mode);

// phi_m(x), normalized so that \int_{-1}^{1} phi_m^2 = 1.
double eval_1d(int m, double x);

// phi_{mn}(x,y).
double eval(Mode mode, double x, double y);

// Truncation: both quantum numbers run over 1..max_index, so the product basis
// has max_index^2 members.
struct BasisSpec {
  int max_index = 2;
  friend bool operator==(const BasisSpec&, const BasisSpec&) = default;
};

int basis_size(const BasisSpec& spec);

// All modes, sorted by ascending E0 with (m, n)-lexicographic tie-breaking.
std::vector<Mode> all_modes(const BasisSpec& spec);

enum class GroupKind { Singleton, SymmetryPair, Accidental };

struct DegenerateGroup {
  double energy = 0.0;           // common E0
  std::vector<Mode> members;     // (m, n)-lexicographic
  GroupKind kind = GroupKind::Singleton;
};

// Partition of all_modes(spec) into degenerate groups, ascending in energy.
// Modes with equal integer key m^2+n^2 always share a group; groups whose
// energies differ by more than tol are never merged.
std::vector<DegenerateGroup> degenerate_groups(const BasisSpec& spec,
                                               double tol = 1e-9);

}  // namespace ptbox
