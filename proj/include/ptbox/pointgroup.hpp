// Copyright 2026 The ptbox Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <array>
#include <string>
#include <vector>

#include "ptbox/boxbasis.hpp"

namespace ptbox {

enum class Group { C4v, C2v, C2 };
enum class Irrep { A1, A2, B1, B2, E, A, B };

struct IrrepLabel {
  Group group = Group::C2v;
  Irrep irrep = Irrep::A1;
  friend bool operator==(const IrrepLabel&, const IrrepLabel&) = default;
};

// Irreps carried by each group, in canonical order.
std::vector<Irrep> irreps_of(Group group);
bool irrep_valid(Group group, Irrep irrep);

std::string to_string(Group group);
std::string to_string(Irrep irrep);
std::string to_string(const IrrepLabel& label);  // "C2v/B1"
Group parse_group(const std::string& s);
Irrep parse_irrep(const std::string& s);

// A symmetry-adapted combination of box modes:
//   Single:  phi_{mn}
//   Plus:    (phi_{mn} + phi_{nm}) / sqrt(2), m != n
//   Minus:   (phi_{mn} - phi_{nm}) / sqrt(2), m != n
// Pairs store the canonical orientation: odd index first for mixed parity,
// smaller index first for equal parity.
enum class SymKind { Single, Plus, Minus };

struct SymFunction {
  SymKind kind = SymKind::Single;
  Mode mode{1, 1};
  friend bool operator==(const SymFunction&, const SymFunction&) = default;
};

struct SignedSymFunction {
  SymFunction fn;
  int sign = 1;  // the input equals sign * fn
};

SymFunction make_single(Mode mode);
// Accepts either orientation of the pair and canonicalizes; sign records the
// orientation flip (-1 only for Minus pairs given in reversed order).
SignedSymFunction make_pair(SymKind kind, Mode mode);

std::string to_string(const SymFunction& f);  // "phi(1,2)", "phi+(1,2)", ...
double eval(const SymFunction& f, double x, double y);
double unperturbed_energy(const SymFunction& f);

// The eight C4v operations as coordinate maps acting on functions by
// (O f)(x,y) = f(op(x,y)). SigmaV are the diagonal mirrors, SigmaD the axis
// mirrors.
enum class C4vOp { E, C4, C4_3, C2, SigmaV1, SigmaV2, SigmaD1, SigmaD2 };
inline constexpr std::array<C4vOp, 8> kC4vOps = {
    C4vOp::E,       C4vOp::C4,      C4vOp::C4_3,    C4vOp::C2,
    C4vOp::SigmaV1, C4vOp::SigmaV2, C4vOp::SigmaD1, C4vOp::SigmaD2};

// The C2v subgroup preserving x^p y^p potentials: {E, C2, both diagonal mirrors}.
enum class C2vOp { E, C2, SigmaV1, SigmaV2 };
inline constexpr std::array<C2vOp, 4> kC2vOps = {C2vOp::E, C2vOp::C2,
                                                 C2vOp::SigmaV1, C2vOp::SigmaV2};

// The C2 subgroup preserving x^p y^q with q even: {E, (x,y) -> (x,-y)}.
enum class C2Op { E, C2 };
inline constexpr std::array<C2Op, 2> kC2Ops = {C2Op::E, C2Op::C2};

std::string to_string(C4vOp op);
std::string to_string(C2vOp op);
std::string to_string(C2Op op);

// Coordinate image (x', y') = op(x, y).
std::pair<double, double> apply_to_point(C4vOp op, double x, double y);

// Exact action on a symmetry function; the image is again a canonical
// SymFunction up to an integer sign.
SignedSymFunction apply(C4vOp op, const SymFunction& f);
SignedSymFunction apply(C2vOp op, const SymFunction& f);
SignedSymFunction apply(C2Op op, const SymFunction& f);

// Character tables (per operation, not per class). The E irrep entry is the
// trace of the 2x2 block.
int character(Irrep irrep, C4vOp op);
int character(Irrep irrep, C2vOp op);
int character(Irrep irrep, C2Op op);

// Irrep carried by f. Throws std::invalid_argument when f is not a carrier of
// a 1-dim irrep of the group and is not a C4v E-doublet member (for C4v, mixed
// parity functions are labeled E; same-parity off-diagonal singles are
// reducible and rejected).
IrrepLabel classify(Group group, const SymFunction& f);
inline IrrepLabel classify_c4v(const SymFunction& f) {
  return classify(Group::C4v, f);
}

// Symmetry-adapted basis for one irrep over the truncated mode set, ordered by
// ascending E0 with (m,n)-lexicographic tie-break of the canonical mode.
std::vector<SymFunction> build_basis(const BasisSpec& spec, IrrepLabel label);

// Columns are the stacked irrep bases (irreps_of order), rows the product
// modes in all_modes order; orthogonal by construction.
Eigen::MatrixXd adaptation_matrix(const BasisSpec& spec, Group group);

// Antiunitary operators: Ax = Px T, Ay = Py T, AInv = (inversion) T.
enum class Antiunitary { Ax, Ay, AInv };
std::string to_string(Antiunitary a);

struct AntiunitaryResult {
  SymFunction image;
  int sign = 1;
  bool conjugates_coefficients = true;
};

AntiunitaryResult apply_antiunitary(Antiunitary a, const SymFunction& f);

}  // namespace ptbox
