// Copyright 2026 The ptbox Authors
// SPDX-License-Identifier: Apache-2.0

#include "ptbox/pointgroup.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace ptbox {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

int pow_m1(int e) { return (e % 2 == 0) ? 1 : -1; }

bool mixed_parity(Mode mode) { return (mode.m + mode.n) % 2 != 0; }

Mode swapped(Mode mode) { return {mode.n, mode.m}; }

bool canonical_orientation(Mode mode) {
  if (mixed_parity(mode)) return mode.m % 2 == 1;
  return mode.m < mode.n;
}

struct Term {
  int sign;
  Mode mode;
};

// Product-mode action of a C4v operation: phi_{mn} -> sign * phi_{m'n'}.
Term act(C4vOp op, Mode mode) {
  const int m = mode.m, n = mode.n;
  switch (op) {
    case C4vOp::E: return {1, mode};
    case C4vOp::C4: return {pow_m1(n + 1), swapped(mode)};
    case C4vOp::C4_3: return {pow_m1(m + 1), swapped(mode)};
    case C4vOp::C2: return {pow_m1(m + n), mode};
    case C4vOp::SigmaV1: return {1, swapped(mode)};
    case C4vOp::SigmaV2: return {pow_m1(m + n), swapped(mode)};
    case C4vOp::SigmaD1: return {pow_m1(n + 1), mode};
    case C4vOp::SigmaD2: return {pow_m1(m + 1), mode};
  }
  throw std::logic_error("unreachable");
}

Term act(Antiunitary a, Mode mode) {
  const int m = mode.m, n = mode.n;
  switch (a) {
    case Antiunitary::Ax: return {pow_m1(m + 1), mode};
    case Antiunitary::Ay: return {pow_m1(n + 1), mode};
    case Antiunitary::AInv: return {pow_m1(m + n), mode};
  }
  throw std::logic_error("unreachable");
}

// Recombines the images of the two pair terms into a canonical SymFunction.
template <class ActFn>
SignedSymFunction transform(const SymFunction& f, ActFn&& term_act) {
  if (f.kind == SymKind::Single) {
    const Term t = term_act(f.mode);
    return {SymFunction{SymKind::Single, t.mode}, t.sign};
  }
  const int kind_sign = (f.kind == SymKind::Plus) ? 1 : -1;
  const Term t1 = term_act(f.mode);
  const Term t2 = term_act(swapped(f.mode));
  // f = (phi_a + ks*phi_a~)/sqrt2 maps to (t1.sign*phi_p + ks*t2.sign*phi_p~)/sqrt2.
  const int rel = t1.sign * kind_sign * t2.sign;
  const SymKind kind = (rel == 1) ? SymKind::Plus : SymKind::Minus;
  SignedSymFunction canon = make_pair(kind, t1.mode);
  canon.sign *= t1.sign;
  return canon;
}

}  // namespace

std::vector<Irrep> irreps_of(Group group) {
  switch (group) {
    case Group::C4v:
      return {Irrep::A1, Irrep::A2, Irrep::B1, Irrep::B2, Irrep::E};
    case Group::C2v:
      return {Irrep::A1, Irrep::A2, Irrep::B1, Irrep::B2};
    case Group::C2:
      return {Irrep::A, Irrep::B};
  }
  throw std::logic_error("unreachable");
}

bool irrep_valid(Group group, Irrep irrep) {
  const auto list = irreps_of(group);
  return std::find(list.begin(), list.end(), irrep) != list.end();
}

std::string to_string(Group group) {
  switch (group) {
    case Group::C4v: return "C4v";
    case Group::C2v: return "C2v";
    case Group::C2: return "C2";
  }
  throw std::logic_error("unreachable");
}

std::string to_string(Irrep irrep) {
  switch (irrep) {
    case Irrep::A1: return "A1";
    case Irrep::A2: return "A2";
    case Irrep::B1: return "B1";
    case Irrep::B2: return "B2";
    case Irrep::E: return "E";
    case Irrep::A: return "A";
    case Irrep::B: return "B";
  }
  throw std::logic_error("unreachable");
}

std::string to_string(const IrrepLabel& label) {
  return to_string(label.group) + "/" + to_string(label.irrep);
}

Group parse_group(const std::string& s) {
  if (s == "C4v" || s == "c4v") return Group::C4v;
  if (s == "C2v" || s == "c2v") return Group::C2v;
  if (s == "C2" || s == "c2") return Group::C2;
  throw std::invalid_argument("unknown group: " + s);
}

Irrep parse_irrep(const std::string& s) {
  if (s == "A1") return Irrep::A1;
  if (s == "A2") return Irrep::A2;
  if (s == "B1") return Irrep::B1;
  if (s == "B2") return Irrep::B2;
  if (s == "E") return Irrep::E;
  if (s == "A") return Irrep::A;
  if (s == "B") return Irrep::B;
  throw std::invalid_argument("unknown irrep: " + s);
}

SymFunction make_single(Mode mode) {
  if (mode.m < 1 || mode.n < 1)
    throw std::invalid_argument("Mode indices must be >= 1");
  return {SymKind::Single, mode};
}

SignedSymFunction make_pair(SymKind kind, Mode mode) {
  if (kind == SymKind::Single)
    throw std::invalid_argument("make_pair needs Plus or Minus");
  if (mode.m < 1 || mode.n < 1)
    throw std::invalid_argument("Mode indices must be >= 1");
  if (mode.m == mode.n)
    throw std::invalid_argument("pair functions need m != n");
  if (canonical_orientation(mode)) return {SymFunction{kind, mode}, 1};
  const int sign = (kind == SymKind::Plus) ? 1 : -1;
  return {SymFunction{kind, swapped(mode)}, sign};
}

std::string to_string(const SymFunction& f) {
  const char* tag = f.kind == SymKind::Single ? "" : (f.kind == SymKind::Plus ? "+" : "-");
  return "phi" + std::string(tag) + "(" + std::to_string(f.mode.m) + "," +
         std::to_string(f.mode.n) + ")";
}

double eval(const SymFunction& f, double x, double y) {
  if (f.kind == SymKind::Single) return eval(f.mode, x, y);
  const double a = eval(f.mode, x, y);
  const double b = eval(swapped(f.mode), x, y);
  return (f.kind == SymKind::Plus) ? (a + b) * kInvSqrt2 : (a - b) * kInvSqrt2;
}

double unperturbed_energy(const SymFunction& f) {
  return unperturbed_energy(f.mode);
}

std::string to_string(C4vOp op) {
  switch (op) {
    case C4vOp::E: return "E";
    case C4vOp::C4: return "C4";
    case C4vOp::C4_3: return "C4^3";
    case C4vOp::C2: return "C2";
    case C4vOp::SigmaV1: return "sigma_v1";
    case C4vOp::SigmaV2: return "sigma_v2";
    case C4vOp::SigmaD1: return "sigma_d1";
    case C4vOp::SigmaD2: return "sigma_d2";
  }
  throw std::logic_error("unreachable");
}

std::string to_string(C2vOp op) {
  switch (op) {
    case C2vOp::E: return "E";
    case C2vOp::C2: return "C2";
    case C2vOp::SigmaV1: return "sigma_v1";
    case C2vOp::SigmaV2: return "sigma_v2";
  }
  throw std::logic_error("unreachable");
}

std::string to_string(C2Op op) {
  return op == C2Op::E ? "E" : "C2";
}

std::pair<double, double> apply_to_point(C4vOp op, double x, double y) {
  switch (op) {
    case C4vOp::E: return {x, y};
    case C4vOp::C4: return {y, -x};
    case C4vOp::C4_3: return {-y, x};
    case C4vOp::C2: return {-x, -y};
    case C4vOp::SigmaV1: return {y, x};
    case C4vOp::SigmaV2: return {-y, -x};
    case C4vOp::SigmaD1: return {x, -y};
    case C4vOp::SigmaD2: return {-x, y};
  }
  throw std::logic_error("unreachable");
}

SignedSymFunction apply(C4vOp op, const SymFunction& f) {
  return transform(f, [op](Mode mode) { return act(op, mode); });
}

SignedSymFunction apply(C2vOp op, const SymFunction& f) {
  switch (op) {
    case C2vOp::E: return apply(C4vOp::E, f);
    case C2vOp::C2: return apply(C4vOp::C2, f);
    case C2vOp::SigmaV1: return apply(C4vOp::SigmaV1, f);
    case C2vOp::SigmaV2: return apply(C4vOp::SigmaV2, f);
  }
  throw std::logic_error("unreachable");
}

SignedSymFunction apply(C2Op op, const SymFunction& f) {
  return op == C2Op::E ? apply(C4vOp::E, f) : apply(C4vOp::SigmaD1, f);
}

int character(Irrep irrep, C4vOp op) {
  static constexpr int table[5][8] = {
      {1, 1, 1, 1, 1, 1, 1, 1},        // A1
      {1, 1, 1, 1, -1, -1, -1, -1},    // A2
      {1, -1, -1, 1, 1, 1, -1, -1},    // B1
      {1, -1, -1, 1, -1, -1, 1, 1},    // B2
      {2, 0, 0, -2, 0, 0, 0, 0},       // E
  };
  const int r = static_cast<int>(irrep);
  if (r > 4) throw std::invalid_argument("irrep not in C4v");
  return table[r][static_cast<int>(op)];
}

int character(Irrep irrep, C2vOp op) {
  static constexpr int table[4][4] = {
      {1, 1, 1, 1},      // A1
      {1, 1, -1, -1},    // A2
      {1, -1, 1, -1},    // B1
      {1, -1, -1, 1},    // B2
  };
  const int r = static_cast<int>(irrep);
  if (r > 3) throw std::invalid_argument("irrep not in C2v");
  return table[r][static_cast<int>(op)];
}

int character(Irrep irrep, C2Op op) {
  if (irrep == Irrep::A) return 1;
  if (irrep == Irrep::B) return op == C2Op::E ? 1 : -1;
  throw std::invalid_argument("irrep not in C2");
}

IrrepLabel classify(Group group, const SymFunction& f) {
  const Mode mode = f.mode;
  const bool diag = (mode.m == mode.n);
  const bool mixed = mixed_parity(mode);
  const bool odd = (mode.m % 2 == 1);
  switch (group) {
    case Group::C4v:
      if (f.kind == SymKind::Single && diag)
        return {group, odd ? Irrep::A1 : Irrep::B1};
      if (mixed) return {group, Irrep::E};
      if (f.kind == SymKind::Plus)
        return {group, odd ? Irrep::A1 : Irrep::B1};
      if (f.kind == SymKind::Minus)
        return {group, odd ? Irrep::B2 : Irrep::A2};
      throw std::invalid_argument(to_string(f) + " is reducible under C4v");
    case Group::C2v:
      if (f.kind == SymKind::Single) {
        if (diag) return {group, Irrep::A1};
        throw std::invalid_argument(to_string(f) + " is reducible under C2v");
      }
      if (mixed)
        return {group, f.kind == SymKind::Plus ? Irrep::B1 : Irrep::B2};
      return {group, f.kind == SymKind::Plus ? Irrep::A1 : Irrep::A2};
    case Group::C2:
      if (f.kind == SymKind::Single)
        return {group, mode.n % 2 == 1 ? Irrep::A : Irrep::B};
      if (mixed)
        throw std::invalid_argument(to_string(f) + " is reducible under C2");
      return {group, odd ? Irrep::A : Irrep::B};
  }
  throw std::logic_error("unreachable");
}

std::vector<SymFunction> build_basis(const BasisSpec& spec, IrrepLabel label) {
  if (!irrep_valid(label.group, label.irrep))
    throw std::invalid_argument(to_string(label.irrep) + " is not an irrep of " +
                                to_string(label.group));
  const int M = spec.max_index;
  basis_size(spec);  // validates M
  std::vector<SymFunction> out;
  auto add_single = [&](int m, int n) { out.push_back(make_single({m, n})); };
  auto add_pair = [&](SymKind kind, int m, int n) {
    out.push_back(make_pair(kind, {m, n}).fn);
  };

  switch (label.group) {
    case Group::C2v:
      for (int m = 1; m <= M; ++m)
        for (int n = 1; n <= M; ++n) {
          if (label.irrep == Irrep::A1 && m == n) add_single(m, n);
          if (m >= n) continue;
          const bool same = (m + n) % 2 == 0;
          if (label.irrep == Irrep::A1 && same) add_pair(SymKind::Plus, m, n);
          if (label.irrep == Irrep::A2 && same) add_pair(SymKind::Minus, m, n);
          if (label.irrep == Irrep::B1 && !same) add_pair(SymKind::Plus, m, n);
          if (label.irrep == Irrep::B2 && !same) add_pair(SymKind::Minus, m, n);
        }
      break;
    case Group::C2:
      for (int m = 1; m <= M; ++m)
        for (int n = 1; n <= M; ++n) {
          const bool a_type = (n % 2 == 1);
          if ((label.irrep == Irrep::A) == a_type) add_single(m, n);
        }
      break;
    case Group::C4v:
      for (int m = 1; m <= M; ++m)
        for (int n = 1; n <= M; ++n) {
          const bool odd = (m % 2 == 1);
          if (m == n) {
            if (label.irrep == Irrep::A1 && odd) add_single(m, n);
            if (label.irrep == Irrep::B1 && !odd) add_single(m, n);
            continue;
          }
          if ((m + n) % 2 != 0) {
            if (label.irrep == Irrep::E) add_single(m, n);
            continue;
          }
          if (m > n) continue;
          if (label.irrep == Irrep::A1 && odd) add_pair(SymKind::Plus, m, n);
          if (label.irrep == Irrep::B1 && !odd) add_pair(SymKind::Plus, m, n);
          if (label.irrep == Irrep::B2 && odd) add_pair(SymKind::Minus, m, n);
          if (label.irrep == Irrep::A2 && !odd) add_pair(SymKind::Minus, m, n);
        }
      break;
  }

  std::sort(out.begin(), out.end(), [](const SymFunction& f, const SymFunction& g) {
    const auto kf = energy_key(f.mode), kg = energy_key(g.mode);
    if (kf != kg) return kf < kg;
    return f.mode < g.mode;
  });
  return out;
}

Eigen::MatrixXd adaptation_matrix(const BasisSpec& spec, Group group) {
  const auto modes = all_modes(spec);
  const int M = spec.max_index;
  std::vector<int> row_of(M * M, -1);
  for (int i = 0; i < int(modes.size()); ++i)
    row_of[(modes[i].m - 1) * M + (modes[i].n - 1)] = i;
  auto row = [&](Mode mode) { return row_of[(mode.m - 1) * M + (mode.n - 1)]; };

  std::vector<SymFunction> stacked;
  for (Irrep irrep : irreps_of(group)) {
    auto basis = build_basis(spec, {group, irrep});
    stacked.insert(stacked.end(), basis.begin(), basis.end());
  }
  if (int(stacked.size()) != int(modes.size()))
    throw std::logic_error("irrep bases do not span the product basis");

  Eigen::MatrixXd U = Eigen::MatrixXd::Zero(modes.size(), stacked.size());
  for (int j = 0; j < int(stacked.size()); ++j) {
    const SymFunction& f = stacked[j];
    if (f.kind == SymKind::Single) {
      U(row(f.mode), j) = 1.0;
    } else {
      U(row(f.mode), j) = kInvSqrt2;
      U(row(swapped(f.mode)), j) = (f.kind == SymKind::Plus) ? kInvSqrt2 : -kInvSqrt2;
    }
  }
  return U;
}

std::string to_string(Antiunitary a) {
  switch (a) {
    case Antiunitary::Ax: return "Ax";
    case Antiunitary::Ay: return "Ay";
    case Antiunitary::AInv: return "AInv";
  }
  throw std::logic_error("unreachable");
}

AntiunitaryResult apply_antiunitary(Antiunitary a, const SymFunction& f) {
  const SignedSymFunction s = transform(f, [a](Mode mode) { return act(a, mode); });
  return {s.fn, s.sign, true};
}

}  // namespace ptbox
