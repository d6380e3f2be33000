// Copyright 2026 The ptbox Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <vector>

namespace ptbox {

// Closed-form 1-D elements X^(p)_{km} = <phi_k | x^p | phi_m> on [-1,1].
// Parity: the integrand is odd, hence the element exactly zero, when p+k+m is odd.
double x_element(int k, int m);    // p = 1
double x2_element(int k, int m);   // p = 2

// Gauss-Legendre nodes/weights on [-1,1]. Newton refinement of Chebyshev-like
// initial guesses on the Legendre recurrence; accurate to machine precision.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
QuadratureRule gauss_legendre(int n);

// Independent numerical check of the closed forms: 64-node Gauss-Legendre value
// of <phi_k | x^p | phi_m>.
double quadrature_oracle(int p, int k, int m);

// Dense table of X^(p)_{km} for 1 <= k,m <= max_index. Parity-forbidden entries
// are stored as exact zeros. p in {0,1,2} uses the closed forms; larger p falls
// back to the quadrature rule.
class OneDimElementTable {
 public:
  OneDimElementTable(int p, int max_index);

  int exponent() const { return p_; }
  int max_index() const { return max_index_; }
  double operator()(int k, int m) const;  // 1-based indices
  const Eigen::MatrixXd& entries() const { return entries_; }

 private:
  int p_;
  int max_index_;
  Eigen::MatrixXd entries_;
};

// The p = 0,1,2 tables at a common truncation, shared by assembly and
// perturbation theory.
class ElementTables {
 public:
  explicit ElementTables(int max_index);

  int max_index() const { return max_index_; }
  const OneDimElementTable& table(int p) const;

 private:
  int max_index_;
  std::vector<OneDimElementTable> tables_;
};

}  // namespace ptbox
