// Copyright 2026 The ptbox Authors
// SPDX-License-Identifier: Apache-2.0

#include "ptbox/matelem.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ptbox/boxbasis.hpp"

namespace ptbox {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kPi2 = kPi * kPi;

void require_indices(int k, int m) {
  if (k < 1 || m < 1) throw std::invalid_argument("element indices must be >= 1");
}
}  // namespace

double x_element(int k, int m) {
  require_indices(k, m);
  if ((k + m) % 2 == 0) return 0.0;
  const double s = double(k + m), d = double(k - m);
  return 4.0 / kPi2 * (1.0 / (s * s) - 1.0 / (d * d));
}

double x2_element(int k, int m) {
  require_indices(k, m);
  if ((k + m) % 2 != 0) return 0.0;
  if (k == m) return 1.0 / 3.0 - 2.0 / (kPi2 * double(k) * double(k));
  const double s = double(k + m), d = double(k - m);
  return 8.0 / kPi2 * (1.0 / (d * d) - 1.0 / (s * s));
}

QuadratureRule gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("quadrature order must be >= 1");
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= n; ++j) {
        const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.weights[i] = w;
    rule.nodes[n - 1 - i] = x;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

double quadrature_oracle(int p, int k, int m) {
  require_indices(k, m);
  if (p < 0) throw std::invalid_argument("exponent must be >= 0");
  static const QuadratureRule rule = gauss_legendre(64);
  double acc = 0.0;
  for (size_t i = 0; i < rule.nodes.size(); ++i) {
    const double x = rule.nodes[i];
    acc += rule.weights[i] * std::pow(x, p) * eval_1d(k, x) * eval_1d(m, x);
  }
  return acc;
}

OneDimElementTable::OneDimElementTable(int p, int max_index)
    : p_(p), max_index_(max_index) {
  if (p < 0) throw std::invalid_argument("exponent must be >= 0");
  if (max_index < 1) throw std::invalid_argument("max_index must be >= 1");
  entries_ = Eigen::MatrixXd::Zero(max_index, max_index);
  for (int k = 1; k <= max_index; ++k) {
    for (int m = k; m <= max_index; ++m) {
      if ((p + k + m) % 2 != 0) continue;  // parity-forbidden, keep exact zero
      double v;
      switch (p) {
        case 0: v = (k == m) ? 1.0 : 0.0; break;
        case 1: v = x_element(k, m); break;
        case 2: v = x2_element(k, m); break;
        default: v = quadrature_oracle(p, k, m); break;
      }
      entries_(k - 1, m - 1) = v;
      entries_(m - 1, k - 1) = v;
    }
  }
}

double OneDimElementTable::operator()(int k, int m) const {
  if (k < 1 || k > max_index_ || m < 1 || m > max_index_)
    throw std::out_of_range("element index outside table");
  return entries_(k - 1, m - 1);
}

ElementTables::ElementTables(int max_index) : max_index_(max_index) {
  tables_.reserve(3);
  for (int p = 0; p <= 2; ++p) tables_.emplace_back(p, max_index);
}

const OneDimElementTable& ElementTables::table(int p) const {
  if (p < 0 || p > 2) throw std::out_of_range("ElementTables holds p in {0,1,2}");
  return tables_[p];
}

}  // namespace ptbox
