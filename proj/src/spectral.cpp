// Copyright 2026 The ptbox Authors
// SPDX-License-Identifier: Apache-2.0

#include "ptbox/spectral.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace ptbox {
namespace spectral {

namespace {

bool value_less(std::complex<double> a, std::complex<double> b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

}  // namespace

Spectrum eigen(const Eigen::MatrixXcd& H, bool want_vectors) {
  const int n = int(H.rows());
  if (n == 0 || H.cols() != n)
    throw std::invalid_argument("eigen() needs a square nonempty matrix");

  Eigen::MatrixXcd A = H;  // zgeev overwrites its input
  Eigen::VectorXcd w(n);
  Eigen::MatrixXcd vr;
  if (want_vectors) vr.resize(n, n);

  auto* a_ptr = reinterpret_cast<lapack_complex_double*>(A.data());
  auto* w_ptr = reinterpret_cast<lapack_complex_double*>(w.data());
  auto* vr_ptr =
      want_vectors ? reinterpret_cast<lapack_complex_double*>(vr.data()) : nullptr;

  const int info = LAPACKE_zgeev(LAPACK_COL_MAJOR, 'N', want_vectors ? 'V' : 'N',
                                 n, a_ptr, n, w_ptr, nullptr, 1, vr_ptr,
                                 want_vectors ? n : 1);
  if (info != 0)
    throw EigenSolveError(info > 0 ? "QR iteration failed to converge"
                                   : "invalid argument passed to zgeev",
                          info);

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return value_less(w[i], w[j]); });

  Spectrum s;
  s.eigenvalues.resize(n);
  for (int i = 0; i < n; ++i) s.eigenvalues[i] = w[order[i]];
  if (want_vectors) {
    s.eigenvectors.resize(n, n);
    for (int i = 0; i < n; ++i) s.eigenvectors.col(i) = vr.col(order[i]);
    s.residuals.resize(n);
    const double scale = H.norm();
    for (int i = 0; i < n; ++i) {
      const auto v = s.eigenvectors.col(i);
      s.residuals[i] = (H * v - s.eigenvalues[i] * v).norm() / scale;
    }
  }
  return s;
}

Spectrum eigen(const HamiltonianBlock& block, bool want_vectors) {
  return eigen(block.matrix, want_vectors);
}

CharPoly char_poly(const Eigen::MatrixXcd& H) {
  const int n = int(H.rows());
  if (n == 0 || H.cols() != n)
    throw std::invalid_argument("char_poly needs a square nonempty matrix");
  if (n > 36)
    throw std::invalid_argument(
        "char_poly is limited to dim <= 36; use eigen() for larger blocks");

  CharPoly p;
  p.coeffs.assign(n + 1, 0.0);
  p.coeffs[n] = 1.0;
  Eigen::MatrixXcd M = H;
  p.coeffs[n - 1] = -M.trace();
  for (int k = 2; k <= n; ++k) {
    M = H * (M + p.coeffs[n - k + 1] *
                     Eigen::MatrixXcd::Identity(n, n));
    p.coeffs[n - k] = -M.trace() / double(k);
  }
  return p;
}

CharPoly char_poly(const HamiltonianBlock& block) {
  return char_poly(block.matrix);
}

std::complex<double> evaluate(const CharPoly& p, std::complex<double> lambda) {
  std::complex<double> acc = 0.0;
  for (int k = p.degree(); k >= 0; --k) acc = acc * lambda + p.coeffs[k];
  return acc;
}

std::vector<int> min_cost_assignment(const Eigen::MatrixXd& cost) {
  const int n = int(cost.rows());
  if (cost.cols() != n)
    throw std::invalid_argument("assignment needs a square cost matrix");
  constexpr double kInf = std::numeric_limits<double>::infinity();

  // Shortest-augmenting-path formulation with row/column potentials.
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<int> p(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<double> minv(n + 1, kInf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      const int i0 = p[j0];
      double delta = kInf;
      int j1 = 0;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  std::vector<int> sigma(n, -1);
  for (int j = 1; j <= n; ++j) sigma[p[j] - 1] = j - 1;
  return sigma;
}

std::vector<int> optimal_assignment(const Eigen::VectorXcd& from,
                                    const Eigen::VectorXcd& to) {
  const int n = int(from.size());
  if (to.size() != n)
    throw std::invalid_argument("assignment needs equal-size spectra");
  Eigen::MatrixXd cost(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) cost(i, j) = std::abs(from[i] - to[j]);
  return min_cost_assignment(cost);
}

double multiset_distance(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
  const auto sigma = optimal_assignment(a, b);
  double worst = 0.0;
  for (int i = 0; i < int(a.size()); ++i)
    worst = std::max(worst, std::abs(a[i] - b[sigma[i]]));
  return worst;
}

PairingResult conjugation_pairing(const Spectrum& s1, const Spectrum& s2,
                                  double tol) {
  const int n = int(s1.eigenvalues.size());
  if (int(s2.eigenvalues.size()) != n)
    throw std::invalid_argument("conjugation_pairing needs equal-size spectra");
  PairingResult result;
  const Eigen::VectorXcd conj2 = s2.eigenvalues.conjugate();
  const auto sigma = optimal_assignment(s1.eigenvalues, conj2);
  result.pairs.reserve(n);
  for (int i = 0; i < n; ++i) {
    result.pairs.emplace_back(i, sigma[i]);
    result.worst_distance = std::max(
        result.worst_distance, std::abs(s1.eigenvalues[i] - conj2[sigma[i]]));
  }
  result.matched = result.worst_distance <= tol;
  return result;
}

}  // namespace spectral
}  // namespace ptbox
