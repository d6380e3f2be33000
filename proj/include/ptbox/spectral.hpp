// Copyright 2026 The ptbox Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ptbox/assembler.hpp"

namespace ptbox {
namespace spectral {

struct Spectrum {
  Eigen::VectorXcd eigenvalues;   // sorted by (Re, Im)
  Eigen::MatrixXcd eigenvectors;  // unit columns in eigenvalue order; 0x0 unless requested
  Eigen::VectorXd residuals;      // ||H v - lambda v||_2 / ||H||_F per column

  bool has_vectors() const { return eigenvectors.cols() > 0; }
};

class EigenSolveError : public std::runtime_error {
 public:
  EigenSolveError(const std::string& what, int info)
      : std::runtime_error(what), info(info) {}
  int info;
};

// Dense non-Hermitian eigensolve (balancing + Hessenberg + shifted QR).
Spectrum eigen(const Eigen::MatrixXcd& H, bool want_vectors = false);
Spectrum eigen(const HamiltonianBlock& block, bool want_vectors = false);

// Monic characteristic polynomial det(lambda I - H) by the Faddeev-LeVerrier
// recurrence; coeffs[k] multiplies lambda^k, coeffs.back() == 1. Guarded to
// dim <= 36, beyond which the recurrence loses accuracy; use eigen() instead.
struct CharPoly {
  std::vector<std::complex<double>> coeffs;

  int degree() const { return int(coeffs.size()) - 1; }
};
CharPoly char_poly(const HamiltonianBlock& block);
CharPoly char_poly(const Eigen::MatrixXcd& H);
std::complex<double> evaluate(const CharPoly& p, std::complex<double> lambda);

// Minimum-total-distance assignment (Jonker-Volgenant style shortest
// augmenting paths). Returns sigma with sigma[i] = column matched to row i.
std::vector<int> min_cost_assignment(const Eigen::MatrixXd& cost);

// Assignment minimizing sum |from_i - to_sigma(i)|.
std::vector<int> optimal_assignment(const Eigen::VectorXcd& from,
                                    const Eigen::VectorXcd& to);

// Largest per-pair distance under the optimal matching of two equal-size
// eigenvalue multisets.
double multiset_distance(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b);

// Matches each eigenvalue of s1 with the conjugate of one of s2. matched is
// true when every pair sits within tol.
struct PairingResult {
  bool matched = false;
  std::vector<std::pair<int, int>> pairs;
  double worst_distance = 0.0;
};
PairingResult conjugation_pairing(const Spectrum& s1, const Spectrum& s2,
                                  double tol);

}  // namespace spectral
}  // namespace ptbox
