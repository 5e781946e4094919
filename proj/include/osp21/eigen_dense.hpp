/*
   Copyright 2026 The osp21 Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "osp21/operator.hpp"

namespace osp21 {

enum class Provenance { recurrence, dense, closed_form };

std::string to_string(Provenance p);

/// Eigenvalues sorted lexicographically by (real, imag); eigenvectors, when
/// requested, are the matching columns.
struct Spectrum {
  std::vector<std::complex<double>> eigenvalues;
  Eigen::MatrixXcd eigenvectors;
  Provenance provenance = Provenance::dense;
  /// Per-eigenvalue residuals when the producer has them (empty otherwise).
  std::vector<double> residuals;
  std::vector<std::string> warnings;

  std::vector<double> real_parts() const;
  double max_imag() const;
};

struct EigenOptions {
  bool vectors = false;
  Eigen::Index max_dim = 2048;
};

class EigenSolveError : public std::runtime_error {
 public:
  EigenSolveError(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

/// General dense eigensolve. Non-symmetric input goes through Hessenberg
/// reduction and shifted QR; exactly symmetric input takes the self-adjoint
/// path. Throws std::length_error above max_dim and EigenSolveError if the
/// iteration does not converge.
Spectrum eigen_dense(const Eigen::MatrixXd& a, const EigenOptions& opts = {});

template <typename Scalar>
Spectrum eigen_dense(const Operator<Scalar>& a, const EigenOptions& opts = {}) {
  return eigen_dense(a.to_dense(), opts);
}

/// Sorts values (and the matching columns of vectors, if non-empty).
void sort_spectrum(std::vector<std::complex<double>>& values, Eigen::MatrixXcd& vectors);

/// max_k ||A v_k - lambda_k v_k|| / ||v_k||.
double eigen_residual(const Eigen::MatrixXd& a, const Spectrum& s);

}  // namespace osp21
