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

#include "osp21/eigen_dense.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace osp21 {

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::recurrence: return "recurrence";
    case Provenance::dense: return "dense";
    case Provenance::closed_form: return "closed_form";
  }
  return "unknown";
}

std::vector<double> Spectrum::real_parts() const {
  std::vector<double> out;
  out.reserve(eigenvalues.size());
  for (const auto& e : eigenvalues) out.push_back(e.real());
  return out;
}

double Spectrum::max_imag() const {
  double m = 0.0;
  for (const auto& e : eigenvalues) m = std::max(m, std::abs(e.imag()));
  return m;
}

void sort_spectrum(std::vector<std::complex<double>>& values, Eigen::MatrixXcd& vectors) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (values[a].real() != values[b].real()) return values[a].real() < values[b].real();
    return values[a].imag() < values[b].imag();
  });
  std::vector<std::complex<double>> v(values.size());
  Eigen::MatrixXcd vec(vectors.rows(), vectors.cols());
  for (std::size_t k = 0; k < order.size(); ++k) {
    v[k] = values[order[k]];
    if (vectors.size() != 0) {
      vec.col(static_cast<Eigen::Index>(k)) = vectors.col(static_cast<Eigen::Index>(order[k]));
    }
  }
  values = std::move(v);
  if (vectors.size() != 0) vectors = std::move(vec);
}

double eigen_residual(const Eigen::MatrixXd& a, const Spectrum& s) {
  double worst = 0.0;
  const Eigen::MatrixXcd ac = a.cast<std::complex<double>>();
  for (Eigen::Index k = 0; k < s.eigenvectors.cols(); ++k) {
    const Eigen::VectorXcd v = s.eigenvectors.col(k);
    const double norm = v.norm();
    if (norm == 0.0) continue;
    worst = std::max(worst, (ac * v - s.eigenvalues[static_cast<std::size_t>(k)] * v).norm() / norm);
  }
  return worst;
}

Spectrum eigen_dense(const Eigen::MatrixXd& a, const EigenOptions& opts) {
  if (a.rows() != a.cols()) throw std::invalid_argument("eigen_dense: matrix is not square");
  if (a.rows() > opts.max_dim) {
    throw std::length_error("eigen_dense: dimension " + std::to_string(a.rows()) +
                            " exceeds limit " + std::to_string(opts.max_dim));
  }
  Spectrum out;
  out.provenance = Provenance::dense;
  if (a.rows() == 0) return out;

  if (a == a.transpose()) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(
        a, opts.vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) {
      throw EigenSolveError("eigen_dense: symmetric QR iteration did not converge",
                            std::numeric_limits<double>::infinity());
    }
    for (Eigen::Index k = 0; k < a.rows(); ++k) out.eigenvalues.emplace_back(es.eigenvalues()(k), 0.0);
    if (opts.vectors) out.eigenvectors = es.eigenvectors().cast<std::complex<double>>();
  } else {
    Eigen::EigenSolver<Eigen::MatrixXd> es(a, opts.vectors);
    if (es.info() != Eigen::Success) {
      // Report how far the partially converged Schur form is from a.
      Eigen::RealSchur<Eigen::MatrixXd> schur(a.rows());
      schur.setMaxIterations(40 * a.rows());
      schur.compute(a);
      double residual = std::numeric_limits<double>::infinity();
      if (schur.info() == Eigen::Success) {
        residual = (schur.matrixU() * schur.matrixT() * schur.matrixU().transpose() - a).norm();
      }
      throw EigenSolveError("eigen_dense: Hessenberg-QR iteration did not converge", residual);
    }
    for (Eigen::Index k = 0; k < a.rows(); ++k) out.eigenvalues.push_back(es.eigenvalues()(k));
    if (opts.vectors) out.eigenvectors = es.eigenvectors();
  }
  sort_spectrum(out.eigenvalues, out.eigenvectors);
  if (opts.vectors) {
    const Eigen::MatrixXcd ac = a.cast<std::complex<double>>();
    for (Eigen::Index k = 0; k < out.eigenvectors.cols(); ++k) {
      const Eigen::VectorXcd v = out.eigenvectors.col(k);
      const auto lambda = out.eigenvalues[static_cast<std::size_t>(k)];
      out.residuals.push_back((ac * v - lambda * v).norm() / v.norm());
    }
  }
  return out;
}

}  // namespace osp21
