#ifndef HEINZLOG_TEST_SUPPORT_HPP
#define HEINZLOG_TEST_SUPPORT_HPP

// Test-only oracles and generators. Nothing here calls into the code paths
// it is used to check.

#include <cmath>
#include <complex>
#include <functional>
#include <random>

#include <Eigen/Dense>

namespace heinzlog::testing {

/// Composite Simpson rule on [lo, hi] with an odd node count.
inline double simpson(const std::function<double(double)>& f, double lo, double hi, int nodes) {
  const double h = (hi - lo) / (nodes - 1);
  double acc = f(lo) + f(hi);
  for (int k = 1; k < nodes - 1; ++k) acc += (k % 2 ? 4.0 : 2.0) * f(lo + k * h);
  return acc * h / 3.0;
}

inline double rel_diff(double a, double b) {
  return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
}

inline double max_abs(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

/// Relative max-entry difference.
inline double rel_diff(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return max_abs(a - b) / std::max({max_abs(a), max_abs(b), 1e-300});
}

inline Eigen::MatrixXcd gaussian_matrix(long rows, long cols, std::mt19937_64& gen) {
  std::normal_distribution<double> n(0.0, 1.0);
  Eigen::MatrixXcd m(rows, cols);
  for (long j = 0; j < cols; ++j)
    for (long i = 0; i < rows; ++i) m(i, j) = {n(gen), n(gen)};
  return m;
}

/// Haar-ish unitary from the QR factorization of a Gaussian matrix.
inline Eigen::MatrixXcd random_unitary(long n, std::mt19937_64& gen) {
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(gaussian_matrix(n, n, gen));
  return qr.householderQ() * Eigen::MatrixXcd::Identity(n, n);
}

/// Hermitian positive definite U diag(eigs) U*.
inline Eigen::MatrixXcd hpd_with_spectrum(const Eigen::VectorXd& eigs, std::mt19937_64& gen) {
  const Eigen::MatrixXcd u = random_unitary(eigs.size(), gen);
  Eigen::MatrixXcd m = u * eigs.cast<std::complex<double>>().asDiagonal() * u.adjoint();
  return (m + m.adjoint()) * 0.5;
}

}  // namespace heinzlog::testing

#endif  // HEINZLOG_TEST_SUPPORT_HPP
