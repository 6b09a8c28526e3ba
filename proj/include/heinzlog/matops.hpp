#ifndef HEINZLOG_MATOPS_HPP
#define HEINZLOG_MATOPS_HPP

// Hermitian positive definite matrices and the matrix-valued maps built on
// them: fractional powers, the Heinz-type cross terms
//   A^(1-t) X B^t +/- A^t X B^(1-t),
// the integral mean  integral_s^(1-s) A^v X B^(1-v) dv  (closed form and a
// Simpson quadrature), Schur products and the 2x2 block embedding.

#include <algorithm>
#include <cmath>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "heinzlog/errors.hpp"
#include "heinzlog/means.hpp"
#include "heinzlog/norms.hpp"
#include "heinzlog/report.hpp"

namespace heinzlog {

// Hermitian symmetry tolerance, relative to the largest entry.
inline constexpr double kHermitianTolerance = 1e-12;
// Smallest admissible eigenvalue, relative to the largest.
inline constexpr double kPositivityThreshold = 1e-12;
// Accuracy contract of the eigendecomposition (unitarity and reconstruction).
inline constexpr double kSpectralTolerance = 1e-11;

/// Eigenvalue floor used for every positive semidefiniteness decision:
/// min eigenvalue >= -psd_tolerance(n, max |entry|).
inline double psd_tolerance(long n, double max_abs_entry) {
  return 1e-10 * static_cast<double>(n) * std::max(1.0, max_abs_entry);
}

struct SpectralDecomp {
  Eigen::VectorXd eigenvalues;  // ascending, all positive
  ComplexMatrix basis;          // unitary; columns are eigenvectors
};

namespace detail {

inline double max_abs(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

inline void require_finite(const ComplexMatrix& m, const char* what) {
  if (!m.allFinite()) throw DomainError(std::string(what) + " has non-finite entries");
}

inline ComplexMatrix hermitian_part(const ComplexMatrix& m) {
  return (m + m.adjoint()) * 0.5;
}

inline bool is_hermitian(const ComplexMatrix& m) {
  const double scale = std::max(max_abs(m), 1e-300);
  return max_abs(m - m.adjoint()) <= kHermitianTolerance * scale;
}

}  // namespace detail

/// A Hermitian, strictly positive definite matrix together with its
/// eigendecomposition. Construction validates both properties and checks the
/// decomposition residual; the stored matrix is the exact Hermitian part of
/// the input.
class PositiveMatrix {
 public:
  explicit PositiveMatrix(const ComplexMatrix& m) {
    if (m.rows() < 1 || m.rows() != m.cols())
      throw DimensionError("positive matrix must be square and nonempty");
    detail::require_finite(m, "positive matrix");
    if (!detail::is_hermitian(m)) throw NotPositiveError("matrix is not Hermitian");
    matrix_ = detail::hermitian_part(m);

    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(matrix_);
    if (es.info() != Eigen::Success) throw NumericalError("Hermitian eigensolver failed");
    decomp_.eigenvalues = es.eigenvalues();
    decomp_.basis = es.eigenvectors();

    const double lo = decomp_.eigenvalues(0);
    const double hi = decomp_.eigenvalues(decomp_.eigenvalues.size() - 1);
    if (!(hi > 0.0) || !(lo > kPositivityThreshold * hi))
      throw NotPositiveError("matrix is not positive definite: eigenvalue range [" +
                             detail::format_param(lo) + ", " + detail::format_param(hi) + "]");
    check_contract();
  }

  static PositiveMatrix identity(long n) {
    return PositiveMatrix(ComplexMatrix::Identity(n, n));
  }

  static PositiveMatrix diagonal(std::span<const double> entries) {
    ComplexMatrix m = ComplexMatrix::Zero(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
    return PositiveMatrix(m);
  }

  long dim() const { return matrix_.rows(); }
  const ComplexMatrix& matrix() const { return matrix_; }
  const SpectralDecomp& decomposition() const { return decomp_; }

  // Trusted construction for results whose spectrum is known (powers,
  // block sums of already validated matrices).
  static PositiveMatrix from_decomposition(ComplexMatrix m, SpectralDecomp d) {
    return PositiveMatrix(std::move(m), std::move(d));
  }

 private:
  PositiveMatrix(ComplexMatrix m, SpectralDecomp d) : matrix_(std::move(m)), decomp_(std::move(d)) {}

  void check_contract() const {
    const long n = dim();
    const ComplexMatrix& u = decomp_.basis;
    const double unitarity =
        detail::max_abs(u.adjoint() * u - ComplexMatrix::Identity(n, n));
    if (unitarity > kSpectralTolerance)
      throw NumericalError("eigenbasis not unitary to tolerance: " +
                           detail::format_param(unitarity));
    const ComplexMatrix rebuilt =
        u * decomp_.eigenvalues.cast<Complex>().asDiagonal() * u.adjoint();
    const double residual = detail::max_abs(rebuilt - matrix_) / detail::max_abs(matrix_);
    if (residual > kSpectralTolerance)
      throw NumericalError("eigendecomposition residual exceeds contract: " +
                           detail::format_param(residual));
  }

  ComplexMatrix matrix_;
  SpectralDecomp decomp_;
};

inline const SpectralDecomp& spectral(const PositiveMatrix& a) { return a.decomposition(); }

namespace detail {

// U diag(lambda^v) U*, Hermitian-symmetrized.
inline ComplexMatrix power_matrix(const SpectralDecomp& d, double v) {
  const Eigen::VectorXcd powered =
      d.eigenvalues.unaryExpr([v](double x) { return std::pow(x, v); }).cast<Complex>();
  return hermitian_part(d.basis * powered.asDiagonal() * d.basis.adjoint());
}

inline ComplexMatrix power_of(const PositiveMatrix& a, double v) {
  if (v == 0.0) return ComplexMatrix::Identity(a.dim(), a.dim());
  if (v == 1.0) return a.matrix();
  return power_matrix(a.decomposition(), v);
}

inline void require_conformable(const PositiveMatrix& a, const ComplexMatrix& x,
                                const PositiveMatrix& b) {
  if (x.rows() != a.dim() || x.cols() != b.dim())
    throw DimensionError("dimension mismatch: A is " + std::to_string(a.dim()) + "x" +
                         std::to_string(a.dim()) + ", X is " + std::to_string(x.rows()) + "x" +
                         std::to_string(x.cols()) + ", B is " + std::to_string(b.dim()) + "x" +
                         std::to_string(b.dim()));
  require_finite(x, "X");
}

inline void require_unit_interval(double t, const char* name) {
  if (!(t >= 0.0 && t <= 1.0))
    throw ParameterError(std::string(name) + " must lie in [0, 1], got " + format_param(t));
}

}  // namespace detail

/// A^v for real v. A^0 is the exact identity and A^1 is A itself.
inline PositiveMatrix frac_power(const PositiveMatrix& a, double v) {
  if (v == 0.0) return PositiveMatrix::identity(a.dim());
  if (v == 1.0) return a;
  const SpectralDecomp& d = a.decomposition();
  SpectralDecomp out;
  out.eigenvalues = d.eigenvalues.unaryExpr([v](double x) { return std::pow(x, v); });
  out.basis = d.basis;
  if (v < 0.0) {
    out.eigenvalues.reverseInPlace();
    out.basis = out.basis.rowwise().reverse().eval();
  }
  return PositiveMatrix::from_decomposition(detail::power_matrix(d, v), std::move(out));
}

/// A^(1-t) X B^t + A^t X B^(1-t).
inline ComplexMatrix heinz_map(const PositiveMatrix& a, const ComplexMatrix& x,
                               const PositiveMatrix& b, double t) {
  detail::require_unit_interval(t, "t");
  detail::require_conformable(a, x, b);
  const ComplexMatrix first = detail::power_of(a, 1.0 - t) * x * detail::power_of(b, t);
  const ComplexMatrix second = detail::power_of(a, t) * x * detail::power_of(b, 1.0 - t);
  return first + second;
}

/// A^(1-t) X B^t - A^t X B^(1-t). Exactly zero at t = 1/2.
inline ComplexMatrix diff_map(const PositiveMatrix& a, const ComplexMatrix& x,
                              const PositiveMatrix& b, double t) {
  detail::require_unit_interval(t, "t");
  detail::require_conformable(a, x, b);
  const ComplexMatrix first = detail::power_of(a, 1.0 - t) * x * detail::power_of(b, t);
  const ComplexMatrix second = detail::power_of(a, t) * x * detail::power_of(b, 1.0 - t);
  return first - second;
}

/// integral_s^(1-s) A^v X B^(1-v) dv in closed form: with A = U diag(lambda) U*
/// and B = V diag(mu) V*, returns U (W o (U* X V)) V* where
/// W[i][j] = integral_weight(s, lambda_i, mu_j). Requires s in [0, 1/2).
inline ComplexMatrix integral_mean(const PositiveMatrix& a, const ComplexMatrix& x,
                                   const PositiveMatrix& b, double s) {
  if (!(s >= 0.0 && s < 0.5))
    throw ParameterError("integral mean requires s in [0, 1/2), got " + detail::format_param(s));
  detail::require_conformable(a, x, b);
  const SpectralDecomp& da = a.decomposition();
  const SpectralDecomp& db = b.decomposition();
  ComplexMatrix y = da.basis.adjoint() * x * db.basis;
  for (long j = 0; j < y.cols(); ++j)
    for (long i = 0; i < y.rows(); ++i)
      y(i, j) *= integral_weight(s, da.eigenvalues(i), db.eigenvalues(j));
  return da.basis * y * db.basis.adjoint();
}

/// Composite Simpson approximation of integral_s^(1-s) A^v X B^(1-v) dv with
/// an odd number of nodes >= 3. Evaluates the integrand through matrix powers
/// only; independent of integral_weight.
inline ComplexMatrix integral_mean_quadrature(const PositiveMatrix& a, const ComplexMatrix& x,
                                              const PositiveMatrix& b, double s, int nodes) {
  if (nodes < 3 || nodes % 2 == 0)
    throw ParameterError("Simpson quadrature needs an odd node count >= 3, got " +
                         std::to_string(nodes));
  if (!(s >= 0.0 && s <= 0.5))
    throw ParameterError("quadrature requires s in [0, 1/2], got " + detail::format_param(s));
  detail::require_conformable(a, x, b);
  const double h = (1.0 - 2.0 * s) / (nodes - 1);
  ComplexMatrix acc = ComplexMatrix::Zero(x.rows(), x.cols());
  for (int k = 0; k < nodes; ++k) {
    const double v = s + k * h;
    const double w = (k == 0 || k == nodes - 1) ? 1.0 : (k % 2 == 1 ? 4.0 : 2.0);
    acc += w * (detail::power_matrix(a.decomposition(), v) * x *
                detail::power_matrix(b.decomposition(), 1.0 - v));
  }
  return acc * (h / 3.0);
}

/// Entrywise (Hadamard) product.
inline ComplexMatrix schur_product(const ComplexMatrix& y, const ComplexMatrix& x) {
  if (y.rows() != x.rows() || y.cols() != x.cols())
    throw DimensionError("Schur product needs equal shapes");
  return y.cwiseProduct(x);
}

/// Checks |||Y o X||| <= (max_i y_ii) |||X||| for a positive semidefinite Y,
/// one report per norm. Throws HypothesisError if Y is not Hermitian PSD.
inline std::vector<InequalityReport> schur_multiplier_check(const ComplexMatrix& y,
                                                            const ComplexMatrix& x,
                                                            std::span<const NormKind> norms) {
  if (y.rows() != y.cols() || y.rows() != x.rows() || x.rows() != x.cols())
    throw DimensionError("Schur multiplier check needs square Y and X of equal size");
  detail::require_finite(y, "Y");
  detail::require_finite(x, "X");
  if (!detail::is_hermitian(y)) throw HypothesisError("Schur multiplier is not Hermitian");
  const ComplexMatrix yh = detail::hermitian_part(y);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(yh, Eigen::EigenvaluesOnly);
  const double min_eig = es.eigenvalues()(0);
  if (min_eig < -psd_tolerance(yh.rows(), detail::max_abs(yh)))
    throw HypothesisError("Schur multiplier is not positive semidefinite (min eigenvalue " +
                          detail::format_param(min_eig) + ")");

  const double max_diag = yh.diagonal().real().maxCoeff();
  const auto sv_product = singular_values(schur_product(yh, x));
  const auto sv_x = singular_values(x);
  std::vector<InequalityReport> out;
  for (const NormKind& nk : norms) {
    InequalityReport r;
    r.theorem = "schur_2_4";
    r.dim = static_cast<int>(x.rows());
    r.norm = to_string(nk);
    set_sides(r, norm_from_singular_values(sv_product, nk),
              max_diag * norm_from_singular_values(sv_x, nk));
    out.push_back(std::move(r));
  }
  return out;
}

inline InequalityReport schur_multiplier_check(const ComplexMatrix& y, const ComplexMatrix& x,
                                               const NormKind& norm) {
  return schur_multiplier_check(y, x, std::span<const NormKind>(&norm, 1)).front();
}

/// The 2n x 2n pair (diag(A, B), [[0, X], [0, 0]]). For any t the Heinz map of
/// the embedded pair carries heinz_map(A, X, B, t) in its top-right block.
inline std::pair<PositiveMatrix, ComplexMatrix> embed_block(const PositiveMatrix& a,
                                                            const PositiveMatrix& b,
                                                            const ComplexMatrix& x) {
  const long n = a.dim();
  if (b.dim() != n || x.rows() != n || x.cols() != n)
    throw DimensionError("block embedding needs A, B and X of the same size");
  ComplexMatrix block = ComplexMatrix::Zero(2 * n, 2 * n);
  block.topLeftCorner(n, n) = a.matrix();
  block.bottomRightCorner(n, n) = b.matrix();
  ComplexMatrix corner = ComplexMatrix::Zero(2 * n, 2 * n);
  corner.topRightCorner(n, n) = x;
  return {PositiveMatrix(block), std::move(corner)};
}

}  // namespace heinzlog

#endif  // HEINZLOG_MATOPS_HPP
