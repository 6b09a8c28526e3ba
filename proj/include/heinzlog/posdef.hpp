#ifndef HEINZLOG_POSDEF_HPP
#define HEINZLOG_POSDEF_HPP

// Positive definite functions tested through Gram matrices [phi(x_i - x_j)].
//
// A kernel phi is positive definite when every such Gram matrix is positive
// semidefinite. gram_matrix() certifies that on one point set;
// witness_search() looks for point sets that refute it. dominance() builds
// the ratio matrix [M(l_i, l_j) / N(l_i, l_j)] of two means, which is the
// Gram matrix of MeanRatio{M, N} at the points log l_i.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "heinzlog/errors.hpp"
#include "heinzlog/matops.hpp"
#include "heinzlog/means.hpp"

namespace heinzlog {

namespace kernel {
// cosh(alpha x) / cosh(beta x)
struct CoshRatio {
  double alpha, beta;
};
// sinh(alpha x) / sinh(beta x), alpha/beta at x = 0
struct SinhRatio {
  double alpha, beta;
};
// beta x cosh(alpha x) / sinh(beta x)
struct XCoshOverSinh {
  double alpha, beta;
};
// tanh(beta x) / (beta x)
struct TanhOverX {
  double beta;
};
// 1 / (1 + b^2 x^2)
struct Cauchy {
  double b;
};
// beta x / sinh(beta x)
struct XOverSinh {
  double beta;
};
// M(e^(x/2), e^(-x/2)) / N(e^(x/2), e^(-x/2))
struct MeanRatio {
  MeanKind num, den;
};
}  // namespace kernel

using KernelKind = std::variant<kernel::CoshRatio, kernel::SinhRatio, kernel::XCoshOverSinh,
                                kernel::TanhOverX, kernel::Cauchy, kernel::XOverSinh,
                                kernel::MeanRatio>;

// A witness must push the minimum Gram eigenvalue below -kWitnessThreshold.
inline constexpr double kWitnessThreshold = 1e-8;
inline constexpr long kMaxGramSize = 64;

struct GramResult {
  Eigen::MatrixXd matrix;
  double min_eigenvalue = 0.0;
  bool is_psd = true;
  double tolerance_used = 0.0;
  std::vector<double> points;  // kernel abscissae; log(lambda_i) for dominance()
};

struct WitnessResult {
  KernelKind kernel;
  std::vector<double> points;
  double min_eigenvalue = std::numeric_limits<double>::infinity();
  bool found = false;
};

inline std::string to_string(const KernelKind& kind) {
  using detail::format_param;
  return std::visit(
      detail::overloaded{
          [](const kernel::CoshRatio& k) {
            return "cosh_ratio(" + format_param(k.alpha) + "," + format_param(k.beta) + ")";
          },
          [](const kernel::SinhRatio& k) {
            return "sinh_ratio(" + format_param(k.alpha) + "," + format_param(k.beta) + ")";
          },
          [](const kernel::XCoshOverSinh& k) {
            return "xcosh_over_sinh(" + format_param(k.alpha) + "," + format_param(k.beta) + ")";
          },
          [](const kernel::TanhOverX& k) { return "tanh_over_x(" + format_param(k.beta) + ")"; },
          [](const kernel::Cauchy& k) { return "cauchy(" + format_param(k.b) + ")"; },
          [](const kernel::XOverSinh& k) { return "x_over_sinh(" + format_param(k.beta) + ")"; },
          [](const kernel::MeanRatio& k) {
            return "mean_ratio(" + to_string(k.num) + "/" + to_string(k.den) + ")";
          },
      },
      kind);
}

namespace detail {

inline void require_finite_param(double v, const char* name) {
  if (!std::isfinite(v))
    throw ParameterError(std::string("kernel parameter ") + name + " must be finite");
}

inline void require_nonzero_beta(double beta) {
  require_finite_param(beta, "beta");
  if (beta == 0.0) throw ParameterError("kernel parameter beta must be nonzero");
}

inline double sign_of(double v) { return v < 0.0 ? -1.0 : 1.0; }

inline void validate_kernel(const KernelKind& kind) {
  std::visit(overloaded{
                 [](const kernel::CoshRatio& k) {
                   require_finite_param(k.alpha, "alpha");
                   require_finite_param(k.beta, "beta");
                 },
                 [](const kernel::SinhRatio& k) {
                   require_finite_param(k.alpha, "alpha");
                   require_nonzero_beta(k.beta);
                 },
                 [](const kernel::XCoshOverSinh& k) {
                   require_finite_param(k.alpha, "alpha");
                   require_nonzero_beta(k.beta);
                 },
                 [](const kernel::TanhOverX& k) { require_nonzero_beta(k.beta); },
                 [](const kernel::Cauchy& k) { require_finite_param(k.b, "b"); },
                 [](const kernel::XOverSinh& k) { require_nonzero_beta(k.beta); },
                 [](const kernel::MeanRatio& k) {
                   validate(k.num);
                   validate(k.den);
                 },
             },
             kind);
}

// Kernel value without parameter validation. Exponentials are factored as
// e^((|a|-|b|)|x|) times bounded corrections so nothing overflows while the
// true value is representable.
inline double kernel_value(const KernelKind& kind, double x) {
  const double ax = std::abs(x);
  return std::visit(
      overloaded{
          [ax](const kernel::CoshRatio& k) {
            const double a = std::abs(k.alpha) * ax;
            const double b = std::abs(k.beta) * ax;
            return std::exp(a - b) * (1.0 + std::exp(-2.0 * a)) / (1.0 + std::exp(-2.0 * b));
          },
          [ax](const kernel::SinhRatio& k) {
            if (ax == 0.0) return k.alpha / k.beta;
            const double a = std::abs(k.alpha) * ax;
            const double b = std::abs(k.beta) * ax;
            return sign_of(k.alpha) * sign_of(k.beta) * std::exp(a - b) * std::expm1(-2.0 * a) /
                   std::expm1(-2.0 * b);
          },
          [ax](const kernel::XCoshOverSinh& k) {
            const double a = std::abs(k.alpha) * ax;
            const double y = std::abs(k.beta) * ax;
            if (y < kSeriesThreshold) return std::cosh(a) / sinhc(y);
            return y * std::exp(a - y) * (1.0 + std::exp(-2.0 * a)) / -std::expm1(-2.0 * y);
          },
          [ax](const kernel::TanhOverX& k) {
            const double y = std::abs(k.beta) * ax;
            if (y < kSeriesThreshold) {
              const double y2 = y * y;
              return 1.0 - y2 / 3.0 + 2.0 * y2 * y2 / 15.0;
            }
            return std::tanh(y) / y;
          },
          [x](const kernel::Cauchy& k) { return 1.0 / (1.0 + (k.b * x) * (k.b * x)); },
          [ax](const kernel::XOverSinh& k) {
            const double y = std::abs(k.beta) * ax;
            if (y < kSeriesThreshold) return 1.0 / sinhc(y);
            return 2.0 * y * std::exp(-y) / -std::expm1(-2.0 * y);
          },
          [x](const kernel::MeanRatio& k) {
            if (std::abs(x) < 700.0) return unit_mean(k.num, x) / unit_mean(k.den, x);
            return std::exp(log_unit_mean(k.num, x) - log_unit_mean(k.den, x));
          },
      },
      kind);
}

inline void require_point_count(std::size_t n) {
  if (n < 1 || n > static_cast<std::size_t>(kMaxGramSize))
    throw ParameterError("point count must lie in [1, 64], got " + std::to_string(n));
}

inline GramResult finish_gram(Eigen::MatrixXd m, std::vector<double> points) {
  if (!m.allFinite()) throw NumericalError("Gram matrix has non-finite entries");
  GramResult out;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw NumericalError("symmetric eigensolver failed");
  out.min_eigenvalue = es.eigenvalues()(0);
  out.tolerance_used = psd_tolerance(m.rows(), m.cwiseAbs().maxCoeff());
  out.is_psd = out.min_eigenvalue >= -out.tolerance_used;
  out.matrix = std::move(m);
  out.points = std::move(points);
  return out;
}

}  // namespace detail

/// phi(x) for the given kernel. Removable singularities at x = 0 are filled.
inline double kernel_eval(const KernelKind& kind, double x) {
  detail::validate_kernel(kind);
  return detail::kernel_value(kind, x);
}

/// Gram matrix [phi(x_i - x_j)] and its smallest eigenvalue, for 1..64 points.
inline GramResult gram_matrix(const KernelKind& kind, std::span<const double> points) {
  detail::validate_kernel(kind);
  detail::require_point_count(points.size());
  for (double p : points)
    if (!std::isfinite(p)) throw ParameterError("Gram points must be finite");
  const long n = static_cast<long>(points.size());
  Eigen::MatrixXd m(n, n);
  const double diag = detail::kernel_value(kind, 0.0);
  for (long i = 0; i < n; ++i) {
    m(i, i) = diag;
    for (long j = i + 1; j < n; ++j) {
      const double v = detail::kernel_value(kind, points[i] - points[j]);
      m(i, j) = v;
      m(j, i) = v;
    }
  }
  return detail::finish_gram(std::move(m), {points.begin(), points.end()});
}

/// Ratio matrix [num(l_i, l_j) / den(l_i, l_j)]. It is PSD for every choice
/// of lambdas exactly when num << den (strong dominance).
inline GramResult dominance(const MeanKind& num, const MeanKind& den,
                            std::span<const double> lambdas) {
  validate(num);
  validate(den);
  detail::require_point_count(lambdas.size());
  const long n = static_cast<long>(lambdas.size());
  std::vector<double> logs(n);
  for (long i = 0; i < n; ++i) {
    detail::require_positive(lambdas[i], "lambda");
    logs[i] = std::log(lambdas[i]);
  }
  Eigen::MatrixXd m(n, n);
  for (long i = 0; i < n; ++i) {
    for (long j = i; j < n; ++j) {
      const double v =
          eval_mean(num, lambdas[i], lambdas[j]) / eval_mean(den, lambdas[i], lambdas[j]);
      m(i, j) = v;
      m(j, i) = v;
    }
  }
  return detail::finish_gram(std::move(m), std::move(logs));
}

namespace detail {

// Smallest Gram eigenvalue, or NaN when the kernel overflows on this set.
inline double min_gram_eigenvalue(const KernelKind& kind, const std::vector<double>& points) {
  const long n = static_cast<long>(points.size());
  Eigen::MatrixXd m(n, n);
  const double diag = kernel_value(kind, 0.0);
  for (long i = 0; i < n; ++i) {
    m(i, i) = diag;
    for (long j = i + 1; j < n; ++j) m(i, j) = m(j, i) = kernel_value(kind, points[i] - points[j]);
  }
  if (!m.allFinite()) return std::numeric_limits<double>::quiet_NaN();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

// Candidate point sets of size n spread over (0, span]: uniform grids and
// geometric grids at a ladder of scales, then seeded random sets.
inline std::vector<std::vector<double>> witness_candidates(int n, double span,
                                                           std::uint64_t seed) {
  constexpr int kScales = 40;
  constexpr double kShrink = 0.85;
  constexpr int kRandomSets = 64;
  std::vector<std::vector<double>> out;

  for (int k = 0; k < kScales; ++k) {
    const double h = span / n * std::pow(kShrink, k);
    std::vector<double> pts(n);
    for (int i = 0; i < n; ++i) pts[i] = h * (i + 1);
    out.push_back(std::move(pts));
  }
  if (n > 2) {
    for (double ratio : {1.25, 1.6, 2.5}) {
      const double total = std::pow(ratio, n - 1) - 1.0;
      for (int k = 0; k < kScales / 2; ++k) {
        const double scale = span * std::pow(kShrink, k);
        std::vector<double> pts(n);
        for (int i = 0; i < n; ++i) pts[i] = scale * (std::pow(ratio, i) - 1.0) / total;
        out.push_back(std::move(pts));
      }
    }
  }
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(n)};
  std::mt19937_64 gen(seq);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int r = 0; r < kRandomSets; ++r) {
    std::vector<double> pts(n);
    for (double& p : pts) p = span * (1.0 - unit(gen));  // (0, span]
    std::sort(pts.begin(), pts.end());
    out.push_back(std::move(pts));
  }
  return out;
}

}  // namespace detail

/// Searches deterministic and seeded random point sets of size 2..n_max in
/// (0, span] for the most negative Gram eigenvalue. found is true iff that
/// eigenvalue is below -kWitnessThreshold.
inline WitnessResult witness_search(const KernelKind& kind, int n_max, double span,
                                    std::uint64_t seed = 0x5eed) {
  detail::validate_kernel(kind);
  if (n_max < 2 || n_max > 16)
    throw ParameterError("witness search size must lie in [2, 16], got " + std::to_string(n_max));
  if (!(span > 0.0) || !std::isfinite(span))
    throw ParameterError("witness search span must be positive");

  WitnessResult best{kind, {}, std::numeric_limits<double>::infinity(), false};
  for (int n = 2; n <= n_max; ++n) {
    for (auto& pts : detail::witness_candidates(n, span, seed)) {
      const double e = detail::min_gram_eigenvalue(kind, pts);
      if (std::isnan(e)) continue;
      if (e < best.min_eigenvalue) {
        best.min_eigenvalue = e;
        best.points = std::move(pts);
      }
    }
  }
  best.found = best.min_eigenvalue < -kWitnessThreshold;
  return best;
}

}  // namespace heinzlog

#endif  // HEINZLOG_POSDEF_HPP
