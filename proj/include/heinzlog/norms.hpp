#ifndef HEINZLOG_NORMS_HPP
#define HEINZLOG_NORMS_HPP

// Unitarily invariant norms, assembled from singular values.

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "heinzlog/errors.hpp"
#include "heinzlog/means.hpp"

namespace heinzlog {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

namespace norm_kind {
// (sum sigma_i^p)^(1/p); p = +inf is the operator norm.
struct SchattenP {
  double p;
};
// Sum of the k largest singular values.
struct KyFan {
  int k;
};
struct Operator {};
struct Trace {};
struct Frobenius {};
}  // namespace norm_kind

using NormKind = std::variant<norm_kind::SchattenP, norm_kind::KyFan, norm_kind::Operator,
                              norm_kind::Trace, norm_kind::Frobenius>;

inline std::string to_string(const NormKind& kind) {
  return std::visit(
      detail::overloaded{
          [](const norm_kind::SchattenP& n) -> std::string {
            if (std::isinf(n.p)) return "schatten:inf";
            return "schatten:" + detail::format_param(n.p);
          },
          [](const norm_kind::KyFan& n) -> std::string {
            return "kyfan:" + std::to_string(n.k);
          },
          [](const norm_kind::Operator&) -> std::string { return "operator"; },
          [](const norm_kind::Trace&) -> std::string { return "trace"; },
          [](const norm_kind::Frobenius&) -> std::string { return "frobenius"; },
      },
      kind);
}

/// Singular values in descending order, length min(rows, cols).
inline std::vector<double> singular_values(const ComplexMatrix& x) {
  if (x.size() == 0) return {};
  Eigen::JacobiSVD<ComplexMatrix> svd(x);
  const auto& sv = svd.singularValues();
  std::vector<double> out(sv.data(), sv.data() + sv.size());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

namespace detail {

// Singular values below this fraction of sigma_max are treated as zero.
inline constexpr double kSingularClamp = 1e-14;

inline double schatten_from_sv(const std::vector<double>& sv, double p) {
  if (sv.empty() || sv.front() == 0.0) return 0.0;
  const double top = sv.front();
  if (std::isinf(p)) return top;
  double acc = 0.0;
  for (double s : sv) {
    if (s < kSingularClamp * top) continue;
    acc += std::pow(s / top, p);
  }
  return top * std::pow(acc, 1.0 / p);
}

inline double kyfan_from_sv(const std::vector<double>& sv, int k) {
  if (sv.empty()) return 0.0;
  const double top = sv.front();
  double acc = 0.0;
  for (int i = 0; i < k; ++i) {
    if (sv[i] < kSingularClamp * top) break;
    acc += sv[i];
  }
  return acc;
}

}  // namespace detail

/// Throws ParameterError for p < 1 or Ky Fan k outside [1, min_dim].
inline void validate(const NormKind& kind, long min_dim) {
  std::visit(detail::overloaded{
                 [](const norm_kind::SchattenP& n) {
                   if (!(n.p >= 1.0))
                     throw ParameterError("Schatten exponent must be >= 1, got " +
                                          detail::format_param(n.p));
                 },
                 [min_dim](const norm_kind::KyFan& n) {
                   if (n.k < 1 || n.k > min_dim)
                     throw ParameterError("Ky Fan index " + std::to_string(n.k) +
                                          " outside [1, " + std::to_string(min_dim) + "]");
                 },
                 [](const auto&) {},
             },
             kind);
}

/// Norm evaluated on a precomputed descending singular value list.
inline double norm_from_singular_values(const std::vector<double>& sv, const NormKind& kind) {
  validate(kind, static_cast<long>(sv.size()));
  return std::visit(
      detail::overloaded{
          [&](const norm_kind::SchattenP& n) { return detail::schatten_from_sv(sv, n.p); },
          [&](const norm_kind::KyFan& n) { return detail::kyfan_from_sv(sv, n.k); },
          [&](const norm_kind::Operator&) {
            return detail::schatten_from_sv(sv, std::numeric_limits<double>::infinity());
          },
          [&](const norm_kind::Trace&) { return detail::schatten_from_sv(sv, 1.0); },
          [&](const norm_kind::Frobenius&) { return detail::schatten_from_sv(sv, 2.0); },
      },
      kind);
}

inline double norm(const ComplexMatrix& x, const NormKind& kind) {
  return norm_from_singular_values(singular_values(x), kind);
}

/// Ky Fan 1..dim followed by Schatten {1, 2, 3, inf}.
inline std::vector<NormKind> default_norms(int dim) {
  std::vector<NormKind> out;
  for (int k = 1; k <= dim; ++k) out.push_back(norm_kind::KyFan{k});
  for (double p : {1.0, 2.0, 3.0, std::numeric_limits<double>::infinity()})
    out.push_back(norm_kind::SchattenP{p});
  return out;
}

/// Parses "operator", "trace", "frobenius", "kyfan:K", "schatten:P" (P may
/// be "inf").
inline NormKind parse_norm(const std::string& text) {
  if (text == "operator" || text == "op") return norm_kind::Operator{};
  if (text == "trace") return norm_kind::Trace{};
  if (text == "frobenius" || text == "frob") return norm_kind::Frobenius{};
  const auto colon = text.find(':');
  if (colon != std::string::npos) {
    const std::string head = text.substr(0, colon);
    const std::string arg = text.substr(colon + 1);
    try {
      std::size_t used = 0;
      if (head == "kyfan") {
        const int k = std::stoi(arg, &used);
        if (used == arg.size()) return norm_kind::KyFan{k};
      } else if (head == "schatten") {
        if (arg == "inf") return norm_kind::SchattenP{std::numeric_limits<double>::infinity()};
        const double p = std::stod(arg, &used);
        if (used == arg.size()) return norm_kind::SchattenP{p};
      }
    } catch (const std::logic_error&) {
    }
  }
  throw ParameterError("unrecognized norm '" + text + "'");
}

}  // namespace heinzlog

#endif  // HEINZLOG_NORMS_HPP
