#ifndef HEINZLOG_MEANS_HPP
#define HEINZLOG_MEANS_HPP

// Symmetric homogeneous means on (0,inf) x (0,inf).
//
// Every mean here factors as M(a,b) = g * m(u) with g = sqrt(ab) and
// u = log a - log b, where m is an even function of u with m(0) = 1.
// All evaluation goes through that factorization, so widely separated
// arguments never form a^(1-t) b^t directly and the removable 0/0 at a = b
// is handled in one place (sinhc below).

#include <cmath>
#include <sstream>
#include <string>
#include <variant>

#include "heinzlog/errors.hpp"

namespace heinzlog {

namespace mean {
struct Arithmetic {};
struct Geometric {};
// (a^(1-t) b^t + a^t b^(1-t)) / 2, t in [0, 1]
struct Heinz {
  double t;
};
// (a - b) / (log a - log b)
struct Log {};
// (1 / (1 - 2s)) * integral_s^(1-s) a^v b^(1-v) dv, s in [0, 1]; s = 1/2 is
// the geometric mean and the formula is symmetric under s <-> 1 - s.
struct GenLog {
  double s;
};
}  // namespace mean

using MeanKind =
    std::variant<mean::Arithmetic, mean::Geometric, mean::Heinz, mean::Log, mean::GenLog>;

namespace detail {

// Below this |x| the series is used for sinh(x)/x; truncation error < 1e-25.
inline constexpr double kSeriesThreshold = 1e-5;

// sinh(x) / x, equal to 1 at x = 0.
inline double sinhc(double x) {
  if (std::abs(x) < kSeriesThreshold) {
    const double x2 = x * x;
    return 1.0 + x2 / 6.0 + x2 * x2 / 120.0;
  }
  return std::sinh(x) / x;
}

inline double log_cosh(double x) {
  const double ax = std::abs(x);
  return ax + std::log1p(std::exp(-2.0 * ax)) - std::log(2.0);
}

inline double log_sinhc(double x) {
  const double ax = std::abs(x);
  if (ax < 20.0) return std::log(sinhc(ax));
  return ax + std::log1p(-std::exp(-2.0 * ax)) - std::log(2.0 * ax);
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

inline std::string format_param(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace detail

inline std::string to_string(const MeanKind& kind) {
  return std::visit(
      detail::overloaded{
          [](const mean::Arithmetic&) -> std::string { return "arithmetic"; },
          [](const mean::Geometric&) -> std::string { return "geometric"; },
          [](const mean::Heinz& h) { return "heinz(" + detail::format_param(h.t) + ")"; },
          [](const mean::Log&) -> std::string { return "log"; },
          [](const mean::GenLog& g) { return "genlog(" + detail::format_param(g.s) + ")"; },
      },
      kind);
}

/// Throws ParameterError unless the mean's parameter lies in its admissible
/// range (Heinz t in [0,1], GenLog s in [0,1]).
inline void validate(const MeanKind& kind) {
  std::visit(detail::overloaded{
                 [](const mean::Heinz& h) {
                   if (!(h.t >= 0.0 && h.t <= 1.0))
                     throw ParameterError("Heinz parameter t must lie in [0, 1], got " +
                                          detail::format_param(h.t));
                 },
                 [](const mean::GenLog& g) {
                   if (!(g.s >= 0.0 && g.s <= 1.0))
                     throw ParameterError(
                         "generalized logarithmic parameter s must lie in [0, 1], got " +
                         detail::format_param(g.s));
                 },
                 [](const auto&) {},
             },
             kind);
}

/// The normalized mean m(u) = M(a,b)/sqrt(ab) at log-gap u = log a - log b.
/// Parameters are not validated here.
inline double unit_mean(const MeanKind& kind, double u) {
  return std::visit(detail::overloaded{
                        [u](const mean::Arithmetic&) { return std::cosh(0.5 * u); },
                        [](const mean::Geometric&) { return 1.0; },
                        [u](const mean::Heinz& h) { return std::cosh((0.5 - h.t) * u); },
                        [u](const mean::Log&) { return detail::sinhc(0.5 * u); },
                        [u](const mean::GenLog& g) {
                          if (g.s == 0.5) return 1.0;
                          return detail::sinhc((0.5 - g.s) * u);
                        },
                    },
                    kind);
}

/// log m(u); finite for every finite u.
inline double log_unit_mean(const MeanKind& kind, double u) {
  return std::visit(detail::overloaded{
                        [u](const mean::Arithmetic&) { return detail::log_cosh(0.5 * u); },
                        [](const mean::Geometric&) { return 0.0; },
                        [u](const mean::Heinz& h) { return detail::log_cosh((0.5 - h.t) * u); },
                        [u](const mean::Log&) { return detail::log_sinhc(0.5 * u); },
                        [u](const mean::GenLog& g) {
                          if (g.s == 0.5) return 0.0;
                          return detail::log_sinhc((0.5 - g.s) * u);
                        },
                    },
                    kind);
}

namespace detail {

inline void require_positive(double a, const char* name) {
  if (!(a > 0.0) || !std::isfinite(a))
    throw DomainError(std::string("mean argument ") + name +
                      " must be positive and finite, got " + format_param(a));
}

}  // namespace detail

/// M(a, b) for a, b > 0.
inline double eval_mean(const MeanKind& kind, double a, double b) {
  detail::require_positive(a, "a");
  detail::require_positive(b, "b");
  validate(kind);
  const double u = std::log(a) - std::log(b);
  if (std::abs(u) > 700.0)
    return std::exp(0.5 * (std::log(a) + std::log(b)) + log_unit_mean(kind, u));
  return std::sqrt(a) * std::sqrt(b) * unit_mean(kind, u);
}

/// The unnormalized integral  integral_s^(1-s) lambda^v mu^(1-v) dv
/// = (1 - 2s) L_s(lambda, mu), for s in [0, 1/2]. Vanishes at s = 1/2.
inline double integral_weight(double s, double lambda, double mu) {
  detail::require_positive(lambda, "lambda");
  detail::require_positive(mu, "mu");
  if (!(s >= 0.0 && s <= 0.5))
    throw ParameterError("integral weight requires s in [0, 1/2], got " +
                         detail::format_param(s));
  const double u = std::log(lambda) - std::log(mu);
  const double c = 0.5 - s;
  return std::sqrt(lambda) * std::sqrt(mu) * (2.0 * c) * detail::sinhc(c * u);
}

}  // namespace heinzlog

#endif  // HEINZLOG_MEANS_HPP
