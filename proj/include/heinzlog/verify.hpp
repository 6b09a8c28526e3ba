#ifndef HEINZLOG_VERIFY_HPP
#define HEINZLOG_VERIFY_HPP

// Randomized checkers for the Heinz / logarithmic mean norm inequalities and
// parameter sweeps over strong-dominance regions.
//
// Inequalities checked, for positive definite A, B, any X and every
// unitarily invariant norm |||.|||:
//   chain_1_1   |||A^1/2 X B^1/2||| <= 1/2 |||A^(1-t)XB^t + A^tXB^(1-t)|||
//                                  <= 1/2 |||AX + XB|||,           0 <= t <= 1
//   chain_1_2   |||A^1/2 X B^1/2||| <= |||int_0^1 A^v X B^(1-v) dv|||
//                                  <= 1/2 |||AX + XB|||
//   drissi_1_3  |||A^(1-t)XB^t + A^tXB^(1-t)||| <= 2 |||int_0^1 ...|||, 1/4 <= t <= 3/4
//   thm_2_3     |||A^(1-t)XB^t + A^tXB^(1-t)||| <= 2/(1-2s) |||int_s^(1-s) ...|||,
//               0 <= s < 1/2, |1-2t| < (1-2s)/2
//   thm_2_6     |||int_s^(1-s) ...||| <= (1-2s)/2 |||A^(1-s)XB^s + A^sXB^(1-s)|||
//   thm_2_8     |||A^(1-t)XB^t - A^tXB^(1-t)||| <= |(1-2t)/(1-2s)| |||A^(1-s)XB^s - A^sXB^(1-s)|||,
//               |1-2t| < |1-2s|, same sign
//   cor_2_10    |||A^(1-t)XB^t - A^tXB^(1-t)||| <= |1-2t| |||AX - XB|||
//   schur_2_4   |||Y o X||| <= max_i y_ii |||X|||, Y PSD
//   dominance_2_2  H_t << L_s, H_t << H_s, L_t << L_s as ratio-matrix PSD checks

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "heinzlog/errors.hpp"
#include "heinzlog/matops.hpp"
#include "heinzlog/means.hpp"
#include "heinzlog/norms.hpp"
#include "heinzlog/posdef.hpp"
#include "heinzlog/report.hpp"

namespace heinzlog {

enum class Theorem {
  chain_1_1,
  chain_1_2,
  drissi_1_3,
  thm_2_3,
  thm_2_6,
  thm_2_8,
  cor_2_10,
  schur_2_4,
  dominance_2_2,
};

inline constexpr Theorem kAllTheorems[] = {
    Theorem::chain_1_1, Theorem::chain_1_2, Theorem::drissi_1_3,
    Theorem::thm_2_3,   Theorem::thm_2_6,   Theorem::thm_2_8,
    Theorem::cor_2_10,  Theorem::schur_2_4, Theorem::dominance_2_2,
};

inline std::string to_string(Theorem th) {
  switch (th) {
    case Theorem::chain_1_1: return "chain_1_1";
    case Theorem::chain_1_2: return "chain_1_2";
    case Theorem::drissi_1_3: return "drissi_1_3";
    case Theorem::thm_2_3: return "thm_2_3";
    case Theorem::thm_2_6: return "thm_2_6";
    case Theorem::thm_2_8: return "thm_2_8";
    case Theorem::cor_2_10: return "cor_2_10";
    case Theorem::schur_2_4: return "schur_2_4";
    case Theorem::dominance_2_2: return "dominance_2_2";
  }
  return "unknown";
}

inline Theorem parse_theorem(const std::string& id) {
  for (Theorem th : kAllTheorems)
    if (to_string(th) == id) return th;
  throw ConfigError("unknown theorem id '" + id + "'");
}

struct TrialConfig {
  std::uint64_t seed = 1;
  int dim = 3;
  int trials = 1;
  double s = 0.0;
  double t = 0.5;
  std::vector<NormKind> norms;  // empty selects default_norms(dim)
  Theorem theorem = Theorem::chain_1_1;
  bool explore = false;  // allow parameters outside the theorem's hypothesis
};

// ---------------------------------------------------------------------------
// Hypotheses

namespace detail {

// Slack for comparing grid parameters against hypothesis boundaries, so that
// e.g. t = 0.3, s = 0.1 (|1-2t| = (1-2s)/2 exactly) is treated as boundary.
inline constexpr double kHypothesisEps = 1e-12;

inline bool strictly_less(double a, double b) { return a < b - kHypothesisEps; }
inline bool at_most(double a, double b) { return a <= b + kHypothesisEps; }
inline bool in_unit(double v) { return v >= 0.0 && v <= 1.0; }

inline bool same_sign_or_zero(double a, double b) { return a * b >= 0.0; }

}  // namespace detail

// Strong-dominance regions for the three mean pairs.
inline bool heinz_genlog_hypothesis(double s, double t) {  // H_t << L_s
  return s >= 0.0 && s < 0.5 && detail::in_unit(t) &&
         detail::strictly_less(std::abs(1 - 2 * t), (1 - 2 * s) / 2);
}
inline bool heinz_heinz_hypothesis(double s, double t) {  // H_t << H_s
  return detail::in_unit(s) && detail::in_unit(t) &&
         detail::strictly_less(std::abs(1 - 2 * t), std::abs(1 - 2 * s));
}
inline bool genlog_genlog_hypothesis(double s, double t) {  // L_t << L_s
  return detail::in_unit(s) && detail::in_unit(t) &&
         ((s >= 0.0 && detail::strictly_less(s, t) && detail::strictly_less(t, 0.5)) ||
          (s <= 1.0 && detail::strictly_less(t, s) && detail::strictly_less(0.5, t)));
}

/// Whether (s, t) satisfies the stated hypothesis of the theorem. For
/// dominance_2_2 this is true when at least one of its parts applies.
inline bool hypothesis_holds(Theorem th, double s, double t) {
  using namespace detail;
  switch (th) {
    case Theorem::chain_1_1:
    case Theorem::cor_2_10: return in_unit(t);
    case Theorem::chain_1_2:
    case Theorem::schur_2_4: return true;
    case Theorem::drissi_1_3: return at_most(0.25, t) && at_most(t, 0.75);
    case Theorem::thm_2_3: return heinz_genlog_hypothesis(s, t);
    case Theorem::thm_2_6: return s >= 0.0 && s < 0.5;
    case Theorem::thm_2_8:
      return in_unit(s) && in_unit(t) &&
             strictly_less(std::abs(1 - 2 * t), std::abs(1 - 2 * s)) &&
             same_sign_or_zero(1 - 2 * t, 1 - 2 * s);
    case Theorem::dominance_2_2:
      return heinz_genlog_hypothesis(s, t) || heinz_heinz_hypothesis(s, t) ||
             genlog_genlog_hypothesis(s, t);
  }
  return false;
}

namespace detail {

// Parameters outside these ranges have no meaning for the theorem's maps and
// are rejected even in exploration mode.
inline void require_domain(Theorem th, double s, double t) {
  auto need = [](bool ok, const std::string& what) {
    if (!ok) throw ConfigError(what);
  };
  switch (th) {
    case Theorem::chain_1_1:
    case Theorem::cor_2_10:
    case Theorem::drissi_1_3: need(in_unit(t), "t must lie in [0, 1]"); break;
    case Theorem::thm_2_3:
      need(in_unit(t), "t must lie in [0, 1]");
      need(s >= 0.0 && s < 0.5, "s must lie in [0, 1/2)");
      break;
    case Theorem::thm_2_6: need(s >= 0.0 && s < 0.5, "s must lie in [0, 1/2)"); break;
    case Theorem::thm_2_8:
      need(in_unit(t), "t must lie in [0, 1]");
      need(in_unit(s) && s != 0.5, "s must lie in [0, 1] and differ from 1/2");
      break;
    case Theorem::dominance_2_2:
      need(in_unit(t), "t must lie in [0, 1]");
      need(in_unit(s), "s must lie in [0, 1]");
      break;
    case Theorem::chain_1_2:
    case Theorem::schur_2_4: break;
  }
}

inline void require_hypothesis(Theorem th, double s, double t, bool explore) {
  if (!explore && !hypothesis_holds(th, s, t))
    throw HypothesisError(to_string(th) + ": parameters s=" + format_param(s) +
                          ", t=" + format_param(t) + " violate the hypothesis");
}

// One report per norm for lhs_matrix vs coef * rhs_matrix.
inline void compare(std::vector<InequalityReport>& out, const InequalityReport& base,
                    const ComplexMatrix& lhs, double lhs_coef, const ComplexMatrix& rhs,
                    double rhs_coef, std::span<const NormKind> norms) {
  const auto sv_l = singular_values(lhs);
  const auto sv_r = singular_values(rhs);
  for (const NormKind& nk : norms) {
    InequalityReport r = base;
    r.norm = to_string(nk);
    set_sides(r, lhs_coef * norm_from_singular_values(sv_l, nk),
              rhs_coef * norm_from_singular_values(sv_r, nk));
    out.push_back(std::move(r));
  }
}

// Interleaves two per-norm report lists as (norm 0 part 1, norm 0 part 2, ...).
inline std::vector<InequalityReport> interleave(std::vector<InequalityReport> first,
                                                std::vector<InequalityReport> second) {
  std::vector<InequalityReport> out;
  out.reserve(first.size() + second.size());
  for (std::size_t i = 0; i < first.size(); ++i) {
    out.push_back(std::move(first[i]));
    out.push_back(std::move(second[i]));
  }
  return out;
}

inline InequalityReport base_report(Theorem th, int part, double s, double t, long dim,
                                    bool hypothesis) {
  InequalityReport r;
  r.theorem = to_string(th);
  r.part = part;
  r.s = s;
  r.t = t;
  r.dim = static_cast<int>(dim);
  r.hypothesis_satisfied = hypothesis;
  return r;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Single-instance checkers. Each returns one report per norm (two per norm,
// parts 1 and 2 interleaved, for the chains).

inline std::vector<InequalityReport> check_chain_1_1(const PositiveMatrix& a,
                                                     const ComplexMatrix& x,
                                                     const PositiveMatrix& b, double t,
                                                     std::span<const NormKind> norms) {
  const ComplexMatrix heinz = heinz_map(a, x, b, t);
  const ComplexMatrix geometric = detail::power_of(a, 0.5) * x * detail::power_of(b, 0.5);
  const ComplexMatrix arithmetic = a.matrix() * x + x * b.matrix();
  std::vector<InequalityReport> p1, p2;
  detail::compare(p1, detail::base_report(Theorem::chain_1_1, 1, 0.0, t, x.rows(), true),
                  geometric, 1.0, heinz, 0.5, norms);
  detail::compare(p2, detail::base_report(Theorem::chain_1_1, 2, 0.0, t, x.rows(), true),
                  heinz, 0.5, arithmetic, 0.5, norms);
  return detail::interleave(std::move(p1), std::move(p2));
}

inline std::pair<InequalityReport, InequalityReport> check_chain_1_1(
    const PositiveMatrix& a, const ComplexMatrix& x, const PositiveMatrix& b, double t,
    const NormKind& norm) {
  auto r = check_chain_1_1(a, x, b, t, std::span<const NormKind>(&norm, 1));
  return {r[0], r[1]};
}

inline std::vector<InequalityReport> check_chain_1_2(const PositiveMatrix& a,
                                                     const ComplexMatrix& x,
                                                     const PositiveMatrix& b,
                                                     std::span<const NormKind> norms) {
  const ComplexMatrix geometric = detail::power_of(a, 0.5) * x * detail::power_of(b, 0.5);
  const ComplexMatrix logarithmic = integral_mean(a, x, b, 0.0);
  const ComplexMatrix arithmetic = a.matrix() * x + x * b.matrix();
  std::vector<InequalityReport> p1, p2;
  detail::compare(p1, detail::base_report(Theorem::chain_1_2, 1, 0.0, 0.0, x.rows(), true),
                  geometric, 1.0, logarithmic, 1.0, norms);
  detail::compare(p2, detail::base_report(Theorem::chain_1_2, 2, 0.0, 0.0, x.rows(), true),
                  logarithmic, 1.0, arithmetic, 0.5, norms);
  return detail::interleave(std::move(p1), std::move(p2));
}

inline std::pair<InequalityReport, InequalityReport> check_chain_1_2(const PositiveMatrix& a,
                                                                     const ComplexMatrix& x,
                                                                     const PositiveMatrix& b,
                                                                     const NormKind& norm) {
  auto r = check_chain_1_2(a, x, b, std::span<const NormKind>(&norm, 1));
  return {r[0], r[1]};
}

namespace detail {

inline std::vector<InequalityReport> heinz_vs_integral(Theorem th, const PositiveMatrix& a,
                                                       const ComplexMatrix& x,
                                                       const PositiveMatrix& b, double s,
                                                       double t, bool hypothesis,
                                                       std::span<const NormKind> norms) {
  std::vector<InequalityReport> out;
  compare(out, base_report(th, 1, s, t, x.rows(), hypothesis), heinz_map(a, x, b, t), 1.0,
          integral_mean(a, x, b, s), 2.0 / (1.0 - 2.0 * s), norms);
  return out;
}

}  // namespace detail

/// Throws HypothesisError outside 0 <= s < 1/2, |1-2t| < (1-2s)/2 unless
/// explore is set, in which case reports carry hypothesis_satisfied = false.
inline std::vector<InequalityReport> check_thm_2_3(const PositiveMatrix& a,
                                                   const ComplexMatrix& x,
                                                   const PositiveMatrix& b, double s, double t,
                                                   std::span<const NormKind> norms,
                                                   bool explore = false) {
  detail::require_domain(Theorem::thm_2_3, s, t);
  detail::require_hypothesis(Theorem::thm_2_3, s, t, explore);
  return detail::heinz_vs_integral(Theorem::thm_2_3, a, x, b, s, t,
                                   hypothesis_holds(Theorem::thm_2_3, s, t), norms);
}

inline InequalityReport check_thm_2_3(const PositiveMatrix& a, const ComplexMatrix& x,
                                      const PositiveMatrix& b, double s, double t,
                                      const NormKind& norm, bool explore = false) {
  return check_thm_2_3(a, x, b, s, t, std::span<const NormKind>(&norm, 1), explore).front();
}

/// The s = 0 case of thm_2_3 on the closed range 1/4 <= t <= 3/4.
inline std::vector<InequalityReport> check_drissi_1_3(const PositiveMatrix& a,
                                                      const ComplexMatrix& x,
                                                      const PositiveMatrix& b, double t,
                                                      std::span<const NormKind> norms,
                                                      bool explore = false) {
  detail::require_domain(Theorem::drissi_1_3, 0.0, t);
  detail::require_hypothesis(Theorem::drissi_1_3, 0.0, t, explore);
  return detail::heinz_vs_integral(Theorem::drissi_1_3, a, x, b, 0.0, t,
                                   hypothesis_holds(Theorem::drissi_1_3, 0.0, t), norms);
}

inline std::vector<InequalityReport> check_thm_2_6(const PositiveMatrix& a,
                                                   const ComplexMatrix& x,
                                                   const PositiveMatrix& b, double s,
                                                   std::span<const NormKind> norms) {
  detail::require_domain(Theorem::thm_2_6, s, 0.0);
  std::vector<InequalityReport> out;
  detail::compare(out, detail::base_report(Theorem::thm_2_6, 1, s, 0.0, x.rows(), true),
                  integral_mean(a, x, b, s), 1.0, heinz_map(a, x, b, s), (1.0 - 2.0 * s) / 2.0,
                  norms);
  return out;
}

inline InequalityReport check_thm_2_6(const PositiveMatrix& a, const ComplexMatrix& x,
                                      const PositiveMatrix& b, double s, const NormKind& norm) {
  return check_thm_2_6(a, x, b, s, std::span<const NormKind>(&norm, 1)).front();
}

inline std::vector<InequalityReport> check_thm_2_8(const PositiveMatrix& a,
                                                   const ComplexMatrix& x,
                                                   const PositiveMatrix& b, double s, double t,
                                                   std::span<const NormKind> norms,
                                                   bool explore = false) {
  detail::require_domain(Theorem::thm_2_8, s, t);
  detail::require_hypothesis(Theorem::thm_2_8, s, t, explore);
  std::vector<InequalityReport> out;
  detail::compare(
      out,
      detail::base_report(Theorem::thm_2_8, 1, s, t, x.rows(),
                          hypothesis_holds(Theorem::thm_2_8, s, t)),
      diff_map(a, x, b, t), 1.0, diff_map(a, x, b, s), std::abs((1 - 2 * t) / (1 - 2 * s)), norms);
  return out;
}

inline InequalityReport check_thm_2_8(const PositiveMatrix& a, const ComplexMatrix& x,
                                      const PositiveMatrix& b, double s, double t,
                                      const NormKind& norm, bool explore = false) {
  return check_thm_2_8(a, x, b, s, t, std::span<const NormKind>(&norm, 1), explore).front();
}

inline std::vector<InequalityReport> check_cor_2_10(const PositiveMatrix& a,
                                                    const ComplexMatrix& x,
                                                    const PositiveMatrix& b, double t,
                                                    std::span<const NormKind> norms) {
  detail::require_domain(Theorem::cor_2_10, 0.0, t);
  const ComplexMatrix commutator = a.matrix() * x - x * b.matrix();
  std::vector<InequalityReport> out;
  detail::compare(out, detail::base_report(Theorem::cor_2_10, 1, 0.0, t, x.rows(), true),
                  diff_map(a, x, b, t), 1.0, commutator, std::abs(1 - 2 * t), norms);
  return out;
}

inline InequalityReport check_cor_2_10(const PositiveMatrix& a, const ComplexMatrix& x,
                                       const PositiveMatrix& b, double t, const NormKind& norm) {
  return check_cor_2_10(a, x, b, t, std::span<const NormKind>(&norm, 1)).front();
}

/// Strong-dominance checks of the three mean pairs on the given
/// lambdas: part 1 H_t << L_s, part 2 H_t << H_s, part 3 L_t << L_s. Only
/// parts whose hypothesis holds are reported unless explore is set. Each
/// report has lhs = -min eigenvalue and rhs = PSD tolerance, so holds means
/// the ratio matrix is PSD to tolerance.
inline std::vector<InequalityReport> check_dominance_2_2(std::span<const double> lambdas,
                                                         double s, double t,
                                                         bool explore = false) {
  detail::require_domain(Theorem::dominance_2_2, s, t);
  detail::require_hypothesis(Theorem::dominance_2_2, s, t, explore);
  struct Part {
    MeanKind num, den;
    bool hypothesis;
    bool admissible;
  };
  const Part parts[] = {
      {mean::Heinz{t}, mean::GenLog{s}, heinz_genlog_hypothesis(s, t), s < 0.5},
      {mean::Heinz{t}, mean::Heinz{s}, heinz_heinz_hypothesis(s, t), true},
      {mean::GenLog{t}, mean::GenLog{s}, genlog_genlog_hypothesis(s, t), true},
  };
  std::vector<InequalityReport> out;
  for (int i = 0; i < 3; ++i) {
    const Part& p = parts[i];
    if (!p.admissible || (!p.hypothesis && !explore)) continue;
    const GramResult g = dominance(p.num, p.den, lambdas);
    InequalityReport r = detail::base_report(Theorem::dominance_2_2, i + 1, s, t,
                                             static_cast<long>(lambdas.size()), p.hypothesis);
    r.norm = "none";
    set_sides(r, -g.min_eigenvalue, g.tolerance_used);
    out.push_back(std::move(r));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Random instances

using Generator = std::mt19937_64;

/// Generator stream for trial `trial` of a run seeded with `seed`.
inline Generator trial_generator(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  return Generator(seq);
}

/// Complex Ginibre matrix: entries with independent N(0, 1/2) real and
/// imaginary parts, so E|g|^2 = 1.
inline ComplexMatrix random_ginibre(long rows, long cols, Generator& gen) {
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  ComplexMatrix g(rows, cols);
  for (long j = 0; j < cols; ++j)
    for (long i = 0; i < rows; ++i) {
      const double re = normal(gen);
      const double im = normal(gen);
      g(i, j) = Complex(re, im);
    }
  return g;
}

/// G G* + delta I with G complex Ginibre and delta = 1e-6 trace(G G*) / dim.
inline PositiveMatrix random_positive(long dim, Generator& gen) {
  if (dim < 1) throw DimensionError("random_positive needs dim >= 1");
  const ComplexMatrix g = random_ginibre(dim, dim, gen);
  ComplexMatrix w = g * g.adjoint();
  const double delta = 1e-6 * w.trace().real() / static_cast<double>(dim);
  w = detail::hermitian_part(w);
  w.diagonal().array() += delta;
  return PositiveMatrix(w);
}

// ---------------------------------------------------------------------------
// Trial runner

inline std::vector<NormKind> effective_norms(const TrialConfig& c) {
  return c.norms.empty() ? default_norms(c.dim) : c.norms;
}

/// Throws ConfigError for malformed configs and HypothesisError when the
/// parameters violate the theorem's hypothesis without the explore flag.
inline void validate(const TrialConfig& c) {
  if (c.dim < 1) throw ConfigError("dim must be >= 1");
  if (c.trials < 1) throw ConfigError("trials must be >= 1");
  if (!std::isfinite(c.s) || !std::isfinite(c.t)) throw ConfigError("s and t must be finite");
  try {
    for (const NormKind& nk : effective_norms(c)) validate(nk, c.dim);
  } catch (const ParameterError& e) {
    throw ConfigError(e.what());
  }
  detail::require_domain(c.theorem, c.s, c.t);
  detail::require_hypothesis(c.theorem, c.s, c.t, c.explore);
}

/// Reports for one trial with a fresh instance drawn from `gen`.
inline std::vector<InequalityReport> run_single_trial(const TrialConfig& c, Generator& gen,
                                                      std::span<const NormKind> norms) {
  const PositiveMatrix a = random_positive(c.dim, gen);
  const PositiveMatrix b = random_positive(c.dim, gen);
  const ComplexMatrix x = random_ginibre(c.dim, c.dim, gen);
  switch (c.theorem) {
    case Theorem::chain_1_1: return check_chain_1_1(a, x, b, c.t, norms);
    case Theorem::chain_1_2: return check_chain_1_2(a, x, b, norms);
    case Theorem::drissi_1_3: return check_drissi_1_3(a, x, b, c.t, norms, c.explore);
    case Theorem::thm_2_3: return check_thm_2_3(a, x, b, c.s, c.t, norms, c.explore);
    case Theorem::thm_2_6: return check_thm_2_6(a, x, b, c.s, norms);
    case Theorem::thm_2_8: return check_thm_2_8(a, x, b, c.s, c.t, norms, c.explore);
    case Theorem::cor_2_10: return check_cor_2_10(a, x, b, c.t, norms);
    case Theorem::schur_2_4: return schur_multiplier_check(a.matrix(), x, norms);
    case Theorem::dominance_2_2: {
      std::uniform_real_distribution<double> log_lambda(-10.0, 10.0);
      std::vector<double> lambdas(c.dim);
      for (double& l : lambdas) l = std::exp(log_lambda(gen));
      return check_dominance_2_2(lambdas, c.s, c.t, c.explore);
    }
  }
  return {};
}

/// Runs config.trials independent trials. Trial i draws A, B, X from
/// trial_generator(seed, i); reports are ordered by (trial, norm).
inline std::vector<InequalityReport> run_trials(const TrialConfig& c) {
  validate(c);
  const auto norms = effective_norms(c);
  std::vector<InequalityReport> out;
  for (int i = 0; i < c.trials; ++i) {
    Generator gen = trial_generator(c.seed, static_cast<std::uint64_t>(i));
    for (InequalityReport& r : run_single_trial(c, gen, norms)) {
      r.s = c.s;
      r.t = c.t;
      r.seed = c.seed;
      r.trial = i;
      out.push_back(std::move(r));
    }
  }
  return out;
}

inline std::size_t count_violations(std::span<const InequalityReport> reports) {
  return static_cast<std::size_t>(std::count_if(
      reports.begin(), reports.end(),
      [](const InequalityReport& r) { return r.hypothesis_satisfied && !r.holds; }));
}

// ---------------------------------------------------------------------------
// Closed form vs quadrature

struct OracleSample {
  int trial = 0;
  int dim = 0;
  double s = 0.0;
  double relative_error = 0.0;  // Frobenius, relative to the closed form
};

/// Compares integral_mean with integral_mean_quadrature on `trials` random
/// instances; dims cycle through 2..8 and s through {0, 0.1, 0.25, 0.4}.
inline std::vector<OracleSample> integral_oracle(int trials, std::uint64_t seed,
                                                 int nodes = 1001) {
  if (trials < 1) throw ConfigError("trials must be >= 1");
  constexpr double kS[] = {0.0, 0.1, 0.25, 0.4};
  std::vector<OracleSample> out;
  for (int i = 0; i < trials; ++i) {
    Generator gen = trial_generator(seed, static_cast<std::uint64_t>(i));
    const int dim = 2 + i % 7;
    const double s = kS[i % 4];
    const PositiveMatrix a = random_positive(dim, gen);
    const PositiveMatrix b = random_positive(dim, gen);
    const ComplexMatrix x = random_ginibre(dim, dim, gen);
    const ComplexMatrix closed = integral_mean(a, x, b, s);
    const ComplexMatrix quad = integral_mean_quadrature(a, x, b, s, nodes);
    out.push_back({i, dim, s, (closed - quad).norm() / closed.norm()});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Default parameter grids

inline constexpr int kDefaultDims[] = {2, 3, 5, 8};

/// a, a + step, ..., up to b inclusive; values rounded to 12 decimals so that
/// grid points land on the intended decimals.
inline std::vector<double> make_grid(double a, double b, double step) {
  if (!(step > 0.0) || !std::isfinite(a) || !std::isfinite(b) || b < a)
    throw ConfigError("grid needs finite a <= b and step > 0");
  std::vector<double> out;
  const long count = static_cast<long>(std::floor((b - a) / step + 1e-9));
  for (long k = 0; k <= count; ++k) out.push_back(std::round((a + k * step) * 1e12) / 1e12);
  return out;
}

/// (s, t) pairs on the step-0.05 grid that satisfy the theorem's hypothesis.
/// Parameters a theorem does not use are fixed at 0.
inline std::vector<std::pair<double, double>> default_parameter_grid(Theorem th) {
  const auto unit = make_grid(0.0, 1.0, 0.05);
  auto uses_s = [th] {
    return th == Theorem::thm_2_3 || th == Theorem::thm_2_6 || th == Theorem::thm_2_8 ||
           th == Theorem::dominance_2_2;
  }();
  auto uses_t = [th] {
    return th != Theorem::chain_1_2 && th != Theorem::schur_2_4 && th != Theorem::thm_2_6;
  }();
  const std::vector<double> s_values = uses_s ? unit : std::vector<double>{0.0};
  const std::vector<double> t_values = uses_t ? unit : std::vector<double>{0.0};
  std::vector<std::pair<double, double>> out;
  for (double s : s_values)
    for (double t : t_values) {
      try {
        detail::require_domain(th, s, t);
      } catch (const ConfigError&) {
        continue;
      }
      if (hypothesis_holds(th, s, t)) out.emplace_back(s, t);
    }
  return out;
}

// ---------------------------------------------------------------------------
// Dominance sweeps

enum class MeanFamily { Arithmetic, Geometric, Heinz, Log, GenLog };

inline MeanFamily parse_mean_family(const std::string& name) {
  if (name == "arithmetic") return MeanFamily::Arithmetic;
  if (name == "geometric") return MeanFamily::Geometric;
  if (name == "heinz") return MeanFamily::Heinz;
  if (name == "log") return MeanFamily::Log;
  if (name == "genlog") return MeanFamily::GenLog;
  throw ConfigError("unknown mean family '" + name + "'");
}

inline MeanKind make_mean(MeanFamily f, double param) {
  switch (f) {
    case MeanFamily::Arithmetic: return mean::Arithmetic{};
    case MeanFamily::Geometric: return mean::Geometric{};
    case MeanFamily::Heinz: return mean::Heinz{param};
    case MeanFamily::Log: return mean::Log{};
    case MeanFamily::GenLog: return mean::GenLog{param};
  }
  return mean::Geometric{};
}

enum class PointLayout { Uniform, Geometric, Random };

/// Ratio-matrix points lambda_i = exp(x_i) with x_i spread over [0, span].
struct PointGrid {
  PointLayout layout = PointLayout::Uniform;
  int n = 12;
  double span = 40.0;
};

inline std::string to_string(const PointGrid& g) {
  const char* name = g.layout == PointLayout::Uniform     ? "uniform"
                     : g.layout == PointLayout::Geometric ? "geometric"
                                                          : "random";
  return std::string(name) + "," + std::to_string(g.n) + "," + detail::format_param(g.span);
}

/// Log-abscissae of the grid; random layouts draw from `seed`.
inline std::vector<double> grid_log_points(const PointGrid& g, std::uint64_t seed) {
  if (g.n < 1 || g.n > kMaxGramSize) throw ConfigError("point count must lie in [1, 64]");
  if (!(g.span > 0.0) || !std::isfinite(g.span)) throw ConfigError("point span must be > 0");
  std::vector<double> x(g.n, 0.0);
  if (g.n == 1) return x;
  switch (g.layout) {
    case PointLayout::Uniform:
      for (int i = 0; i < g.n; ++i) x[i] = g.span * i / (g.n - 1);
      break;
    case PointLayout::Geometric: {
      constexpr double ratio = 1.5;
      const double total = std::pow(ratio, g.n - 1) - 1.0;
      for (int i = 0; i < g.n; ++i) x[i] = g.span * (std::pow(ratio, i) - 1.0) / total;
      break;
    }
    case PointLayout::Random: {
      Generator gen = trial_generator(seed, 0);
      std::uniform_real_distribution<double> unit(0.0, 1.0);
      for (double& v : x) v = g.span * unit(gen);
      std::sort(x.begin(), x.end());
      break;
    }
  }
  return x;
}

struct SweepRow {
  double t = 0.0;
  double s = 0.0;
  std::string grid;
  double min_eigenvalue = 0.0;  // of the ratio matrix on the point grid
  double tolerance = 0.0;
  bool is_psd = true;           // ratio matrix PSD on the point grid
  double witness_min_eigenvalue = 0.0;
  bool witness_found = false;
  bool dominates = true;        // is_psd and no witness found

  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

struct SweepReport {
  std::string num_family;
  std::string den_family;
  std::vector<SweepRow> rows;  // ordered by (t, s)
};

struct SweepConfig {
  MeanFamily num = MeanFamily::Heinz;
  MeanFamily den = MeanFamily::Log;
  std::vector<double> t_grid;
  std::vector<double> s_grid{0.0};
  PointGrid points;
  std::uint64_t seed = 1;
  int witness_n_max = 12;
};

/// For every (t, s): the ratio matrix [num_t / den_s] on the point grid, and
/// a witness search for the MeanRatio kernel over (0, points.span].
inline SweepReport sweep_dominance(const SweepConfig& c) {
  if (c.t_grid.empty() || c.s_grid.empty()) throw ConfigError("sweep grids must be nonempty");
  const std::vector<double> logs = grid_log_points(c.points, c.seed);
  std::vector<double> lambdas(logs.size());
  std::transform(logs.begin(), logs.end(), lambdas.begin(), [](double v) { return std::exp(v); });

  auto family_name = [](MeanFamily f) {
    switch (f) {
      case MeanFamily::Arithmetic: return "arithmetic";
      case MeanFamily::Geometric: return "geometric";
      case MeanFamily::Heinz: return "heinz";
      case MeanFamily::Log: return "log";
      case MeanFamily::GenLog: return "genlog";
    }
    return "";
  };
  SweepReport out{family_name(c.num), family_name(c.den), {}};
  for (double t : c.t_grid) {
    for (double s : c.s_grid) {
      const MeanKind num = make_mean(c.num, t);
      const MeanKind den = make_mean(c.den, s);
      try {
        validate(num);
        validate(den);
      } catch (const ParameterError& e) {
        throw ConfigError(e.what());
      }
      const GramResult g = dominance(num, den, lambdas);
      const WitnessResult w =
          witness_search(kernel::MeanRatio{num, den}, c.witness_n_max, c.points.span, c.seed);
      SweepRow row;
      row.t = t;
      row.s = s;
      row.grid = to_string(c.points);
      row.min_eigenvalue = g.min_eigenvalue;
      row.tolerance = g.tolerance_used;
      row.is_psd = g.is_psd;
      row.witness_min_eigenvalue = w.min_eigenvalue;
      row.witness_found = w.found;
      row.dominates = g.is_psd && !w.found;
      out.rows.push_back(std::move(row));
    }
  }
  std::stable_sort(out.rows.begin(), out.rows.end(), [](const SweepRow& l, const SweepRow& r) {
    return std::pair(l.t, l.s) < std::pair(r.t, r.s);
  });
  return out;
}

}  // namespace heinzlog

#endif  // HEINZLOG_VERIFY_HPP
