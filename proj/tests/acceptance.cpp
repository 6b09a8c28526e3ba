// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.
//
//   acceptance [path-to-heinzlog-cli]
//
// With a CLI path, criterion 7 also runs `verify` twice through the binary and
// compares the written JSON byte for byte.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "heinzlog/heinzlog.hpp"
#include "test_support.hpp"

namespace {

using namespace heinzlog;
using heinzlog::testing::gaussian_matrix;
using heinzlog::testing::hpd_with_spectrum;

// Tolerances pinned by the acceptance criteria.
constexpr double kViolation = -1e-9;
constexpr double kOracleTol = 1e-8;
constexpr double kRefinementRatio = 10.0;
constexpr double kFactorizationTol = 1e-10;
constexpr double kEqualityTol = 1e-10;
constexpr double kWitnessTol = -1e-8;
constexpr int kTrials = 200;

int failures = 0;

void report(int id, const std::string& name, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << " [" << id << "] " << name << ": " << detail << std::endl;
  if (!ok) ++failures;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void inequality_suite() {
  const auto t0 = std::chrono::steady_clock::now();
  std::size_t checked = 0, violations = 0, configs = 0;
  double worst = std::numeric_limits<double>::infinity();
  std::string worst_where;
  const Theorem suite[] = {Theorem::chain_1_1, Theorem::chain_1_2, Theorem::drissi_1_3,
                           Theorem::thm_2_3,   Theorem::thm_2_6,   Theorem::thm_2_8,
                           Theorem::cor_2_10,  Theorem::schur_2_4};
  std::uint64_t seed = 1;
  for (Theorem th : suite) {
    for (auto [s, t] : default_parameter_grid(th)) {
      for (int dim : kDefaultDims) {
        TrialConfig c;
        c.theorem = th;
        c.dim = dim;
        c.trials = kTrials;
        c.s = s;
        c.t = t;
        c.seed = seed++;
        ++configs;
        for (const auto& r : run_trials(c)) {
          if (!r.hypothesis_satisfied) continue;
          ++checked;
          if (r.relative_slack < kViolation) ++violations;
          if (r.relative_slack < worst) {
            worst = r.relative_slack;
            worst_where = r.theorem + " s=" + fmt(s) + " t=" + fmt(t) + " dim=" +
                          std::to_string(dim) + " " + r.norm;
          }
        }
      }
    }
  }
  report(1, "inequality suite", violations == 0,
         std::to_string(configs) + " configs x " + std::to_string(kTrials) + " trials, " +
             std::to_string(checked) + " reports, " + std::to_string(violations) +
             " violations, worst relative slack " + fmt(worst) + " (" + worst_where + "), " +
             fmt(seconds_since(t0)) + " s");
}

void oracle_equivalence() {
  double worst = 0.0;
  for (const auto& s : integral_oracle(50, 2024, 1001)) worst = std::max(worst, s.relative_error);

  // Refinement on instances with spectra in [e^-2, e^2].
  std::mt19937_64 gen(51);
  std::uniform_real_distribution<double> lg(-2.0, 2.0);
  double min_ratio = std::numeric_limits<double>::infinity();
  for (int trial = 0; trial < 20; ++trial) {
    const long n = 2 + trial % 5;
    Eigen::VectorXd ea(n), eb(n);
    for (long i = 0; i < n; ++i) {
      ea(i) = std::exp(lg(gen));
      eb(i) = std::exp(lg(gen));
    }
    const PositiveMatrix a(hpd_with_spectrum(ea, gen));
    const PositiveMatrix b(hpd_with_spectrum(eb, gen));
    const ComplexMatrix x = gaussian_matrix(n, n, gen);
    const double s = 0.1 * (trial % 5);
    const ComplexMatrix closed = integral_mean(a, x, b, s);
    const double e51 = (integral_mean_quadrature(a, x, b, s, 51) - closed).norm();
    const double e101 = (integral_mean_quadrature(a, x, b, s, 101) - closed).norm();
    min_ratio = std::min(min_ratio, e51 / e101);
  }
  report(2, "oracle equivalence", worst <= kOracleTol && min_ratio >= kRefinementRatio,
         "max relative Frobenius error " + fmt(worst) + " over 50 instances (tol " +
             fmt(kOracleTol) + "), min 51->101 error ratio " + fmt(min_ratio) + " (need >= " +
             fmt(kRefinementRatio) + ")");
}

void factorization_identities() {
  std::mt19937_64 gen(3);
  std::uniform_real_distribution<double> lg(-3.0, 3.0), unit(0.0, 1.0);
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const long n = 2 + trial % 7;
    std::vector<double> lam(n);
    for (double& v : lam) v = std::exp(lg(gen));
    const PositiveMatrix a = PositiveMatrix::diagonal(lam);
    const ComplexMatrix x = gaussian_matrix(n, n, gen);
    const double s = 0.45 * unit(gen);
    const double t = unit(gen);
    ComplexMatrix y_heinz(n, n), y_integral(n, n);
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j) {
        const double h = 2 * eval_mean(mean::Heinz{t}, lam[i], lam[j]);
        const double hs = 2 * eval_mean(mean::Heinz{s}, lam[i], lam[j]);
        const double l = (1 - 2 * s) * eval_mean(mean::GenLog{s}, lam[i], lam[j]);
        y_heinz(i, j) = h / l;
        y_integral(i, j) = l / hs;
      }
    const ComplexMatrix im = integral_mean(a, x, a, s);
    const ComplexMatrix hm_t = heinz_map(a, x, a, t);
    const ComplexMatrix hm_s = heinz_map(a, x, a, s);
    const ComplexMatrix f1 = schur_product(y_heinz, im);
    const ComplexMatrix f2 = schur_product(y_integral, hm_s);
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j) {
        worst = std::max(worst, std::abs(hm_t(i, j) - f1(i, j)) / std::abs(hm_t(i, j)));
        worst = std::max(worst, std::abs(im(i, j) - f2(i, j)) / std::abs(im(i, j)));
      }
  }
  report(3, "Hadamard factorization identities", worst <= kFactorizationTol,
         "max entrywise relative error " + fmt(worst) + " over 50 diagonal instances (tol " +
             fmt(kFactorizationTol) + ")");
}

void dominance_region() {
  const auto t0 = std::chrono::steady_clock::now();
  SweepConfig c;
  c.num = MeanFamily::Heinz;
  c.den = MeanFamily::Log;
  c.t_grid = make_grid(0.0, 1.0, 0.05);
  c.s_grid = {0.0};
  c.points = {PointLayout::Uniform, 12, 40.0};
  c.witness_n_max = 12;
  const SweepReport rep = sweep_dominance(c);
  bool ok = true;
  std::string bad;
  std::ostringstream map;
  for (const auto& r : rep.rows) {
    const bool inside = r.t >= 0.25 - 1e-12 && r.t <= 0.75 + 1e-12;
    const bool outside = r.t <= 0.15 + 1e-12 || r.t >= 0.85 - 1e-12;
    map << (r.witness_found ? '-' : r.is_psd ? '+' : '?');
    if (inside && !r.is_psd) {
      ok = false;
      bad += " t=" + fmt(r.t) + " not PSD";
    }
    if (outside && !(r.witness_min_eigenvalue < kWitnessTol)) {
      ok = false;
      bad += " t=" + fmt(r.t) + " no witness";
    }
  }
  const double sec = seconds_since(t0);
  ok = ok && sec < 60.0;
  report(4, "dominance region map", ok,
         "heinz:log t=0..1 step 0.05 [" + map.str() + "] (+ PSD, - witness)" + bad + ", " +
             fmt(sec) + " s");
}

void kernel_positivity() {
  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> unit(0.0, 1.0), pt(-20.0, 20.0);
  auto sign = [&] { return unit(gen) < 0.5 ? -1.0 : 1.0; };
  int checked = 0, failed = 0;
  double worst = std::numeric_limits<double>::infinity();
  const std::function<KernelKind()> parts[] = {
      [&]() -> KernelKind {
        const double beta = sign() * (0.05 + 3.0 * unit(gen));
        return kernel::CoshRatio{sign() * std::abs(beta) * unit(gen), beta};
      },
      [&]() -> KernelKind {
        const double beta = sign() * (0.05 + 3.0 * unit(gen));
        return kernel::SinhRatio{beta * unit(gen), beta};
      },
      [&]() -> KernelKind {
        const double beta = 0.05 + 3.0 * unit(gen);
        return kernel::XCoshOverSinh{sign() * 0.5 * beta * unit(gen), beta};
      },
  };
  for (const auto& draw : parts) {
    for (int trial = 0; trial < kTrials; ++trial) {
      const KernelKind k = draw();
      std::vector<double> pts(1 + trial % 12);
      for (double& p : pts) p = pt(gen);
      const GramResult g = gram_matrix(k, pts);
      ++checked;
      if (!g.is_psd) ++failed;
      worst = std::min(worst, g.min_eigenvalue);
    }
  }
  const WitnessResult w = witness_search(kernel::XCoshOverSinh{0.7, 1.0}, 12, 40.0);
  report(5, "kernel positivity suite", failed == 0 && w.found,
         std::to_string(checked) + " Gram matrices, " + std::to_string(failed) +
             " not PSD (min eigenvalue " + fmt(worst) + "); xcosh_over_sinh(0.7,1) witness " +
             (w.found ? "found" : "not found") + " with min eigenvalue " + fmt(w.min_eigenvalue) +
             " on " + std::to_string(w.points.size()) + " points");
}

void equality_cases() {
  double chain_worst = 0.0, cor_worst = 0.0, identity_worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    Generator gen = trial_generator(6, trial);
    const int dim = kDefaultDims[trial % 4];
    const PositiveMatrix a = random_positive(dim, gen);
    const PositiveMatrix b = random_positive(dim, gen);
    const ComplexMatrix x = random_ginibre(dim, dim, gen);
    const auto norms = default_norms(dim);
    const auto chain = check_chain_1_1(a, x, b, 0.5, norms);
    for (const auto& r : chain)
      if (r.part == 1) chain_worst = std::max(chain_worst, std::abs(r.slack) / r.rhs);
    for (const auto& r : check_cor_2_10(a, x, b, 0.5, norms)) cor_worst = std::max(cor_worst, r.lhs);
    const PositiveMatrix id = PositiveMatrix::identity(dim);
    for (double s : {0.0, 0.1, 0.25, 0.4}) {
      const ComplexMatrix m = integral_mean(id, x, id, s);
      const ComplexMatrix expected = (1 - 2 * s) * x;
      identity_worst = std::max(identity_worst, (m - expected).cwiseAbs().maxCoeff() /
                                                    expected.cwiseAbs().maxCoeff());
    }
  }
  const double machine = 4 * std::numeric_limits<double>::epsilon();
  report(6, "equality and degeneracy",
         chain_worst <= kEqualityTol && cor_worst <= kEqualityTol && identity_worst <= machine,
         "chain_1_1 |slack|/rhs at t=1/2 " + fmt(chain_worst) + ", cor_2_10 lhs at t=1/2 " +
             fmt(cor_worst) + ", integral_mean(I,X,I,s) relative error " + fmt(identity_worst) +
             " (need <= " + fmt(machine) + ")");
}

std::string slurp(const std::filesystem::path& p) {
  return detail::read_text(p.string());
}

void determinism(const char* cli) {
  bool ok = true;
  std::string detail_text;
  for (Theorem th : kAllTheorems) {
    const auto grid = default_parameter_grid(th);
    TrialConfig c;
    c.theorem = th;
    c.trials = 5;
    c.dim = 4;
    c.seed = 777;
    c.s = grid[grid.size() / 2].first;
    c.t = grid[grid.size() / 2].second;
    if (reports_to_json(config_to_json(c), run_trials(c)) !=
        reports_to_json(config_to_json(c), run_trials(c))) {
      ok = false;
      detail_text += to_string(th) + " differs in-process; ";
    }
  }
  detail_text += "in-process JSON identical for all theorem ids";
  if (cli) {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "heinzlog_acceptance";
    fs::create_directories(dir);
    const std::string args =
        " verify --theorem thm_2_3 --trials 20 --dim 5 --s 0.1 --t 0.45 --seed 99 --format json";
    const fs::path p1 = dir / "run1.json", p2 = dir / "run2.json";
    const int rc1 = std::system((std::string(cli) + args + " --out " + p1.string()).c_str());
    const int rc2 = std::system((std::string(cli) + args + " --out " + p2.string()).c_str());
    const bool same = rc1 == 0 && rc2 == 0 && slurp(p1) == slurp(p2) && !slurp(p1).empty();
    ok = ok && same;
    detail_text += same ? "; CLI verify runs byte-identical" : "; CLI verify runs differ or failed";
    fs::remove_all(dir);
  } else {
    detail_text += "; CLI not given, binary comparison skipped";
  }
  report(7, "determinism", ok, detail_text);
}

}  // namespace

int main(int argc, char** argv) {
  const char* cli = argc > 1 ? argv[1] : nullptr;
  try {
    inequality_suite();
    oracle_equivalence();
    factorization_identities();
    dominance_region();
    kernel_positivity();
    equality_cases();
    determinism(cli);
  } catch (const std::exception& e) {
    std::cout << "FAIL acceptance aborted: " << e.what() << std::endl;
    return 1;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
