// heinzlog: command line front end for the inequality checkers.
//
//   heinzlog verify  --theorem ID --trials N --dim D --s S --t T --norms LIST --seed SEED
//                    [--explore] [--out PATH --format json|csv]
//   heinzlog sweep   --dominance NUM:DEN --t-grid a:b:step --s-grid a:b:step
//                    --points uniform|geometric|random,N,SPAN --seed SEED --out PATH
//   heinzlog witness --kernel NAME --alpha A --beta B --nmax N --span R
//   heinzlog oracle  --check integral --trials N --seed SEED
//
// Exit codes: 0 all hypothesis-satisfied checks hold, 1 a violation was found,
// 2 usage or configuration error.

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "heinzlog/heinzlog.hpp"

namespace {

using namespace heinzlog;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, sep)) out.push_back(item);
  return out;
}

double to_double(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::logic_error&) {
    throw ConfigError("not a number: '" + s + "'");
  }
  if (used != s.size()) throw ConfigError("not a number: '" + s + "'");
  return v;
}

std::vector<NormKind> parse_norm_list(const std::string& text, int dim) {
  if (text.empty() || text == "default") return default_norms(dim);
  std::vector<NormKind> out;
  try {
    for (const auto& item : split(text, ',')) out.push_back(parse_norm(item));
  } catch (const ParameterError& e) {
    throw ConfigError(e.what());
  }
  return out;
}

std::vector<double> parse_grid(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) throw ConfigError("grid must be a:b:step, got '" + text + "'");
  return make_grid(to_double(parts[0]), to_double(parts[1]), to_double(parts[2]));
}

PointGrid parse_points(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 3) throw ConfigError("points must be layout,n,span, got '" + text + "'");
  PointGrid g;
  if (parts[0] == "uniform")
    g.layout = PointLayout::Uniform;
  else if (parts[0] == "geometric")
    g.layout = PointLayout::Geometric;
  else if (parts[0] == "random")
    g.layout = PointLayout::Random;
  else
    throw ConfigError("unknown point layout '" + parts[0] + "'");
  g.n = static_cast<int>(to_double(parts[1]));
  g.span = to_double(parts[2]);
  return g;
}

// "log", "heinz:0.25", "genlog:0.1", ...
MeanKind parse_mean_spec(const std::string& text) {
  const auto colon = text.find(':');
  const std::string name = text.substr(0, colon);
  const double param = colon == std::string::npos ? 0.0 : to_double(text.substr(colon + 1));
  return make_mean(parse_mean_family(name), param);
}

KernelKind make_kernel(const std::string& name, double alpha, double beta,
                       const std::string& num, const std::string& den) {
  if (name == "cosh_ratio") return kernel::CoshRatio{alpha, beta};
  if (name == "sinh_ratio") return kernel::SinhRatio{alpha, beta};
  if (name == "xcosh_over_sinh") return kernel::XCoshOverSinh{alpha, beta};
  if (name == "tanh_over_x") return kernel::TanhOverX{beta};
  if (name == "cauchy") return kernel::Cauchy{beta};
  if (name == "x_over_sinh") return kernel::XOverSinh{beta};
  if (name == "mean_ratio") return kernel::MeanRatio{parse_mean_spec(num), parse_mean_spec(den)};
  throw ConfigError("unknown kernel '" + name + "'");
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty())
    std::cout << text;
  else
    detail::write_text(path, text);
}

struct VerifyArgs {
  std::string theorem;
  int trials = 1;
  int dim = 3;
  double s = 0.0;
  double t = 0.5;
  std::string norms = "default";
  std::uint64_t seed = 1;
  bool explore = false;
  std::string out;
  std::string format = "json";
};

int run_verify(const VerifyArgs& a) {
  TrialConfig c;
  c.theorem = parse_theorem(a.theorem);
  c.trials = a.trials;
  c.dim = a.dim;
  c.s = a.s;
  c.t = a.t;
  c.seed = a.seed;
  c.explore = a.explore;
  c.norms = parse_norm_list(a.norms, a.dim);
  const ReportFormat format = parse_format(a.format);
  const auto reports = run_trials(c);

  if (!a.out.empty()) write_report(reports, format, a.out, config_to_json(c));

  const std::size_t violations = count_violations(reports);
  double worst = std::numeric_limits<double>::infinity();
  std::size_t checked = 0;
  for (const auto& r : reports) {
    if (!r.hypothesis_satisfied) continue;
    ++checked;
    worst = std::min(worst, r.relative_slack);
  }
  std::cerr << to_string(c.theorem) << ": " << reports.size() << " reports, " << checked
            << " under hypothesis, " << violations << " violations";
  if (checked) std::cerr << ", worst relative slack " << detail::csv_double(worst);
  std::cerr << "\n";
  return violations == 0 ? kExitOk : kExitViolation;
}

struct SweepArgs {
  std::string dominance;
  std::string t_grid;
  std::string s_grid = "0:0:1";
  std::string points = "uniform,12,40";
  std::uint64_t seed = 1;
  int witness_nmax = 12;
  std::string out;
  std::string format = "json";
};

int run_sweep(const SweepArgs& a) {
  const auto pair = split(a.dominance, ':');
  if (pair.size() != 2) throw ConfigError("--dominance must be num:den");
  SweepConfig c;
  c.num = parse_mean_family(pair[0]);
  c.den = parse_mean_family(pair[1]);
  c.t_grid = parse_grid(a.t_grid);
  c.s_grid = parse_grid(a.s_grid);
  c.points = parse_points(a.points);
  c.seed = a.seed;
  c.witness_n_max = a.witness_nmax;
  const SweepReport rep = sweep_dominance(c);
  const ReportFormat format = parse_format(a.format);
  emit(format == ReportFormat::Json ? sweep_to_json(rep) : sweep_to_csv(rep), a.out);
  return kExitOk;
}

struct WitnessArgs {
  std::string kernel;
  double alpha = 0.0;
  double beta = 1.0;
  std::string num = "heinz:0.5";
  std::string den = "log";
  int nmax = 8;
  double span = 20.0;
  std::uint64_t seed = 0x5eed;
};

int run_witness(const WitnessArgs& a) {
  const KernelKind k = make_kernel(a.kernel, a.alpha, a.beta, a.num, a.den);
  const WitnessResult w = witness_search(k, a.nmax, a.span, a.seed);
  nlohmann::ordered_json j;
  j["kernel"] = to_string(k);
  j["found"] = w.found;
  j["min_eigenvalue"] = w.min_eigenvalue;
  j["points"] = w.points;
  std::cout << j.dump(2) << "\n";
  return kExitOk;
}

struct OracleArgs {
  std::string check = "integral";
  int trials = 50;
  std::uint64_t seed = 1;
  int nodes = 1001;
  double tolerance = 1e-8;
};

int run_oracle(const OracleArgs& a) {
  if (a.check != "integral") throw ConfigError("unknown oracle check '" + a.check + "'");
  const auto samples = integral_oracle(a.trials, a.seed, a.nodes);
  double worst = 0.0;
  for (const auto& s : samples) worst = std::max(worst, s.relative_error);
  nlohmann::ordered_json j;
  j["check"] = a.check;
  j["trials"] = a.trials;
  j["nodes"] = a.nodes;
  j["max_relative_error"] = worst;
  j["tolerance"] = a.tolerance;
  j["pass"] = worst <= a.tolerance;
  std::cout << j.dump(2) << "\n";
  return worst <= a.tolerance ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical checks of Heinz and logarithmic mean norm inequalities"};
  app.require_subcommand(1);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run randomized trials of one inequality");
  verify->add_option("--theorem", va.theorem, "chain_1_1, chain_1_2, drissi_1_3, thm_2_3, "
                                              "thm_2_6, thm_2_8, cor_2_10, schur_2_4, "
                                              "dominance_2_2")
      ->required();
  verify->add_option("--trials", va.trials, "Number of random trials");
  verify->add_option("--dim", va.dim, "Matrix dimension");
  verify->add_option("--s", va.s, "Parameter s");
  verify->add_option("--t", va.t, "Parameter t");
  verify->add_option("--norms", va.norms,
                     "Comma list of kyfan:K, schatten:P, operator, trace, frobenius, or default");
  verify->add_option("--seed", va.seed, "Random seed");
  verify->add_flag("--explore", va.explore, "Allow parameters outside the hypothesis");
  verify->add_option("--out", va.out, "Report path");
  verify->add_option("--format", va.format, "json or csv");

  SweepArgs sa;
  auto* sweep = app.add_subcommand("sweep", "Map strong-dominance regions");
  sweep->add_option("--dominance", sa.dominance, "num:den mean families")->required();
  sweep->add_option("--t-grid", sa.t_grid, "a:b:step for the numerator parameter")->required();
  sweep->add_option("--s-grid", sa.s_grid, "a:b:step for the denominator parameter");
  sweep->add_option("--points", sa.points, "layout,n,span with layout uniform|geometric|random");
  sweep->add_option("--seed", sa.seed, "Random seed");
  sweep->add_option("--witness-nmax", sa.witness_nmax, "Largest witness point set (2..16)");
  sweep->add_option("--out", sa.out, "Output path (stdout if omitted)");
  sweep->add_option("--format", sa.format, "json or csv");

  WitnessArgs wa;
  auto* witness = app.add_subcommand("witness", "Search for a non-PSD Gram matrix");
  witness->add_option("--kernel", wa.kernel,
                      "cosh_ratio, sinh_ratio, xcosh_over_sinh, tanh_over_x, cauchy, "
                      "x_over_sinh, mean_ratio")
      ->required();
  witness->add_option("--alpha", wa.alpha, "Kernel alpha");
  witness->add_option("--beta", wa.beta, "Kernel beta (b for cauchy)");
  witness->add_option("--num", wa.num, "Numerator mean for mean_ratio, e.g. heinz:0.1");
  witness->add_option("--den", wa.den, "Denominator mean for mean_ratio, e.g. log");
  witness->add_option("--nmax", wa.nmax, "Largest point set (2..16)");
  witness->add_option("--span", wa.span, "Points lie in (0, span]");
  witness->add_option("--seed", wa.seed, "Seed for the random point sets");

  OracleArgs oa;
  auto* oracle = app.add_subcommand("oracle", "Closed form vs quadrature cross-check");
  oracle->add_option("--check", oa.check, "integral");
  oracle->add_option("--trials", oa.trials, "Number of random instances");
  oracle->add_option("--seed", oa.seed, "Random seed");
  oracle->add_option("--nodes", oa.nodes, "Simpson nodes (odd)");
  oracle->add_option("--tolerance", oa.tolerance, "Maximum relative Frobenius error");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*verify) return run_verify(va);
    if (*sweep) return run_sweep(sa);
    if (*witness) return run_witness(wa);
    if (*oracle) return run_oracle(oa);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
