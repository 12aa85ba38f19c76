#include "spca/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "spca/analysis.hpp"
#include "spca/cliquesolver.hpp"
#include "spca/errors.hpp"
#include "spca/estimators.hpp"
#include "spca/models.hpp"
#include "spca/parallel.hpp"
#include "spca/rng.hpp"
#include "spca/text_format.hpp"

namespace spca {

namespace {

namespace fs = std::filesystem;

const std::string kNa = "NA";

std::string fmt(double x) { return format_double(x); }
std::string fmt(long x) { return std::to_string(x); }
std::string fmt(int x) { return std::to_string(x); }
std::string fmt(std::uint64_t x) { return std::to_string(x); }
std::string fmt(const std::optional<double>& x) { return x ? format_double(*x) : kNa; }

class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

  void add(std::vector<std::string> row) {
    if (row.size() != header_.size()) throw std::logic_error("csv row has the wrong width");
    rows_.push_back(std::move(row));
  }

  void write(const fs::path& path) const {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ParameterError("cannot write " + path.string());
    write_line(f, header_);
    for (const auto& r : rows_) write_line(f, r);
    if (!f) throw ParameterError("failed writing " + path.string());
  }

 private:
  static void write_line(std::ostream& out, const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out << ',';
      out << cells[i];
    }
    out << '\n';
  }

  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool has_flag(const std::vector<std::string>& args, const std::string& key) {
  const std::string flag = "--" + key;
  return std::any_of(args.begin(), args.end(), [&](const std::string& a) {
    return a == flag || a.rfind(flag + "=", 0) == 0;
  });
}

// Splices key=value lines of a --config file in front of the explicit flags.
// Keys already given on the command line are skipped, so flags win.
std::vector<std::string> merge_config(const std::vector<std::string>& args) {
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
  }
  if (path.empty() || args.empty()) return args;
  std::ifstream f(path);
  if (!f) throw ParameterError("cannot open config file " + path);
  std::vector<std::string> extra;
  std::string line;
  int lineno = 0;
  while (std::getline(f, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ParameterError(path + ":" + std::to_string(lineno) + ": expected key=value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || key == "config")
      throw ParameterError(path + ":" + std::to_string(lineno) + ": bad key");
    if (!has_flag(args, key)) extra.push_back("--" + key + "=" + value);
  }
  std::vector<std::string> merged{args.front()};
  merged.insert(merged.end(), extra.begin(), extra.end());
  merged.insert(merged.end(), args.begin() + 1, args.end());
  return merged;
}

fs::path default_output_dir() {
  if (const char* env = std::getenv(kOutputDirEnv); env && *env) return env;
  return ".";
}

fs::path csv_path(const std::string& output_dir, const std::string& csv, const std::string& name) {
  if (!csv.empty()) return csv;
  return fs::path(output_dir) / (name + ".csv");
}

// Options shared by every subcommand.
struct Common {
  std::string output_dir;
  std::string csv;
  std::string config;
  std::uint64_t seed = 0;
};

void add_common(CLI::App* sub, Common& c) {
  c.output_dir = default_output_dir().string();
  sub->add_option("--output-dir", c.output_dir,
                  std::string("directory for CSV output (default: $") + kOutputDirEnv + " or .)");
  sub->add_option("--csv", c.csv, "explicit CSV path (overrides --output-dir)");
  sub->add_option("--config", c.config, "key=value file; command-line flags take precedence");
  sub->add_option("--seed", c.seed, "base random seed");
}

// ---------------------------------------------------------------- estimate

struct EstimateOpts {
  Common common;
  std::string input;
  double lambda = 0, epsilon = 0;
  long max_iterations = 0, gap_period = 0;
  int k = 0;
  CLI::Option *lambda_opt = nullptr, *epsilon_opt = nullptr, *iter_opt = nullptr,
              *period_opt = nullptr;
};

void setup_estimate(CLI::App& app, EstimateOpts& o) {
  auto* sub = app.add_subcommand("estimate", "SDP estimate of the leading sparse component");
  add_common(sub, o.common);
  sub->add_option("--input", o.input, "data matrix file (n p header)")->required();
  o.lambda_opt = sub->add_option("--lambda", o.lambda, "l1 penalty (default 4 sqrt(log p / n))");
  o.epsilon_opt = sub->add_option("--epsilon", o.epsilon, "optimisation slack (default log p / 4n)");
  o.iter_opt = sub->add_option("--max-iterations", o.max_iterations, "iteration cap");
  o.period_opt = sub->add_option("--gap-period", o.gap_period, "iterations between gap checks");
  sub->add_option("--k", o.k, "truncate to the k largest coordinates (0: no truncation)");
}

int run_estimate(const EstimateOpts& o, std::ostream& out) {
  std::ifstream f(o.input);
  if (!f) throw ParameterError("cannot open " + o.input);
  const DataMatrix x = read_data_matrix(f);
  const int n = x.rows(), p = x.cols();
  if (p < 2) throw ParameterError("estimate needs at least two columns");
  if (o.k < 0 || o.k > p) throw ParameterError("--k must lie in [0, p]");

  SdpConfig cfg = default_tuning(n, p);
  if (o.lambda_opt->count()) cfg.lambda = o.lambda;
  if (o.epsilon_opt->count()) cfg.epsilon = o.epsilon;
  if (o.lambda_opt->count() || o.epsilon_opt->count()) {
    cfg.max_iterations = mirror_prox_iteration_bound(cfg.lambda, p, cfg.epsilon);
    cfg.gap_check_period = std::max(1L, (cfg.max_iterations + 999) / 1000);
  }
  if (o.iter_opt->count()) cfg.max_iterations = o.max_iterations;
  if (o.period_opt->count()) cfg.gap_check_period = o.gap_period;
  cfg.validate();

  const SdpResult r = sdp_estimate(x, cfg);
  Eigen::VectorXd truncated;
  if (o.k > 0) truncated = truncate_renormalize(r.v_hat, o.k).dense();

  out << "v_hat";
  for (Eigen::Index j = 0; j < r.v_hat.size(); ++j) out << ' ' << fmt(r.v_hat[j]);
  out << '\n';
  if (o.k > 0) {
    out << "v_truncated";
    for (Eigen::Index j = 0; j < truncated.size(); ++j) out << ' ' << fmt(truncated[j]);
    out << '\n';
  }
  out << "final_gap " << fmt(r.final_gap) << '\n';
  out << "iterations " << r.iterations_run << '\n';
  out << "objective " << fmt(r.objective) << '\n';

  CsvTable t({"seed", "trial", "n", "p", "k", "theta", "coordinate", "v_hat", "v_truncated",
              "lambda", "epsilon", "iterations", "final_gap", "objective"});
  for (int j = 0; j < p; ++j)
    t.add({fmt(o.common.seed), "0", fmt(n), fmt(p), fmt(o.k), kNa, fmt(j), fmt(r.v_hat[j]),
           o.k > 0 ? fmt(truncated[j]) : kNa, fmt(cfg.lambda), fmt(cfg.epsilon),
           fmt(r.iterations_run), fmt(r.final_gap), fmt(r.objective)});
  t.write(csv_path(o.common.output_dir, o.common.csv, "estimate"));
  return kExitOk;
}

// -------------------------------------------------------------------- rate

struct RateOpts {
  Common common;
  int p = 20, k = 3;
  double theta = 1.0, sigma2 = 1.0;
  std::vector<int> n;
  int trials = 1;
  std::string regime = "fixed";
  double alpha = 0.5;
  long max_iterations = 0;
  double exhaustive_limit = 1e6;
  CLI::Option* iter_opt = nullptr;
};

void setup_rate(CLI::App& app, RateOpts& o) {
  auto* sub = app.add_subcommand("rate", "loss of the SDP and exhaustive estimators over an n grid");
  add_common(sub, o.common);
  sub->add_option("--p", o.p, "dimension");
  sub->add_option("--k", o.k, "spike sparsity; v1 is uniform on the first k coordinates");
  sub->add_option("--theta", o.theta, "spike size");
  sub->add_option("--sigma2", o.sigma2, "noise variance");
  sub->add_option("--n", o.n, "comma-separated sample sizes")->required()->delimiter(',');
  sub->add_option("--trials", o.trials, "trials per sample size");
  sub->add_option("--regime", o.regime, "fixed, or coupled for k = n^(2/(5-a)), p = n, "
                                        "theta = n^(-(1-a)/(5-a))/1000")
      ->check(CLI::IsMember({"fixed", "coupled"}));
  sub->add_option("--alpha", o.alpha, "exponent a of the coupled regime, in [0, 1)");
  o.iter_opt = sub->add_option("--max-iterations", o.max_iterations, "cap on mirror-prox steps");
  sub->add_option("--exhaustive-limit", o.exhaustive_limit,
                  "largest C(p, k) for which the exhaustive estimator runs");
}

struct RateCell {
  int n, p, k;
  double theta;
};

int run_rate(const RateOpts& o, std::ostream& out) {
  if (o.n.empty()) throw ParameterError("--n needs at least one sample size");
  if (o.trials < 1) throw ParameterError("--trials must be positive");
  if (!(o.sigma2 > 0)) throw ParameterError("--sigma2 must be positive");
  if (o.regime == "coupled" && !(o.alpha >= 0 && o.alpha < 1))
    throw ParameterError("--alpha must lie in [0, 1)");
  if (o.iter_opt->count() && o.max_iterations < 1)
    throw ParameterError("--max-iterations must be positive");

  std::vector<RateCell> cells;
  for (int n : o.n) {
    if (n < 1) throw ParameterError("sample sizes must be positive");
    RateCell c{n, o.p, o.k, o.theta};
    if (o.regime == "coupled") {
      const double a = o.alpha;
      c.p = n;
      c.k = static_cast<int>(std::floor(std::pow(n, 2.0 / (5.0 - a))));
      c.theta = std::pow(n, -(1.0 - a) / (5.0 - a)) / 1000.0;
    }
    if (c.p < 2) throw ParameterError("p must be at least 2");
    if (c.k < 1 || c.k > c.p) throw ParameterError("k must lie in [1, p]");
    if (!(c.theta > 0)) throw ParameterError("--theta must be positive");
    cells.push_back(c);
  }

  CsvTable t({"seed", "trial", "n", "p", "k", "theta", "sigma2", "lambda", "epsilon",
              "iterations", "final_gap", "loss_sdp", "loss_sdp_truncated", "loss_exhaustive",
              "bound_minimax", "bound_sdp"});
  for (const RateCell& c : cells) {
    std::vector<int> support(static_cast<std::size_t>(c.k));
    for (int j = 0; j < c.k; ++j) support[j] = j;
    const SpikedModelSpec spec{c.p, o.sigma2, c.theta, SparseUnitVector::uniform_on(c.p, support)};
    const Eigen::VectorXd v1 = spec.v1.dense();
    SdpConfig cfg = default_tuning(c.n, c.p);
    if (o.iter_opt->count()) cfg.max_iterations = std::min(cfg.max_iterations, o.max_iterations);
    const bool exhaustive = binomial(c.p, c.k) <= o.exhaustive_limit;
    const double logp = std::log(static_cast<double>(c.p));
    const double base = logp / (c.n * c.theta * c.theta);
    const double bound_minimax = 7.0 * std::sqrt(c.k * base);
    const double bound_sdp = (16.0 * std::sqrt(2.0) + 2.0) * std::sqrt(double(c.k) * c.k * base);
    const std::uint64_t cell_seed = derive_seed(o.common.seed, static_cast<std::uint64_t>(c.n));

    std::vector<std::vector<std::string>> rows(static_cast<std::size_t>(o.trials));
    parallel_for(o.trials, [&](int trial) {
      const DataMatrix x = sample_spiked(spec, c.n, derive_seed(cell_seed, trial));
      const SdpResult r = sdp_estimate(x, cfg);
      const double l_sdp = loss(r.v_hat, v1);
      const double l_trunc = loss(truncate_renormalize(r.v_hat, c.k).dense(), v1);
      std::string l_exh = kNa;
      if (exhaustive)
        l_exh = fmt(loss(exhaustive_sparse_pc(empirical_covariance(x), c.k).vector.dense(), v1));
      rows[trial] = {fmt(o.common.seed), fmt(trial), fmt(c.n), fmt(c.p), fmt(c.k),
                     fmt(c.theta), fmt(o.sigma2), fmt(cfg.lambda), fmt(cfg.epsilon),
                     fmt(r.iterations_run), fmt(r.final_gap), fmt(l_sdp), fmt(l_trunc), l_exh,
                     fmt(bound_minimax), fmt(bound_sdp)};
    });

    double mean_sdp = 0, mean_exh = 0;
    for (const auto& r : rows) {
      mean_sdp += std::stod(r[11]) / o.trials;
      if (exhaustive) mean_exh += std::stod(r[13]) / o.trials;
      t.add(r);
    }
    out << "n " << c.n << " p " << c.p << " k " << c.k << " theta " << fmt(c.theta)
        << " mean_loss_sdp " << fmt(mean_sdp) << " mean_loss_exhaustive "
        << (exhaustive ? fmt(mean_exh) : kNa) << " bound_minimax " << fmt(bound_minimax)
        << " bound_sdp " << fmt(bound_sdp) << '\n';
  }
  t.write(csv_path(o.common.output_dir, o.common.csv, "rate"));
  return kExitOk;
}

// ------------------------------------------------------------------ clique

struct CliqueOpts {
  Common common;
  int m = 0, kappa = 0, L = 0, trials = 1;
  std::string graph, save_graph;
  long max_iterations = 3000;
  double threshold_fraction = 0.75, scaling = 750.0;
  CLI::Option *m_opt = nullptr, *kappa_opt = nullptr, *L_opt = nullptr;
};

void setup_clique(CLI::App& app, CliqueOpts& o) {
  auto* sub = app.add_subcommand("clique", "planted clique recovery through sparse PCA");
  add_common(sub, o.common);
  o.m_opt = sub->add_option("--m", o.m, "vertices of a generated instance");
  o.kappa_opt = sub->add_option("--kappa", o.kappa, "clique size");
  o.L_opt = sub->add_option("--L", o.L, "subsampling factor (default ceil(log m))");
  sub->add_option("--graph", o.graph, "load the instance from a graph file");
  sub->add_option("--save-graph", o.save_graph, "write the generated instance of trial 0");
  sub->add_option("--max-iterations", o.max_iterations, "mirror-prox iteration cap");
  sub->add_option("--threshold-fraction", o.threshold_fraction, "neighbour threshold / k");
  sub->add_option("--scaling", o.scaling, "data are divided by sqrt(scaling)");
  sub->add_option("--trials", o.trials, "instances; trial t uses seed + t");
}

int run_clique(const CliqueOpts& o, std::ostream& out) {
  if (o.trials < 1) throw ParameterError("--trials must be positive");
  std::optional<PlantedInstance> loaded;
  if (!o.graph.empty()) {
    std::ifstream f(o.graph);
    if (!f) throw ParameterError("cannot open " + o.graph);
    loaded = read_graph(f);
  } else if (!o.m_opt->count() || !o.kappa_opt->count()) {
    throw ParameterError("clique needs --m and --kappa, or --graph");
  }
  const int m = loaded ? loaded->graph.vertex_count() : o.m;
  const bool clique_known = !loaded || !loaded->clique.empty();
  int kappa = o.kappa;
  if (loaded && clique_known) kappa = static_cast<int>(loaded->clique.size());
  if (loaded && !clique_known && !o.kappa_opt->count())
    throw ParameterError("the graph file lists no clique; pass --kappa");

  CliqueSolverConfig cfg;
  cfg.L = o.L_opt->count() ? o.L : default_subsampling(m);
  cfg.max_iterations = o.max_iterations;
  cfg.threshold_fraction = o.threshold_fraction;
  cfg.scaling = o.scaling;
  cfg.validate();

  std::vector<RecoveryReport> reports(static_cast<std::size_t>(o.trials));
  std::optional<PlantedInstance> first;
  if (!loaded && !o.save_graph.empty()) first = sample_planted_clique(m, kappa, o.common.seed);
  parallel_for(o.trials, [&](int trial) {
    const std::uint64_t seed = o.common.seed + static_cast<std::uint64_t>(trial);
    if (loaded) {
      reports[trial] = clique_known ? solve_planted_clique(*loaded, cfg, seed)
                                    : solve_planted_clique(loaded->graph, kappa, cfg, seed);
    } else {
      reports[trial] = solve_planted_clique(sample_planted_clique(m, kappa, seed), cfg, seed);
    }
  });
  if (first) {
    std::ofstream f(o.save_graph);
    if (!f) throw ParameterError("cannot write " + o.save_graph);
    write_graph(f, *first);
  }

  CsvTable t({"seed", "trial", "n", "p", "k", "theta", "m", "kappa", "L", "recovered_size",
              "exact_match", "jaccard", "iterations", "final_gap", "recovered"});
  for (int trial = 0; trial < o.trials; ++trial) {
    const RecoveryReport& r = reports[trial];
    nlohmann::ordered_json j;
    j["seed"] = o.common.seed + static_cast<std::uint64_t>(trial);
    j["recovered"] = r.recovered;
    j["n"] = r.n;
    j["p"] = r.p;
    j["k"] = r.k;
    j["L"] = cfg.L;
    j["iterations"] = r.iterations;
    j["final_gap"] = r.final_gap ? nlohmann::ordered_json(*r.final_gap) : nullptr;
    j["exact_match"] = r.exact_match ? nlohmann::ordered_json(*r.exact_match) : nullptr;
    j["jaccard"] = r.jaccard ? nlohmann::ordered_json(*r.jaccard) : nullptr;
    out << j.dump() << '\n';

    std::string vertices;
    for (std::size_t i = 0; i < r.recovered.size(); ++i)
      vertices += (i ? " " : "") + std::to_string(r.recovered[i]);
    t.add({fmt(o.common.seed), fmt(trial), fmt(r.n), fmt(r.p), fmt(r.k), kNa, fmt(m), fmt(kappa),
           fmt(cfg.L), fmt(static_cast<int>(r.recovered.size())),
           r.exact_match ? (*r.exact_match ? "1" : "0") : kNa, fmt(r.jaccard),
           fmt(r.iterations), fmt(r.final_gap), vertices});
  }
  t.write(csv_path(o.common.output_dir, o.common.csv, "clique"));
  return kExitOk;
}

// ------------------------------------------------------------------- audit

struct AuditOpts {
  Common common;
  std::string model = "spiked";
  int p = 8, n = 100, ell = 2, trials = 200, k = 2, clique_size = 3;
  double theta = 1.0, sigma2 = 1.0, pi0 = 0.2, c = 0.0;
  std::vector<double> deltas{0.25, 0.1, 0.05};
  CLI::Option* c_opt = nullptr;
};

void setup_audit(CLI::App& app, AuditOpts& o) {
  auto* sub = app.add_subcommand("audit", "Monte Carlo audit of restricted covariance concentration");
  add_common(sub, o.common);
  sub->add_option("--model", o.model, "spiked or gv")->check(CLI::IsMember({"spiked", "gv"}));
  sub->add_option("--p", o.p, "dimension");
  sub->add_option("--n", o.n, "sample size");
  sub->add_option("--ell", o.ell, "sparsity level");
  sub->add_option("--trials", o.trials, "Monte Carlo repetitions");
  sub->add_option("--k", o.k, "spiked model: v1 uniform on the first k coordinates");
  sub->add_option("--theta", o.theta, "spiked model: spike size");
  sub->add_option("--sigma2", o.sigma2, "spiked model: noise variance");
  sub->add_option("--clique-size", o.clique_size, "gv model: number of ones in g");
  sub->add_option("--pi0", o.pi0, "gv model: mixing probability");
  o.c_opt = sub->add_option("--c", o.c, "RCC constant (default: 8 lambda_1 (1 + 9/log p) for "
                                        "spiked, 750 for gv)");
  sub->add_option("--deltas", o.deltas, "comma-separated failure probabilities")->delimiter(',');
}

int run_audit(const AuditOpts& o, std::ostream& out) {
  RccAuditSpec spec;
  int k_col = 0;
  double theta_col = 0.0;
  if (o.model == "spiked") {
    if (o.k < 1 || o.k > o.p) throw ParameterError("--k must lie in [1, p]");
    std::vector<int> support(static_cast<std::size_t>(o.k));
    for (int j = 0; j < o.k; ++j) support[j] = j;
    const SpikedModelSpec m{o.p, o.sigma2, o.theta, SparseUnitVector::uniform_on(o.p, support)};
    m.validate();
    spec.model = m;
    k_col = o.k;
    theta_col = o.theta;
  } else {
    if (o.clique_size < 0 || o.clique_size > o.p)
      throw ParameterError("--clique-size must lie in [0, p]");
    GraphVectorSpec g;
    g.g.assign(static_cast<std::size_t>(std::max(o.p, 0)), 0);
    for (int j = 0; j < o.clique_size; ++j) g.g[j] = 1;
    g.pi0 = o.pi0;
    g.validate();
    spec.model = g;
    k_col = o.clique_size;
    theta_col = o.pi0 * std::max(0, o.clique_size - 1);
  }
  if (o.c_opt->count()) {
    spec.c = o.c;
  } else if (o.model == "spiked") {
    spec.c = rcc_constant(RccKind::gaussian, o.sigma2 + o.theta, o.p);
  } else {
    spec.c = 750.0;
  }
  spec.n = o.n;
  spec.ell = o.ell;
  spec.trials = o.trials;
  spec.seed = o.common.seed;
  spec.delta = o.deltas.empty() ? 0.1 : o.deltas.front();
  const std::vector<RccReport> reports = rcc_audit_grid(spec, o.deltas);

  CsvTable t({"seed", "trial", "n", "p", "k", "theta", "model", "ell", "c", "delta",
              "deviation", "threshold", "violated"});
  for (std::size_t d = 0; d < reports.size(); ++d) {
    const RccReport& r = reports[d];
    const double tol = audit_tolerance(o.deltas[d], r.trials);
    out << "delta " << fmt(o.deltas[d]) << " threshold " << fmt(r.threshold_used)
        << " violations " << r.violations << "/" << r.trials << " rate " << fmt(r.empirical_rate)
        << " allowed " << fmt(o.deltas[d] + tol) << ' '
        << (r.empirical_rate <= o.deltas[d] + tol ? "consistent" : "exceeded") << '\n';
    for (int trial = 0; trial < r.trials; ++trial)
      t.add({fmt(o.common.seed), fmt(trial), fmt(o.n), fmt(o.p), fmt(k_col), fmt(theta_col),
             o.model, fmt(o.ell), fmt(spec.c), fmt(o.deltas[d]), fmt(r.deviations[trial]),
             fmt(r.threshold_used), r.deviations[trial] >= r.threshold_used ? "1" : "0"});
  }
  t.write(csv_path(o.common.output_dir, o.common.csv, "audit"));
  return kExitOk;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sparse principal component estimation experiments", "spca"};
  app.require_subcommand(1, 1);
  EstimateOpts est;
  RateOpts rate;
  CliqueOpts clique;
  AuditOpts audit;
  setup_estimate(app, est);
  setup_rate(app, rate);
  setup_clique(app, clique);
  setup_audit(app, audit);

  try {
    std::vector<std::string> argv = merge_config(args);
    std::reverse(argv.begin(), argv.end());
    app.parse(argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitParameter;
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParameter;
  }

  try {
    if (app.got_subcommand("estimate")) return run_estimate(est, out);
    if (app.got_subcommand("rate")) return run_rate(rate, out);
    if (app.got_subcommand("clique")) return run_clique(clique, out);
    return run_audit(audit, out);
  } catch (const NumericalFailure& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const InputDomainError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const DegenerateInputError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitParameter;
}

}  // namespace spca
