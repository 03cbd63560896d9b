// Command-line front end: estimate item parameters from response files,
// simulate synthetic data, run the scaling benchmark, evaluate on held-out
// users.
//
// Exit codes: 0 success, 1 usage or parse failure, 2 estimation infeasible,
// 3 undefined metric.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rasch/baselines.hpp"
#include "rasch/benchmark.hpp"
#include "rasch/errors.hpp"
#include "rasch/estimator.hpp"
#include "rasch/metrics.hpp"
#include "rasch/response_io.hpp"
#include "rasch/rng.hpp"
#include "rasch/synthetic.hpp"
#include "rasch/text.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitUndefinedMetric = 3;

struct EstimatorFlags {
  double nu = 1.0;
  std::string method = "accelerated";
  double tol = 1e-10;
  std::size_t max_iters = 100000;
  double d_override = 0.0;  // 0 means unset
};

void add_estimator_flags(CLI::App* cmd, EstimatorFlags* flags) {
  cmd->add_option("--nu", flags->nu, "Regularization constant (default 1)");
  cmd->add_option("--method", flags->method, "original or accelerated")
      ->check(CLI::IsMember({"original", "accelerated"}));
  cmd->add_option("--tol", flags->tol, "Stationary solver tolerance");
  cmd->add_option("--max-iters", flags->max_iters, "Stationary solver iteration cap");
  cmd->add_option("--d", flags->d_override, "Common normalizer override (original method)");
}

rasch::EstimatorConfig to_config(const EstimatorFlags& flags) {
  rasch::EstimatorConfig config;
  config.nu = flags.nu;
  config.method = rasch::parse_estimate_method(flags.method);
  config.tol = flags.tol;
  config.max_iters = flags.max_iters;
  if (flags.d_override > 0.0) config.d_override = flags.d_override;
  return config;
}

std::vector<double> parse_beta_spec(const std::string& spec, std::size_t m) {
  if (spec == "grid") return rasch::uniform_grid_beta(m);
  std::vector<double> beta;
  std::stringstream stream(spec);
  std::string token;
  while (std::getline(stream, token, ',')) beta.push_back(std::stod(token));
  if (beta.size() != m)
    throw rasch::ContractError("--beta lists " + std::to_string(beta.size()) +
                               " values but --m is " + std::to_string(m));
  double mean = 0.0;
  for (double b : beta) mean += b / double(beta.size());
  for (double& b : beta) b -= mean;
  return beta;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw rasch::ContractError("cannot open '" + path + "' for writing");
  return out;
}

int cmd_estimate(const std::string& input, const std::string& format,
                 const EstimatorFlags& flags, const std::string& out_path) {
  const rasch::ResponseMatrix x =
      rasch::load_responses_file(input, rasch::parse_format_name(format));
  const rasch::ItemEstimate estimate = rasch::spectral_estimate(x, to_config(flags));

  std::cerr << "items: " << x.n_items() << ", users: " << x.n_users()
            << ", ergodic: " << (estimate.connectivity.is_ergodic ? "yes" : "no")
            << ", iterations: " << estimate.stationary.iterations
            << ", residual: " << rasch::format_double(estimate.stationary.residual) << '\n';

  std::ofstream out = open_output(out_path);
  rasch::save_estimate_csv(estimate, x.item_ids(), out);
  return kExitOk;
}

int cmd_simulate(std::size_t n, std::size_t m, double p, const std::string& beta_spec,
                 std::uint64_t seed, const std::string& format, const std::string& out_path,
                 std::string truth_path) {
  rasch::GroundTruth truth;
  truth.beta = parse_beta_spec(beta_spec, m);
  truth.p = p;
  truth.theta.resize(n);
  rasch::SplitRng theta_rng = rasch::SplitRng(seed).child(0x7468657461ULL);
  for (std::size_t l = 0; l < n; ++l) truth.theta[l] = theta_rng.child(l).next_in(-1.0, 1.0);

  const rasch::ResponseMatrix x = rasch::generate_synthetic(truth, n, seed);
  rasch::save_responses_file(x, out_path, rasch::parse_format_name(format));

  if (truth_path.empty()) truth_path = out_path + ".truth.json";
  std::ofstream truth_out = open_output(truth_path);
  truth_out << "{\n  \"p\": " << rasch::format_double(truth.p) << ",\n  \"theta\": [";
  for (std::size_t l = 0; l < n; ++l)
    truth_out << (l ? "," : "") << rasch::format_double(truth.theta[l]);
  truth_out << "],\n  \"beta\": [";
  for (std::size_t i = 0; i < m; ++i)
    truth_out << (i ? "," : "") << rasch::format_double(truth.beta[i]);
  truth_out << "]\n}\n";

  std::cerr << "wrote " << out_path << " (" << n << " users x " << m << " items) and "
            << truth_path << '\n';
  return kExitOk;
}

int cmd_benchmark(const std::string& grid_spec, std::size_t trials, std::uint64_t seed,
                  const std::string& methods_spec, const std::string& out_prefix, int jobs) {
  std::vector<rasch::BenchmarkMethod> methods;
  std::stringstream stream(methods_spec);
  std::string token;
  while (std::getline(stream, token, ','))
    methods.push_back(rasch::parse_benchmark_method(token));

  const rasch::ScalingReport report = rasch::run_scaling_benchmark(
      rasch::parse_grid_spec(grid_spec), trials, seed, methods, jobs);

  std::ofstream csv = open_output(out_prefix + ".csv");
  rasch::save_scaling_report_csv(report, csv);
  std::ofstream json = open_output(out_prefix + ".json");
  rasch::save_scaling_report_json(report, json);

  for (const rasch::SlopeFit& s : report.slopes_vs_n)
    std::cerr << "slope vs n (m=" << s.n_items << ", p=" << rasch::format_double(s.p)
              << ", " << rasch::benchmark_method_name(s.method)
              << "): " << rasch::format_double(s.slope) << '\n';
  for (const rasch::SlopeFit& s : report.slopes_vs_p)
    std::cerr << "slope vs p (m=" << s.n_items << ", n=" << s.n_users << ", "
              << rasch::benchmark_method_name(s.method)
              << "): " << rasch::format_double(s.slope) << '\n';
  std::cerr << "wrote " << out_prefix << ".csv and " << out_prefix << ".json\n";
  return kExitOk;
}

int cmd_evaluate(const std::string& train_path, const std::string& test_path,
                 const std::string& format, const EstimatorFlags& flags,
                 const std::string& topk_spec, std::int64_t topk_min_count,
                 double topk_max_mean, const std::string& out_prefix) {
  const rasch::FileFormat file_format = rasch::parse_format_name(format);
  const rasch::ResponseMatrix train = rasch::load_responses_file(train_path, file_format);
  const rasch::ResponseMatrix test = rasch::load_responses_file(test_path, file_format);
  if (train.item_ids() != test.item_ids())
    throw rasch::ContractError("train and test files do not share item columns");

  const rasch::ItemEstimate estimate = rasch::spectral_estimate(train, to_config(flags));

  rasch::HoldoutOptions options;
  options.topk_min_count = topk_min_count;
  options.topk_max_mean = topk_max_mean;
  if (!topk_spec.empty()) {
    std::stringstream stream(topk_spec);
    std::string token;
    while (std::getline(stream, token, ','))
      options.ks.push_back(std::size_t(std::stoull(token)));
  }

  const rasch::MetricReport report =
      rasch::evaluate_holdout(train, test, estimate.beta, options);
  if (report.users_skipped > 0)
    std::cerr << "warning: skipped " << report.users_skipped
              << " test users with fewer than 2 responses\n";

  std::ofstream csv = open_output(out_prefix + ".csv");
  rasch::save_metric_report_csv(report, csv);
  std::ofstream json = open_output(out_prefix + ".json");
  rasch::save_metric_report_json(report, json);
  std::cerr << "auc: " << rasch::format_double(report.auc)
            << ", avg_loglik: " << rasch::format_double(report.avg_loglik) << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral item-parameter estimation for binary response data"};
  app.require_subcommand(1);

  // estimate
  auto* estimate = app.add_subcommand("estimate", "Estimate item parameters from a file");
  std::string est_input, est_format = "csv", est_out = "estimate.csv";
  EstimatorFlags est_flags;
  estimate->add_option("--input", est_input, "Response file")->required();
  estimate->add_option("--format", est_format, "csv or dense-sentinel");
  add_estimator_flags(estimate, &est_flags);
  estimate->add_option("--out", est_out, "Output CSV path");

  // simulate
  auto* simulate = app.add_subcommand("simulate", "Generate synthetic responses");
  std::size_t sim_n = 100, sim_m = 10;
  double sim_p = 1.0;
  std::string sim_beta = "grid", sim_format = "csv", sim_out = "responses.csv", sim_truth;
  std::uint64_t sim_seed = 0;
  simulate->add_option("--n", sim_n, "Number of users")->required();
  simulate->add_option("--m", sim_m, "Number of items")->required();
  simulate->add_option("--p", sim_p, "Assignment probability in (0, 1]");
  simulate->add_option("--beta", sim_beta, "'grid' or comma-separated values (centered)");
  simulate->add_option("--seed", sim_seed, "RNG seed");
  simulate->add_option("--format", sim_format, "csv or dense-sentinel");
  simulate->add_option("--out", sim_out, "Response file path");
  simulate->add_option("--truth-out", sim_truth, "Ground truth JSON path");

  // benchmark
  auto* benchmark = app.add_subcommand("benchmark", "Monte-Carlo scaling benchmark");
  std::string bench_grid, bench_methods = "accelerated", bench_out = "scaling";
  std::size_t bench_trials = 50;
  std::uint64_t bench_seed = 0;
  int bench_jobs = 0;
  benchmark->add_option("--grid", bench_grid, "e.g. \"n=200,800,3200;m=10;p=1.0\"")->required();
  benchmark->add_option("--trials", bench_trials, "Trials per grid cell");
  benchmark->add_option("--seed", bench_seed, "RNG seed");
  benchmark->add_option("--methods", bench_methods, "Comma-separated method list");
  benchmark->add_option("--out", bench_out, "Output prefix (.csv and .json)");
  benchmark->add_option("--jobs", bench_jobs, "Worker threads (0 = default)");

  // evaluate
  auto* evaluate = app.add_subcommand("evaluate", "Fit on train users, score test users");
  std::string eval_train, eval_test, eval_format = "csv", eval_topk, eval_out = "metrics";
  std::int64_t eval_min_count = 0;
  double eval_max_mean = 1.0;
  EstimatorFlags eval_flags;
  evaluate->add_option("--train", eval_train, "Training response file")->required();
  evaluate->add_option("--test", eval_test, "Held-out response file")->required();
  evaluate->add_option("--format", eval_format, "csv or dense-sentinel");
  add_estimator_flags(evaluate, &eval_flags);
  evaluate->add_option("--topk", eval_topk, "Comma-separated K values");
  evaluate->add_option("--topk-min-count", eval_min_count,
                       "Drop items with fewer train observations from the reference");
  evaluate->add_option("--topk-max-mean", eval_max_mean,
                       "Drop items with a higher train mean from the reference");
  evaluate->add_option("--out", eval_out, "Output prefix (.csv and .json)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (estimate->parsed()) return cmd_estimate(est_input, est_format, est_flags, est_out);
    if (simulate->parsed())
      return cmd_simulate(sim_n, sim_m, sim_p, sim_beta, sim_seed, sim_format, sim_out,
                          sim_truth);
    if (benchmark->parsed())
      return cmd_benchmark(bench_grid, bench_trials, bench_seed, bench_methods, bench_out,
                           bench_jobs);
    if (evaluate->parsed())
      return cmd_evaluate(eval_train, eval_test, eval_format, eval_flags, eval_topk,
                          eval_min_count, eval_max_mean, eval_out);
  } catch (const rasch::UndefinedMetricError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUndefinedMetric;
  } catch (const rasch::EstimationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    for (std::size_t c = 0; c < e.components().size(); ++c) {
      std::cerr << "  component " << c << ":";
      for (std::size_t item : e.components()[c]) std::cerr << ' ' << item;
      std::cerr << '\n';
    }
    return kExitInfeasible;
  } catch (const rasch::NonConvergenceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const rasch::DegenerateItemError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const rasch::InvalidNormalizerError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const rasch::IncompleteMatrixError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const rasch::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
