#include "rasch/benchmark.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "rasch/baselines.hpp"
#include "rasch/errors.hpp"
#include "rasch/estimator.hpp"
#include "rasch/metrics.hpp"
#include "rasch/rng.hpp"
#include "rasch/synthetic.hpp"
#include "rasch/text.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rasch {
namespace {

constexpr std::uint64_t kThetaKey = 0x7468657461ULL;  // "theta"
constexpr std::uint64_t kDataKey = 0x64617461ULL;     // "data"

std::vector<double> parse_number_list(const std::string& text) {
  std::vector<double> values;
  std::stringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ',')) {
    if (token.empty()) throw ContractError("empty value in grid list '" + text + "'");
    std::size_t used = 0;
    double value;
    try {
      value = std::stod(token, &used);
    } catch (const std::exception&) {
      throw ContractError("cannot parse grid value '" + token + "'");
    }
    if (used != token.size()) throw ContractError("cannot parse grid value '" + token + "'");
    values.push_back(value);
  }
  if (values.empty()) throw ContractError("empty grid dimension in '" + text + "'");
  return values;
}

double median(std::vector<double> values) {
  if (values.empty()) return std::numeric_limits<double>::quiet_NaN();
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  if (values.size() % 2 == 1) return values[mid];
  return 0.5 * (values[mid - 1] + values[mid]);
}

// OLS slope of log2(error) against log2(coordinate).
double log_log_slope(const std::vector<double>& coordinate, const std::vector<double>& error) {
  const std::size_t n = coordinate.size();
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = std::log2(coordinate[i]);
    const double y = std::log2(error[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double denom = double(n) * sxx - sx * sx;
  return (double(n) * sxy - sx * sy) / denom;
}

std::vector<double> run_method(BenchmarkMethod method, const PairwiseStats& stats) {
  switch (method) {
    case BenchmarkMethod::original: {
      EstimatorConfig config;
      config.method = EstimateMethod::original;
      return estimate_from_stats(stats, config).beta;
    }
    case BenchmarkMethod::accelerated:
      return estimate_from_stats(stats, EstimatorConfig{}).beta;
    case BenchmarkMethod::rowsum:
      return rowsum_estimate(conditional_ratio_matrix(stats));
    case BenchmarkMethod::eigenvector:
      return eigenvector_estimate(conditional_ratio_matrix(stats));
    case BenchmarkMethod::pmle:
      return pmle_mm_estimate(stats).beta;
  }
  throw ContractError("unhandled benchmark method");
}

}  // namespace

std::vector<GridCell> parse_grid_spec(const std::string& spec) {
  std::map<std::string, std::vector<double>> dimensions;
  std::stringstream stream(spec);
  std::string part;
  while (std::getline(stream, part, ';')) {
    const std::size_t eq = part.find('=');
    if (eq == std::string::npos)
      throw ContractError("grid dimension '" + part + "' is not of the form name=values");
    const std::string name = part.substr(0, eq);
    if (name != "n" && name != "m" && name != "p")
      throw ContractError("unknown grid dimension '" + name + "'; expected n, m or p");
    if (dimensions.count(name)) throw ContractError("grid dimension '" + name + "' repeated");
    dimensions[name] = parse_number_list(part.substr(eq + 1));
  }
  for (const char* required : {"n", "m", "p"})
    if (!dimensions.count(required))
      throw ContractError(std::string("grid is missing dimension '") + required + "'");

  std::vector<GridCell> grid;
  for (double n : dimensions["n"]) {
    for (double m : dimensions["m"]) {
      for (double p : dimensions["p"]) {
        if (n < 1 || n != std::floor(n)) throw ContractError("n values must be positive integers");
        if (m < 2 || m != std::floor(m)) throw ContractError("m values must be integers >= 2");
        if (!(p > 0.0) || p > 1.0) throw ContractError("p values must be in (0, 1]");
        grid.push_back({std::size_t(n), std::size_t(m), p});
      }
    }
  }
  return grid;
}

BenchmarkMethod parse_benchmark_method(const std::string& name) {
  if (name == "original") return BenchmarkMethod::original;
  if (name == "accelerated") return BenchmarkMethod::accelerated;
  if (name == "rowsum") return BenchmarkMethod::rowsum;
  if (name == "eigenvector") return BenchmarkMethod::eigenvector;
  if (name == "pmle") return BenchmarkMethod::pmle;
  std::string valid;
  for (const std::string& v : benchmark_method_names()) valid += (valid.empty() ? "" : ", ") + v;
  throw ContractError("unknown method '" + name + "'; valid methods: " + valid);
}

std::string benchmark_method_name(BenchmarkMethod method) {
  switch (method) {
    case BenchmarkMethod::original: return "original";
    case BenchmarkMethod::accelerated: return "accelerated";
    case BenchmarkMethod::rowsum: return "rowsum";
    case BenchmarkMethod::eigenvector: return "eigenvector";
    case BenchmarkMethod::pmle: return "pmle";
  }
  return "?";
}

std::vector<std::string> benchmark_method_names() {
  return {"original", "accelerated", "rowsum", "eigenvector", "pmle"};
}

ScalingReport run_scaling_benchmark(const std::vector<GridCell>& grid, std::size_t trials,
                                    std::uint64_t seed,
                                    const std::vector<BenchmarkMethod>& methods, int jobs) {
  if (grid.empty()) throw ContractError("grid must not be empty");
  if (trials < 1) throw ContractError("need at least one trial");
  if (methods.empty()) throw ContractError("need at least one method");

  ScalingReport report;
  report.grid = grid;
  report.methods = methods;
  report.trials = trials;
  report.seed = seed;

  for (const GridCell& cell : grid) {
    const std::vector<double> beta_star = uniform_grid_beta(cell.n_items);
    const std::vector<double> pi_star = softmax(beta_star);

    // Slot per (trial, method); NaN marks an excluded trial.  Trials are
    // independent, write disjoint slots, and draw from keyed streams, so the
    // schedule cannot change the report.
    const std::size_t n_methods = methods.size();
    std::vector<double> l2(trials * n_methods, std::numeric_limits<double>::quiet_NaN());
    std::vector<double> linf(trials * n_methods, std::numeric_limits<double>::quiet_NaN());

#ifdef _OPENMP
    const int worker_count = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(worker_count)
#else
    (void)jobs;
#endif
    for (std::int64_t trial = 0; trial < std::int64_t(trials); ++trial) {
      SplitRng trial_rng(seed ^ std::uint64_t(trial));

      GroundTruth truth;
      truth.beta = beta_star;
      truth.p = cell.p;
      truth.theta.resize(cell.n_users);
      SplitRng theta_rng = trial_rng.child(kThetaKey);
      for (std::size_t l = 0; l < cell.n_users; ++l)
        truth.theta[l] = theta_rng.child(l).next_in(-1.0, 1.0);

      const std::uint64_t data_seed = trial_rng.child(kDataKey).next_u64();
      const ResponseMatrix x = generate_synthetic(truth, cell.n_users, data_seed);
      const PairwiseStats stats = pairwise_diff_counts(x, 1.0);

      for (std::size_t mi = 0; mi < n_methods; ++mi) {
        try {
          const std::vector<double> beta = run_method(methods[mi], stats);
          l2[std::size_t(trial) * n_methods + mi] = l2_error(beta, beta_star);
          linf[std::size_t(trial) * n_methods + mi] =
              linf_rel_error(softmax(beta), pi_star);
        } catch (const std::exception&) {
          // excluded; counted below
        }
      }
    }

    for (std::size_t mi = 0; mi < n_methods; ++mi) {
      CellResult result;
      result.cell = cell;
      result.method = methods[mi];
      result.trials = trials;
      for (std::size_t trial = 0; trial < trials; ++trial) {
        const double e2 = l2[trial * n_methods + mi];
        if (std::isnan(e2)) {
          ++result.excluded;
          continue;
        }
        result.l2_errors.push_back(e2);
        result.linf_rel_errors.push_back(linf[trial * n_methods + mi]);
      }
      result.median_l2 = median(result.l2_errors);
      result.median_linf_rel = median(result.linf_rel_errors);
      report.cells.push_back(std::move(result));
    }
  }

  // Slopes across cells sharing all dimensions but one.
  for (BenchmarkMethod method : methods) {
    std::map<std::pair<std::size_t, double>, std::vector<const CellResult*>> by_mp;
    std::map<std::pair<std::size_t, std::size_t>, std::vector<const CellResult*>> by_mn;
    for (const CellResult& cell : report.cells) {
      if (cell.method != method || cell.l2_errors.empty()) continue;
      by_mp[{cell.cell.n_items, cell.cell.p}].push_back(&cell);
      by_mn[{cell.cell.n_items, cell.cell.n_users}].push_back(&cell);
    }
    for (const auto& [key, cells] : by_mp) {
      std::vector<double> ns, errors;
      for (const CellResult* c : cells) {
        ns.push_back(double(c->cell.n_users));
        errors.push_back(c->median_l2);
      }
      if (std::set<double>(ns.begin(), ns.end()).size() < 2) continue;
      report.slopes_vs_n.push_back(
          {method, 0, key.first, key.second, log_log_slope(ns, errors), ns.size()});
    }
    for (const auto& [key, cells] : by_mn) {
      std::vector<double> ps, errors;
      for (const CellResult* c : cells) {
        ps.push_back(c->cell.p);
        errors.push_back(c->median_l2);
      }
      if (std::set<double>(ps.begin(), ps.end()).size() < 2) continue;
      report.slopes_vs_p.push_back(
          {method, key.second, key.first, 0.0, log_log_slope(ps, errors), ps.size()});
    }
  }
  return report;
}

void save_scaling_report_csv(const ScalingReport& report, std::ostream& out) {
  out << "n,m,p,method,trials,excluded,median_l2_error,median_linf_rel_error\n";
  for (const CellResult& cell : report.cells) {
    out << cell.cell.n_users << ',' << cell.cell.n_items << ',' << format_double(cell.cell.p)
        << ',' << benchmark_method_name(cell.method) << ',' << cell.trials << ','
        << cell.excluded << ',' << format_double(cell.median_l2) << ','
        << format_double(cell.median_linf_rel) << '\n';
  }
}

void save_scaling_report_json(const ScalingReport& report, std::ostream& out) {
  nlohmann::json j;
  j["seed"] = report.seed;
  j["trials"] = report.trials;
  j["methods"] = nlohmann::json::array();
  for (BenchmarkMethod m : report.methods) j["methods"].push_back(benchmark_method_name(m));
  j["cells"] = nlohmann::json::array();
  for (const CellResult& cell : report.cells) {
    nlohmann::json c;
    c["n"] = cell.cell.n_users;
    c["m"] = cell.cell.n_items;
    c["p"] = cell.cell.p;
    c["method"] = benchmark_method_name(cell.method);
    c["trials"] = cell.trials;
    c["excluded"] = cell.excluded;
    c["l2_errors"] = cell.l2_errors;
    c["linf_rel_errors"] = cell.linf_rel_errors;
    c["median_l2_error"] = cell.median_l2;
    c["median_linf_rel_error"] = cell.median_linf_rel;
    j["cells"].push_back(std::move(c));
  }
  auto slope_json = [](const SlopeFit& s) {
    nlohmann::json o;
    o["method"] = benchmark_method_name(s.method);
    if (s.n_users > 0) o["n"] = s.n_users;
    o["m"] = s.n_items;
    if (s.p > 0.0) o["p"] = s.p;
    o["slope"] = s.slope;
    o["points"] = s.points;
    return o;
  };
  j["slopes_vs_n"] = nlohmann::json::array();
  for (const SlopeFit& s : report.slopes_vs_n) j["slopes_vs_n"].push_back(slope_json(s));
  j["slopes_vs_p"] = nlohmann::json::array();
  for (const SlopeFit& s : report.slopes_vs_p) j["slopes_vs_p"].push_back(slope_json(s));
  out << j.dump(2) << '\n';
}

}  // namespace rasch
