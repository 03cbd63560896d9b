#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace rasch {

struct GridCell {
  std::size_t n_users = 0;
  std::size_t n_items = 0;
  double p = 1.0;
};

// Parses the grid micro-format "n=200,800,3200;m=10;p=1.0" into the cartesian
// product of the listed values.  Dimensions may appear in any order; each must
// appear exactly once.
std::vector<GridCell> parse_grid_spec(const std::string& spec);

enum class BenchmarkMethod {
  original,
  accelerated,
  rowsum,
  eigenvector,
  pmle,
};

BenchmarkMethod parse_benchmark_method(const std::string& name);
std::string benchmark_method_name(BenchmarkMethod method);
std::vector<std::string> benchmark_method_names();

struct CellResult {
  GridCell cell;
  BenchmarkMethod method = BenchmarkMethod::accelerated;
  std::size_t trials = 0;    // requested
  std::size_t excluded = 0;  // trials where estimation failed (e.g. not ergodic)
  std::vector<double> l2_errors;        // per completed trial, in trial order
  std::vector<double> linf_rel_errors;  // on softmax(beta) vs softmax(beta*)
  double median_l2 = 0.0;
  double median_linf_rel = 0.0;
};

struct SlopeFit {
  BenchmarkMethod method = BenchmarkMethod::accelerated;
  std::size_t n_users = 0;   // fixed dimension (0 when n varies)
  std::size_t n_items = 0;
  double p = 0.0;            // fixed dimension (0 when p varies)
  double slope = 0.0;        // OLS slope of log2 median error in log2 coordinates
  std::size_t points = 0;
};

struct ScalingReport {
  std::vector<GridCell> grid;
  std::vector<BenchmarkMethod> methods;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<CellResult> cells;          // grid-major, then method
  std::vector<SlopeFit> slopes_vs_n;      // error vs n at fixed (m, p)
  std::vector<SlopeFit> slopes_vs_p;      // error vs p at fixed (m, n)
};

// Monte-Carlo scaling benchmark.  Per cell and method it runs `trials`
// synthetic experiments: item parameters on the centered uniform grid, user
// parameters iid uniform [-1, 1] from the per-trial stream seed ^ trial, data
// from the sampling model, then the chosen estimator with default settings.
// Failed trials are excluded and counted.  Deterministic given the arguments;
// trials may run on several threads (jobs = 0 picks the default).
ScalingReport run_scaling_benchmark(const std::vector<GridCell>& grid, std::size_t trials,
                                    std::uint64_t seed,
                                    const std::vector<BenchmarkMethod>& methods, int jobs = 0);

// Stable outputs for plotting.  CSV columns:
// n,m,p,method,trials,excluded,median_l2_error,median_linf_rel_error
void save_scaling_report_csv(const ScalingReport& report, std::ostream& out);
// JSON adds per-trial errors and the fitted slopes.
void save_scaling_report_json(const ScalingReport& report, std::ostream& out);

}  // namespace rasch
