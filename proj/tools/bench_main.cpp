// Compares the serial reference kernels against their OpenMP counterparts on
// a few synthetic workloads and checks that both produce identical results.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "rasch/benchmark.hpp"
#include "rasch/pairwise.hpp"
#include "rasch/rng.hpp"
#include "rasch/synthetic.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double best_of(int repeats, const std::function<void()>& fn) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    const auto start = Clock::now();
    fn();
    const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
    if (elapsed < best) best = elapsed;
  }
  return best;
}

rasch::GroundTruth make_truth(std::size_t n, std::size_t m, double p, std::uint64_t seed) {
  rasch::GroundTruth truth;
  truth.beta = rasch::uniform_grid_beta(m);
  truth.p = p;
  truth.theta.resize(n);
  rasch::SplitRng rng(seed);
  for (std::size_t l = 0; l < n; ++l) truth.theta[l] = rng.child(l).next_in(-1.0, 1.0);
  return truth;
}

void report(const char* name, double serial, double parallel, bool match) {
  std::printf("%-34s serial %8.3f ms   parallel %8.3f ms   speedup %5.2fx   %s\n", name,
              serial * 1e3, parallel * 1e3, serial / parallel, match ? "match" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  const int repeats = argc > 1 ? std::stoi(argv[1]) : 3;
#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP; parallel kernels fall back to serial\n");
#endif

  struct Case {
    std::size_t n, m;
    double p;
  };
  const std::vector<Case> cases = {{20000, 100, 0.3}, {5000, 300, 0.5}, {2000, 200, 0.8}};

  for (const Case& c : cases) {
    const rasch::GroundTruth truth = make_truth(c.n, c.m, c.p, 7);

    rasch::ResponseMatrix serial_x(1, 2), parallel_x(1, 2);
    const double gen_serial = best_of(
        repeats, [&] { serial_x = rasch::detail::generate_synthetic_serial(truth, c.n, 11); });
    const double gen_parallel = best_of(
        repeats, [&] { parallel_x = rasch::detail::generate_synthetic_parallel(truth, c.n, 11); });
    char label[64];
    std::snprintf(label, sizeof(label), "generate n=%zu m=%zu p=%.1f", c.n, c.m, c.p);
    report(label, gen_serial, gen_parallel, serial_x == parallel_x);

    rasch::PairwiseCounts serial_counts, parallel_counts;
    const double count_serial =
        best_of(repeats, [&] { serial_counts = rasch::count_pairwise_serial(serial_x); });
    const double count_parallel =
        best_of(repeats, [&] { parallel_counts = rasch::count_pairwise_parallel(serial_x); });
    std::snprintf(label, sizeof(label), "pairwise counts n=%zu m=%zu", c.n, c.m);
    report(label, count_serial, count_parallel,
           serial_counts.wins == parallel_counts.wins &&
               serial_counts.coassignment == parallel_counts.coassignment);
  }

  // Whole-trial loop: worker pool vs single worker.
  const std::vector<rasch::GridCell> grid = {{800, 20, 1.0}};
  const std::vector<rasch::BenchmarkMethod> methods = {rasch::BenchmarkMethod::accelerated};
  rasch::ScalingReport single, pooled;
  const double bench_serial =
      best_of(repeats, [&] { single = rasch::run_scaling_benchmark(grid, 32, 5, methods, 1); });
  const double bench_parallel =
      best_of(repeats, [&] { pooled = rasch::run_scaling_benchmark(grid, 32, 5, methods, 0); });
  report("benchmark trials n=800 m=20", bench_serial, bench_parallel,
         single.cells[0].l2_errors == pooled.cells[0].l2_errors);

  return 0;
}
