#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "rasch/response_matrix.hpp"

namespace rasch {

// Parameters of the generating model: user abilities theta, item difficulties
// beta (mean zero for identifiability), and the per-cell assignment
// probability p.
struct GroundTruth {
  std::vector<double> theta;
  std::vector<double> beta;
  double p = 1.0;

  // Throws ContractError when invariants are violated.
  void validate() const;
};

// sigma(theta - beta): probability of a positive response.
double success_probability(double theta, double beta);

// 1 iff unit_uniform < sigma(theta - beta).
int sample_rasch_response(double theta, double beta, double unit_uniform);

// Draws an n_users x m matrix: each cell is assigned independently with
// probability truth.p, and assigned cells are sampled from the response
// model.  Each (user, item) cell consumes its own keyed RNG stream, so the
// result is identical no matter how the loop is scheduled.
ResponseMatrix generate_synthetic(const GroundTruth& truth, std::size_t n_users,
                                  std::uint64_t seed);

namespace detail {
ResponseMatrix generate_synthetic_serial(const GroundTruth& truth, std::size_t n_users,
                                         std::uint64_t seed);
ResponseMatrix generate_synthetic_parallel(const GroundTruth& truth, std::size_t n_users,
                                           std::uint64_t seed);
}  // namespace detail

// Mean-centered uniform grid on [-1, 1]; the difficulty design used by the
// synthetic benchmark.
std::vector<double> uniform_grid_beta(std::size_t n_items);

// Seeded random split of users into a train and a test matrix.  The shuffle
// is deterministic given the seed; no claim is made to match any external
// partitioning convention.
std::pair<ResponseMatrix, ResponseMatrix> split_users(const ResponseMatrix& x,
                                                      double train_fraction,
                                                      std::uint64_t seed);

}  // namespace rasch
