// Independent reference implementations used only to check the library.
// Everything here is deliberately written the slow, obvious way.
#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "rasch/matrix.hpp"
#include "rasch/pairwise.hpp"
#include "rasch/response_matrix.hpp"

namespace rasch::test {

// Triple loop over (user, item, item); no ones/zeros bucketing.
struct BruteForceCounts {
  std::vector<std::int64_t> wins;
  std::vector<std::int64_t> coassignment;
};
BruteForceCounts brute_force_counts(const ResponseMatrix& x);

// Solves pi^T P = pi^T, sum(pi) = 1 by Gaussian elimination with partial
// pivoting on the dense system; no power iteration involved.
std::vector<double> stationary_by_linear_solve(const Matrix& p);

// Central finite differences.
std::vector<double> finite_difference_gradient(
    const std::function<double(const std::vector<double>&)>& f, std::vector<double> at,
    double h);

// Pairwise conditional log-likelihood written directly from the conditional
// probabilities (strengths e^{-beta}).
double pairwise_loglik_reference(const PairwiseStats& stats, const std::vector<double>& beta);

}  // namespace rasch::test
