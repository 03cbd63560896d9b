#pragma once

#include <cstdint>
#include <vector>

#include "rasch/response_matrix.hpp"

namespace rasch {

// Raw integer counts extracted from the data, before regularization.
// wins[i, j] counts users assigned both items who answered i positively and
// j negatively; coassignment[i, j] counts users assigned both.
struct PairwiseCounts {
  std::size_t m = 0;
  std::vector<std::int64_t> wins;
  std::vector<std::int64_t> coassignment;

  std::int64_t win(std::size_t i, std::size_t j) const { return wins[i * m + j]; }
  std::int64_t coassign(std::size_t i, std::size_t j) const { return coassignment[i * m + j]; }
};

PairwiseCounts count_pairwise_serial(const ResponseMatrix& x);
PairwiseCounts count_pairwise_parallel(const ResponseMatrix& x);

// Dispatches to the OpenMP kernel when it pays off; both kernels produce
// identical integer counts.
PairwiseCounts count_pairwise(const ResponseMatrix& x);

// Regularized differential measurements.  y[i, j] = wins(i, j) + nu wherever
// the pair was co-assigned at least once; zero diagonal, zero where the pair
// never co-occurs.
struct PairwiseStats {
  std::size_t m = 0;
  double nu = 0.0;
  std::vector<double> y;
  std::vector<std::int64_t> b;

  double yat(std::size_t i, std::size_t j) const { return y[i * m + j]; }
  std::int64_t bat(std::size_t i, std::size_t j) const { return b[i * m + j]; }
};

PairwiseStats pairwise_diff_counts(const ResponseMatrix& x, double nu);

// Assembles stats from explicit arrays (fixtures, idealized constructions).
PairwiseStats make_pairwise_stats(std::size_t m, std::vector<double> y,
                                  std::vector<std::int64_t> b, double nu);

}  // namespace rasch
