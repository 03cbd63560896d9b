#include "rasch/pairwise.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include "rasch/errors.hpp"

namespace rasch {
namespace {

// Accumulates one user's contribution.  Assigned items are split into the
// positively and negatively answered sets; every (positive, negative) pair is
// one differential measurement, every assigned pair one co-assignment.
void accumulate_user(const ResponseMatrix& x, std::size_t user, std::vector<std::size_t>& ones,
                     std::vector<std::size_t>& zeros, std::int64_t* wins, std::int64_t* coassign) {
  const std::size_t m = x.n_items();
  const std::int8_t* row = x.row(user);
  ones.clear();
  zeros.clear();
  for (std::size_t i = 0; i < m; ++i) {
    if (row[i] == 1)
      ones.push_back(i);
    else if (row[i] == 0)
      zeros.push_back(i);
  }
  for (std::size_t i : ones)
    for (std::size_t j : zeros) ++wins[i * m + j];
  auto coassign_all = [&](const std::vector<std::size_t>& items) {
    for (std::size_t a = 0; a < items.size(); ++a)
      for (std::size_t b = a + 1; b < items.size(); ++b) ++coassign[items[a] * m + items[b]];
  };
  // Upper triangle only; mirrored after all users are counted.
  for (std::size_t i : ones)
    for (std::size_t j : zeros) ++coassign[std::min(i, j) * m + std::max(i, j)];
  coassign_all(ones);
  coassign_all(zeros);
}

void mirror_coassignment(std::size_t m, std::vector<std::int64_t>& coassign) {
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) coassign[j * m + i] = coassign[i * m + j];
}

}  // namespace

PairwiseCounts count_pairwise_serial(const ResponseMatrix& x) {
  const std::size_t m = x.n_items();
  PairwiseCounts counts{m, std::vector<std::int64_t>(m * m, 0), std::vector<std::int64_t>(m * m, 0)};
  std::vector<std::size_t> ones, zeros;
  for (std::size_t u = 0; u < x.n_users(); ++u)
    accumulate_user(x, u, ones, zeros, counts.wins.data(), counts.coassignment.data());
  mirror_coassignment(m, counts.coassignment);
  return counts;
}

PairwiseCounts count_pairwise_parallel(const ResponseMatrix& x) {
#ifndef _OPENMP
  return count_pairwise_serial(x);
#else
  const std::size_t m = x.n_items();
  PairwiseCounts counts{m, std::vector<std::int64_t>(m * m, 0), std::vector<std::int64_t>(m * m, 0)};

  const int n_threads = omp_get_max_threads();
  std::vector<std::vector<std::int64_t>> wins_local(n_threads);
  std::vector<std::vector<std::int64_t>> co_local(n_threads);

#pragma omp parallel num_threads(n_threads)
  {
    const int t = omp_get_thread_num();
    wins_local[t].assign(m * m, 0);
    co_local[t].assign(m * m, 0);
    std::vector<std::size_t> ones, zeros;
#pragma omp for schedule(static)
    for (std::int64_t u = 0; u < std::int64_t(x.n_users()); ++u)
      accumulate_user(x, std::size_t(u), ones, zeros, wins_local[t].data(), co_local[t].data());
  }

  // Integer merge: the total is independent of thread count and order.
  for (int t = 0; t < n_threads; ++t) {
    if (wins_local[t].empty()) continue;
    for (std::size_t k = 0; k < m * m; ++k) {
      counts.wins[k] += wins_local[t][k];
      counts.coassignment[k] += co_local[t][k];
    }
  }
  mirror_coassignment(m, counts.coassignment);
  return counts;
#endif
}

PairwiseCounts count_pairwise(const ResponseMatrix& x) {
#ifdef _OPENMP
  // Per-thread m^2 buffers; stay serial when they would dominate the work.
  const std::size_t buffers = std::size_t(omp_get_max_threads()) * x.n_items() * x.n_items();
  if (x.n_users() >= 256 && buffers <= (std::size_t(1) << 28))
    return count_pairwise_parallel(x);
#endif
  return count_pairwise_serial(x);
}

PairwiseStats pairwise_diff_counts(const ResponseMatrix& x, double nu) {
  if (nu < 0.0) throw ContractError("regularization constant must be >= 0");
  PairwiseCounts counts = count_pairwise(x);
  const std::size_t m = counts.m;
  PairwiseStats stats{m, nu, std::vector<double>(m * m, 0.0), std::move(counts.coassignment)};
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      const std::size_t k = i * m + j;
      if (stats.b[k] > 0)
        stats.y[k] = double(counts.wins[k]) + nu;
      else
        stats.y[k] = 0.0;
    }
  }
  return stats;
}

PairwiseStats make_pairwise_stats(std::size_t m, std::vector<double> y,
                                  std::vector<std::int64_t> b, double nu) {
  if (y.size() != m * m || b.size() != m * m)
    throw ContractError("pairwise stats arrays must be m x m");
  return PairwiseStats{m, nu, std::move(y), std::move(b)};
}

}  // namespace rasch
