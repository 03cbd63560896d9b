#include "oracles.hpp"

#include <cmath>
#include <stdexcept>

namespace rasch::test {

BruteForceCounts brute_force_counts(const ResponseMatrix& x) {
  const std::size_t n = x.n_users();
  const std::size_t m = x.n_items();
  BruteForceCounts counts{std::vector<std::int64_t>(m * m, 0),
                          std::vector<std::int64_t>(m * m, 0)};
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      for (std::size_t l = 0; l < n; ++l) {
        if (!x.assigned(l, i) || !x.assigned(l, j)) continue;
        ++counts.coassignment[i * m + j];
        if (x.at(l, i) == Response::positive && x.at(l, j) == Response::negative)
          ++counts.wins[i * m + j];
      }
    }
  }
  return counts;
}

std::vector<double> stationary_by_linear_solve(const Matrix& p) {
  const std::size_t m = p.rows;
  // Rows of (P^T - I) with the last equation replaced by sum(pi) = 1.
  Matrix a(m, m + 1);
  for (std::size_t i = 0; i + 1 < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) a(i, j) = p(j, i) - (i == j ? 1.0 : 0.0);
    a(i, m) = 0.0;
  }
  for (std::size_t j = 0; j < m; ++j) a(m - 1, j) = 1.0;
  a(m - 1, m) = 1.0;

  for (std::size_t col = 0; col < m; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < m; ++r)
      if (std::abs(a(r, col)) > std::abs(a(pivot, col))) pivot = r;
    if (std::abs(a(pivot, col)) < 1e-300) throw std::runtime_error("singular system");
    if (pivot != col)
      for (std::size_t c = 0; c <= m; ++c) std::swap(a(pivot, c), a(col, c));
    for (std::size_t r = 0; r < m; ++r) {
      if (r == col) continue;
      const double factor = a(r, col) / a(col, col);
      for (std::size_t c = col; c <= m; ++c) a(r, c) -= factor * a(col, c);
    }
  }
  std::vector<double> pi(m);
  for (std::size_t i = 0; i < m; ++i) pi[i] = a(i, m) / a(i, i);
  return pi;
}

std::vector<double> finite_difference_gradient(
    const std::function<double(const std::vector<double>&)>& f, std::vector<double> at,
    double h) {
  std::vector<double> gradient(at.size());
  for (std::size_t i = 0; i < at.size(); ++i) {
    const double original = at[i];
    at[i] = original + h;
    const double up = f(at);
    at[i] = original - h;
    const double down = f(at);
    at[i] = original;
    gradient[i] = (up - down) / (2.0 * h);
  }
  return gradient;
}

double pairwise_loglik_reference(const PairwiseStats& stats, const std::vector<double>& beta) {
  double loglik = 0.0;
  for (std::size_t i = 0; i < stats.m; ++i) {
    for (std::size_t j = 0; j < stats.m; ++j) {
      if (i == j || stats.yat(i, j) <= 0.0) continue;
      const double si = std::exp(-beta[i]);
      const double sj = std::exp(-beta[j]);
      loglik += stats.yat(i, j) * std::log(si / (si + sj));
    }
  }
  return loglik;
}

}  // namespace rasch::test
