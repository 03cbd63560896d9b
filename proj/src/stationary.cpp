#include "rasch/stationary.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>

#include "rasch/errors.hpp"

namespace rasch {
namespace {

void validate_stochastic(const Matrix& p) {
  for (std::size_t i = 0; i < p.rows; ++i) {
    double row_sum = 0.0;
    for (std::size_t j = 0; j < p.cols; ++j) {
      if (p(i, j) < 0.0) throw ContractError("transition matrix has a negative entry");
      row_sum += p(i, j);
    }
    if (std::abs(row_sum - 1.0) > 1e-12)
      throw ContractError("transition matrix row " + std::to_string(i) + " sums to " +
                          std::to_string(row_sum));
  }
}

std::vector<std::vector<std::size_t>> support_adjacency(const Matrix& p) {
  std::vector<std::vector<std::size_t>> adj(p.rows);
  for (std::size_t i = 0; i < p.rows; ++i)
    for (std::size_t j = 0; j < p.cols; ++j)
      if (i != j && p(i, j) > 0.0) adj[i].push_back(j);
  return adj;
}

bool strongly_connected(const std::vector<std::vector<std::size_t>>& adj) {
  const std::size_t m = adj.size();
  std::vector<std::vector<std::size_t>> radj(m);
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v : adj[u]) radj[v].push_back(u);

  auto reaches_all = [m](const std::vector<std::vector<std::size_t>>& graph) {
    std::vector<char> seen(m, 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t v : graph[u]) {
        if (!seen[v]) {
          seen[v] = 1;
          ++count;
          stack.push_back(v);
        }
      }
    }
    return count == m;
  };
  return reaches_all(adj) && reaches_all(radj);
}

int support_period(const std::vector<std::vector<std::size_t>>& adj) {
  std::vector<std::int64_t> level(adj.size(), -1);
  std::queue<std::size_t> queue;
  level[0] = 0;
  queue.push(0);
  std::int64_t g = 0;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop();
    for (std::size_t v : adj[u]) {
      if (level[v] < 0) {
        level[v] = level[u] + 1;
        queue.push(v);
      } else {
        g = std::gcd(g, std::abs(level[u] + 1 - level[v]));
      }
    }
  }
  return g == 0 ? 1 : int(g);
}

}  // namespace

StationaryResult stationary_distribution(const MarkovChain& chain, double tol,
                                         std::size_t max_iters) {
  if (!(tol > 0.0)) throw ContractError("tolerance must be positive");
  const Matrix& p = chain.p;
  const std::size_t m = p.rows;
  validate_stochastic(p);

  const auto adj = support_adjacency(p);
  if (m > 1 && !strongly_connected(adj))
    throw ContractError("chain is not irreducible; compute connectivity first");

  bool has_self_loop = false;
  for (std::size_t i = 0; i < m && !has_self_loop; ++i) has_self_loop = p(i, i) > 0.0;
  const bool lazy = !has_self_loop && m > 1 && support_period(adj) > 1;

  std::vector<double> pi(m, 1.0 / double(m));
  StationaryResult result;
  for (std::size_t iter = 1; iter <= max_iters; ++iter) {
    std::vector<double> next = left_multiply(pi, p);
    if (lazy)
      for (std::size_t i = 0; i < m; ++i) next[i] = 0.5 * (next[i] + pi[i]);
    const double total = std::accumulate(next.begin(), next.end(), 0.0);
    for (double& v : next) v /= total;

    const double change = l1_distance(next, pi);
    pi = std::move(next);
    result.iterations = iter;
    if (change < tol) {
      result.converged = true;
      break;
    }
  }

  result.residual = l1_distance(left_multiply(pi, p), pi);
  result.pi = std::move(pi);
  if (!result.converged)
    throw NonConvergenceError("stationary distribution did not converge within " +
                                  std::to_string(max_iters) + " iterations (residual " +
                                  std::to_string(result.residual) + ")",
                              result.pi, result.residual);
  return result;
}

}  // namespace rasch
