#include "rasch/markov_chain.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <queue>

#include "rasch/errors.hpp"
#include "rasch/rng.hpp"
#include "rasch/text.hpp"

namespace rasch {
namespace {

std::vector<double> outgoing_mass(const PairwiseStats& stats) {
  std::vector<double> sums(stats.m, 0.0);
  for (std::size_t i = 0; i < stats.m; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < stats.m; ++j)
      if (j != i) acc += stats.yat(i, j);
    sums[i] = acc;
  }
  return sums;
}

// Fills row i: off-diagonal y/d, diagonal takes the remainder (clamped at 0
// against rounding).
void fill_row(Matrix& p, const PairwiseStats& stats, std::size_t i, double d) {
  double off_diagonal = 0.0;
  for (std::size_t j = 0; j < stats.m; ++j) {
    if (j == i) continue;
    const double value = stats.yat(i, j) / d;
    p(i, j) = value;
    off_diagonal += value;
  }
  p(i, i) = std::max(0.0, 1.0 - off_diagonal);
}

// Iterative Kosaraju; recursion depth would be a liability at large m.
std::vector<std::vector<std::size_t>> strongly_connected_components(
    std::size_t m, const std::vector<std::vector<std::size_t>>& adj) {
  std::vector<std::vector<std::size_t>> radj(m);
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v : adj[u]) radj[v].push_back(u);

  std::vector<std::size_t> finish_order;
  finish_order.reserve(m);
  std::vector<char> seen(m, 0);
  std::vector<std::pair<std::size_t, std::size_t>> stack;
  for (std::size_t start = 0; start < m; ++start) {
    if (seen[start]) continue;
    seen[start] = 1;
    stack.emplace_back(start, 0);
    while (!stack.empty()) {
      auto& [node, next] = stack.back();
      if (next < adj[node].size()) {
        const std::size_t child = adj[node][next++];
        if (!seen[child]) {
          seen[child] = 1;
          stack.emplace_back(child, 0);
        }
      } else {
        finish_order.push_back(node);
        stack.pop_back();
      }
    }
  }

  std::vector<std::vector<std::size_t>> components;
  std::fill(seen.begin(), seen.end(), 0);
  std::vector<std::size_t> dfs;
  for (auto it = finish_order.rbegin(); it != finish_order.rend(); ++it) {
    if (seen[*it]) continue;
    std::vector<std::size_t> component;
    dfs.push_back(*it);
    seen[*it] = 1;
    while (!dfs.empty()) {
      const std::size_t node = dfs.back();
      dfs.pop_back();
      component.push_back(node);
      for (std::size_t v : radj[node]) {
        if (!seen[v]) {
          seen[v] = 1;
          dfs.push_back(v);
        }
      }
    }
    std::sort(component.begin(), component.end());
    components.push_back(std::move(component));
  }
  std::sort(components.begin(), components.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return components;
}

// gcd of cycle lengths of a strongly connected digraph without self-loops.
int graph_period(std::size_t m, const std::vector<std::vector<std::size_t>>& adj) {
  std::vector<std::int64_t> level(m, -1);
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

MarkovChain build_chain_original(const PairwiseStats& stats, std::optional<double> d_override) {
  const std::size_t m = stats.m;
  const std::vector<double> sums = outgoing_mass(stats);
  const double max_sum = *std::max_element(sums.begin(), sums.end());

  double d = max_sum > 0.0 ? max_sum : 1.0;
  if (d_override.has_value()) {
    d = *d_override;
    if (!(d > 0.0) || d < max_sum * (1.0 - 1e-12))
      throw InvalidNormalizerError("normalizer " + format_double(d) +
                                   " is below the largest outgoing mass " +
                                   format_double(max_sum));
  }

  MarkovChain chain{ChainKind::original, Matrix(m, m), std::vector<double>(m, d)};
  for (std::size_t i = 0; i < m; ++i) fill_row(chain.p, stats, i, d);
  return chain;
}

MarkovChain build_chain_accelerated(const PairwiseStats& stats) {
  const std::size_t m = stats.m;
  const std::vector<double> sums = outgoing_mass(stats);

  MarkovChain chain{ChainKind::accelerated, Matrix(m, m), std::vector<double>(m)};
  for (std::size_t i = 0; i < m; ++i) {
    chain.d[i] = std::max(sums[i], 1.0);
    fill_row(chain.p, stats, i, chain.d[i]);
  }
  return chain;
}

MarkovChain build_idealized_chain(const GroundTruth& truth, const ResponseMatrix& x, double d) {
  truth.validate();
  const std::size_t n = x.n_users();
  const std::size_t m = x.n_items();
  if (truth.theta.size() != n || truth.beta.size() != m)
    throw ContractError("ground truth dimensions do not match the response matrix");

  Matrix expected(m, m);
  for (std::size_t l = 0; l < n; ++l) {
    std::vector<double> prob(m);
    for (std::size_t i = 0; i < m; ++i)
      prob[i] = x.assigned(l, i) ? success_probability(truth.theta[l], truth.beta[i]) : -1.0;
    for (std::size_t i = 0; i < m; ++i) {
      if (prob[i] < 0.0) continue;
      for (std::size_t j = 0; j < m; ++j) {
        if (j == i || prob[j] < 0.0) continue;
        expected(i, j) += prob[i] * (1.0 - prob[j]);
      }
    }
  }

  double max_sum = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < m; ++j)
      if (j != i) acc += expected(i, j);
    max_sum = std::max(max_sum, acc);
  }
  if (!(d > 0.0) || d < max_sum * (1.0 - 1e-12))
    throw InvalidNormalizerError("normalizer " + format_double(d) +
                                 " is below the largest expected outgoing mass " +
                                 format_double(max_sum));

  MarkovChain chain{ChainKind::idealized, Matrix(m, m), std::vector<double>(m, d)};
  for (std::size_t i = 0; i < m; ++i) {
    double off_diagonal = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      if (j == i) continue;
      const double value = expected(i, j) / d;
      chain.p(i, j) = value;
      off_diagonal += value;
    }
    chain.p(i, i) = std::max(0.0, 1.0 - off_diagonal);
  }
  return chain;
}

ConnectivityReport check_ergodicity(const PairwiseStats& stats) {
  const std::size_t m = stats.m;
  std::vector<std::vector<std::size_t>> adj(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (i != j && stats.yat(i, j) > 0.0) adj[i].push_back(j);

  ConnectivityReport report;
  report.components = strongly_connected_components(m, adj);
  report.is_ergodic = report.components.size() == 1;

  for (std::size_t j = 0; j < m; ++j) {
    bool incoming = false;
    for (std::size_t i = 0; i < m && !incoming; ++i)
      if (i != j && stats.yat(i, j) > 0.0) incoming = true;
    if (!incoming) report.isolated_items.push_back(j);
  }

  if (report.is_ergodic && m > 1) report.period = graph_period(m, adj);
  return report;
}

double spectral_gap(const MarkovChain& chain, const std::vector<double>& pi) {
  const std::size_t m = chain.size();
  if (pi.size() != m) throw ContractError("distribution size does not match the chain");
  if (m > 2000) throw ContractError("spectral gap limited to m <= 2000 (dense eigensolve)");

  double total = 0.0;
  for (double v : pi) {
    if (!(v > 0.0)) throw ContractError("distribution entries must be positive");
    total += v;
  }
  if (std::abs(total - 1.0) > 1e-8) throw ContractError("distribution must sum to 1");

  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (std::abs(pi[i] * chain.p(i, j) - pi[j] * chain.p(j, i)) > 1e-8)
        throw ContractError("chain is not reversible with respect to the given distribution");

  // Similarity transform of P - 1 pi^T; symmetric when reversible.
  std::vector<double> sqrt_pi(m);
  for (std::size_t i = 0; i < m; ++i) sqrt_pi[i] = std::sqrt(pi[i]);
  Matrix sym(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      sym(i, j) = sqrt_pi[i] / sqrt_pi[j] * chain.p(i, j) - sqrt_pi[i] * sqrt_pi[j];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      const double avg = 0.5 * (sym(i, j) + sym(j, i));
      sym(i, j) = avg;
      sym(j, i) = avg;
    }

  // Largest |eigenvalue| by normalized power iteration; the deflation above
  // removed the unit eigenvalue, so this is the second-largest singular value.
  SplitRng rng(0x9a9u);
  std::vector<double> x(m);
  for (double& v : x) v = rng.next_in(-1.0, 1.0);
  double norm = std::sqrt(std::inner_product(x.begin(), x.end(), x.begin(), 0.0));
  for (double& v : x) v /= norm;

  double estimate = 0.0;
  int stable = 0;
  for (std::size_t iter = 0; iter < 200000 && stable < 8; ++iter) {
    std::vector<double> y = right_multiply(sym, x);
    const double ynorm = std::sqrt(std::inner_product(y.begin(), y.end(), y.begin(), 0.0));
    if (ynorm < 1e-300) {
      estimate = 0.0;
      break;
    }
    if (std::abs(ynorm - estimate) <= 1e-14 * std::max(1.0, ynorm))
      ++stable;
    else
      stable = 0;
    estimate = ynorm;
    for (std::size_t i = 0; i < m; ++i) x[i] = y[i] / ynorm;
  }
  return std::max(0.0, 1.0 - estimate);
}

void save_chain_csv(const MarkovChain& chain, std::ostream& out) {
  const char* kind = chain.kind == ChainKind::original     ? "original"
                     : chain.kind == ChainKind::accelerated ? "accelerated"
                                                            : "idealized";
  out << "# kind=" << kind << '\n';
  out << "# d=";
  for (std::size_t i = 0; i < chain.d.size(); ++i) {
    if (i > 0) out << ',';
    out << format_double(chain.d[i]);
  }
  out << '\n';
  for (std::size_t i = 0; i < chain.size(); ++i) {
    for (std::size_t j = 0; j < chain.size(); ++j) {
      if (j > 0) out << ',';
      out << format_double(chain.p(i, j));
    }
    out << '\n';
  }
}

}  // namespace rasch
