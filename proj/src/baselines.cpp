#include "rasch/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "rasch/errors.hpp"
#include "rasch/estimator.hpp"
#include "rasch/markov_chain.hpp"
#include "rasch/synthetic.hpp"

namespace rasch {

ConditionalMatrix conditional_ratio_matrix(const PairwiseStats& stats) {
  const std::size_t m = stats.m;
  ConditionalMatrix cm{m, Matrix(m, m), Matrix(m, m), Matrix(m, m)};
  for (std::size_t i = 0; i < m; ++i) cm.d(i, i) = 1.0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const double yij = stats.yat(i, j);
      const double yji = stats.yat(j, i);
      const double n = yij + yji;
      if (!(n > 0.0))
        throw IncompleteMatrixError("no differential measurements for pair", i, j);
      cm.counts(i, j) = n;
      cm.counts(j, i) = n;
      cm.f(i, j) = yij / n;
      cm.f(j, i) = yji / n;
      if (!(yij > 0.0) || !(yji > 0.0))
        throw IncompleteMatrixError("one-sided measurements make the ratio degenerate", i, j);
      cm.d(i, j) = yji / yij;
      cm.d(j, i) = yij / yji;
    }
  }
  return cm;
}

ConditionalMatrix exact_conditional_matrix(const std::vector<double>& beta) {
  const std::size_t m = beta.size();
  if (m < 2) throw ContractError("need at least two items");
  ConditionalMatrix cm{m, Matrix(m, m), Matrix(m, m), Matrix(m, m)};
  for (std::size_t i = 0; i < m; ++i) cm.d(i, i) = 1.0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      cm.f(i, j) = std::exp(beta[j]) / (std::exp(beta[i]) + std::exp(beta[j]));
      cm.d(i, j) = std::exp(beta[i] - beta[j]);
    }
  }
  return cm;
}

std::vector<double> rowsum_estimate(const ConditionalMatrix& cm) {
  std::vector<double> beta(cm.m, 0.0);
  for (std::size_t i = 0; i < cm.m; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < cm.m; ++j)
      if (j != i) acc += std::log(cm.d(i, j));
    beta[i] = acc / double(cm.m);
  }
  return normalize_beta(std::move(beta));
}

std::vector<double> eigenvector_estimate(const ConditionalMatrix& cm, double tol,
                                         std::size_t max_iters) {
  const std::size_t m = cm.m;
  std::vector<double> v(m, 1.0 / double(m));
  for (std::size_t iter = 1; iter <= max_iters; ++iter) {
    std::vector<double> next = right_multiply(cm.d, v);
    const double total = std::accumulate(next.begin(), next.end(), 0.0);
    for (double& x : next) x /= total;
    const double change = linf_distance(next, v);
    v = std::move(next);
    if (change < tol) {
      std::vector<double> beta(m);
      for (std::size_t i = 0; i < m; ++i) beta[i] = std::log(v[i]);
      return normalize_beta(std::move(beta));
    }
  }
  throw NonConvergenceError("leading-eigenvector iteration did not converge", v, tol);
}

namespace {

// log(1 + e^x) without overflow for large x.
double softplus(double x) { return x > 0.0 ? x + std::log1p(std::exp(-x)) : std::log1p(std::exp(x)); }

}  // namespace

double pairwise_log_likelihood(const PairwiseStats& stats, const std::vector<double>& beta) {
  if (beta.size() != stats.m) throw ContractError("beta length does not match stats");
  double loglik = 0.0;
  for (std::size_t i = 0; i < stats.m; ++i) {
    for (std::size_t j = i + 1; j < stats.m; ++j) {
      const double yij = stats.yat(i, j);
      const double yji = stats.yat(j, i);
      if (yij + yji <= 0.0) continue;
      // log P(i wins) = -log(1 + e^{beta_i - beta_j})
      const double delta = beta[i] - beta[j];
      loglik -= yij * softplus(delta);
      loglik -= yji * softplus(-delta);
    }
  }
  return loglik;
}

PmleResult pmle_mm_estimate(const PairwiseStats& stats, double tol, std::size_t max_iters) {
  const std::size_t m = stats.m;

  std::vector<double> win_totals(m, 0.0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (j != i) win_totals[i] += stats.yat(i, j);
  for (std::size_t i = 0; i < m; ++i)
    if (!(win_totals[i] > 0.0))
      throw DegenerateItemError("item never wins a comparison; estimate diverges", i);

  const ConnectivityReport connectivity = check_ergodicity(stats);
  if (!connectivity.is_ergodic)
    throw EstimationError("comparison graph is not strongly connected",
                          connectivity.components);

  std::vector<double> strength(m, 1.0);
  PmleResult result;
  std::vector<double> beta = normalize_beta(std::vector<double>(m, 0.0));
  double last_change = 0.0;
  for (std::size_t sweep = 1; sweep <= max_iters; ++sweep) {
    std::vector<double> next(m);
    for (std::size_t i = 0; i < m; ++i) {
      double denom = 0.0;
      for (std::size_t j = 0; j < m; ++j) {
        if (j == i) continue;
        const double n = stats.yat(i, j) + stats.yat(j, i);
        if (n > 0.0) denom += n / (strength[i] + strength[j]);
      }
      next[i] = win_totals[i] / denom;
    }
    // Renormalize to geometric mean 1; centering of beta absorbs the scale.
    double log_mean = 0.0;
    for (double s : next) log_mean += std::log(s);
    log_mean /= double(m);
    for (double& s : next) s /= std::exp(log_mean);
    strength = std::move(next);

    std::vector<double> next_beta(m);
    for (std::size_t i = 0; i < m; ++i) next_beta[i] = -std::log(strength[i]);
    next_beta = normalize_beta(std::move(next_beta));

    result.sweeps = sweep;
    result.loglik_trace.push_back(pairwise_log_likelihood(stats, next_beta));
    last_change = linf_distance(next_beta, beta);
    beta = std::move(next_beta);
    if (last_change < tol) {
      result.converged = true;
      break;
    }
  }
  if (!result.converged)
    throw NonConvergenceError("MM sweeps did not converge within " + std::to_string(max_iters) +
                                  " sweeps",
                              beta, last_change);
  result.beta = std::move(beta);
  return result;
}

ThetaFit theta_mle(const std::vector<double>& item_beta, const std::vector<int>& responses) {
  if (item_beta.size() != responses.size())
    throw ContractError("item parameters and responses must align");
  if (responses.empty()) throw ContractError("user has no assigned responses");

  const bool any_positive = std::any_of(responses.begin(), responses.end(),
                                        [](int r) { return r == 1; });
  const bool any_negative = std::any_of(responses.begin(), responses.end(),
                                        [](int r) { return r == 0; });
  if (!any_negative) return {kThetaBound, true, 0};
  if (!any_positive) return {-kThetaBound, true, 0};

  ThetaFit fit;
  double theta = 0.0;
  for (std::size_t iter = 1; iter <= 100; ++iter) {
    double gradient = 0.0;
    double curvature = 0.0;
    for (std::size_t k = 0; k < responses.size(); ++k) {
      const double prob = success_probability(theta, item_beta[k]);
      gradient += double(responses[k]) - prob;
      curvature += prob * (1.0 - prob);
    }
    const double step = gradient / std::max(curvature, 1e-12);
    theta = std::clamp(theta + step, -kThetaBound, kThetaBound);
    fit.iterations = iter;
    if (std::abs(step) < 1e-12) break;
  }
  fit.theta = theta;
  fit.at_bound = std::abs(theta) >= kThetaBound;
  return fit;
}

ThetaFit theta_mle_user(const ResponseMatrix& x, std::size_t user,
                        const std::vector<double>& beta) {
  std::vector<double> item_beta;
  std::vector<int> responses;
  for (std::size_t i = 0; i < x.n_items(); ++i) {
    if (!x.assigned(user, i)) continue;
    item_beta.push_back(beta[i]);
    responses.push_back(x.at(user, i) == Response::positive ? 1 : 0);
  }
  return theta_mle(item_beta, responses);
}

}  // namespace rasch
