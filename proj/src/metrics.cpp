#include "rasch/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>

#include <nlohmann/json.hpp>

#include "rasch/baselines.hpp"
#include "rasch/errors.hpp"
#include "rasch/synthetic.hpp"
#include "rasch/text.hpp"

namespace rasch {
namespace {

std::vector<double> centered(std::vector<double> v) {
  const double mean = std::accumulate(v.begin(), v.end(), 0.0) / double(v.size());
  for (double& x : v) x -= mean;
  return v;
}

// Alternating fit/score split of one user's assigned items, by item index.
struct UserSplit {
  std::vector<std::size_t> fit_items;
  std::vector<std::size_t> score_items;
};

UserSplit split_user_items(const ResponseMatrix& x, std::size_t user) {
  UserSplit split;
  std::size_t k = 0;
  for (std::size_t i = 0; i < x.n_items(); ++i) {
    if (!x.assigned(user, i)) continue;
    if (k % 2 == 0)
      split.fit_items.push_back(i);
    else
      split.score_items.push_back(i);
    ++k;
  }
  return split;
}

ThetaFit fit_theta_on(const ResponseMatrix& x, std::size_t user,
                      const std::vector<std::size_t>& items, const std::vector<double>& beta) {
  std::vector<double> item_beta;
  std::vector<int> responses;
  for (std::size_t i : items) {
    item_beta.push_back(beta[i]);
    responses.push_back(x.at(user, i) == Response::positive ? 1 : 0);
  }
  return theta_mle(item_beta, responses);
}

std::vector<std::size_t> reference_ranking(const ResponseMatrix& train,
                                           const HoldoutOptions& options) {
  const std::size_t m = train.n_items();
  std::vector<std::int64_t> counts(m, 0);
  std::vector<double> means(m, 0.0);
  for (std::size_t u = 0; u < train.n_users(); ++u) {
    for (std::size_t i = 0; i < m; ++i) {
      if (!train.assigned(u, i)) continue;
      ++counts[i];
      means[i] += train.at(u, i) == Response::positive ? 1.0 : 0.0;
    }
  }
  for (std::size_t i = 0; i < m; ++i)
    if (counts[i] > 0) means[i] /= double(counts[i]);

  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < m; ++i) {
    if (counts[i] < options.topk_min_count) continue;
    if (means[i] > options.topk_max_mean) continue;
    kept.push_back(i);
  }
  // Hardest first: lowest average positive rate.
  std::stable_sort(kept.begin(), kept.end(),
                   [&](std::size_t a, std::size_t b) { return means[a] < means[b]; });
  return kept;
}

}  // namespace

double auc(const std::vector<double>& scores, const std::vector<int>& labels) {
  if (scores.size() != labels.size()) throw ContractError("scores and labels must align");
  const std::size_t n = scores.size();
  std::size_t positives = 0;
  for (int label : labels) {
    if (label != 0 && label != 1) throw ContractError("labels must be 0 or 1");
    positives += std::size_t(label);
  }
  const std::size_t negatives = n - positives;
  if (positives == 0 || negatives == 0)
    throw UndefinedMetricError("AUC needs both classes present");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });

  // Rank sum of positives with average ranks over ties.
  double positive_rank_sum = 0.0;
  std::size_t start = 0;
  while (start < n) {
    std::size_t end = start;
    while (end < n && scores[order[end]] == scores[order[start]]) ++end;
    const double avg_rank = 0.5 * (double(start + 1) + double(end));  // 1-based
    for (std::size_t k = start; k < end; ++k)
      if (labels[order[k]] == 1) positive_rank_sum += avg_rank;
    start = end;
  }
  const double u_statistic =
      positive_rank_sum - double(positives) * double(positives + 1) / 2.0;
  return u_statistic / (double(positives) * double(negatives));
}

double l2_error(const std::vector<double>& beta, const std::vector<double>& beta_star) {
  if (beta.size() != beta_star.size()) throw ContractError("vectors must have equal length");
  const std::vector<double> a = centered(beta);
  const std::vector<double> b = centered(beta_star);
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(acc);
}

double linf_rel_error(const std::vector<double>& pi, const std::vector<double>& pi_star) {
  if (pi.size() != pi_star.size()) throw ContractError("vectors must have equal length");
  double diff = 0.0;
  double scale = 0.0;
  for (std::size_t i = 0; i < pi.size(); ++i) {
    diff = std::max(diff, std::abs(pi[i] - pi_star[i]));
    scale = std::max(scale, std::abs(pi_star[i]));
  }
  if (scale == 0.0) throw ContractError("reference vector must not be all zero");
  return diff / scale;
}

std::map<std::size_t, double> topk_accuracy(const std::vector<double>& beta,
                                            const std::vector<std::size_t>& reference_rank,
                                            const std::vector<std::size_t>& ks) {
  const std::size_t m = reference_rank.size();
  std::vector<std::size_t> order;
  for (std::size_t i : reference_rank) order.push_back(i);  // items eligible for ranking
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (beta[a] != beta[b]) return beta[a] > beta[b];
    return a < b;
  });

  std::map<std::size_t, double> accuracy;
  for (std::size_t k : ks) {
    if (k == 0 || k > m)
      throw ContractError("K = " + std::to_string(k) + " is outside 1.." + std::to_string(m));
    std::vector<std::size_t> ours(order.begin(), order.begin() + k);
    std::vector<std::size_t> reference(reference_rank.begin(), reference_rank.begin() + k);
    std::sort(ours.begin(), ours.end());
    std::sort(reference.begin(), reference.end());
    std::vector<std::size_t> overlap;
    std::set_intersection(ours.begin(), ours.end(), reference.begin(), reference.end(),
                          std::back_inserter(overlap));
    accuracy[k] = double(overlap.size()) / double(k);
  }
  return accuracy;
}

HoldoutLogLik holdout_log_likelihood(const ResponseMatrix& test,
                                     const std::vector<double>& beta) {
  if (beta.size() != test.n_items()) throw ContractError("beta length does not match items");
  HoldoutLogLik out;
  double total = 0.0;
  for (std::size_t u = 0; u < test.n_users(); ++u) {
    const UserSplit split = split_user_items(test, u);
    if (split.fit_items.empty() || split.score_items.empty()) {
      ++out.users_skipped;
      continue;
    }
    const double theta = fit_theta_on(test, u, split.fit_items, beta).theta;
    for (std::size_t i : split.score_items) {
      const double prob = success_probability(theta, beta[i]);
      const bool positive = test.at(u, i) == Response::positive;
      total += std::log(positive ? prob : 1.0 - prob);
      ++out.responses_scored;
    }
    ++out.users_scored;
  }
  if (out.users_scored == 0)
    throw UndefinedMetricError("no test user has the two responses needed to fit and score");
  out.avg_loglik = total / double(out.responses_scored);
  return out;
}

MetricReport evaluate_holdout(const ResponseMatrix& train, const ResponseMatrix& test,
                              const std::vector<double>& beta, const HoldoutOptions& options) {
  if (train.item_ids() != test.item_ids())
    throw ContractError("train and test matrices must share item columns");

  MetricReport report;
  const HoldoutLogLik loglik = holdout_log_likelihood(test, beta);
  report.avg_loglik = loglik.avg_loglik;
  report.users_scored = loglik.users_scored;
  report.users_skipped = loglik.users_skipped;

  std::vector<double> scores;
  std::vector<int> labels;
  for (std::size_t u = 0; u < test.n_users(); ++u) {
    const UserSplit split = split_user_items(test, u);
    if (split.fit_items.empty() || split.score_items.empty()) continue;
    const ThetaFit fit = fit_theta_on(test, u, split.fit_items, beta);
    for (std::size_t i : split.score_items) {
      scores.push_back(success_probability(fit.theta, beta[i]));
      labels.push_back(test.at(u, i) == Response::positive ? 1 : 0);
    }
  }
  report.auc = auc(scores, labels);

  if (!options.ks.empty()) {
    const std::vector<std::size_t> reference = reference_ranking(train, options);
    report.topk = topk_accuracy(beta, reference, options.ks);
  }
  return report;
}

void save_metric_report_csv(const MetricReport& report, std::ostream& out) {
  out << "metric,value\n";
  out << "auc," << format_double(report.auc) << '\n';
  out << "avg_loglik," << format_double(report.avg_loglik) << '\n';
  out << "users_scored," << report.users_scored << '\n';
  out << "users_skipped," << report.users_skipped << '\n';
  for (const auto& [k, acc] : report.topk)
    out << "top" << k << "_accuracy," << format_double(acc) << '\n';
}

void save_metric_report_json(const MetricReport& report, std::ostream& out) {
  nlohmann::json j;
  j["auc"] = report.auc;
  j["avg_loglik"] = report.avg_loglik;
  j["users_scored"] = report.users_scored;
  j["users_skipped"] = report.users_skipped;
  j["topk"] = nlohmann::json::object();
  for (const auto& [k, acc] : report.topk) j["topk"][std::to_string(k)] = acc;
  out << j.dump(2) << '\n';
}

}  // namespace rasch
