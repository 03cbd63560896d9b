#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <vector>

#include "rasch/response_matrix.hpp"

namespace rasch {

// Mann-Whitney AUC: probability that a random positive outranks a random
// negative, ties counting one half.  Throws UndefinedMetricError unless both
// classes are present.
double auc(const std::vector<double>& scores, const std::vector<int>& labels);

// l2 norm of the difference after mean-centering both vectors.
double l2_error(const std::vector<double>& beta, const std::vector<double>& beta_star);

// ||pi - pi_star||_inf / ||pi_star||_inf.
double linf_rel_error(const std::vector<double>& pi, const std::vector<double>& pi_star);

// Overlap |topK(beta) & topK(reference)| / K for each K.  topK(beta) takes
// the K largest entries (ties broken by item index); reference_rank lists all
// item indices from top to bottom.
std::map<std::size_t, double> topk_accuracy(const std::vector<double>& beta,
                                            const std::vector<std::size_t>& reference_rank,
                                            const std::vector<std::size_t>& ks);

struct HoldoutLogLik {
  double avg_loglik = 0.0;  // per scored response
  std::size_t users_scored = 0;
  std::size_t users_skipped = 0;  // fewer than 2 assigned responses
  std::size_t responses_scored = 0;
};

// Held-out log-likelihood.  Each test user's assigned responses are split in
// half deterministically (alternating by item index): the first half fits the
// user ability via theta_mle, the second half is scored and never used for
// fitting.  Throws UndefinedMetricError when no user is evaluable.
HoldoutLogLik holdout_log_likelihood(const ResponseMatrix& test,
                                     const std::vector<double>& beta);

struct MetricReport {
  double auc = 0.0;
  double avg_loglik = 0.0;
  std::map<std::size_t, double> topk;
  std::size_t users_scored = 0;
  std::size_t users_skipped = 0;
};

struct HoldoutOptions {
  std::vector<std::size_t> ks;        // empty: skip the top-K metric
  std::int64_t topk_min_count = 0;    // drop items seen fewer times in train
  double topk_max_mean = 1.0;         // drop items with a higher train mean
};

// Full evaluation protocol: AUC and log-likelihood on the held-out halves,
// top-K accuracy of beta against the reference ranking derived from train
// column means (lowest mean first, i.e. hardest first).
MetricReport evaluate_holdout(const ResponseMatrix& train, const ResponseMatrix& test,
                              const std::vector<double>& beta, const HoldoutOptions& options);

void save_metric_report_csv(const MetricReport& report, std::ostream& out);
void save_metric_report_json(const MetricReport& report, std::ostream& out);

}  // namespace rasch
