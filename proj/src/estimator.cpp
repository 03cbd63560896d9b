#include "rasch/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>

#include "rasch/errors.hpp"
#include "rasch/text.hpp"

namespace rasch {

EstimateMethod parse_estimate_method(const std::string& name) {
  if (name == "original") return EstimateMethod::original;
  if (name == "accelerated") return EstimateMethod::accelerated;
  throw ContractError("unknown method '" + name + "'; expected original or accelerated");
}

std::string estimate_method_name(EstimateMethod method) {
  return method == EstimateMethod::original ? "original" : "accelerated";
}

std::vector<double> recover_beta(const std::vector<double>& pi, const std::vector<double>& d) {
  if (pi.size() != d.size()) throw ContractError("pi and d must have the same length");
  std::vector<double> raw(pi.size());
  for (std::size_t i = 0; i < pi.size(); ++i) {
    if (!(d[i] > 0.0)) throw ContractError("normalizers must be positive");
    if (!(pi[i] > 0.0))
      throw DegenerateItemError("stationary mass is zero; parameter is unidentifiable", i);
    raw[i] = std::log(pi[i] / d[i]);
  }
  return raw;
}

std::vector<double> normalize_beta(std::vector<double> raw) {
  for (double v : raw)
    if (!std::isfinite(v)) throw ContractError("item parameters must be finite");
  const double mean = std::accumulate(raw.begin(), raw.end(), 0.0) / double(raw.size());
  for (double& v : raw) v -= mean;
  return raw;
}

std::vector<double> softmax(const std::vector<double>& values) {
  const double top = *std::max_element(values.begin(), values.end());
  std::vector<double> out(values.size());
  double total = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    out[i] = std::exp(values[i] - top);
    total += out[i];
  }
  for (double& v : out) v /= total;
  return out;
}

ItemEstimate estimate_from_stats(const PairwiseStats& stats, const EstimatorConfig& config) {
  ItemEstimate estimate;
  estimate.method = config.method;
  estimate.connectivity = check_ergodicity(stats);
  if (!estimate.connectivity.is_ergodic)
    throw EstimationError("markov chain is not ergodic: " +
                              std::to_string(estimate.connectivity.components.size()) +
                              " strongly connected components",
                          estimate.connectivity.components);

  const MarkovChain chain = config.method == EstimateMethod::original
                                ? build_chain_original(stats, config.d_override)
                                : build_chain_accelerated(stats);
  estimate.stationary = stationary_distribution(chain, config.tol, config.max_iters);
  estimate.pi = estimate.stationary.pi;
  estimate.d = chain.d;
  estimate.beta = normalize_beta(recover_beta(estimate.pi, estimate.d));
  return estimate;
}

ItemEstimate spectral_estimate(const ResponseMatrix& x, const EstimatorConfig& config) {
  return estimate_from_stats(pairwise_diff_counts(x, config.nu), config);
}

void save_estimate_csv(const ItemEstimate& estimate, const std::vector<std::string>& item_ids,
                       std::ostream& out) {
  if (item_ids.size() != estimate.beta.size())
    throw ContractError("item id count does not match estimate length");
  out << "item_id,beta,pi,d\n";
  for (std::size_t i = 0; i < estimate.beta.size(); ++i) {
    out << item_ids[i] << ',' << format_double(estimate.beta[i]) << ','
        << format_double(estimate.pi[i]) << ',' << format_double(estimate.d[i]) << '\n';
  }
}

}  // namespace rasch
