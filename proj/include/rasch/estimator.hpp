#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rasch/markov_chain.hpp"
#include "rasch/pairwise.hpp"
#include "rasch/stationary.hpp"

namespace rasch {

enum class EstimateMethod {
  original,
  accelerated,
};

EstimateMethod parse_estimate_method(const std::string& name);
std::string estimate_method_name(EstimateMethod method);

struct EstimatorConfig {
  double nu = 1.0;
  EstimateMethod method = EstimateMethod::accelerated;
  double tol = 1e-10;
  std::size_t max_iters = 100000;
  std::optional<double> d_override;  // original method only
};

// Mean-zero item parameter estimate with solver diagnostics.  Larger beta
// means a harder item: the positive-response probability decreases in beta.
struct ItemEstimate {
  std::vector<double> beta;
  std::vector<double> pi;
  std::vector<double> d;
  EstimateMethod method = EstimateMethod::accelerated;
  StationaryResult stationary;
  ConnectivityReport connectivity;
};

// log(pi_i / d_i), entrywise and un-normalized.  Throws DegenerateItemError
// when some pi_i is zero.
std::vector<double> recover_beta(const std::vector<double>& pi, const std::vector<double>& d);

// Subtracts the mean.
std::vector<double> normalize_beta(std::vector<double> raw);

// softmax(beta); the stationary distribution the idealized chain would have.
std::vector<double> softmax(const std::vector<double>& values);

// Full pipeline: differential counts -> chain -> stationary distribution ->
// normalized item parameters.  Throws EstimationError (with the component
// listing) when the regularized chain is not ergodic.
ItemEstimate spectral_estimate(const ResponseMatrix& x, const EstimatorConfig& config = {});

// Same pipeline starting from precomputed counts.
ItemEstimate estimate_from_stats(const PairwiseStats& stats, const EstimatorConfig& config = {});

// CSV with columns item_id, beta, pi, d.
void save_estimate_csv(const ItemEstimate& estimate, const std::vector<std::string>& item_ids,
                       std::ostream& out);

}  // namespace rasch
