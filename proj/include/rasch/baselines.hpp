#pragma once

#include <cstddef>
#include <vector>

#include "rasch/matrix.hpp"
#include "rasch/pairwise.hpp"
#include "rasch/response_matrix.hpp"

namespace rasch {

// Empirical conditional win rates between item pairs and the derived positive
// reciprocal matrix.  f[i, j] is the rate at which a user answers i
// positively and j negatively among users answering exactly one of the two
// positively; d[i, j] = f[j, i] / f[i, j], so d[i, j] * d[j, i] = 1.
struct ConditionalMatrix {
  std::size_t m = 0;
  Matrix f;
  Matrix counts;  // denominators N_ij = Y_ij + Y_ji
  Matrix d;
};

// Requires every off-diagonal pair to carry at least one (possibly
// regularized) differential measurement; throws IncompleteMatrixError naming
// the first empty pair otherwise.  These matrix baselines need a complete
// comparison matrix and fail loudly instead of imputing.
ConditionalMatrix conditional_ratio_matrix(const PairwiseStats& stats);

// Infinite-data limit of the conditional matrix under item parameters beta:
// f_ij = e^{beta_j} / (e^{beta_i} + e^{beta_j}).
ConditionalMatrix exact_conditional_matrix(const std::vector<double>& beta);

// Row means of the entrywise log of the reciprocal matrix, mean-centered.
// Exact on the infinite-data matrix, where log d[i, j] = beta_i - beta_j.
std::vector<double> rowsum_estimate(const ConditionalMatrix& cm);

// Mean-centered log of the Perron vector v of the reciprocal matrix
// (D v = m v holds exactly in the infinite-data limit with v = e^{beta}).
std::vector<double> eigenvector_estimate(const ConditionalMatrix& cm, double tol = 1e-13,
                                         std::size_t max_iters = 100000);

struct PmleResult {
  std::vector<double> beta;          // mean zero
  std::size_t sweeps = 0;
  bool converged = false;
  std::vector<double> loglik_trace;  // pairwise conditional log-likelihood after each sweep
};

// Pairwise conditional maximum likelihood.  Conditioned on exactly one
// positive answer in a pair, P(i positive, j negative) =
// e^{-beta_i} / (e^{-beta_i} + e^{-beta_j}): a Bradley-Terry model with
// strengths s_i = e^{-beta_i} and win counts Y_ij, fitted by
// minorization-maximization sweeps s_i <- W_i / sum_j N_ij / (s_i + s_j).
PmleResult pmle_mm_estimate(const PairwiseStats& stats, double tol = 1e-8,
                            std::size_t max_iters = 10000);

// The objective the MM sweeps climb, evaluated at a given beta.
double pairwise_log_likelihood(const PairwiseStats& stats, const std::vector<double>& beta);

inline constexpr double kThetaBound = 10.0;

struct ThetaFit {
  double theta = 0.0;
  bool at_bound = false;  // clamped at +/-10, where the likelihood is flat
  std::size_t iterations = 0;
};

// One-dimensional Newton fit of a user ability given item parameters.
// responses and item_beta run over the user's assigned items only.
ThetaFit theta_mle(const std::vector<double>& item_beta, const std::vector<int>& responses);

// Convenience overload over a full matrix row.
ThetaFit theta_mle_user(const ResponseMatrix& x, std::size_t user,
                        const std::vector<double>& beta);

}  // namespace rasch
