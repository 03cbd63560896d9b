#pragma once

#include <cstddef>
#include <vector>

#include "rasch/markov_chain.hpp"

namespace rasch {

struct StationaryResult {
  std::vector<double> pi;        // nonnegative, sums to 1
  std::size_t iterations = 0;
  double residual = 0.0;         // ||pi^T P - pi^T||_1 at exit, against the input chain
  bool converged = false;
};

// Power iteration from the uniform distribution, renormalizing each step.
// Converged when the l1 change between successive iterates drops below tol;
// the result then satisfies ||pi^T P - pi^T||_1 <= 10 * tol.
//
// The chain must be irreducible (checked; ContractError otherwise).  An
// irreducible chain with zero diagonal and a periodic support graph is
// iterated through its lazy half-step (P + I) / 2, which has the same
// stationary distribution.  Throws NonConvergenceError with the last iterate
// when max_iters is exhausted.
StationaryResult stationary_distribution(const MarkovChain& chain, double tol = 1e-10,
                                         std::size_t max_iters = 100000);

}  // namespace rasch
