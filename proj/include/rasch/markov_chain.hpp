#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "rasch/matrix.hpp"
#include "rasch/pairwise.hpp"
#include "rasch/synthetic.hpp"

namespace rasch {

enum class ChainKind {
  original,     // common normalizer d
  accelerated,  // per-item normalizers d_i, self-loops removed
  idealized,    // expected counts under known parameters; test oracle
};

// Row-stochastic item-item transition matrix together with the normalizers
// that produced it (all equal for the original construction).
struct MarkovChain {
  ChainKind kind = ChainKind::original;
  Matrix p;
  std::vector<double> d;

  std::size_t size() const noexcept { return p.rows; }
};

// P_ij = Y_ij / d off the diagonal, diagonal filled to 1.  The default d is
// the largest outgoing mass max_i sum_k Y_ik, the smallest common normalizer
// with a nonnegative diagonal; pass d_override to use a fixed value (it must
// be at least that maximum).
MarkovChain build_chain_original(const PairwiseStats& stats,
                                 std::optional<double> d_override = std::nullopt);

// Per-item normalizers d_i = max(sum_k Y_ik, 1), so every item with outgoing
// mass has a zero self-loop.
MarkovChain build_chain_accelerated(const PairwiseStats& stats);

// Expected-count chain under known parameters, over the assignment pattern of
// x.  Used as a test oracle; reversible with stationary distribution
// softmax(beta).
MarkovChain build_idealized_chain(const GroundTruth& truth, const ResponseMatrix& x, double d);

// Connectivity of the directed graph with an edge i -> j wherever Y_ij > 0.
struct ConnectivityReport {
  bool is_ergodic = false;                            // one component covering all items
  std::vector<std::vector<std::size_t>> components;   // strongly connected, partition of [m]
  std::vector<std::size_t> isolated_items;            // zero incoming mass
  // gcd of cycle lengths when the graph is strongly connected (1 otherwise
  // unreachable states dominate).  A value of 2 marks the pure-bipartite
  // exception: irreducible but not aperiodic without self-loops; the
  // stationary solver handles it by switching to the lazy chain.
  int period = 1;
};

ConnectivityReport check_ergodicity(const PairwiseStats& stats);

// 1 minus the second-largest singular value of D^{1/2} (P - 1 pi^T) D^{-1/2}
// with D = diag(pi).  Requires the chain to be reversible with respect to pi
// (checked to 1e-8) and m <= 2000; diagnostic only.
double spectral_gap(const MarkovChain& chain, const std::vector<double>& pi);

// Debug dump: comment header with kind and normalizers, then P row-major.
// Not a stability-guaranteed format.
void save_chain_csv(const MarkovChain& chain, std::ostream& out);

}  // namespace rasch
