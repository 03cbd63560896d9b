#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rasch/response_matrix.hpp"

namespace rasch {

// Co-assignment structure of a response matrix plus the concentration-event
// flags used as sampling diagnostics.  The flags are advisory; they never
// gate estimation.
struct AssignmentDiagnostics {
  std::size_t n_items = 0;
  std::vector<std::int64_t> coassignment;      // m x m row-major, zero diagonal, symmetric
  std::vector<std::int64_t> per_item_counts;   // length m
  std::vector<std::int64_t> per_user_counts;   // length n
  double p_used = 0.0;                         // hint, or the observed fraction
  bool p_estimated = false;
  bool event_a_holds = false;       // all off-diagonal B_ij in [np^2/2, 3np^2/2]
  bool event_a_plus_holds = false;  // event A and per-user counts in [mp/2, 3mp/2]

  std::int64_t coassign(std::size_t i, std::size_t j) const {
    return coassignment[i * n_items + j];
  }
};

AssignmentDiagnostics assignment_stats(const ResponseMatrix& x,
                                       std::optional<double> p_hint = std::nullopt);

}  // namespace rasch
