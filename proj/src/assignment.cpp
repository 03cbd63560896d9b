#include "rasch/assignment.hpp"

#include "rasch/pairwise.hpp"

namespace rasch {

AssignmentDiagnostics assignment_stats(const ResponseMatrix& x, std::optional<double> p_hint) {
  const std::size_t n = x.n_users();
  const std::size_t m = x.n_items();

  AssignmentDiagnostics diag;
  diag.n_items = m;
  diag.coassignment = count_pairwise(x).coassignment;
  diag.per_item_counts.assign(m, 0);
  diag.per_user_counts.assign(n, 0);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t i = 0; i < m; ++i) {
      if (!x.assigned(u, i)) continue;
      ++diag.per_item_counts[i];
      ++diag.per_user_counts[u];
    }
  }

  if (p_hint.has_value()) {
    diag.p_used = *p_hint;
  } else {
    diag.p_used = double(x.assigned_count()) / (double(n) * double(m));
    diag.p_estimated = true;
  }

  const double p = diag.p_used;
  const double pair_lo = double(n) * p * p / 2.0;
  const double pair_hi = 3.0 * double(n) * p * p / 2.0;
  diag.event_a_holds = true;
  for (std::size_t i = 0; i < m && diag.event_a_holds; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const double b = double(diag.coassign(i, j));
      if (b < pair_lo || b > pair_hi) {
        diag.event_a_holds = false;
        break;
      }
    }
  }

  const double user_lo = double(m) * p / 2.0;
  const double user_hi = 3.0 * double(m) * p / 2.0;
  diag.event_a_plus_holds = diag.event_a_holds;
  for (std::size_t u = 0; u < n && diag.event_a_plus_holds; ++u) {
    const double c = double(diag.per_user_counts[u]);
    if (c < user_lo || c > user_hi) diag.event_a_plus_holds = false;
  }

  return diag;
}

}  // namespace rasch
