#include <doctest.h>

#include "oracles.hpp"
#include "rasch/assignment.hpp"
#include "rasch/rng.hpp"

using namespace rasch;

TEST_CASE("fully observed matrix counts every pair for every user") {
  ResponseMatrix x(4, 3);
  for (std::size_t u = 0; u < 4; ++u)
    for (std::size_t i = 0; i < 3; ++i)
      x.set(u, i, (u + i) % 2 ? Response::positive : Response::negative);

  const AssignmentDiagnostics diag = assignment_stats(x);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(diag.coassign(i, j) == (i == j ? 0 : 4));
  for (std::int64_t c : diag.per_user_counts) CHECK(c == 3);
  for (std::int64_t c : diag.per_item_counts) CHECK(c == 4);
  CHECK(diag.p_estimated);
  CHECK(diag.p_used == doctest::Approx(1.0));
}

TEST_CASE("items never co-assigned have zero co-assignment count") {
  ResponseMatrix x(2, 3);
  x.set(0, 0, Response::positive);
  x.set(0, 2, Response::negative);
  x.set(1, 1, Response::positive);
  x.set(1, 2, Response::positive);
  const AssignmentDiagnostics diag = assignment_stats(x);
  CHECK(diag.coassign(0, 1) == 0);
  CHECK(diag.coassign(0, 2) == 1);
  CHECK(diag.coassign(1, 2) == 1);
}

TEST_CASE("concentration event holds for the fully observed case") {
  // n = 100, p_hint = 1: every B_ij = 100, inside [50, 150].
  ResponseMatrix x(100, 3);
  for (std::size_t u = 0; u < 100; ++u)
    for (std::size_t i = 0; i < 3; ++i) x.set(u, i, Response::positive);
  const AssignmentDiagnostics diag = assignment_stats(x, 1.0);
  CHECK_FALSE(diag.p_estimated);
  CHECK(diag.event_a_holds);
  CHECK(diag.event_a_plus_holds);
}

TEST_CASE("event fails when a pair is under-observed") {
  ResponseMatrix x(100, 3);
  for (std::size_t u = 0; u < 100; ++u) {
    x.set(u, 0, Response::positive);
    x.set(u, 1, Response::negative);
    if (u < 10) x.set(u, 2, Response::positive);  // B_02 = 10 < 50
  }
  const AssignmentDiagnostics diag = assignment_stats(x, 1.0);
  CHECK_FALSE(diag.event_a_holds);
  CHECK_FALSE(diag.event_a_plus_holds);
}

TEST_CASE("co-assignment matches the brute-force double loop") {
  for (std::uint64_t seed : {3u, 4u, 5u}) {
    ResponseMatrix x(10, 6);
    SplitRng rng(seed);
    for (std::size_t u = 0; u < 10; ++u)
      for (std::size_t i = 0; i < 6; ++i)
        if (rng.next_unit() < 0.7)
          x.set(u, i, rng.next_unit() < 0.5 ? Response::negative : Response::positive);
    const AssignmentDiagnostics diag = assignment_stats(x);
    const test::BruteForceCounts oracle = test::brute_force_counts(x);
    CHECK(diag.coassignment == oracle.coassignment);
  }
}
