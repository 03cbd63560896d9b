#include <doctest.h>

#include "oracles.hpp"
#include "rasch/errors.hpp"
#include "rasch/pairwise.hpp"
#include "rasch/rng.hpp"
#include "rasch/synthetic.hpp"

using namespace rasch;

namespace {

// 3 users x 2 items: [1,0], [0,1], [1,missing]
ResponseMatrix two_item_fixture() {
  ResponseMatrix x(3, 2);
  x.set(0, 0, Response::positive);
  x.set(0, 1, Response::negative);
  x.set(1, 0, Response::negative);
  x.set(1, 1, Response::positive);
  x.set(2, 0, Response::positive);
  return x;
}

ResponseMatrix random_matrix(std::uint64_t seed, std::size_t n, std::size_t m,
                             double missing_rate) {
  ResponseMatrix x(n, m);
  SplitRng rng(seed);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t i = 0; i < m; ++i) {
      if (rng.next_unit() < missing_rate) continue;
      x.set(u, i, rng.next_unit() < 0.5 ? Response::negative : Response::positive);
    }
  }
  return x;
}

}  // namespace

TEST_CASE("differential counts on the two-item fixture") {
  const ResponseMatrix x = two_item_fixture();

  const PairwiseStats plain = pairwise_diff_counts(x, 0.0);
  CHECK(plain.yat(0, 1) == 1.0);
  CHECK(plain.yat(1, 0) == 1.0);
  CHECK(plain.yat(0, 0) == 0.0);
  CHECK(plain.bat(0, 1) == 2);

  const PairwiseStats regularized = pairwise_diff_counts(x, 1.0);
  CHECK(regularized.yat(0, 1) == 2.0);
  CHECK(regularized.yat(1, 0) == 2.0);
}

TEST_CASE("all-positive answers yield no differential measurements") {
  ResponseMatrix x(4, 3);
  for (std::size_t u = 0; u < 4; ++u)
    for (std::size_t i = 0; i < 3; ++i) x.set(u, i, Response::positive);
  const PairwiseStats stats = pairwise_diff_counts(x, 0.0);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(stats.yat(i, j) == 0.0);
  CHECK(stats.bat(0, 2) == 4);
}

TEST_CASE("counting kernel matches the brute-force triple loop") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const ResponseMatrix x = random_matrix(seed, 8, 5, 0.35);
    const PairwiseCounts counts = count_pairwise(x);
    const test::BruteForceCounts oracle = test::brute_force_counts(x);
    CHECK(counts.wins == oracle.wins);
    CHECK(counts.coassignment == oracle.coassignment);
  }
}

TEST_CASE("regularization places mass exactly where pairs co-occur") {
  for (std::uint64_t seed : {11u, 12u, 13u}) {
    const ResponseMatrix x = random_matrix(seed, 12, 6, 0.6);
    const PairwiseStats stats = pairwise_diff_counts(x, 1.0);
    for (std::size_t i = 0; i < stats.m; ++i) {
      CHECK(stats.yat(i, i) == 0.0);
      for (std::size_t j = 0; j < stats.m; ++j) {
        if (i == j) continue;
        if (stats.bat(i, j) > 0)
          CHECK(stats.yat(i, j) > 0.0);
        else
          CHECK(stats.yat(i, j) == 0.0);
      }
    }

    const PairwiseStats plain = pairwise_diff_counts(x, 0.0);
    for (std::size_t i = 0; i < plain.m; ++i) {
      for (std::size_t j = i + 1; j < plain.m; ++j) {
        CHECK(plain.yat(i, j) == double(std::int64_t(plain.yat(i, j))));
        CHECK(plain.yat(i, j) + plain.yat(j, i) <= double(plain.bat(i, j)));
      }
    }
  }
}

TEST_CASE("negative regularization is rejected") {
  CHECK_THROWS_AS(pairwise_diff_counts(two_item_fixture(), -0.5), ContractError);
}
