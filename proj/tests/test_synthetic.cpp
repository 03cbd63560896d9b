#include <doctest.h>

#include <cmath>
#include <numeric>
#include <set>
#include <string>

#include "rasch/errors.hpp"
#include "rasch/rng.hpp"
#include "rasch/synthetic.hpp"

using namespace rasch;

TEST_CASE("response sampling thresholds at the success probability") {
  // theta == beta: probability exactly 0.5
  CHECK(sample_rasch_response(0.7, 0.7, 0.49) == 1);
  CHECK(sample_rasch_response(0.7, 0.7, 0.51) == 0);

  // sigma(1), evaluated straight from the logistic formula
  const double sigma1 = 1.0 / (1.0 + std::exp(-1.0));
  CHECK(sigma1 == doctest::Approx(0.7310585786300049).epsilon(1e-12));
  CHECK(sample_rasch_response(1.0, 0.0, sigma1 - 1e-9) == 1);
  CHECK(sample_rasch_response(1.0, 0.0, sigma1 + 1e-9) == 0);

  // saturated regime
  CHECK(sample_rasch_response(40.0, 0.0, 0.9999999) == 1);
  CHECK(sample_rasch_response(-40.0, 0.0, 1e-7) == 0);
}

namespace {

GroundTruth small_truth(std::size_t n, double p) {
  GroundTruth truth;
  truth.beta = {-0.5, 0.0, 0.5};
  truth.p = p;
  truth.theta.resize(n);
  SplitRng rng(99);
  for (std::size_t l = 0; l < n; ++l) truth.theta[l] = rng.child(l).next_in(-1.0, 1.0);
  return truth;
}

}  // namespace

TEST_CASE("p=1 observes everything, p=0 observes nothing") {
  const std::size_t n = 40;
  GroundTruth truth = small_truth(n, 1.0);
  const ResponseMatrix full = generate_synthetic(truth, n, 5);
  CHECK(full.assigned_count() == n * truth.beta.size());

  truth.p = 0.0;
  const ResponseMatrix empty = generate_synthetic(truth, n, 5);
  CHECK(empty.assigned_count() == 0);
}

TEST_CASE("generation is deterministic in the seed") {
  const std::size_t n = 60;
  const GroundTruth truth = small_truth(n, 0.6);
  CHECK(generate_synthetic(truth, n, 42) == generate_synthetic(truth, n, 42));
  CHECK(generate_synthetic(truth, n, 42) != generate_synthetic(truth, n, 43));
}

TEST_CASE("column means converge to the model mean under full observation") {
  const std::size_t n = 50000;
  const GroundTruth truth = small_truth(n, 1.0);
  const ResponseMatrix x = generate_synthetic(truth, n, 2024);
  for (std::size_t i = 0; i < truth.beta.size(); ++i) {
    double expected = 0.0;
    double observed = 0.0;
    for (std::size_t l = 0; l < n; ++l) {
      expected += success_probability(truth.theta[l], truth.beta[i]);
      observed += x.at(l, i) == Response::positive ? 1.0 : 0.0;
    }
    CHECK(std::abs(observed / double(n) - expected / double(n)) < 0.01);
  }
}

TEST_CASE("ground truth validation") {
  GroundTruth truth = small_truth(3, 1.0);
  CHECK_NOTHROW(truth.validate());
  truth.p = 1.5;
  CHECK_THROWS_AS(truth.validate(), ContractError);
  truth.p = 1.0;
  truth.beta = {0.4, 0.4, 0.4};  // not mean zero
  CHECK_THROWS_AS(truth.validate(), ContractError);
}

TEST_CASE("uniform grid design is centered and symmetric") {
  const std::vector<double> beta = uniform_grid_beta(10);
  const double mean = std::accumulate(beta.begin(), beta.end(), 0.0) / 10.0;
  CHECK(std::abs(mean) < 1e-15);
  CHECK(beta.front() == doctest::Approx(-1.0));
  CHECK(beta.back() == doctest::Approx(1.0));
}

TEST_CASE("user split is a seeded partition") {
  const std::size_t n = 50;
  const GroundTruth truth = small_truth(n, 0.8);
  const ResponseMatrix x = generate_synthetic(truth, n, 7);

  const auto [train_a, test_a] = split_users(x, 0.8, 17);
  const auto [train_b, test_b] = split_users(x, 0.8, 17);
  CHECK(train_a == train_b);
  CHECK(test_a == test_b);
  CHECK(train_a.n_users() + test_a.n_users() == n);
  CHECK(train_a.n_users() == 40);

  // Every original row appears exactly once across the two halves.
  auto row_string = [](const ResponseMatrix& mat, std::size_t u) {
    std::string s;
    for (std::size_t i = 0; i < mat.n_items(); ++i)
      s += std::to_string(int(mat.at(u, i))) + ",";
    return s;
  };
  std::multiset<std::string> original, pieces;
  for (std::size_t u = 0; u < n; ++u) original.insert(row_string(x, u));
  for (std::size_t u = 0; u < train_a.n_users(); ++u) pieces.insert(row_string(train_a, u));
  for (std::size_t u = 0; u < test_a.n_users(); ++u) pieces.insert(row_string(test_a, u));
  CHECK(original == pieces);
}
