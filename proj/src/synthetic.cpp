#include "rasch/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>

#include "rasch/errors.hpp"
#include "rasch/rng.hpp"

namespace rasch {
namespace {

void fill_user_row(ResponseMatrix& x, const GroundTruth& truth, const SplitRng& root,
                   std::size_t user) {
  for (std::size_t i = 0; i < x.n_items(); ++i) {
    SplitRng cell = root.child(user, i);
    if (cell.next_unit() >= truth.p) continue;  // not assigned
    const int value = sample_rasch_response(truth.theta[user], truth.beta[i], cell.next_unit());
    x.set(user, i, value == 1 ? Response::positive : Response::negative);
  }
}

}  // namespace

void GroundTruth::validate() const {
  if (theta.empty()) throw ContractError("ground truth needs at least one user parameter");
  if (beta.size() < 2) throw ContractError("ground truth needs at least two item parameters");
  // p = 0 is allowed as a degenerate design (no cell ever assigned).
  if (p < 0.0 || p > 1.0) throw ContractError("sampling probability must be in [0, 1]");
  const double mean = std::accumulate(beta.begin(), beta.end(), 0.0) / double(beta.size());
  if (std::abs(mean) > 1e-8)
    throw ContractError("item parameters must be mean zero (got mean " + std::to_string(mean) +
                        ")");
  for (double t : theta)
    if (!std::isfinite(t)) throw ContractError("user parameters must be finite");
  for (double b : beta)
    if (!std::isfinite(b)) throw ContractError("item parameters must be finite");
}

double success_probability(double theta, double beta) {
  return 1.0 / (1.0 + std::exp(-(theta - beta)));
}

int sample_rasch_response(double theta, double beta, double unit_uniform) {
  return unit_uniform < success_probability(theta, beta) ? 1 : 0;
}

namespace detail {

ResponseMatrix generate_synthetic_serial(const GroundTruth& truth, std::size_t n_users,
                                         std::uint64_t seed) {
  ResponseMatrix x(n_users, truth.beta.size());
  const SplitRng root(seed);
  for (std::size_t u = 0; u < n_users; ++u) fill_user_row(x, truth, root, u);
  return x;
}

ResponseMatrix generate_synthetic_parallel(const GroundTruth& truth, std::size_t n_users,
                                           std::uint64_t seed) {
  ResponseMatrix x(n_users, truth.beta.size());
  const SplitRng root(seed);
#pragma omp parallel for schedule(static)
  for (std::int64_t u = 0; u < std::int64_t(n_users); ++u)
    fill_user_row(x, truth, root, std::size_t(u));
  return x;
}

}  // namespace detail

ResponseMatrix generate_synthetic(const GroundTruth& truth, std::size_t n_users,
                                  std::uint64_t seed) {
  truth.validate();
  if (n_users < 1) throw ContractError("need at least one user");
  if (truth.theta.size() != n_users)
    throw ContractError("ground truth has " + std::to_string(truth.theta.size()) +
                        " user parameters but " + std::to_string(n_users) +
                        " users were requested");
#ifdef _OPENMP
  if (n_users * truth.beta.size() >= 1u << 14)
    return detail::generate_synthetic_parallel(truth, n_users, seed);
#endif
  return detail::generate_synthetic_serial(truth, n_users, seed);
}

std::vector<double> uniform_grid_beta(std::size_t n_items) {
  if (n_items < 2) throw ContractError("need at least two items");
  std::vector<double> beta(n_items);
  for (std::size_t i = 0; i < n_items; ++i)
    beta[i] = -1.0 + 2.0 * double(i) / double(n_items - 1);
  const double mean = std::accumulate(beta.begin(), beta.end(), 0.0) / double(n_items);
  for (double& b : beta) b -= mean;
  return beta;
}

std::pair<ResponseMatrix, ResponseMatrix> split_users(const ResponseMatrix& x,
                                                      double train_fraction,
                                                      std::uint64_t seed) {
  if (!(train_fraction > 0.0) || !(train_fraction < 1.0))
    throw ContractError("train fraction must be in (0, 1)");
  if (x.n_users() < 2) throw ContractError("need at least two users to split");

  std::vector<std::size_t> order(x.n_users());
  std::iota(order.begin(), order.end(), 0);
  SplitRng rng = SplitRng(seed).child(0x73706c6974ULL);  // "split"
  for (std::size_t i = order.size(); i > 1; --i)
    std::swap(order[i - 1], order[rng.next_u64() % i]);

  std::size_t n_train = std::size_t(std::llround(train_fraction * double(x.n_users())));
  n_train = std::clamp<std::size_t>(n_train, 1, x.n_users() - 1);

  ResponseMatrix train(n_train, x.n_items(), x.item_ids());
  ResponseMatrix test(x.n_users() - n_train, x.n_items(), x.item_ids());
  for (std::size_t r = 0; r < order.size(); ++r) {
    ResponseMatrix& dst = r < n_train ? train : test;
    const std::size_t row = r < n_train ? r : r - n_train;
    for (std::size_t i = 0; i < x.n_items(); ++i) dst.set(row, i, x.at(order[r], i));
  }
  return {std::move(train), std::move(test)};
}

}  // namespace rasch
