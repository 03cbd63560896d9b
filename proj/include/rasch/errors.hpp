#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rasch {

// Precondition or API-contract violation by the caller.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Malformed input file; carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A common normalizer too small to keep the transition matrix nonnegative.
class InvalidNormalizerError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Iterative solver ran out of iterations; carries the last iterate.
class NonConvergenceError : public std::runtime_error {
 public:
  NonConvergenceError(const std::string& message, std::vector<double> last_iterate,
                      double residual)
      : std::runtime_error(message),
        last_iterate_(std::move(last_iterate)),
        residual_(residual) {}

  const std::vector<double>& last_iterate() const noexcept { return last_iterate_; }
  double residual() const noexcept { return residual_; }

 private:
  std::vector<double> last_iterate_;
  double residual_;
};

// An item whose parameter is not identifiable from the data (estimate diverges).
class DegenerateItemError : public std::runtime_error {
 public:
  DegenerateItemError(const std::string& message, std::size_t item)
      : std::runtime_error(message + " (item index " + std::to_string(item) + ")"),
        item_(item) {}

  std::size_t item() const noexcept { return item_; }

 private:
  std::size_t item_;
};

// A pairwise matrix method was asked to run on a pair with no data.
class IncompleteMatrixError : public std::runtime_error {
 public:
  IncompleteMatrixError(const std::string& message, std::size_t item_a, std::size_t item_b)
      : std::runtime_error(message + " (items " + std::to_string(item_a) + ", " +
                           std::to_string(item_b) + ")"),
        item_a_(item_a),
        item_b_(item_b) {}

  std::size_t item_a() const noexcept { return item_a_; }
  std::size_t item_b() const noexcept { return item_b_; }

 private:
  std::size_t item_a_;
  std::size_t item_b_;
};

// A metric whose value is undefined on the given inputs (e.g. single-class AUC).
class UndefinedMetricError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// End-to-end estimation cannot proceed; carries the connectivity components.
class EstimationError : public std::runtime_error {
 public:
  EstimationError(const std::string& message, std::vector<std::vector<std::size_t>> components)
      : std::runtime_error(message), components_(std::move(components)) {}

  const std::vector<std::vector<std::size_t>>& components() const noexcept {
    return components_;
  }

 private:
  std::vector<std::vector<std::size_t>> components_;
};

}  // namespace rasch
