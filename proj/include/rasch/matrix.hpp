#pragma once

#include <cstddef>
#include <vector>

namespace rasch {

// Minimal dense row-major matrix; just enough for m x m transition matrices.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c, double fill = 0.0) : rows(r), cols(c), data(r * c, fill) {}

  double& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

  bool operator==(const Matrix&) const = default;
};

// x^T A for a row vector x.
std::vector<double> left_multiply(const std::vector<double>& x, const Matrix& a);

// A x for a column vector x.
std::vector<double> right_multiply(const Matrix& a, const std::vector<double>& x);

double l1_distance(const std::vector<double>& a, const std::vector<double>& b);
double linf_distance(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace rasch
