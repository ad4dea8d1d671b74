#pragma once

#include <cstddef>
#include <vector>

#include "tsf/rational.hpp"

namespace tsf {

/// Dense row-major matrix over Q.
class RatMatrix {
public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);

  static RatMatrix identity(std::size_t n);
  static RatMatrix diagonal(const std::vector<Rational> &entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational &operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend bool operator==(const RatMatrix &, const RatMatrix &) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

RatMatrix transpose(const RatMatrix &a);
RatMatrix multiply(const RatMatrix &a, const RatMatrix &b);

/// Gauss-Jordan elimination; the pivot is the first nonzero entry at or
/// below the diagonal. Throws std::domain_error on a singular input.
RatMatrix inverse(const RatMatrix &a);

std::size_t rank(const RatMatrix &a);
Rational determinant(const RatMatrix &a);

/// Row vector times matrix.
std::vector<Rational> row_times(const std::vector<Rational> &row, const RatMatrix &a);

} // namespace tsf
