#include "tsf/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace tsf {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    out(i, i) = 1;
  return out;
}

RatMatrix RatMatrix::diagonal(const std::vector<Rational> &entries) {
  RatMatrix out(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i)
    out(i, i) = entries[i];
  return out;
}

RatMatrix transpose(const RatMatrix &a) {
  RatMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      out(j, i) = a(i, j);
  return out;
}

RatMatrix multiply(const RatMatrix &a, const RatMatrix &b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("matrix dimensions do not agree");
  RatMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0)
        continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

namespace {

// Reduces m in place to reduced row echelon form, mirroring every row
// operation on companion (if non-null). Returns rank and the sign/scale
// factor accumulated by swaps and normalizations.
struct Elimination {
  std::size_t rank = 0;
  Rational det_factor = 1;
};

Elimination eliminate(RatMatrix &m, RatMatrix *companion) {
  Elimination result;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col) == 0)
      ++pivot;
    if (pivot == m.rows())
      continue;
    if (pivot != row) {
      for (std::size_t j = 0; j < m.cols(); ++j)
        std::swap(m(pivot, j), m(row, j));
      if (companion)
        for (std::size_t j = 0; j < companion->cols(); ++j)
          std::swap((*companion)(pivot, j), (*companion)(row, j));
      result.det_factor = -result.det_factor;
    }
    Rational scale = m(row, col);
    result.det_factor *= scale;
    for (std::size_t j = 0; j < m.cols(); ++j)
      m(row, j) /= scale;
    if (companion)
      for (std::size_t j = 0; j < companion->cols(); ++j)
        (*companion)(row, j) /= scale;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0)
        continue;
      Rational factor = m(i, col);
      for (std::size_t j = 0; j < m.cols(); ++j)
        m(i, j) -= factor * m(row, j);
      if (companion)
        for (std::size_t j = 0; j < companion->cols(); ++j)
          (*companion)(i, j) -= factor * (*companion)(row, j);
    }
    ++row;
  }
  result.rank = row;
  return result;
}

} // namespace

RatMatrix inverse(const RatMatrix &a) {
  if (!a.is_square())
    throw std::invalid_argument("inverse of a non-square matrix");
  RatMatrix work = a;
  RatMatrix out = RatMatrix::identity(a.rows());
  if (eliminate(work, &out).rank != a.rows())
    throw std::domain_error("matrix is singular");
  return out;
}

std::size_t rank(const RatMatrix &a) {
  RatMatrix work = a;
  return eliminate(work, nullptr).rank;
}

Rational determinant(const RatMatrix &a) {
  if (!a.is_square())
    throw std::invalid_argument("determinant of a non-square matrix");
  RatMatrix work = a;
  auto e = eliminate(work, nullptr);
  return e.rank == a.rows() ? e.det_factor : Rational(0);
}

std::vector<Rational> row_times(const std::vector<Rational> &row, const RatMatrix &a) {
  if (row.size() != a.rows())
    throw std::invalid_argument("vector length does not match matrix rows");
  std::vector<Rational> out(a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (row[i] == 0)
      continue;
    for (std::size_t j = 0; j < a.cols(); ++j)
      out[j] += row[i] * a(i, j);
  }
  return out;
}

} // namespace tsf
