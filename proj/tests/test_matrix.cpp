#include "doctest.h"

#include <random>

#include "tsf/matrix.hpp"

using tsf::RatMatrix;
using tsf::Rational;

namespace {

RatMatrix make(std::initializer_list<std::initializer_list<Rational>> rows) {
  RatMatrix m(rows.size(), rows.begin()->size());
  std::size_t i = 0;
  for (const auto &row : rows) {
    std::size_t j = 0;
    for (const auto &value : row)
      m(i, j++) = value;
    ++i;
  }
  return m;
}

// Leibniz expansion, for small matrices only.
Rational leibniz(const RatMatrix &a) {
  std::vector<std::size_t> perm(a.rows());
  for (std::size_t i = 0; i < perm.size(); ++i)
    perm[i] = i;
  Rational total = 0;
  do {
    int sign = 1;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j)
        if (perm[i] > perm[j])
          sign = -sign;
    Rational term = sign;
    for (std::size_t i = 0; i < perm.size(); ++i)
      term *= a(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

} // namespace

TEST_CASE("inverse") {
  CHECK(tsf::inverse(RatMatrix::identity(5)) == RatMatrix::identity(5));
  CHECK(tsf::inverse(make({{1, 0}, {1, 2}})) == make({{1, 0}, {Rational(-1, 2), Rational(1, 2)}}));
  CHECK_THROWS_AS(tsf::inverse(make({{1, 2}, {2, 4}})), std::domain_error);
  CHECK_THROWS_AS(tsf::inverse(RatMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("random matrices") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> dist(-2, 2);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 1 + static_cast<std::size_t>(trial % 5);
    RatMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        a(i, j) = dist(rng);
    CHECK(tsf::transpose(tsf::transpose(a)) == a);
    CHECK(tsf::determinant(a) == leibniz(a));
    CHECK(tsf::determinant(tsf::transpose(a)) == tsf::determinant(a));
    if (tsf::determinant(a) != 0) {
      CHECK(tsf::rank(a) == n);
      CHECK(tsf::multiply(tsf::inverse(a), a) == RatMatrix::identity(n));
    } else {
      CHECK(tsf::rank(a) < n);
      CHECK_THROWS_AS(tsf::inverse(a), std::domain_error);
    }
  }
}

TEST_CASE("row_times and multiply") {
  auto a = make({{1, 2}, {3, 4}});
  CHECK(tsf::row_times({1, 1}, a) == std::vector<Rational>{4, 6});
  CHECK(tsf::multiply(a, RatMatrix::identity(2)) == a);
  CHECK(tsf::multiply(a, a) == make({{7, 10}, {15, 22}}));
  CHECK_THROWS_AS(tsf::multiply(RatMatrix(2, 3), RatMatrix(2, 3)), std::invalid_argument);
}
