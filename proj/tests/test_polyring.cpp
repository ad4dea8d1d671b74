#include "doctest.h"

#include <random>

#include "tsf/polyring.hpp"

using tsf::Exponent;
using tsf::Partition;
using tsf::Rational;
using tsf::SparsePoly;
using tsf::Truncation;

namespace {

SparsePoly random_poly(std::mt19937 &rng, int num_vars, int cap) {
  std::uniform_int_distribution<int> exp_dist(0, 2), coeff_dist(-3, 3), count_dist(0, 5);
  SparsePoly p(num_vars, cap);
  int terms = count_dist(rng);
  for (int t = 0; t < terms; ++t) {
    Exponent e(static_cast<std::size_t>(num_vars));
    for (auto &a : e)
      a = exp_dist(rng);
    p.add_term(e, Rational(coeff_dist(rng), 2));
  }
  return p;
}

std::map<Partition, Rational> table(std::initializer_list<std::pair<Partition, int>> entries) {
  std::map<Partition, Rational> out;
  for (const auto &[lambda, c] : entries)
    out.emplace(lambda, c);
  return out;
}

} // namespace

TEST_CASE("terms are canonical") {
  SparsePoly p(2, 3);
  p.add_term({1, 0}, 2);
  p.add_term({1, 0}, -2);
  CHECK(p.is_zero());
  p.add_term({2, 2}, 5); // over the cap
  CHECK(p.is_zero());
  CHECK_THROWS_AS(p.add_term({1}, 1), std::invalid_argument);
  CHECK_THROWS_AS(SparsePoly(0, 2), std::invalid_argument);
}

TEST_CASE("mul_truncated") {
  auto one_plus_x = SparsePoly::constant(1, 2, 1);
  one_plus_x += SparsePoly::variable(1, 2, 0);
  auto sq = tsf::mul_truncated(one_plus_x, one_plus_x, 1);
  SparsePoly expected(1, 1);
  expected.add_term({0}, 1);
  expected.add_term({1}, 2);
  CHECK(sq == expected);

  auto x1_plus_x2 = SparsePoly::variable(2, 2, 0);
  x1_plus_x2 += SparsePoly::variable(2, 2, 1);
  SparsePoly sum_sq(2, 2);
  sum_sq.add_term({2, 0}, 1);
  sum_sq.add_term({1, 1}, 2);
  sum_sq.add_term({0, 2}, 1);
  CHECK(tsf::mul_truncated(x1_plus_x2, x1_plus_x2, 2) == sum_sq);

  CHECK_THROWS_AS(tsf::mul_truncated(SparsePoly(1, 2), SparsePoly(2, 2), 2), std::invalid_argument);

  std::mt19937 rng(20240607);
  for (int trial = 0; trial < 50; ++trial) {
    auto a = random_poly(rng, 3, 4), b = random_poly(rng, 3, 4), c = random_poly(rng, 3, 4);
    auto one = SparsePoly::constant(3, 4, 1);
    CHECK(tsf::mul_truncated(a, b, 4) == tsf::mul_truncated(b, a, 4));
    CHECK(tsf::mul_truncated(tsf::mul_truncated(a, b, 4), c, 4) ==
          tsf::mul_truncated(a, tsf::mul_truncated(b, c, 4), 4));
    CHECK(tsf::mul_truncated(one, a, 4) == a);
  }
}

TEST_CASE("product_generating") {
  SparsePoly e_case(2, 2);
  e_case.add_term({0, 0}, 1);
  e_case.add_term({1, 0}, 1);
  e_case.add_term({0, 1}, 1);
  e_case.add_term({1, 1}, 1);
  CHECK(tsf::product_generating(Truncation::finite(1), 2, 2) == e_case);

  // h_3^[2] in three variables: sum x_i^2 x_j + x_1 x_2 x_3.
  auto slice = tsf::product_generating(Truncation::finite(2), 3, 3).homogeneous_slice(3);
  auto expected = tsf::monomial_symmetric(Partition({2, 1}), 3, 3);
  expected += tsf::monomial_symmetric(Partition({1, 1, 1}), 3, 3);
  CHECK(slice == expected);

  SparsePoly h2(2, 2);
  h2.add_term({2, 0}, 1);
  h2.add_term({1, 1}, 1);
  h2.add_term({0, 2}, 1);
  CHECK(tsf::product_generating(Truncation::infinity(), 2, 2).homogeneous_slice(2) == h2);
}

TEST_CASE("extract_monomial_coeffs") {
  auto g = tsf::product_generating(Truncation::finite(2), 2, 2);
  CHECK(tsf::extract_monomial_coeffs(g, 2) == table({{Partition({2}), 1}, {Partition({1, 1}), 1}}));

  SparsePoly p1(3, 2);
  for (int i = 0; i < 3; ++i)
    p1 += SparsePoly::variable(3, 2, i);
  CHECK(tsf::extract_monomial_coeffs(tsf::mul_truncated(p1, p1, 2), 2) ==
        table({{Partition({2}), 1}, {Partition({1, 1}), 2}}));

  CHECK(tsf::extract_monomial_coeffs(SparsePoly(2, 2), 2).empty());

  SparsePoly lopsided(2, 2);
  lopsided.add_term({2, 0}, 1);
  CHECK_THROWS_AS(tsf::extract_monomial_coeffs(lopsided, 2), std::logic_error);
  lopsided.add_term({0, 2}, 3);
  CHECK_THROWS_AS(tsf::extract_monomial_coeffs(lopsided, 2), std::logic_error);
  CHECK_THROWS_AS(tsf::extract_monomial_coeffs(SparsePoly(2, 3), 3), std::invalid_argument);
}

TEST_CASE("monomial and power sums") {
  CHECK(tsf::monomial_symmetric(Partition({1, 1, 1}), 2, 3).is_zero());
  CHECK(tsf::monomial_symmetric(Partition({2, 1}), 3, 3).terms().size() == 6);
  CHECK(tsf::extract_monomial_coeffs(tsf::power_sum(Partition({2, 1}), 3, 3), 3) ==
        table({{Partition({3}), 1}, {Partition({2, 1}), 1}}));
}

TEST_CASE("degree-n coefficients do not depend on extra variables") {
  for (auto d : {Truncation::finite(1), Truncation::finite(2), Truncation::finite(3),
                 Truncation::infinity()})
    for (int n = 0; n <= 5; ++n) {
      CAPTURE(n);
      int v = std::max(n, 1);
      CHECK(tsf::extract_monomial_coeffs(tsf::product_generating(d, v, n), n) ==
            tsf::extract_monomial_coeffs(tsf::product_generating(d, n + 2, n), n));
    }
}

TEST_CASE("elementary slice") {
  for (int n = 1; n <= 5; ++n) {
    std::vector<int> ones(static_cast<std::size_t>(n), 1);
    CHECK(tsf::extract_monomial_coeffs(tsf::product_generating(Truncation::finite(1), n, n), n) ==
          table({{Partition(ones), 1}}));
  }
}

TEST_CASE("verify_triple_product") {
  CHECK(tsf::verify_triple_product(1, 1, 1, 2));
  CHECK(tsf::verify_triple_product(2, 1, 2, 3));
  CHECK(tsf::verify_triple_product(3, 3, 3, 0));
  CHECK(tsf::verify_triple_product(3, 3, 3, 3));
}
