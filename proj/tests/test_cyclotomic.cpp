#include "doctest.h"

#include <random>

#include "tsf/cyclotomic.hpp"
#include "tsf/petrie.hpp"

using tsf::CycNum;
using tsf::IntPoly;
using tsf::Partition;
using tsf::Rational;

namespace {

IntPoly poly_mul(const IntPoly &a, const IntPoly &b) {
  IntPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] += a[i] * b[j];
  return out;
}

IntPoly ints(std::initializer_list<int> values) { return {values.begin(), values.end()}; }

CycNum random_element(std::mt19937 &rng, int order) {
  std::uniform_int_distribution<int> dist(-3, 3);
  std::vector<Rational> coeffs(static_cast<std::size_t>(order));
  for (auto &c : coeffs) {
    c = Rational(dist(rng), 1 + (dist(rng) + 3) % 3);
    c.canonicalize();
  }
  return CycNum::from_coeffs(order, coeffs);
}

CycNum xi(int order, long k) { return CycNum::root_power(order, k); }

} // namespace

TEST_CASE("cyclotomic_polynomial") {
  CHECK(tsf::cyclotomic_polynomial(2) == ints({1, 1}));
  CHECK(tsf::cyclotomic_polynomial(3) == ints({1, 1, 1}));
  CHECK(tsf::cyclotomic_polynomial(6) == ints({1, -1, 1}));
  CHECK(tsf::cyclotomic_polynomial(12) == ints({1, 0, -1, 0, 1}));
  const int phi[] = {0, 1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4};
  for (int m = 1; m <= 12; ++m) {
    IntPoly product = ints({1});
    for (int k = 1; k <= m; ++k)
      if (m % k == 0)
        product = poly_mul(product, tsf::cyclotomic_polynomial(k));
    IntPoly x_m_minus_1(static_cast<std::size_t>(m) + 1, 0);
    x_m_minus_1[0] = -1;
    x_m_minus_1[static_cast<std::size_t>(m)] = 1;
    CHECK(product == x_m_minus_1);
    CHECK(tsf::euler_phi(m) == phi[m]);
  }
}

TEST_CASE("ring operations") {
  CHECK(xi(3, 1) * xi(3, 2) == CycNum(3, 1));
  CHECK(xi(3, 1) + xi(3, 2) == CycNum(3, -1));
  CHECK(xi(4, 2) == CycNum(4, -1));
  CHECK(tsf::pow(xi(5, 1), 7) == xi(5, 2));
  CHECK(xi(6, -1) == xi(6, 5));
  CHECK_THROWS_AS(xi(3, 1) + xi(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(xi(3, 1).to_rational(), std::domain_error);

  std::mt19937 rng(5);
  for (int order : {2, 3, 4, 5, 6, 12}) {
    for (int trial = 0; trial < 10; ++trial) {
      auto a = random_element(rng, order), b = random_element(rng, order),
           c = random_element(rng, order);
      CHECK(a * b == b * a);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a - a == CycNum(order));
    }
  }
}

TEST_CASE("embedding") {
  auto w = xi(3, 1).embed(6);
  CHECK(w == xi(6, 2));
  CHECK(tsf::pow(w, 3) == CycNum(6, 1));
  CHECK((xi(3, 1) + xi(3, 2)).embed(12) == CycNum(12, -1));
  CHECK_THROWS_AS(xi(4, 1).embed(6), std::invalid_argument);
}

TEST_CASE("geometric sums vanish") {
  for (int d = 1; d <= 8; ++d) {
    CycNum sum(d + 1);
    for (int k = 0; k <= d; ++k)
      sum += xi(d + 1, k);
    CHECK(sum == CycNum(d + 1));
  }
}

TEST_CASE("power_sum_at_roots") {
  CHECK(tsf::power_sum_at_roots(2, 3) == CycNum(3, 2));
  CHECK(tsf::power_sum_at_roots(2, 1) == CycNum(3, -1));
  CHECK(tsf::power_sum_at_roots(5, 12) == CycNum(6, 5));
  for (int d = 1; d <= 6; ++d)
    for (int n = 1; n <= 12; ++n)
      CHECK(tsf::power_sum_at_roots(d, n).to_rational() == (n % (d + 1) == 0 ? d : -1));
  CHECK_THROWS_AS(tsf::power_sum_at_roots(0, 1), std::invalid_argument);
}

TEST_CASE("monomial_at_roots") {
  CHECK(tsf::monomial_at_roots(2, Partition({1, 1})) == CycNum(3, 1));
  CHECK(tsf::monomial_at_roots(2, Partition({1})) == CycNum(3, -1));
  CHECK(tsf::monomial_at_roots(2, Partition({2, 1})) == CycNum(3, -1));
  CHECK(tsf::monomial_at_roots(2, Partition({1, 1, 1})) == CycNum(3));
  CHECK(tsf::monomial_at_roots(2, Partition{}) == CycNum(3, 1));
}

TEST_CASE("Newton identities agree with direct summation") {
  for (int d = 1; d <= 3; ++d) {
    auto newton = tsf::complete_at_roots(d, 6);
    for (int k = 0; k <= 6; ++k) {
      CycNum direct(d + 1);
      for (const auto &lambda : tsf::enumerate_partitions(k))
        direct += tsf::monomial_at_roots(d, lambda);
      CHECK(newton[static_cast<std::size_t>(k)] == direct);
    }
  }
}

TEST_CASE("schur_at_roots") {
  CHECK(tsf::schur_at_roots(2, Partition({2, 1})) == CycNum(3, -1));
  CHECK(tsf::schur_at_roots(2, Partition({3})) == CycNum(3, 1));
  CHECK(tsf::schur_at_roots(2, Partition({1, 1, 1})) == CycNum(3));
  for (int d = 1; d <= 3; ++d)
    for (int n = 0; n <= 6; ++n)
      for (const auto &lambda : tsf::enumerate_partitions(n)) {
        Rational value = tsf::schur_at_roots(d, tsf::conjugate(lambda)).to_rational();
        if (n % 2 != 0)
          value = -value;
        CHECK(value == tsf::petrie_coefficient_det(d, lambda));
      }
}

TEST_CASE("refinement identity") {
  for (int d = 2; d <= 3; ++d)
    CHECK(tsf::identity_check(d, d, Partition({2, 1})));
  CHECK(tsf::identity_check(1, 2, Partition({1, 1})));
  auto sides = tsf::identity_sides(2, 3, Partition({1, 1, 1, 1, 1, 1}));
  CHECK(sides.left == CycNum(12, 1));
  CHECK(sides.right == CycNum(12, 1));
  CHECK_THROWS_AS(tsf::identity_check(1, 2, Partition({1, 1, 1})), std::invalid_argument);

  for (auto [d, dp] : {std::pair{1, 2}, {2, 3}, {1, 3}})
    for (int n = 0; n <= 4; ++n)
      for (const auto &mu : tsf::enumerate_partitions(n))
        if (mu.length() <= d * dp)
          CHECK(tsf::identity_check(d, dp, mu));
}
