#include "doctest.h"

#include <functional>

#include "tsf/matrix.hpp"
#include "tsf/petrie.hpp"

using tsf::BasisTag;
using tsf::CoeffTable;
using tsf::Partition;
using tsf::Rational;
using tsf::SymFunc;
using tsf::Truncation;

namespace {

// Enumerates every matrix row by row, each row a composition of lambda_i
// into l(mu) entries that satisfy `allowed`, then filters on column sums.
long count_oracle(const Partition &lambda, const Partition &mu,
                  const std::function<bool(int)> &allowed) {
  if (lambda.weight() != mu.weight())
    return 0;
  const auto cols = static_cast<std::size_t>(mu.length());
  long count = 0;
  std::vector<int> sums(cols, 0);
  std::function<void(std::size_t, std::size_t, int)> rec = [&](std::size_t i, std::size_t j,
                                                               int left) {
    if (i == static_cast<std::size_t>(lambda.length())) {
      if (sums == mu.parts())
        ++count;
      return;
    }
    if (j == cols) {
      if (left == 0)
        rec(i + 1, 0, i + 1 < static_cast<std::size_t>(lambda.length()) ? lambda[i + 1] : 0);
      return;
    }
    for (int a = 0; a <= left; ++a) {
      if (!allowed(a))
        continue;
      sums[j] += a;
      rec(i, j + 1, left - a);
      sums[j] -= a;
    }
  };
  rec(0, 0, lambda.empty() ? 0 : lambda[0]);
  return count;
}

// det(f_{lambda_i - i + j}) by the Leibniz formula.
int petrie_leibniz(int d, const Partition &lambda) {
  const auto len = static_cast<std::size_t>(lambda.length());
  std::vector<std::size_t> perm(len);
  for (std::size_t i = 0; i < len; ++i)
    perm[i] = i;
  int total = 0;
  do {
    int sign = 1;
    bool nonzero = true;
    for (std::size_t i = 0; i < len; ++i) {
      int k = lambda[i] - static_cast<int>(i) + static_cast<int>(perm[i]);
      nonzero = nonzero && k >= 0 && k <= d;
      for (std::size_t j = i + 1; j < len; ++j)
        if (perm[i] > perm[j])
          sign = -sign;
    }
    if (nonzero)
      total += sign;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

const std::vector<Truncation> &test_truncations() {
  static const std::vector<Truncation> ds = {Truncation::finite(1), Truncation::finite(2),
                                             Truncation::finite(3), Truncation::infinity()};
  return ds;
}

SymFunc m_table(int n, std::initializer_list<std::pair<Partition, int>> entries) {
  SymFunc f(BasisTag::m(), n);
  for (const auto &[lambda, c] : entries)
    f.set(lambda, c);
  return f;
}

} // namespace

TEST_CASE("hd_n") {
  auto two = Truncation::finite(2);
  CHECK(tsf::hd_n(two, 3) == m_table(3, {{Partition({2, 1}), 1}, {Partition({1, 1, 1}), 1}}));
  CHECK(tsf::hd_n(Truncation::finite(1), 3) == m_table(3, {{Partition({1, 1, 1}), 1}}));
  CHECK(tsf::hd_n(two, 4) ==
        m_table(4, {{Partition({2, 2}), 1}, {Partition({2, 1, 1}), 1}, {Partition({1, 1, 1, 1}), 1}}));
  CHECK(tsf::hd_n(two, 0) == m_table(0, {{Partition{}, 1}}));
  for (auto d : test_truncations())
    for (int n = 0; n <= 6; ++n)
      for (const auto &lambda : tsf::enumerate_partitions(n))
        CHECK(tsf::hd_n(d, n).coefficient(lambda) == (lambda.largest() <= d.cap(n) ? 1 : 0));
}

TEST_CASE("hd_lambda") {
  auto two = Truncation::finite(2);
  CHECK(tsf::hd_lambda(two, Partition({2, 2})) ==
        m_table(4, {{Partition({4}), 1},
                    {Partition({3, 1}), 2},
                    {Partition({2, 2}), 3},
                    {Partition({2, 1, 1}), 4},
                    {Partition({1, 1, 1, 1}), 6}}));
  CHECK(tsf::hd_lambda(two, Partition({1, 1, 1, 1})) ==
        m_table(4, {{Partition({4}), 1},
                    {Partition({3, 1}), 4},
                    {Partition({2, 2}), 6},
                    {Partition({2, 1, 1}), 12},
                    {Partition({1, 1, 1, 1}), 24}}));
  CHECK(tsf::hd_lambda(Truncation::finite(1), Partition({2, 1})) ==
        m_table(3, {{Partition({2, 1}), 1}, {Partition({1, 1, 1}), 3}}));
}

TEST_CASE("hd_via_p") {
  CHECK(tsf::hd_via_p(Truncation::finite(2), Partition({3})) ==
        SymFunc(BasisTag::p(), 3,
                CoeffTable{{Partition({1, 1, 1}), Rational(1, 6)},
                           {Partition({2, 1}), Rational(1, 2)},
                           {Partition({3}), Rational(-2, 3)}}));
  CHECK(tsf::hd_via_p(Truncation::finite(1), Partition({2})) ==
        SymFunc(BasisTag::p(), 2,
                CoeffTable{{Partition({1, 1}), Rational(1, 2)}, {Partition({2}), Rational(-1, 2)}}));
  CHECK(tsf::hd_via_p(Truncation::infinity(), Partition({2})) ==
        SymFunc(BasisTag::p(), 2,
                CoeffTable{{Partition({1, 1}), Rational(1, 2)}, {Partition({2}), Rational(1, 2)}}));
  for (auto d : test_truncations())
    for (int n = 0; n <= 6; ++n)
      for (const auto &lambda : tsf::enumerate_partitions(n))
        CHECK(tsf::convert(tsf::hd_via_p(d, lambda), BasisTag::m()) == tsf::hd_lambda(d, lambda));
}

TEST_CASE("count_bounded_matrices") {
  auto two = Truncation::finite(2);
  CHECK(tsf::count_bounded_matrices(two, Partition({2, 2}), Partition({2, 2})) == 3);
  CHECK(tsf::count_bounded_matrices(two, Partition({2, 1}), Partition({2, 1})) == 2);
  CHECK(tsf::count_bounded_matrices(two, Partition({2, 1}), Partition({3})) == 1);
  CHECK(tsf::count_bounded_matrices(two, Partition({3}), Partition({2})) == 0);
  for (int n = 1; n <= 5; ++n)
    CHECK(tsf::count_bounded_matrices(Truncation::finite(1), Partition({n}),
                                      Partition(std::vector<int>(static_cast<std::size_t>(n), 1))) == 1);

  for (auto d : test_truncations())
    for (int n = 0; n <= 6; ++n)
      for (const auto &lambda : tsf::enumerate_partitions(n))
        for (const auto &mu : tsf::enumerate_partitions(n)) {
          auto got = tsf::count_bounded_matrices(d, lambda, mu);
          int bound = d.cap(n);
          CHECK(got == count_oracle(lambda, mu, [bound](int a) { return a <= bound; }));
          CHECK(got == tsf::count_bounded_matrices(d, mu, lambda));
          CHECK(tsf::Rational(got) == tsf::hd_lambda(d, lambda).coefficient(mu));
        }
}

TEST_CASE("count_mod_matrices") {
  CHECK(tsf::count_mod_matrices(3, Partition({4}), Partition({4})) == 1);
  CHECK(tsf::count_mod_matrices(3, Partition({1}), Partition({1})) == 1);
  CHECK(tsf::count_mod_matrices(3, Partition({2}), Partition({2})) == 0);
  CHECK_THROWS_AS(tsf::count_mod_matrices(0, Partition({1}), Partition({1})), std::invalid_argument);
  CHECK_THROWS_AS(tsf::count_matrices(Truncation::infinity(), Partition({1}), Partition({1}),
                                      tsf::CountMode::Congruent),
                  std::invalid_argument);
  for (int d : {1, 2, 3})
    for (int n = 0; n <= 5; ++n)
      for (const auto &lambda : tsf::enumerate_partitions(n))
        for (const auto &mu : tsf::enumerate_partitions(n)) {
          auto got = tsf::count_mod_matrices(d, lambda, mu);
          CHECK(got == count_oracle(lambda, mu, [d](int a) { return a % (d + 1) <= 1; }));
          if (d == 1)
            CHECK(got == tsf::count_bounded_matrices(Truncation::infinity(), lambda, mu));
        }
}

TEST_CASE("N^[d] = R' eps z^-1 D^[d] R for odd d") {
  for (int d : {1, 3})
    for (int n = 0; n <= 5; ++n) {
      auto r = tsf::matrix_p_to_m(n).entries;
      auto formula = tsf::multiply(
          tsf::multiply(tsf::multiply(tsf::multiply(tsf::transpose(r), tsf::diagonal_eps(n)),
                                      tsf::inverse(tsf::diagonal_z(n))),
                        tsf::diagonal_D(n, Truncation::finite(d))),
          r);
      auto order = tsf::enumerate_partitions(n);
      for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = 0; j < order.size(); ++j)
          CHECK(formula(i, j) == Rational(tsf::count_mod_matrices(d, order[i], order[j])));
    }
}

TEST_CASE("Petrie coefficients") {
  CHECK(tsf::petrie_coefficient_det(2, Partition({2, 1})) == 1);
  CHECK(tsf::petrie_coefficient_det(2, Partition({1, 1, 1})) == -1);
  CHECK(tsf::petrie_coefficient_det(2, Partition({3})) == 0);
  CHECK(tsf::petrie_coefficient_det(2, Partition({2, 2, 2})) == 1);
  CHECK(tsf::petrie_coefficient_rule(2, Partition({2, 1})) == 1);
  CHECK(tsf::petrie_coefficient_rule(2, Partition({1, 1, 1})) == -1);
  CHECK(tsf::petrie_coefficient_rule(2, Partition({2, 2, 2})) == 1);
  CHECK(tsf::petrie_coefficient_rule(2, Partition({3})) == 0);
  CHECK(tsf::petrie_coefficient_det(3, Partition{}) == 1);
  CHECK(tsf::petrie_coefficient_rule(3, Partition{}) == 1);
  CHECK_THROWS_AS(tsf::petrie_coefficient_det(0, Partition({1})), std::invalid_argument);

  for (int d = 1; d <= 4; ++d)
    for (int n = 0; n <= 8; ++n)
      for (const auto &lambda : tsf::enumerate_partitions(n)) {
        CAPTURE(d);
        CAPTURE(lambda.to_string());
        int det = tsf::petrie_coefficient_det(d, lambda);
        CHECK(det == petrie_leibniz(d, lambda));
        CHECK(det == tsf::petrie_coefficient_rule(d, lambda));
      }
}

TEST_CASE("h_n^[d] in the Schur basis carries the Petrie coefficients") {
  for (int d = 1; d <= 3; ++d)
    for (int n = 0; n <= 6; ++n) {
      SymFunc expected(BasisTag::s(), n);
      for (const auto &lambda : tsf::enumerate_partitions(n))
        expected.set(lambda, tsf::petrie_coefficient_det(d, lambda));
      CHECK(tsf::convert(tsf::hd_n(Truncation::finite(d), n), BasisTag::s()) == expected);
    }
}

TEST_CASE("verify_kernel") {
  CHECK(tsf::verify_kernel(Truncation::finite(1), 2, 2, 2));
  CHECK(tsf::verify_kernel(Truncation::finite(2), 3, 3, 3));
  CHECK(tsf::verify_kernel(Truncation::finite(2), 3, 3, 0));
  CHECK(tsf::verify_kernel(Truncation::infinity(), 2, 3, 3));
}
