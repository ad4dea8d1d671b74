#include "tsf/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <stdexcept>

#include "tsf/bases.hpp"
#include "tsf/cyclotomic.hpp"
#include "tsf/omega.hpp"
#include "tsf/petrie.hpp"
#include "tsf/polyring.hpp"

namespace tsf {

namespace {

struct Outcome {
  bool passed;
  std::string detail;
};

using Check = std::function<Outcome()>;

struct NamedCheck {
  std::string name;
  Check run;
};

std::vector<Truncation> finite_and_infinite(int max_d) {
  std::vector<Truncation> out;
  for (int d = 1; d <= max_d; ++d)
    out.push_back(Truncation::finite(d));
  out.push_back(Truncation::infinity());
  return out;
}

Partition single_row(int n) { return n > 0 ? Partition({n}) : Partition{}; }

std::string at(int n, Truncation d) { return "n=" + std::to_string(n) + " d=" + d.to_string(); }

Outcome fail(std::string detail) { return {false, std::move(detail)}; }
Outcome pass(std::string detail = {}) { return {true, std::move(detail)}; }

RatMatrix count_table(int n, Truncation d, CountMode mode) {
  const auto order = enumerate_partitions(n);
  RatMatrix out(order.size(), order.size());
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = 0; j < order.size(); ++j)
      out(i, j) = Rational(count_matrices(d, order[i], order[j], mode));
  return out;
}

std::vector<NamedCheck> table_checks() {
  return {{"h^[2] to m table n=4", [] {
             static const int expected[5][5] = {{0, 0, 1, 1, 1},
                                                {0, 1, 2, 3, 4},
                                                {1, 2, 3, 4, 6},
                                                {1, 3, 4, 7, 12},
                                                {1, 4, 6, 12, 24}};
             auto m = transition_hd(4, Truncation::finite(2), BasisTag::m());
             for (std::size_t i = 0; i < 5; ++i)
               for (std::size_t j = 0; j < 5; ++j)
                 if (m.entries(i, j) != expected[i][j])
                   return fail("entry (" + std::to_string(i) + "," + std::to_string(j) + ") is " +
                               to_string(m.entries(i, j)));
             return pass();
           }},
          {"h_3^[2] = s_21 - s_111", [] {
             auto row = SymFunc::from_vector(BasisTag::s(), 3, [] {
               auto m = transition_hd(3, Truncation::finite(2), BasisTag::s());
               std::vector<Rational> r;
               for (std::size_t j = 0; j < m.entries.cols(); ++j)
                 r.push_back(m.entries(0, j));
               return r;
             }());
             SymFunc expected(BasisTag::s(), 3, {{Partition({2, 1}), 1}, {Partition({1, 1, 1}), -1}});
             return row == expected ? pass() : fail("unexpected Schur expansion");
           }}};
}

std::vector<NamedCheck> symmetry_checks(const VerifyOptions &o) {
  std::vector<NamedCheck> out;
  for (auto d : finite_and_infinite(o.max_d))
    for (int n = 0; n <= o.max_n; ++n)
      out.push_back({"M^[d] symmetric " + at(n, d), [d, n] {
                       auto t = count_table(n, d, CountMode::Bounded);
                       return t == transpose(t) ? pass() : fail("count table is not symmetric");
                     }});
  return out;
}

std::vector<NamedCheck> factorization_checks(const VerifyOptions &o) {
  std::vector<NamedCheck> out;
  for (auto d : finite_and_infinite(o.max_d))
    for (int n = 0; n <= o.max_n; ++n) {
      out.push_back({"R'z^-1 D R = [0,d]-matrix counts " + at(n, d), [d, n] {
                       auto m = transition_hd(n, d, BasisTag::m()).entries;
                       return m == count_table(n, d, CountMode::Bounded)
                                  ? pass()
                                  : fail("factorization disagrees with brute-force counts");
                     }});
      out.push_back({"R'z^-1 D R = polynomial expansion " + at(n, d), [d, n] {
                       auto m = transition_hd(n, d, BasisTag::m());
                       for (const auto &lambda : enumerate_partitions(n)) {
                         auto row = SymFunc::from_vector(BasisTag::m(), n, [&] {
                           std::vector<Rational> r;
                           auto i = partition_index(lambda);
                           for (std::size_t j = 0; j < m.entries.cols(); ++j)
                             r.push_back(m.entries(i, j));
                           return r;
                         }());
                         if (!(row == hd_lambda(d, lambda)))
                           return fail("row " + lambda.to_string() + " differs");
                         if (!(convert(hd_via_p(d, lambda), BasisTag::m()) == row))
                           return fail("p-expansion of row " + lambda.to_string() + " differs");
                       }
                       return pass();
                     }});
    }
  for (int d = 1; d <= std::max(o.max_d, 1); ++d)
    for (int n = 0; n <= o.max_n; ++n) {
      auto t = Truncation::finite(d);
      out.push_back({"M(h^[d],p) nonsingular " + at(n, t), [t, n] {
                       auto m = transition_hd(n, t, BasisTag::p()).entries;
                       return rank(m) == m.rows() ? pass() : fail("rank deficient");
                     }});
    }
  return out;
}

std::vector<NamedCheck> petrie_checks(const VerifyOptions &o) {
  std::vector<NamedCheck> out;
  for (int d = 1; d <= o.max_d; ++d) {
    out.push_back({"determinant = rule, d=" + std::to_string(d), [d, &o] {
                     for (int n = 0; n <= o.max_n; ++n)
                       for (const auto &lambda : enumerate_partitions(n)) {
                         int det = petrie_coefficient_det(d, lambda);
                         if (det < -1 || det > 1)
                           return fail("determinant out of range at " + lambda.to_string());
                         if (det != petrie_coefficient_rule(d, lambda))
                           return fail("rule disagrees at " + lambda.to_string());
                       }
                     return pass();
                   }});
    for (int n = 0; n <= o.max_n; ++n)
      out.push_back({"h_n^[d] Schur support " + at(n, Truncation::finite(d)), [d, n] {
                       auto t = Truncation::finite(d);
                       SymFunc from_det(BasisTag::s(), n);
                       for (const auto &lambda : enumerate_partitions(n))
                         from_det.set(lambda, petrie_coefficient_det(d, lambda));
                       if (!(convert(hd_n(t, n), BasisTag::s()) == from_det))
                         return fail("determinants disagree with the converted h_n^[d]");
                       auto row = SymFunc::basis_element(BasisTag::hd(t), single_row(n));
                       if (!(convert(row, BasisTag::s()) == from_det))
                         return fail("determinants disagree with M(h^[d], s)");
                       return pass();
                     }});
  }
  return out;
}

std::vector<NamedCheck> main2_checks(const VerifyOptions &o) {
  std::vector<NamedCheck> out;
  for (int d = 1; d <= o.max_d; ++d)
    out.push_back({"omega(H^[d](t)) H^[d](-t) = 1, d=" + std::to_string(d) + " n<=" +
                       std::to_string(o.max_n),
                   [d, &o] { return verify_main2(d, o.max_n) ? pass() : fail("convolution nonzero"); }});
  return out;
}

std::vector<NamedCheck> commute_checks(const VerifyOptions &o) {
  std::vector<NamedCheck> out;
  const auto ds = finite_and_infinite(o.max_d);
  for (auto d : ds) {
    out.push_back({"eigen-relation and e_n -> h_n^[d], d=" + d.to_string(), [d, &o] {
                     for (int n = 0; n <= o.max_n; ++n) {
                       for (const auto &lambda : enumerate_partitions(n)) {
                         auto p = SymFunc::basis_element(BasisTag::p(), lambda);
                         auto expected = p;
                         expected.set(lambda, Rational(epsilon(lambda) * d_coefficient(lambda, d)));
                         if (!(omega_d(d, p) == expected))
                           return fail("eigenvalue wrong at " + lambda.to_string());
                       }
                       auto e_n = SymFunc::basis_element(
                           BasisTag::e(), single_row(n));
                       if (!(convert(omega_d(d, e_n), BasisTag::m()) == hd_n(d, n)))
                         return fail("omega^[d](e_n) != h_n^[d] at n=" + std::to_string(n));
                     }
                     return pass();
                   }});
  }
  for (std::size_t i = 0; i < ds.size(); ++i)
    for (std::size_t j = i; j < ds.size(); ++j) {
      auto d = ds[i], dp = ds[j];
      out.push_back({"omega^[d] omega^[d'] commute d=" + d.to_string() + " d'=" + dp.to_string(),
                     [d, dp, &o] {
                       return verify_commutation(d, dp, o.max_n) ? pass() : fail("not commuting");
                     }});
    }
  return out;
}

std::vector<NamedCheck> nmatrix_checks(const VerifyOptions &o) {
  std::vector<NamedCheck> out;
  for (int d = 1; d <= o.max_d; d += 2)
    for (int n = 0; n <= o.max_n; ++n) {
      out.push_back({"R' eps z^-1 D R = congruent counts " + at(n, Truncation::finite(d)), [d, n] {
                       auto t = Truncation::finite(d);
                       auto r = matrix_p_to_m(n).entries;
                       auto formula = multiply(
                           multiply(multiply(multiply(transpose(r), diagonal_eps(n)),
                                             inverse(diagonal_z(n))),
                                    diagonal_D(n, t)),
                           r);
                       auto counts = count_table(n, t, CountMode::Congruent);
                       if (!(formula == counts))
                         return fail("formula disagrees with congruent counts");
                       for (const auto &lambda : enumerate_partitions(n)) {
                         auto w = omega_of_hd(d, lambda);
                         for (const auto &mu : enumerate_partitions(n))
                           if (w.coefficient(mu) != counts(partition_index(lambda), partition_index(mu)))
                             return fail("omega(h^[d]) disagrees at " + lambda.to_string());
                       }
                       if (d == 1 && !(counts == count_table(n, Truncation::infinity(), CountMode::Bounded)))
                         return fail("N^[1] differs from unconstrained counts");
                       return pass();
                     }});
    }
  return out;
}

std::vector<NamedCheck> kernel_checks(const VerifyOptions &o) {
  std::vector<NamedCheck> out;
  const int cap = std::min(o.max_n, 3);
  for (int d = 1; d <= std::min(o.max_d, 2); ++d)
    out.push_back({"kernel expansion d=" + std::to_string(d) + " vars=" + std::to_string(cap) +
                       "+" + std::to_string(cap) + " cap=" + std::to_string(cap),
                   [d, cap] {
                     return verify_kernel(Truncation::finite(d), std::max(cap, 1), std::max(cap, 1), cap)
                                ? pass()
                                : fail("coefficient mismatch");
                   }});
  return out;
}

std::vector<NamedCheck> triple_checks(const VerifyOptions &o) {
  const int cap = std::min(o.max_n, 3);
  return {{"triple product vars=3+3+3 cap=" + std::to_string(cap), [cap] {
             return verify_triple_product(3, 3, 3, cap) ? pass() : fail("coefficient mismatch");
           }}};
}

std::vector<NamedCheck> roots_checks(const VerifyOptions &o) {
  std::vector<NamedCheck> out;
  const int max_d = std::max(o.max_d, 6);
  out.push_back({"p_n(xi..xi^d) closed form d<=" + std::to_string(max_d), [max_d, &o] {
                   for (int d = 1; d <= max_d; ++d)
                     for (int n = 1; n <= 2 * o.max_n; ++n) {
                       Rational expected = n % (d + 1) == 0 ? Rational(d) : Rational(-1);
                       if (!(power_sum_at_roots(d, n) == CycNum(d + 1, expected)))
                         return fail("d=" + std::to_string(d) + " n=" + std::to_string(n));
                     }
                   return pass();
                 }});
  out.push_back({"(-1)^|l| s_l'(xi..xi^d) = Petrie determinant", [&o] {
                   for (int d = 1; d <= o.max_d; ++d)
                     for (int n = 0; n <= o.max_n; ++n)
                       for (const auto &lambda : enumerate_partitions(n)) {
                         Rational value = schur_at_roots(d, conjugate(lambda)).to_rational();
                         if (n % 2 != 0)
                           value = -value;
                         if (value != petrie_coefficient_det(d, lambda))
                           return fail("d=" + std::to_string(d) + " lambda=" + lambda.to_string());
                       }
                   return pass();
                 }});
  return out;
}

std::vector<NamedCheck> identity_checks(const VerifyOptions &o) {
  std::vector<NamedCheck> out;
  const int max_n = std::min(o.max_n, 4);
  for (auto [d, dp] : {std::pair{1, 2}, {2, 3}, {1, 3}})
    out.push_back({"refinement identity d=" + std::to_string(d) + " d'=" + std::to_string(dp),
                   [d, dp, max_n] {
                     for (int n = 0; n <= max_n; ++n)
                       for (const auto &mu : enumerate_partitions(n)) {
                         if (mu.length() > d * dp)
                           continue;
                         if (!identity_check(d, dp, mu))
                           return fail("mu=" + mu.to_string());
                       }
                     return pass();
                   }});
  out.push_back({"refinement identity d=2 d'=3 mu=1^6 equals 1", [] {
                   auto sides = identity_sides(2, 3, Partition({1, 1, 1, 1, 1, 1}));
                   CycNum one(sides.left.order(), 1);
                   return sides.left == one && sides.right == one ? pass() : fail("sides are not 1");
                 }});
  return out;
}

using SuiteBuilder = std::function<std::vector<NamedCheck>(const VerifyOptions &)>;

const std::vector<std::pair<std::string, SuiteBuilder>> &registry() {
  static const std::vector<std::pair<std::string, SuiteBuilder>> suites = {
      {"table", [](const VerifyOptions &) { return table_checks(); }},
      {"symmetry", symmetry_checks},
      {"factorization", factorization_checks},
      {"petrie", petrie_checks},
      {"main2", main2_checks},
      {"commute", commute_checks},
      {"nmatrix", nmatrix_checks},
      {"kernel", kernel_checks},
      {"triple", triple_checks},
      {"rootsofunity", roots_checks},
      {"identity", identity_checks},
  };
  return suites;
}

void run_checks(const std::string &suite, const std::vector<NamedCheck> &checks,
                std::vector<CheckResult> &out) {
  for (const auto &check : checks) {
    auto start = std::chrono::steady_clock::now();
    CheckResult result{suite, check.name, false, 0, {}};
    try {
      auto outcome = check.run();
      result.passed = outcome.passed;
      result.detail = outcome.detail;
    } catch (const std::exception &e) {
      result.passed = false;
      result.detail = std::string("exception: ") + e.what();
    }
    result.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    out.push_back(std::move(result));
  }
}

} // namespace

const std::vector<std::string> &suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto &[name, builder] : registry())
      out.push_back(name);
    return out;
  }();
  return names;
}

std::vector<CheckResult> run_suite(std::string_view suite, const VerifyOptions &options) {
  if (options.max_n < 0 || options.max_d < 1)
    throw std::invalid_argument("max-n must be >= 0 and max-d >= 1");
  std::vector<CheckResult> out;
  bool found = false;
  for (const auto &[name, builder] : registry()) {
    if (suite != "all" && suite != name)
      continue;
    found = true;
    run_checks(name, builder(options), out);
  }
  if (!found)
    throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
  return out;
}

} // namespace tsf
