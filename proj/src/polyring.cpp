#include "tsf/polyring.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace tsf {

namespace {

int total_degree(const Exponent &e) { return std::accumulate(e.begin(), e.end(), 0); }

int partial_degree(const Exponent &e, int offset, int count) {
  return std::accumulate(e.begin() + offset, e.begin() + offset + count, 0);
}

// Number of distinct rearrangements of an exponent vector.
Integer orbit_size(const Exponent &e) {
  Integer result;
  mpz_fac_ui(result.get_mpz_t(), e.size());
  std::map<int, unsigned long> counts;
  for (int a : e)
    ++counts[a];
  for (auto [value, count] : counts) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), count);
    result /= f;
  }
  return result;
}

// p_lambda in the variables offset .. offset+count-1 of a ring with num_vars variables.
SparsePoly power_sum_block(const Partition &lambda, int num_vars, int offset, int count, int cap) {
  auto result = SparsePoly::constant(num_vars, cap, 1);
  for (int part : lambda.parts()) {
    SparsePoly factor(num_vars, cap);
    for (int k = 0; k < count; ++k) {
      Exponent e(static_cast<std::size_t>(num_vars), 0);
      e[static_cast<std::size_t>(offset + k)] = part;
      factor.add_term(e, 1);
    }
    result = mul_truncated(result, factor, cap);
  }
  return result;
}

} // namespace

bool GradedLex::operator()(const Exponent &a, const Exponent &b) const {
  int da = total_degree(a), db = total_degree(b);
  if (da != db)
    return da < db;
  return a < b;
}

SparsePoly::SparsePoly(int num_vars, int degree_cap) : num_vars_(num_vars), degree_cap_(degree_cap) {
  if (num_vars < 1)
    throw std::invalid_argument("polynomial needs at least one variable");
  if (degree_cap < 0)
    throw std::invalid_argument("degree cap must be nonnegative");
}

SparsePoly SparsePoly::constant(int num_vars, int degree_cap, const Rational &value) {
  SparsePoly p(num_vars, degree_cap);
  p.add_term(Exponent(static_cast<std::size_t>(num_vars), 0), value);
  return p;
}

SparsePoly SparsePoly::variable(int num_vars, int degree_cap, int index) {
  if (index < 0 || index >= num_vars)
    throw std::out_of_range("variable index out of range");
  SparsePoly p(num_vars, degree_cap);
  Exponent e(static_cast<std::size_t>(num_vars), 0);
  e[static_cast<std::size_t>(index)] = 1;
  p.add_term(e, 1);
  return p;
}

Rational SparsePoly::coefficient(const Exponent &exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SparsePoly::add_term(const Exponent &exponent, const Rational &value) {
  if (static_cast<int>(exponent.size()) != num_vars_)
    throw std::invalid_argument("exponent length does not match variable count");
  if (value == 0 || total_degree(exponent) > degree_cap_)
    return;
  auto [it, inserted] = terms_.try_emplace(exponent, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0)
      terms_.erase(it);
  }
}

SparsePoly SparsePoly::homogeneous_slice(int n) const {
  SparsePoly out(num_vars_, degree_cap_);
  for (const auto &[e, c] : terms_)
    if (total_degree(e) == n)
      out.terms_.emplace_hint(out.terms_.end(), e, c);
  return out;
}

SparsePoly &SparsePoly::operator+=(const SparsePoly &other) {
  if (other.num_vars_ != num_vars_)
    throw std::invalid_argument("variable-count mismatch");
  for (const auto &[e, c] : other.terms_)
    add_term(e, c);
  return *this;
}

SparsePoly &SparsePoly::operator-=(const SparsePoly &other) {
  if (other.num_vars_ != num_vars_)
    throw std::invalid_argument("variable-count mismatch");
  for (const auto &[e, c] : other.terms_)
    add_term(e, -c);
  return *this;
}

SparsePoly &SparsePoly::operator*=(const Rational &scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto &[e, c] : terms_)
    c *= scalar;
  return *this;
}

SparsePoly mul_truncated(const SparsePoly &a, const SparsePoly &b, int cap) {
  if (a.num_vars() != b.num_vars())
    throw std::invalid_argument("variable-count mismatch");
  SparsePoly out(a.num_vars(), cap);
  Exponent e(static_cast<std::size_t>(a.num_vars()));
  for (const auto &[ea, ca] : a.terms()) {
    int da = total_degree(ea);
    if (da > cap)
      break; // graded order: every later term of a is at least as heavy
    for (const auto &[eb, cb] : b.terms()) {
      if (da + total_degree(eb) > cap)
        break;
      std::transform(ea.begin(), ea.end(), eb.begin(), e.begin(), std::plus<>());
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

SparsePoly product_generating(Truncation d, int num_vars, int cap) {
  if (num_vars < 1 || cap < 0)
    throw std::invalid_argument("product_generating needs v >= 1 and cap >= 0");
  int top = d.cap(cap);
  auto result = SparsePoly::constant(num_vars, cap, 1);
  for (int k = 0; k < num_vars; ++k) {
    SparsePoly factor(num_vars, cap);
    Exponent e(static_cast<std::size_t>(num_vars), 0);
    for (int power = 0; power <= top; ++power) {
      e[static_cast<std::size_t>(k)] = power;
      factor.add_term(e, 1);
    }
    result = mul_truncated(result, factor, cap);
  }
  return result;
}

SparsePoly monomial_symmetric(const Partition &lambda, int num_vars, int cap) {
  SparsePoly out(num_vars, cap);
  if (lambda.length() > num_vars || lambda.weight() > cap)
    return out;
  Exponent e(static_cast<std::size_t>(num_vars), 0);
  std::copy(lambda.parts().begin(), lambda.parts().end(), e.begin());
  std::sort(e.begin(), e.end());
  do {
    out.add_term(e, 1);
  } while (std::next_permutation(e.begin(), e.end()));
  return out;
}

SparsePoly power_sum(const Partition &lambda, int num_vars, int cap) {
  return power_sum_block(lambda, num_vars, 0, num_vars, cap);
}

std::map<Partition, Rational> extract_monomial_coeffs(const SparsePoly &p, int n) {
  if (n > p.degree_cap())
    throw std::invalid_argument("requested degree exceeds the polynomial's degree cap");
  if (p.num_vars() < n)
    throw std::invalid_argument("too few variables to read off degree-" + std::to_string(n) +
                                " monomial coefficients");
  struct Orbit {
    Rational value;
    Integer seen = 0;
  };
  std::map<Partition, Orbit> orbits;
  for (const auto &[e, c] : p.terms()) {
    if (total_degree(e) != n)
      continue;
    auto lambda = Partition::from_unsorted(e);
    auto [it, inserted] = orbits.try_emplace(lambda, Orbit{c});
    if (!inserted && it->second.value != c)
      throw std::logic_error("polynomial is not symmetric (orbit of " + lambda.to_string() +
                             " has unequal coefficients)");
    it->second.seen += 1;
  }
  std::map<Partition, Rational> out;
  for (const auto &[lambda, orbit] : orbits) {
    Exponent e(static_cast<std::size_t>(p.num_vars()), 0);
    std::copy(lambda.parts().begin(), lambda.parts().end(), e.begin());
    if (orbit.seen != orbit_size(e))
      throw std::logic_error("polynomial is not symmetric (orbit of " + lambda.to_string() +
                             " is incomplete)");
    out.emplace(lambda, orbit.value);
  }
  return out;
}

bool verify_triple_product(int vx, int vy, int vz, int cap) {
  if (vx < 1 || vy < 1 || vz < 1 || cap < 0)
    throw std::invalid_argument("verify_triple_product needs positive variable counts");
  const int v = vx + vy + vz;
  const int total_cap = 3 * cap;

  auto lhs = SparsePoly::constant(v, total_cap, 1);
  for (int i = 0; i < vx; ++i)
    for (int j = 0; j < vy; ++j)
      for (int k = 0; k < vz; ++k) {
        auto factor = SparsePoly::constant(v, total_cap, 1);
        Exponent e(static_cast<std::size_t>(v), 0);
        e[static_cast<std::size_t>(i)] = 1;
        e[static_cast<std::size_t>(vx + j)] = 1;
        e[static_cast<std::size_t>(vx + vy + k)] = 1;
        factor.add_term(e, 1);
        lhs = mul_truncated(lhs, factor, total_cap);
      }

  SparsePoly rhs(v, total_cap);
  for (int n = 0; n <= cap; ++n) {
    for (const auto &lambda : enumerate_partitions(n)) {
      auto term = mul_truncated(power_sum_block(lambda, v, 0, vx, total_cap),
                                power_sum_block(lambda, v, vx, vy, total_cap), total_cap);
      term = mul_truncated(term, power_sum_block(lambda, v, vx + vy, vz, total_cap), total_cap);
      term *= Rational(epsilon(lambda)) / Rational(z(lambda));
      rhs += term;
    }
  }

  std::set<Exponent, GradedLex> support;
  for (const auto *poly : {&lhs, &rhs})
    for (const auto &[e, c] : poly->terms())
      support.insert(e);
  for (const auto &e : support) {
    int dx = partial_degree(e, 0, vx);
    if (dx > cap || partial_degree(e, vx, vy) != dx || partial_degree(e, vx + vy, vz) != dx)
      continue;
    if (lhs.coefficient(e) != rhs.coefficient(e))
      return false;
  }
  return true;
}

} // namespace tsf
