#pragma once

#include <map>
#include <vector>

#include "tsf/partition.hpp"
#include "tsf/rational.hpp"

namespace tsf {

using Exponent = std::vector<int>;

/// Graded lexicographic: lower total degree first, ties broken lexicographically.
struct GradedLex {
  bool operator()(const Exponent &a, const Exponent &b) const;
};

/// Sparse multivariate polynomial over Q, truncated at a total-degree cap.
/// Zero coefficients are never stored, so equality is term-table equality.
class SparsePoly {
public:
  using Terms = std::map<Exponent, Rational, GradedLex>;

  SparsePoly(int num_vars, int degree_cap);

  static SparsePoly constant(int num_vars, int degree_cap, const Rational &value);
  /// x_index (0-based).
  static SparsePoly variable(int num_vars, int degree_cap, int index);

  int num_vars() const { return num_vars_; }
  int degree_cap() const { return degree_cap_; }
  const Terms &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Zero if the exponent is absent.
  Rational coefficient(const Exponent &exponent) const;

  /// Adds to a term; silently drops it if it exceeds the cap.
  void add_term(const Exponent &exponent, const Rational &value);

  /// Terms of total degree exactly n.
  SparsePoly homogeneous_slice(int n) const;

  SparsePoly &operator+=(const SparsePoly &other);
  SparsePoly &operator-=(const SparsePoly &other);
  SparsePoly &operator*=(const Rational &scalar);

  friend bool operator==(const SparsePoly &, const SparsePoly &) = default;

private:
  int num_vars_;
  int degree_cap_;
  Terms terms_;
};

/// Product with every term of total degree > cap discarded. The result
/// carries degree_cap = cap.
SparsePoly mul_truncated(const SparsePoly &a, const SparsePoly &b, int cap);

/// prod_{k=1}^{v} (1 + x_k + ... + x_k^{min(d, cap)}) truncated at cap.
SparsePoly product_generating(Truncation d, int num_vars, int cap);

/// m_lambda in num_vars variables (zero when l(lambda) > num_vars).
SparsePoly monomial_symmetric(const Partition &lambda, int num_vars, int cap);

/// p_lambda in num_vars variables.
SparsePoly power_sum(const Partition &lambda, int num_vars, int cap);

/// Monomial-basis coefficients of the degree-n slice, indexed by partitions
/// of n with at most num_vars parts. Throws std::logic_error when the slice
/// is not symmetric and std::invalid_argument when num_vars < n.
std::map<Partition, Rational> extract_monomial_coeffs(const SparsePoly &p, int n);

/// Compares prod_{i,j,k}(1 + x_i y_j z_k) against
/// sum_{|lambda| <= cap} eps_lambda z_lambda^{-1} p_lambda(x) p_lambda(y) p_lambda(z)
/// on every term whose x-, y- and z-degrees coincide and are at most cap.
bool verify_triple_product(int vx, int vy, int vz, int cap);

} // namespace tsf
