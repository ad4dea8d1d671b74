#pragma once

#include <span>
#include <vector>

#include "tsf/partition.hpp"
#include "tsf/rational.hpp"

namespace tsf {

/// Integer coefficients, constant term first.
using IntPoly = std::vector<Integer>;

/// Phi_m, by dividing X^m - 1 by Phi_k for every proper divisor k of m.
IntPoly cyclotomic_polynomial(int m);

int euler_phi(int m);

/// An element of Q(xi), xi a primitive m-th root of unity, stored as its
/// reduced residue modulo Phi_m in the basis 1, X, ..., X^{phi(m)-1}.
class CycNum {
public:
  /// Zero in Q(xi_m).
  explicit CycNum(int order);
  CycNum(int order, const Rational &value);

  /// xi^k for any integer k.
  static CycNum root_power(int order, long k);
  /// Reduces an arbitrary coefficient vector modulo Phi_m.
  static CycNum from_coeffs(int order, std::vector<Rational> coeffs);

  int order() const { return order_; }
  const std::vector<Rational> &coeffs() const { return coeffs_; }

  bool is_rational() const;
  /// Throws std::domain_error unless is_rational().
  Rational to_rational() const;

  /// Image under xi_m -> zeta_L^{L/m}; L must be a multiple of m.
  CycNum embed(int larger_order) const;

  CycNum &operator+=(const CycNum &other);
  CycNum &operator-=(const CycNum &other);
  CycNum &operator*=(const CycNum &other);
  CycNum operator-() const;

  friend CycNum operator+(CycNum a, const CycNum &b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum &b) { return a -= b; }
  friend CycNum operator*(CycNum a, const CycNum &b) { return a *= b; }
  friend bool operator==(const CycNum &, const CycNum &) = default;

private:
  void check_compatible(const CycNum &other) const;

  int order_;
  std::vector<Rational> coeffs_;
};

CycNum pow(const CycNum &base, unsigned exponent);

/// sum_{k=1}^{d} xi^{kn} with xi of order d + 1. Asserts the closed form
/// (d when d + 1 divides n, else -1).
CycNum power_sum_at_roots(int d, int n);

/// m_lambda evaluated at the given points (zero when l(lambda) exceeds
/// the number of points).
CycNum monomial_at(const Partition &lambda, std::span<const CycNum> points);

/// (xi, xi^2, ..., xi^d) in Q(xi), xi of order d + 1.
std::vector<CycNum> root_tuple(int d);

/// m_lambda(xi, ..., xi^d).
CycNum monomial_at_roots(int d, const Partition &lambda);

/// h_k(xi, ..., xi^d) for k = 0..max_k from Newton's identities.
std::vector<CycNum> complete_at_roots(int d, int max_k);

/// s_lambda(xi, ..., xi^d) by Jacobi-Trudi over the values of
/// complete_at_roots. Zero when l(lambda) > d.
CycNum schur_at_roots(int d, const Partition &lambda);

struct IdentitySides {
  CycNum left;
  CycNum right;
};

/// Both sides of
///   sum_{lambda, (mu^i) refining lambda} m_lambda(xi) prod_i m_{mu^i}(eta)
/// and its xi/eta mirror, evaluated in Q(zeta_L), L = lcm(d + 1, d' + 1).
/// Throws std::invalid_argument if l(mu) > d d'.
IdentitySides identity_sides(int d, int d_prime, const Partition &mu);

bool identity_check(int d, int d_prime, const Partition &mu);

} // namespace tsf
