#pragma once

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "tsf/matrix.hpp"
#include "tsf/partition.hpp"
#include "tsf/rational.hpp"

namespace tsf {

/// One of the bases m, e, h, p, s of the degree-n symmetric functions, or
/// the truncated homogeneous basis hd(d). hd(1) and hd(inf) are tags of
/// their own and are never rewritten to e or h.
class BasisTag {
public:
  enum class Kind { M, E, H, P, S, HD };

  static BasisTag m() { return BasisTag(Kind::M); }
  static BasisTag e() { return BasisTag(Kind::E); }
  static BasisTag h() { return BasisTag(Kind::H); }
  static BasisTag p() { return BasisTag(Kind::P); }
  static BasisTag s() { return BasisTag(Kind::S); }
  static BasisTag hd(Truncation d) { return BasisTag(Kind::HD, d); }

  /// "m", "e", "h", "p", "s", "hd(2)", "hd(inf)".
  static BasisTag parse(std::string_view text);

  Kind kind() const { return kind_; }
  bool is_truncated() const { return kind_ == Kind::HD; }
  /// Only meaningful for hd.
  Truncation truncation() const { return truncation_; }

  std::string to_string() const;

  friend bool operator==(const BasisTag &, const BasisTag &) = default;

private:
  explicit BasisTag(Kind kind, Truncation d = Truncation::infinity()) : kind_(kind), truncation_(d) {}
  Kind kind_;
  Truncation truncation_;
};

/// Coefficients keyed by partitions in canonical (descending) order.
using CoeffTable = std::map<Partition, Rational, std::greater<>>;

/// A homogeneous symmetric function of degree n in one basis. Zero
/// coefficients are never stored.
class SymFunc {
public:
  SymFunc(BasisTag basis, int degree);
  SymFunc(BasisTag basis, int degree, const CoeffTable &coeffs);

  /// The single basis element indexed by lambda.
  static SymFunc basis_element(BasisTag basis, const Partition &lambda);
  /// Coefficients in canonical partition order.
  static SymFunc from_vector(BasisTag basis, int degree, const std::vector<Rational> &coeffs);

  const BasisTag &basis() const { return basis_; }
  int degree() const { return degree_; }
  const CoeffTable &coeffs() const { return coeffs_; }

  Rational coefficient(const Partition &lambda) const;
  void set(const Partition &lambda, const Rational &value);
  std::vector<Rational> to_vector() const;

  friend bool operator==(const SymFunc &, const SymFunc &) = default;

private:
  BasisTag basis_;
  int degree_;
  CoeffTable coeffs_;
};

/// Row lambda holds the expansion of source_lambda in the target basis;
/// rows and columns follow enumerate_partitions(degree).
struct TransitionMatrix {
  int degree = 0;
  BasisTag source = BasisTag::m();
  BasisTag target = BasisTag::m();
  RatMatrix entries;

  friend bool operator==(const TransitionMatrix &, const TransitionMatrix &) = default;
};

/// Target-to-source matrix. Throws std::domain_error if singular.
TransitionMatrix inverse(const TransitionMatrix &a);
/// A: X -> Y and B: Y -> Z gives X -> Z. Throws on mismatched tags or degrees.
TransitionMatrix compose(const TransitionMatrix &a, const TransitionMatrix &b);

/// R = M(p, m), obtained by expanding each p_lambda in n variables.
TransitionMatrix matrix_p_to_m(int n);

/// Number of semistandard tableaux of shape lambda and content mu.
Integer kostka_number(const Partition &lambda, const Partition &mu);

/// K = M(s, m) by tableau enumeration, cross-checked against the
/// Jacobi-Trudi expansion (std::logic_error on disagreement).
TransitionMatrix kostka_matrix(int n);

/// M(s, m) from det(h_{lambda_i - i + j}) expanded through the h basis.
RatMatrix kostka_by_jacobi_trudi(int n);

RatMatrix diagonal_z(int n);
RatMatrix diagonal_eps(int n);
RatMatrix diagonal_D(int n, Truncation d);

/// Expansion of hd(d)_lambda in target, evaluated from the factorizations
///   p: R' z^-1 D      m: R' z^-1 D R      h: R' D R*
///   e: R' D eps R*    s: R' z^-1 D R K^-1
/// with R* = (R')^-1. target must be one of m, e, h, p, s.
TransitionMatrix transition_hd(int n, Truncation d, BasisTag target);

/// M(source, target) for any pair of tags. Classical-to-classical matrices
/// come from direct expansions (e and h by brute-force polynomial products,
/// p by power sums, s by Kostka numbers); anything involving hd(d) uses
/// transition_hd. Results are memoized.
TransitionMatrix transition(int n, BasisTag source, BasisTag target);

SymFunc convert(const SymFunc &f, BasisTag target);

/// f * g in the m basis, multiplied as polynomials in deg f + deg g variables.
SymFunc product(const SymFunc &f, const SymFunc &g);

} // namespace tsf
