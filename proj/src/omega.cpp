#include "tsf/omega.hpp"

#include <stdexcept>

#include "tsf/petrie.hpp"

namespace tsf {

namespace {

template <typename Eigenvalue>
SymFunc scale_power_sums(const SymFunc &f, Eigenvalue &&eigenvalue) {
  auto in_p = convert(f, BasisTag::p());
  SymFunc scaled(BasisTag::p(), f.degree());
  for (const auto &[lambda, c] : in_p.coeffs())
    scaled.set(lambda, c * eigenvalue(lambda));
  return convert(scaled, f.basis());
}

} // namespace

SymFunc omega(const SymFunc &f) {
  return scale_power_sums(f, [](const Partition &lambda) { return Rational(epsilon(lambda)); });
}

SymFunc omega_d(Truncation d, const SymFunc &f) {
  return scale_power_sums(f, [d](const Partition &lambda) {
    return Rational(epsilon(lambda) * d_coefficient(lambda, d));
  });
}

bool verify_main2(int d, int n_max) {
  const auto truncation = Truncation::finite(d);
  for (int n = 0; n <= n_max; ++n) {
    SymFunc total(BasisTag::m(), n);
    for (int k = 0; k <= n; ++k) {
      auto term = product(omega(hd_n(truncation, k)), hd_n(truncation, n - k));
      const int sign = (n - k) % 2 == 0 ? 1 : -1;
      for (const auto &[mu, c] : term.coeffs())
        total.set(mu, total.coefficient(mu) + sign * c);
    }
    SymFunc expected(BasisTag::m(), n);
    if (n == 0)
      expected.set(Partition{}, 1);
    if (!(total == expected))
      return false;
  }
  return true;
}

bool verify_commutation(Truncation d, Truncation d_prime, int n_max) {
  for (int n = 0; n <= n_max; ++n)
    for (const auto &lambda : enumerate_partitions(n)) {
      auto p = SymFunc::basis_element(BasisTag::p(), lambda);
      if (!(omega_d(d, omega_d(d_prime, p)) == omega_d(d_prime, omega_d(d, p))))
        return false;
    }
  return true;
}

SymFunc omega_of_hd(int d, const Partition &lambda) {
  if (d < 1 || d % 2 == 0)
    throw std::invalid_argument("omega(h^[d]) as a congruent-matrix count needs odd d");
  return convert(omega(hd_via_p(Truncation::finite(d), lambda)), BasisTag::m());
}

} // namespace tsf
