#include "tsf/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace tsf {

namespace {

// Quotient of a by the monic divisor b; the remainder must vanish.
IntPoly exact_divide(IntPoly a, const IntPoly &b) {
  const std::size_t db = b.size() - 1;
  IntPoly q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    Integer c = a[i];
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j)
      a[i - db + j] -= c * b[j];
  }
  if (std::any_of(a.begin(), a.end(), [](const Integer &c) { return c != 0; }))
    throw std::logic_error("cyclotomic division left a remainder");
  return q;
}

const IntPoly &cached_phi(int m) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<const IntPoly>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(m); it != cache.end())
      return *it->second;
  }
  IntPoly poly(static_cast<std::size_t>(m) + 1, 0);
  poly[0] = -1;
  poly[static_cast<std::size_t>(m)] = 1;
  for (int k = 1; k < m; ++k)
    if (m % k == 0)
      poly = exact_divide(poly, cached_phi(k));
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.try_emplace(m, std::make_unique<const IntPoly>(std::move(poly)));
  return *it->second;
}

void reduce(std::vector<Rational> &coeffs, const IntPoly &phi) {
  const std::size_t deg = phi.size() - 1;
  for (std::size_t i = coeffs.size(); i-- > deg;) {
    if (coeffs[i] == 0)
      continue;
    Rational c = coeffs[i];
    for (std::size_t j = 0; j <= deg; ++j)
      coeffs[i - deg + j] -= c * phi[j];
  }
  coeffs.resize(deg);
}

} // namespace

IntPoly cyclotomic_polynomial(int m) {
  if (m < 1)
    throw std::invalid_argument("cyclotomic polynomial order must be positive");
  return cached_phi(m);
}

int euler_phi(int m) { return static_cast<int>(cyclotomic_polynomial(m).size()) - 1; }

CycNum::CycNum(int order) : order_(order), coeffs_(static_cast<std::size_t>(euler_phi(order))) {}

CycNum::CycNum(int order, const Rational &value) : CycNum(order) { coeffs_[0] = value; }

CycNum CycNum::root_power(int order, long k) {
  long r = k % order;
  if (r < 0)
    r += order;
  std::vector<Rational> coeffs(static_cast<std::size_t>(r) + 1);
  coeffs[static_cast<std::size_t>(r)] = 1;
  return from_coeffs(order, std::move(coeffs));
}

CycNum CycNum::from_coeffs(int order, std::vector<Rational> coeffs) {
  CycNum out(order);
  const auto &phi = cyclotomic_polynomial(order);
  if (coeffs.size() < phi.size() - 1)
    coeffs.resize(phi.size() - 1);
  reduce(coeffs, phi);
  out.coeffs_ = std::move(coeffs);
  return out;
}

bool CycNum::is_rational() const {
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational &c) { return c == 0; });
}

Rational CycNum::to_rational() const {
  if (!is_rational())
    throw std::domain_error("cyclotomic number is not rational");
  return coeffs_[0];
}

CycNum CycNum::embed(int larger_order) const {
  if (larger_order % order_ != 0)
    throw std::invalid_argument("embedding order must be a multiple of the source order");
  const std::size_t step = static_cast<std::size_t>(larger_order / order_);
  std::vector<Rational> out(step * coeffs_.size() + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    out[i * step] = coeffs_[i];
  return from_coeffs(larger_order, std::move(out));
}

void CycNum::check_compatible(const CycNum &other) const {
  if (order_ != other.order_)
    throw std::invalid_argument("cyclotomic order mismatch (" + std::to_string(order_) + " vs " +
                                std::to_string(other.order_) + ")");
}

CycNum &CycNum::operator+=(const CycNum &other) {
  check_compatible(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    coeffs_[i] += other.coeffs_[i];
  return *this;
}

CycNum &CycNum::operator-=(const CycNum &other) {
  check_compatible(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    coeffs_[i] -= other.coeffs_[i];
  return *this;
}

CycNum &CycNum::operator*=(const CycNum &other) {
  check_compatible(other);
  std::vector<Rational> product(coeffs_.size() + other.coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0)
      continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
      product[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  reduce(product, cyclotomic_polynomial(order_));
  coeffs_ = std::move(product);
  return *this;
}

CycNum CycNum::operator-() const {
  CycNum out = *this;
  for (auto &c : out.coeffs_)
    c = -c;
  return out;
}

CycNum pow(const CycNum &base, unsigned exponent) {
  CycNum result(base.order(), 1);
  CycNum square = base;
  while (exponent > 0) {
    if (exponent & 1U)
      result *= square;
    exponent >>= 1U;
    if (exponent > 0)
      square *= square;
  }
  return result;
}

CycNum power_sum_at_roots(int d, int n) {
  if (d < 1 || n < 1)
    throw std::invalid_argument("power_sum_at_roots needs d >= 1 and n >= 1");
  const int order = d + 1;
  CycNum sum(order);
  for (int k = 1; k <= d; ++k)
    sum += CycNum::root_power(order, static_cast<long>(k) * n);
  const Rational expected = n % order == 0 ? Rational(d) : Rational(-1);
  if (!(sum == CycNum(order, expected)))
    throw std::logic_error("p_n at the roots of unity does not match its closed form");
  return sum;
}

CycNum monomial_at(const Partition &lambda, std::span<const CycNum> points) {
  if (points.empty())
    throw std::invalid_argument("monomial_at needs at least one point");
  const int order = points.front().order();
  CycNum sum(order);
  if (lambda.length() > static_cast<int>(points.size()))
    return sum;
  std::vector<int> exponents(points.size(), 0);
  std::copy(lambda.parts().begin(), lambda.parts().end(), exponents.begin());
  std::sort(exponents.begin(), exponents.end());
  do {
    CycNum term(order, 1);
    for (std::size_t k = 0; k < points.size(); ++k)
      if (exponents[k] != 0)
        term *= pow(points[k], static_cast<unsigned>(exponents[k]));
    sum += term;
  } while (std::next_permutation(exponents.begin(), exponents.end()));
  return sum;
}

std::vector<CycNum> root_tuple(int d) {
  if (d < 1)
    throw std::invalid_argument("d must be >= 1");
  std::vector<CycNum> points;
  for (int k = 1; k <= d; ++k)
    points.push_back(CycNum::root_power(d + 1, k));
  return points;
}

CycNum monomial_at_roots(int d, const Partition &lambda) {
  return monomial_at(lambda, root_tuple(d));
}

std::vector<CycNum> complete_at_roots(int d, int max_k) {
  const int order = d + 1;
  std::vector<CycNum> h;
  h.emplace_back(order, 1);
  std::vector<CycNum> p;
  for (int k = 1; k <= max_k; ++k) {
    p.push_back(power_sum_at_roots(d, k));
    CycNum acc(order);
    for (int i = 1; i <= k; ++i)
      acc += p[static_cast<std::size_t>(i - 1)] * h[static_cast<std::size_t>(k - i)];
    h.push_back(acc * CycNum(order, Rational(1, k)));
  }
  return h;
}

namespace {

CycNum laplace_det(const std::vector<std::vector<CycNum>> &m, std::size_t row,
                   std::vector<bool> &used, int order) {
  if (row == m.size())
    return CycNum(order, 1);
  CycNum total(order);
  int unused_left = 0;
  for (std::size_t col = 0; col < m.size(); ++col) {
    if (used[col])
      continue;
    const auto &entry = m[row][col];
    if (!(entry == CycNum(order))) {
      used[col] = true;
      auto minor = entry * laplace_det(m, row + 1, used, order);
      used[col] = false;
      if (unused_left % 2 == 0)
        total += minor;
      else
        total -= minor;
    }
    ++unused_left;
  }
  return total;
}

} // namespace

CycNum schur_at_roots(int d, const Partition &lambda) {
  const int order = d + 1;
  if (lambda.length() > d)
    return CycNum(order);
  const auto len = static_cast<std::size_t>(lambda.length());
  const auto h = complete_at_roots(d, lambda.largest() + static_cast<int>(len));
  std::vector<std::vector<CycNum>> jt(len, std::vector<CycNum>(len, CycNum(order)));
  for (std::size_t i = 0; i < len; ++i)
    for (std::size_t j = 0; j < len; ++j) {
      int k = lambda[i] - static_cast<int>(i) + static_cast<int>(j);
      if (k >= 0)
        jt[i][j] = h[static_cast<std::size_t>(k)];
    }
  std::vector<bool> used(len, false);
  auto value = laplace_det(jt, 0, used, order);
  if (!value.is_rational() || (value.to_rational() != 0 && value.to_rational() != 1 &&
                               value.to_rational() != -1))
    throw std::logic_error("s_lambda at the roots of unity is not in {-1, 0, 1}");
  return value;
}

IdentitySides identity_sides(int d, int d_prime, const Partition &mu) {
  if (d < 1 || d_prime < 1)
    throw std::invalid_argument("d and d' must be >= 1");
  if (mu.length() > d * d_prime)
    throw std::invalid_argument("identity requires l(mu) <= d d'");
  const int order = std::lcm(d + 1, d_prime + 1);
  auto embed_all = [order](std::vector<CycNum> points) {
    for (auto &pt : points)
      pt = pt.embed(order);
    return points;
  };
  const auto xi = embed_all(root_tuple(d));
  const auto eta = embed_all(root_tuple(d_prime));

  std::map<Partition, std::pair<CycNum, CycNum>> values;
  auto at = [&](const Partition &lambda) -> const std::pair<CycNum, CycNum> & {
    auto it = values.find(lambda);
    if (it == values.end())
      it = values.emplace(lambda, std::pair{monomial_at(lambda, xi), monomial_at(lambda, eta)}).first;
    return it->second;
  };

  IdentitySides sides{CycNum(order), CycNum(order)};
  for (const auto &lambda : enumerate_partitions(mu.weight())) {
    for (const auto &tuple : refinement_tuples(lambda, mu)) {
      CycNum left = at(lambda).first;
      CycNum right = at(lambda).second;
      for (const auto &piece : tuple) {
        left *= at(piece).second;
        right *= at(piece).first;
      }
      sides.left += left;
      sides.right += right;
    }
  }
  return sides;
}

bool identity_check(int d, int d_prime, const Partition &mu) {
  auto sides = identity_sides(d, d_prime, mu);
  return sides.left == sides.right;
}

} // namespace tsf
