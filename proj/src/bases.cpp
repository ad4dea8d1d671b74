#include "tsf/bases.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <tuple>

#include "tsf/polyring.hpp"

namespace tsf {

BasisTag BasisTag::parse(std::string_view text) {
  if (text == "m")
    return m();
  if (text == "e")
    return e();
  if (text == "h")
    return h();
  if (text == "p")
    return p();
  if (text == "s")
    return s();
  if (text.starts_with("hd(") && text.ends_with(")"))
    return hd(Truncation::parse(text.substr(3, text.size() - 4)));
  throw std::invalid_argument("unknown basis '" + std::string(text) + "'");
}

std::string BasisTag::to_string() const {
  switch (kind_) {
  case Kind::M:
    return "m";
  case Kind::E:
    return "e";
  case Kind::H:
    return "h";
  case Kind::P:
    return "p";
  case Kind::S:
    return "s";
  case Kind::HD:
    return "hd(" + truncation_.to_string() + ")";
  }
  return {};
}

SymFunc::SymFunc(BasisTag basis, int degree) : basis_(basis), degree_(degree) {
  if (degree < 0)
    throw std::invalid_argument("negative degree");
}

SymFunc::SymFunc(BasisTag basis, int degree, const CoeffTable &coeffs) : SymFunc(basis, degree) {
  for (const auto &[lambda, c] : coeffs)
    set(lambda, c);
}

SymFunc SymFunc::basis_element(BasisTag basis, const Partition &lambda) {
  SymFunc f(basis, lambda.weight());
  f.set(lambda, 1);
  return f;
}

SymFunc SymFunc::from_vector(BasisTag basis, int degree, const std::vector<Rational> &coeffs) {
  const auto order = enumerate_partitions(degree);
  if (coeffs.size() != order.size())
    throw std::invalid_argument("coefficient vector length is not p(n)");
  SymFunc f(basis, degree);
  for (std::size_t i = 0; i < order.size(); ++i)
    f.set(order[i], coeffs[i]);
  return f;
}

Rational SymFunc::coefficient(const Partition &lambda) const {
  auto it = coeffs_.find(lambda);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void SymFunc::set(const Partition &lambda, const Rational &value) {
  if (lambda.weight() != degree_)
    throw std::invalid_argument("partition " + lambda.to_string() + " is not of degree " +
                                std::to_string(degree_));
  if (value == 0) {
    coeffs_.erase(lambda);
    return;
  }
  auto &slot = coeffs_[lambda];
  slot = value;
  slot.canonicalize();
}

std::vector<Rational> SymFunc::to_vector() const {
  const auto order = enumerate_partitions(degree_);
  std::vector<Rational> out(order.size());
  for (std::size_t i = 0; i < order.size(); ++i)
    out[i] = coefficient(order[i]);
  return out;
}

TransitionMatrix inverse(const TransitionMatrix &a) {
  return {a.degree, a.target, a.source, inverse(a.entries)};
}

TransitionMatrix compose(const TransitionMatrix &a, const TransitionMatrix &b) {
  if (a.degree != b.degree)
    throw std::invalid_argument("cannot compose transition matrices of different degrees");
  if (!(a.target == b.source))
    throw std::invalid_argument("cannot compose " + a.source.to_string() + "->" +
                                a.target.to_string() + " with " + b.source.to_string() + "->" +
                                b.target.to_string());
  return {a.degree, a.source, b.target, multiply(a.entries, b.entries)};
}

namespace {

int ring_vars(int n) { return std::max(n, 1); }

// Rows are the m-expansions of the given polynomials, one per partition of n.
template <typename RowPoly>
RatMatrix m_expansion_rows(int n, RowPoly &&row_poly) {
  const auto order = enumerate_partitions(n);
  RatMatrix out(order.size(), order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    auto table = extract_monomial_coeffs(row_poly(order[i]), n);
    for (const auto &[mu, c] : table)
      out(i, partition_index(mu)) = c;
  }
  return out;
}

// M(h, m) or M(e, m) from products of slices of prod_k (1 + x_k + ... + x_k^d).
RatMatrix product_table(int n, Truncation d) {
  const int v = ring_vars(n);
  auto generating = product_generating(d, v, n);
  return m_expansion_rows(n, [&](const Partition &lambda) {
    auto result = SparsePoly::constant(v, n, 1);
    for (int part : lambda.parts())
      result = mul_truncated(result, generating.homogeneous_slice(part), n);
    return result;
  });
}

RatMatrix p_to_m_entries(int n) {
  const int v = ring_vars(n);
  return m_expansion_rows(n, [&](const Partition &lambda) { return power_sum(lambda, v, n); });
}

void count_tableaux(const Partition &shape, std::vector<std::vector<int>> &grid, std::size_t row,
                    std::size_t col, std::vector<int> &remaining, Integer &count) {
  if (row == static_cast<std::size_t>(shape.length())) {
    ++count;
    return;
  }
  auto [next_row, next_col] = col + 1 == static_cast<std::size_t>(shape[row])
                                  ? std::pair{row + 1, std::size_t{0}}
                                  : std::pair{row, col + 1};
  int low = 0;
  if (col > 0)
    low = grid[row][col - 1];
  if (row > 0)
    low = std::max(low, grid[row - 1][col] + 1);
  for (int value = std::max(low, 0); value < static_cast<int>(remaining.size()); ++value) {
    if (remaining[static_cast<std::size_t>(value)] == 0)
      continue;
    --remaining[static_cast<std::size_t>(value)];
    grid[row][col] = value;
    count_tableaux(shape, grid, next_row, next_col, remaining, count);
    ++remaining[static_cast<std::size_t>(value)];
  }
}

// Expands det(h_{lambda_i - i + j}) by rows; each surviving permutation
// contributes sign * h_{sorted indices}.
void jacobi_trudi_terms(const Partition &lambda, std::size_t row, std::vector<bool> &used,
                        std::vector<int> &indices, int sign, std::vector<Rational> &h_coeffs) {
  const auto len = static_cast<std::size_t>(lambda.length());
  if (row == len) {
    h_coeffs[partition_index(Partition::from_unsorted(indices))] += sign;
    return;
  }
  int inversions_before = 0;
  for (std::size_t col = 0; col < len; ++col) {
    if (used[col]) {
      ++inversions_before;
      continue;
    }
    int index = lambda[row] - static_cast<int>(row) + static_cast<int>(col);
    // Columns not yet used to the left of col each add one inversion.
    int inversions = static_cast<int>(col) - inversions_before;
    if (index >= 0) {
      used[col] = true;
      indices.push_back(index);
      jacobi_trudi_terms(lambda, row + 1, used, indices, inversions % 2 == 0 ? sign : -sign,
                         h_coeffs);
      indices.pop_back();
      used[col] = false;
    }
  }
}

struct CacheKey {
  int n;
  std::string source;
  std::string target;
  auto operator<=>(const CacheKey &) const = default;
};

class TransitionCache {
public:
  template <typename Build>
  TransitionMatrix get(const CacheKey &key, Build &&build) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = entries_.find(key); it != entries_.end())
        return *it->second;
    }
    auto built = std::make_shared<const TransitionMatrix>(build());
    std::unique_lock lock(mutex_);
    auto [it, inserted] = entries_.try_emplace(key, std::move(built));
    return *it->second;
  }

private:
  std::shared_mutex mutex_;
  std::map<CacheKey, std::shared_ptr<const TransitionMatrix>> entries_;
};

TransitionCache &cache() {
  static TransitionCache instance;
  return instance;
}

TransitionMatrix memoized(int n, BasisTag source, BasisTag target,
                          const std::function<RatMatrix()> &build) {
  return cache().get({n, source.to_string(), target.to_string()}, [&] {
    return TransitionMatrix{n, source, target, build()};
  });
}

// M(B, m) for a classical basis B, each by its own direct construction.
TransitionMatrix classical_to_m(int n, BasisTag basis) {
  switch (basis.kind()) {
  case BasisTag::Kind::M:
    return {n, basis, BasisTag::m(), RatMatrix::identity(partition_count(n))};
  case BasisTag::Kind::P:
    return matrix_p_to_m(n);
  case BasisTag::Kind::S:
    return kostka_matrix(n);
  case BasisTag::Kind::H:
    return memoized(n, basis, BasisTag::m(), [n] { return product_table(n, Truncation::infinity()); });
  case BasisTag::Kind::E:
    return memoized(n, basis, BasisTag::m(), [n] { return product_table(n, Truncation::finite(1)); });
  case BasisTag::Kind::HD:
    break;
  }
  throw std::invalid_argument("not a classical basis: " + basis.to_string());
}

TransitionMatrix hd_to_m(int n, BasisTag basis) {
  return transition_hd(n, basis.truncation(), BasisTag::m());
}

} // namespace

TransitionMatrix matrix_p_to_m(int n) {
  return memoized(n, BasisTag::p(), BasisTag::m(), [n] { return p_to_m_entries(n); });
}

Integer kostka_number(const Partition &lambda, const Partition &mu) {
  if (lambda.weight() != mu.weight())
    return 0;
  std::vector<std::vector<int>> grid;
  for (int part : lambda.parts())
    grid.emplace_back(static_cast<std::size_t>(part), 0);
  std::vector<int> remaining(mu.parts());
  Integer count = 0;
  if (lambda.empty())
    return 1;
  count_tableaux(lambda, grid, 0, 0, remaining, count);
  return count;
}

RatMatrix kostka_by_jacobi_trudi(int n) {
  const auto order = enumerate_partitions(n);
  const auto h_to_m = classical_to_m(n, BasisTag::h()).entries;
  RatMatrix out(order.size(), order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    std::vector<Rational> h_coeffs(order.size());
    std::vector<bool> used(static_cast<std::size_t>(order[i].length()), false);
    std::vector<int> indices;
    jacobi_trudi_terms(order[i], 0, used, indices, 1, h_coeffs);
    auto row = row_times(h_coeffs, h_to_m);
    for (std::size_t j = 0; j < order.size(); ++j)
      out(i, j) = row[j];
  }
  return out;
}

TransitionMatrix kostka_matrix(int n) {
  return memoized(n, BasisTag::s(), BasisTag::m(), [n] {
    const auto order = enumerate_partitions(n);
    RatMatrix out(order.size(), order.size());
    for (std::size_t i = 0; i < order.size(); ++i)
      for (std::size_t j = 0; j < order.size(); ++j)
        out(i, j) = Rational(kostka_number(order[i], order[j]));
    if (!(out == kostka_by_jacobi_trudi(n)))
      throw std::logic_error("Kostka numbers disagree with the Jacobi-Trudi expansion at n=" +
                             std::to_string(n));
    return out;
  });
}

RatMatrix diagonal_z(int n) {
  std::vector<Rational> d;
  for (const auto &lambda : enumerate_partitions(n))
    d.emplace_back(z(lambda));
  return RatMatrix::diagonal(d);
}

RatMatrix diagonal_eps(int n) {
  std::vector<Rational> d;
  for (const auto &lambda : enumerate_partitions(n))
    d.emplace_back(epsilon(lambda));
  return RatMatrix::diagonal(d);
}

RatMatrix diagonal_D(int n, Truncation d) {
  std::vector<Rational> diag;
  for (const auto &lambda : enumerate_partitions(n))
    diag.emplace_back(d_coefficient(lambda, d));
  return RatMatrix::diagonal(diag);
}

TransitionMatrix transition_hd(int n, Truncation d, BasisTag target) {
  if (target.is_truncated())
    throw std::invalid_argument("transition_hd target must be one of m, e, h, p, s");
  return memoized(n, BasisTag::hd(d), target, [&] {
    const RatMatrix r = matrix_p_to_m(n).entries;
    const RatMatrix rt = transpose(r);
    const RatMatrix z_inv = inverse(diagonal_z(n));
    const RatMatrix dd = diagonal_D(n, d);
    switch (target.kind()) {
    case BasisTag::Kind::P:
      return multiply(multiply(rt, z_inv), dd);
    case BasisTag::Kind::M:
      return multiply(multiply(multiply(rt, z_inv), dd), r);
    case BasisTag::Kind::H:
      return multiply(multiply(rt, dd), inverse(rt));
    case BasisTag::Kind::E:
      return multiply(multiply(multiply(rt, dd), diagonal_eps(n)), inverse(rt));
    case BasisTag::Kind::S:
      return multiply(multiply(multiply(multiply(rt, z_inv), dd), r),
                      inverse(kostka_matrix(n).entries));
    case BasisTag::Kind::HD:
      break;
    }
    throw std::logic_error("unreachable");
  });
}

TransitionMatrix transition(int n, BasisTag source, BasisTag target) {
  if (n < 0)
    throw std::invalid_argument("negative degree");
  if (source == target)
    return {n, source, target, RatMatrix::identity(partition_count(n))};
  if (source.is_truncated() && !target.is_truncated())
    return transition_hd(n, source.truncation(), target);
  return memoized(n, source, target, [&] {
    auto to_m = [n](BasisTag b) { return b.is_truncated() ? hd_to_m(n, b) : classical_to_m(n, b); };
    if (target.kind() == BasisTag::Kind::M)
      return to_m(source).entries;
    return multiply(to_m(source).entries, inverse(to_m(target).entries));
  });
}

SymFunc convert(const SymFunc &f, BasisTag target) {
  auto m = transition(f.degree(), f.basis(), target);
  return SymFunc::from_vector(target, f.degree(), row_times(f.to_vector(), m.entries));
}

SymFunc product(const SymFunc &f, const SymFunc &g) {
  const int n = f.degree() + g.degree();
  const int v = ring_vars(n);
  auto as_poly = [&](const SymFunc &a) {
    SparsePoly poly(v, n);
    const auto in_m = convert(a, BasisTag::m());
    for (const auto &[lambda, c] : in_m.coeffs()) {
      auto term = monomial_symmetric(lambda, v, n);
      term *= c;
      poly += term;
    }
    return poly;
  };
  auto table = extract_monomial_coeffs(mul_truncated(as_poly(f), as_poly(g), n), n);
  CoeffTable coeffs(table.begin(), table.end());
  return SymFunc(BasisTag::m(), n, coeffs);
}

} // namespace tsf
