#include "tsf/petrie.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "tsf/matrix.hpp"
#include "tsf/polyring.hpp"

namespace tsf {

namespace {

// Exponent vectors alpha in [0, top]^len summing to n, visited in lex order.
template <typename Visit>
void for_each_bounded_composition(std::vector<int> &alpha, std::size_t pos, int remaining, int top,
                                  Visit &&visit) {
  if (pos == alpha.size()) {
    if (remaining == 0)
      visit(alpha);
    return;
  }
  int slots_after = static_cast<int>(alpha.size() - pos - 1);
  for (int a = 0; a <= std::min(top, remaining); ++a) {
    if (remaining - a > top * slots_after)
      continue;
    alpha[pos] = a;
    for_each_bounded_composition(alpha, pos + 1, remaining - a, top, visit);
  }
  alpha[pos] = 0;
}

SymFunc from_table(const std::map<Partition, Rational> &table, int n) {
  SymFunc f(BasisTag::m(), n);
  for (const auto &[lambda, c] : table)
    f.set(lambda, c);
  return f;
}

struct CountProblem {
  std::vector<int> rows;
  std::vector<int> cols;
  int period = 0; // d + 1 for congruent mode
  int bound = 0;  // per-entry cap for bounded mode
  CountMode mode = CountMode::Bounded;

  bool allowed(int value) const {
    if (mode == CountMode::Bounded)
      return value <= bound;
    int r = value % period;
    return r == 0 || r == 1;
  }

  int entry_cap(int row_res, int col_res) const {
    int cap = std::min(row_res, col_res);
    return mode == CountMode::Bounded ? std::min(cap, bound) : cap;
  }
};

// Fills cell (i, j) with running residual sums; the last column of each row
// and the whole last row are forced by the residuals.
void count_cells(const CountProblem &pb, std::size_t i, std::size_t j, std::vector<int> &row_res,
                 std::vector<int> &col_res, Integer &count) {
  const std::size_t nr = pb.rows.size(), nc = pb.cols.size();
  if (i == nr) {
    ++count;
    return;
  }
  auto next = [&](int value) {
    row_res[i] -= value;
    col_res[j] -= value;
    if (j + 1 == nc)
      count_cells(pb, i + 1, 0, row_res, col_res, count);
    else
      count_cells(pb, i, j + 1, row_res, col_res, count);
    row_res[i] += value;
    col_res[j] += value;
  };
  if (i + 1 == nr) {
    int value = col_res[j];
    if (value > row_res[i] || !pb.allowed(value))
      return;
    if (j + 1 == nc && value != row_res[i])
      return;
    next(value);
    return;
  }
  if (j + 1 == nc) {
    int value = row_res[i];
    if (value > col_res[j] || !pb.allowed(value))
      return;
    next(value);
    return;
  }
  if (pb.mode == CountMode::Bounded) {
    int reachable = 0;
    for (std::size_t k = j; k < nc; ++k)
      reachable += std::min(pb.bound, col_res[k]);
    if (reachable < row_res[i])
      return;
  }
  for (int value = 0; value <= pb.entry_cap(row_res[i], col_res[j]); ++value)
    if (pb.allowed(value))
      next(value);
}

Integer count_with(CountProblem pb, const Partition &lambda, const Partition &mu) {
  if (lambda.weight() != mu.weight())
    return 0;
  if (lambda.empty())
    return 1;
  pb.rows = lambda.parts();
  pb.cols = mu.parts();
  auto row_res = pb.rows;
  auto col_res = pb.cols;
  Integer count = 0;
  count_cells(pb, 0, 0, row_res, col_res, count);
  return count;
}

int permutation_sign(const std::vector<int> &perm) {
  int sign = 1;
  for (std::size_t a = 0; a < perm.size(); ++a)
    for (std::size_t b = a + 1; b < perm.size(); ++b)
      if (perm[a] > perm[b])
        sign = -sign;
  return sign;
}

// prod_k (1 + x_k + ... + x_k^top) over the variables [offset, offset + count).
SparsePoly generating_block(int top, int num_vars, int offset, int count, int cap) {
  auto result = SparsePoly::constant(num_vars, cap, 1);
  for (int k = 0; k < count; ++k) {
    SparsePoly factor(num_vars, cap);
    Exponent e(static_cast<std::size_t>(num_vars), 0);
    for (int power = 0; power <= top; ++power) {
      e[static_cast<std::size_t>(offset + k)] = power;
      factor.add_term(e, 1);
    }
    result = mul_truncated(result, factor, cap);
  }
  return result;
}

SparsePoly monomial_block(const Partition &lambda, int num_vars, int offset, int count, int cap) {
  SparsePoly out(num_vars, cap);
  if (lambda.length() > count)
    return out;
  std::vector<int> block(static_cast<std::size_t>(count), 0);
  std::copy(lambda.parts().begin(), lambda.parts().end(), block.begin());
  std::sort(block.begin(), block.end());
  Exponent e(static_cast<std::size_t>(num_vars), 0);
  do {
    std::copy(block.begin(), block.end(), e.begin() + offset);
    out.add_term(e, 1);
  } while (std::next_permutation(block.begin(), block.end()));
  return out;
}

} // namespace

SymFunc hd_n(Truncation d, int n) {
  if (n < 0)
    throw std::invalid_argument("negative degree");
  // Every x^alpha with 0 <= alpha_i <= d and sum n; the coefficient of m_lambda
  // is the coefficient of the sorted monomial x^lambda.
  SymFunc direct(BasisTag::m(), n);
  std::vector<int> alpha(static_cast<std::size_t>(n), 0);
  for_each_bounded_composition(alpha, 0, n, d.cap(n), [&](const std::vector<int> &a) {
    if (std::is_sorted(a.begin(), a.end(), std::greater<>()))
      direct.set(Partition::from_unsorted(a), direct.coefficient(Partition::from_unsorted(a)) + 1);
  });

  const int v = std::max(n, 1);
  auto slice = product_generating(d, v, n).homogeneous_slice(n);
  if (!(from_table(extract_monomial_coeffs(slice, n), n) == direct))
    throw std::logic_error("h_n^[d] monomial enumeration disagrees with the generating product");
  return direct;
}

SymFunc hd_lambda(Truncation d, const Partition &lambda) {
  const int n = lambda.weight();
  const int v = std::max(n, 1);
  auto generating = product_generating(d, v, n);
  auto result = SparsePoly::constant(v, n, 1);
  for (int part : lambda.parts())
    result = mul_truncated(result, generating.homogeneous_slice(part), n);
  return from_table(extract_monomial_coeffs(result, n), n);
}

SymFunc hd_via_p(Truncation d, const Partition &lambda) {
  const int n = lambda.weight();
  const auto r = matrix_p_to_m(n).entries;
  const auto column = partition_index(lambda);
  SymFunc f(BasisTag::p(), n);
  for (const auto &mu : enumerate_partitions(n)) {
    Rational c = Rational(d_coefficient(mu, d)) * r(partition_index(mu), column) / Rational(z(mu));
    f.set(mu, c);
  }
  return f;
}

Integer count_bounded_matrices(Truncation d, const Partition &lambda, const Partition &mu) {
  CountProblem pb;
  pb.mode = CountMode::Bounded;
  pb.bound = d.cap(lambda.weight());
  return count_with(pb, lambda, mu);
}

Integer count_mod_matrices(int d, const Partition &lambda, const Partition &mu) {
  if (d < 1)
    throw std::invalid_argument("congruent counting needs finite d >= 1");
  CountProblem pb;
  pb.mode = CountMode::Congruent;
  pb.period = d + 1;
  return count_with(pb, lambda, mu);
}

Integer count_matrices(Truncation d, const Partition &lambda, const Partition &mu, CountMode mode) {
  if (mode == CountMode::Bounded)
    return count_bounded_matrices(d, lambda, mu);
  if (d.is_infinite())
    throw std::invalid_argument("congruent counting needs a finite d");
  return count_mod_matrices(d.value(), lambda, mu);
}

int petrie_coefficient_det(int d, const Partition &lambda) {
  if (d < 1)
    throw std::invalid_argument("d must be >= 1");
  const auto len = static_cast<std::size_t>(lambda.length());
  RatMatrix f(len, len);
  for (std::size_t i = 0; i < len; ++i)
    for (std::size_t j = 0; j < len; ++j) {
      int k = lambda[i] - static_cast<int>(i) + static_cast<int>(j);
      f(i, j) = (k >= 0 && k <= d) ? 1 : 0;
    }
  Rational det = determinant(f);
  if (det != 0 && det != 1 && det != -1)
    throw std::logic_error("Petrie coefficient outside {-1, 0, 1} for " + lambda.to_string());
  return static_cast<int>(det.get_num().get_si());
}

int petrie_coefficient_rule(int d, const Partition &lambda) {
  if (d < 1)
    throw std::invalid_argument("d must be >= 1");
  if (lambda.largest() > d)
    return 0;
  auto padded = conjugate(lambda).parts();
  padded.resize(static_cast<std::size_t>(d), 0);
  const int period = d + 1;
  std::vector<int> residues(padded.size());
  std::vector<bool> hit(static_cast<std::size_t>(period), false);
  for (std::size_t i = 0; i < padded.size(); ++i) {
    residues[i] = (padded[i] + d - 1 - static_cast<int>(i)) % period;
    if (hit[static_cast<std::size_t>(residues[i])])
      return 0;
    hit[static_cast<std::size_t>(residues[i])] = true;
  }
  const int missing = static_cast<int>(std::find(hit.begin(), hit.end(), false) - hit.begin());
  // delta_{d+1} with `missing` removed is d, d-1, ..., 0 skipping it; the
  // position of residue x there is d - x, shifted down by one below `missing`.
  std::vector<int> positions(residues.size());
  for (std::size_t i = 0; i < residues.size(); ++i)
    positions[i] = d - residues[i] - (residues[i] < missing ? 1 : 0);
  int sign = permutation_sign(positions);
  int parity = lambda.weight() + d + missing;
  return parity % 2 == 0 ? sign : -sign;
}

bool verify_kernel(Truncation d, int vx, int vy, int cap) {
  if (vx < 1 || vy < 1 || cap < 0)
    throw std::invalid_argument("verify_kernel needs positive variable counts");
  const int v = vx + vy;
  const int total_cap = 2 * cap;
  const int top = d.cap(cap);

  auto lhs = SparsePoly::constant(v, total_cap, 1);
  for (int i = 0; i < vx; ++i)
    for (int j = 0; j < vy; ++j) {
      SparsePoly factor(v, total_cap);
      Exponent e(static_cast<std::size_t>(v), 0);
      for (int k = 0; k <= top; ++k) {
        e[static_cast<std::size_t>(i)] = k;
        e[static_cast<std::size_t>(vx + j)] = k;
        factor.add_term(e, 1);
      }
      lhs = mul_truncated(lhs, factor, total_cap);
    }

  auto generating = generating_block(top, v, 0, vx, total_cap);
  SparsePoly rhs(v, total_cap);
  for (int n = 0; n <= cap; ++n)
    for (const auto &lambda : enumerate_partitions(n)) {
      auto h = SparsePoly::constant(v, total_cap, 1);
      for (int part : lambda.parts())
        h = mul_truncated(h, generating.homogeneous_slice(part), total_cap);
      rhs += mul_truncated(h, monomial_block(lambda, v, vx, vy, total_cap), total_cap);
    }

  std::set<Exponent, GradedLex> support;
  for (const auto *poly : {&lhs, &rhs})
    for (const auto &[e, c] : poly->terms())
      support.insert(e);
  for (const auto &e : support) {
    int dx = std::accumulate(e.begin(), e.begin() + vx, 0);
    int dy = std::accumulate(e.begin() + vx, e.end(), 0);
    if (dx != dy || dx > cap)
      continue;
    if (lhs.coefficient(e) != rhs.coefficient(e))
      return false;
  }
  return true;
}

} // namespace tsf
