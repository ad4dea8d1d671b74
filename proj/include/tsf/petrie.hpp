#pragma once

#include "tsf/bases.hpp"
#include "tsf/partition.hpp"
#include "tsf/rational.hpp"

namespace tsf {

/// Entry constraint for matrix counting: entries in [0, d], or entries
/// congruent to 0 or 1 modulo d + 1.
enum class CountMode { Bounded, Congruent };

/// h_n^[d] in the m basis: the sum of m_lambda over lambda |- n with
/// lambda_1 <= d. Cross-checked against the degree-n slice of
/// prod_k (1 + x_k + ... + x_k^d); std::logic_error on disagreement.
SymFunc hd_n(Truncation d, int n);

/// h_lambda^[d] in the m basis, multiplied out in |lambda| variables.
SymFunc hd_lambda(Truncation d, const Partition &lambda);

/// h_lambda^[d] = sum_mu z_mu^-1 D_mu^[d] R_{mu lambda} p_mu.
SymFunc hd_via_p(Truncation d, const Partition &lambda);

/// Number of nonnegative integer matrices with row sums lambda, column sums
/// mu and entries at most d. Zero when the weights differ.
Integer count_bounded_matrices(Truncation d, const Partition &lambda, const Partition &mu);

/// Number of nonnegative integer matrices with row sums lambda, column sums
/// mu and every entry congruent to 0 or 1 modulo d + 1.
Integer count_mod_matrices(int d, const Partition &lambda, const Partition &mu);

Integer count_matrices(Truncation d, const Partition &lambda, const Partition &mu, CountMode mode);

/// det(f_{lambda_i - i + j}) with f_k = 1 for 0 <= k <= d and 0 otherwise.
int petrie_coefficient_det(int d, const Partition &lambda);

/// The same coefficient from the residues of lambda' + delta_d modulo d + 1.
int petrie_coefficient_rule(int d, const Partition &lambda);

/// Compares prod_{i,j} (1 + x_i y_j + ... + x_i^d y_j^d) with
/// sum_{|lambda| <= cap} h_lambda^[d](x) m_lambda(y) on all terms of
/// bidegree (k, k), k <= cap.
bool verify_kernel(Truncation d, int vx, int vy, int cap);

} // namespace tsf
