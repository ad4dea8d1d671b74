#pragma once

#include "tsf/bases.hpp"
#include "tsf/partition.hpp"

namespace tsf {

/// The involution e_n -> h_n, acting as p_lambda -> eps_lambda p_lambda.
/// The result is expressed in f's basis.
SymFunc omega(const SymFunc &f);

/// The endomorphism e_n -> h_n^[d], acting diagonally on power sums with
/// eigenvalue eps_lambda D_lambda^[d]. The result is expressed in f's basis.
SymFunc omega_d(Truncation d, const SymFunc &f);

/// sum_{k=0}^{n} (-1)^{n-k} omega(h_k^[d]) h_{n-k}^[d] == [n == 0] for every
/// n <= n_max, products taken in the m basis.
bool verify_main2(int d, int n_max);

/// omega^[d] omega^[d'] p_lambda == omega^[d'] omega^[d] p_lambda for every
/// lambda |- n <= n_max.
bool verify_commutation(Truncation d, Truncation d_prime, int n_max);

/// omega(h_lambda^[d]) in the m basis, through the p basis. Odd d only;
/// std::invalid_argument otherwise.
SymFunc omega_of_hd(int d, const Partition &lambda);

} // namespace tsf
