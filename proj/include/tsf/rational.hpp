#pragma once

#include <string>

#include <gmpxx.h>

namespace tsf {

using Integer = mpz_class;
using Rational = mpq_class;

// "p/q" in lowest terms, integers without a denominator.
inline std::string to_string(const Rational &q) { return q.get_str(); }
inline std::string to_string(const Integer &z) { return z.get_str(); }

Rational parse_rational(const std::string &text);

} // namespace tsf
