#pragma once

#include <gmpxx.h>

#include <string>

namespace invharm {

using Integer = mpz_class;
using Rational = mpq_class;

/// Value of (2k-1)!! at k = 0, i.e. (-1)!!.
inline constexpr long kEmptyDoubleFactorial = 1;

Integer factorial(long n);
Integer binomial(long n, long k);

/// (m)!! for odd m >= -1; (-1)!! = kEmptyDoubleFactorial.
Integer odd_double_factorial(long m);

/// Number of involutions of an n-element set, I(n) = I(n-1) + (n-1) I(n-2).
Integer involution_count(long n);

inline std::string to_string(const Integer& z) { return z.get_str(); }

}  // namespace invharm
