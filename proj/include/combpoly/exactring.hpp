#pragma once

// Exact scalar arithmetic: unbounded integers and reduced rationals backed
// by GMP, plus the integer sequences every family builder needs.

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace combpoly {

using Int = mpz_class;
/// Always canonical: lowest terms, positive denominator, zero is 0/1.
using Rat = mpq_class;

Int binomial(long n, long k);  // 0 when k < 0 or k > n
Int factorial(long n);
Int pow_int(const Int& base, unsigned long exponent);

/// Stirling number of the second kind. Throws RangeError when k > n or
/// either argument is negative.
Int stirling2(long n, long k);

/// Exact reduced rational; throws DivisionByZero on a zero denominator.
Rat make_rat(const Int& num, const Int& den);

/// Returns the integer value of `r`, or throws NonIntegerResult.
Int rat_to_int(const Rat& r);

inline std::string to_string(const Int& v) { return v.get_str(); }
std::string to_string(const Rat& v);

/// True when |v| < 2^53, i.e. exactly representable as an IEEE double.
bool fits_double_exactly(const Int& v);

}  // namespace combpoly
