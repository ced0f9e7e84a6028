#include "combpoly/exactring.hpp"

#include <vector>

#include "combpoly/errors.hpp"

namespace combpoly {

Int binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return Int(0);
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

Int factorial(long n) {
  if (n < 0) throw RangeError("factorial of negative argument");
  Int r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Int pow_int(const Int& base, unsigned long exponent) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

Int stirling2(long n, long k) {
  if (n < 0 || k < 0) throw RangeError("stirling2 with negative argument");
  if (k > n) {
    throw RangeError("stirling2(" + std::to_string(n) + ", " +
                     std::to_string(k) + "): k exceeds n");
  }
  // Row-by-row triangle S(i,j) = j*S(i-1,j) + S(i-1,j-1).
  std::vector<Int> row{Int(1)};
  for (long i = 1; i <= n; ++i) {
    std::vector<Int> next(static_cast<size_t>(i) + 1, Int(0));
    for (long j = 1; j <= i; ++j) {
      Int v = (j < i) ? Int(j * row[static_cast<size_t>(j)]) : Int(0);
      v += row[static_cast<size_t>(j - 1)];
      next[static_cast<size_t>(j)] = v;
    }
    row = std::move(next);
  }
  return row[static_cast<size_t>(k)];
}

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Int rat_to_int(const Rat& r) {
  if (r.get_den() != 1) {
    throw NonIntegerResult("value " + to_string(r) + " is not an integer");
  }
  return r.get_num();
}

std::string to_string(const Rat& v) { return v.get_str(); }

bool fits_double_exactly(const Int& v) {
  return mpz_sizeinbase(v.get_mpz_t(), 2) <= 53;
}

}  // namespace combpoly
