#pragma once

#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include "combpoly/exactring.hpp"

namespace combpoly {

/// Dense univariate polynomial in x with unbounded integer coefficients.
///
/// Coefficients are stored in ascending powers and kept normalized: there
/// is never a trailing zero, and the zero polynomial has no coefficients.
/// Values are immutable from the outside; every operation returns a new
/// normalized polynomial.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Int> coeffs);
  UniPoly(std::initializer_list<long> coeffs);
  static UniPoly constant(const Int& c);
  static UniPoly monomial(const Int& c, unsigned degree);
  static UniPoly x() { return monomial(Int(1), 1); }

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Coefficient of x^k; zero outside the stored range.
  Int coeff(long k) const;
  const std::vector<Int>& coeffs() const noexcept { return coeffs_; }

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  UniPoly& operator*=(const Int& c);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const Int& c) { return a *= c; }
  friend UniPoly operator*(const Int& c, UniPoly a) { return a *= c; }
  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

  UniPoly pow(unsigned e) const;
  /// Formal derivative d/dx.
  UniPoly derivative() const;
  /// p(-x).
  UniPoly reflect() const;
  /// p(x^2).
  UniPoly compose_square() const;
  /// x^n p(1/x); requires n >= degree().
  UniPoly reversed(unsigned n) const;
  Int evaluate(const Int& at) const;
  /// Sum of coefficients, p(1).
  Int value_at_one() const;

  /// Returns r with q*r == *this. Throws DivisionByZero for q == 0 and
  /// NotDivisible when integer long division leaves a remainder.
  UniPoly exact_div(const UniPoly& q) const;
  bool divisible_by(const UniPoly& q) const;
  /// Largest m with q^m dividing *this (q non-constant, *this nonzero).
  unsigned multiplicity(const UniPoly& q) const;

  /// Human-readable form such as "x+11x^2+11x^3+x^4".
  std::string to_string() const;

 private:
  void normalize();
  std::vector<Int> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const UniPoly& p);

UniPoly upoly_mul(const UniPoly& p, const UniPoly& q);
UniPoly upoly_exact_div(const UniPoly& p, const UniPoly& q);

/// den^clear_power * p(num/den), computed without leaving the integers.
/// Throws PowerTooSmall when clear_power < degree(p).
UniPoly rational_substitute(const UniPoly& p, const UniPoly& num,
                            const UniPoly& den, unsigned clear_power);

}  // namespace combpoly
