#pragma once

#include <map>
#include <memory>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "combpoly/exactring.hpp"

namespace combpoly {

/// Ordered list of letter names shared by a family of LaurentPoly values.
/// Two sets are equal when they list the same names in the same order.
class LetterSet {
 public:
  LetterSet() : names_(std::make_shared<const std::vector<std::string>>()) {}
  explicit LetterSet(std::vector<std::string> names);

  size_t size() const noexcept { return names_->size(); }
  const std::string& name(size_t i) const { return (*names_)[i]; }
  const std::vector<std::string>& names() const noexcept { return *names_; }
  /// Index of `name`, or -1 if absent.
  int find(std::string_view name) const noexcept;
  /// Index of `name`; throws UnknownLetter if absent.
  size_t index_of(std::string_view name) const;

  friend bool operator==(const LetterSet& a, const LetterSet& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

/// Sparse multivariate Laurent polynomial over a LetterSet with unbounded
/// integer coefficients. Exponents may be negative. No zero coefficient is
/// ever stored, so equality of term maps is equality of polynomials.
class LaurentPoly {
 public:
  using Exponents = std::vector<int>;
  using TermMap = std::map<Exponents, Int>;

  explicit LaurentPoly(LetterSet letters);
  static LaurentPoly constant(const LetterSet& letters, const Int& c);
  static LaurentPoly letter(const LetterSet& letters, std::string_view name,
                            int exponent = 1);
  static LaurentPoly monomial(const LetterSet& letters, Exponents exps,
                              const Int& c);

  const LetterSet& letters() const noexcept { return letters_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  size_t term_count() const noexcept { return terms_.size(); }
  /// Coefficient of the monomial with exponent vector `exps`.
  Int coeff(const Exponents& exps) const;
  /// True when no exponent is negative.
  bool is_polynomial() const;
  /// True when the polynomial is a single term.
  bool is_monomial() const noexcept { return terms_.size() == 1; }

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Int& c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Int& c) { return a *= c; }
  friend LaurentPoly operator*(const Int& c, LaurentPoly a) { return a *= c; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.letters_ == b.letters_ && a.terms_ == b.terms_;
  }

  /// Non-negative powers for any polynomial; negative powers only for a
  /// monomial with coefficient +-1.
  LaurentPoly pow(int e) const;
  /// Multiplies by the monomial with exponents `shift` (no coefficient).
  LaurentPoly shifted(const Exponents& shift) const;

  /// Canonical text, e.g. "3*b^2 + 4*b*c + c^2"; negative exponents
  /// print as "a^-1".
  std::string to_string() const;

  /// Adds `c` times the monomial `exps` in place.
  void add_term(const Exponents& exps, const Int& c);

 private:
  void require_same_letters(const LaurentPoly& o) const;
  LetterSet letters_;
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

enum class CombineKind { add, mul, negate };
/// Exact add/mul/negate; throws LetterSetMismatch unless both operands use
/// the same letter set (q is ignored for negate).
LaurentPoly laurent_combine(CombineKind kind, const LaurentPoly& p,
                            const LaurentPoly& q);

}  // namespace combpoly
