#pragma once

// Context-free grammars in Chen's sense: each letter is rewritten to a
// polynomial, and the induced formal derivative D_G obeys the sum and
// product rules. Letters without a rule are constants (derivative zero).

#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "combpoly/laurent.hpp"
#include "combpoly/unipoly.hpp"

namespace combpoly {

class Grammar {
 public:
  Grammar() = default;
  /// `rules` maps letter names to right-hand sides over `letters`.
  Grammar(LetterSet letters, const std::map<std::string, LaurentPoly>& rules);

  const LetterSet& letters() const noexcept { return letters_; }
  bool has_rule(size_t letter) const { return rules_[letter].has_value; }
  const LaurentPoly& rule(size_t letter) const;
  /// Letter (by name) as a polynomial over this grammar's letter set.
  LaurentPoly var(std::string_view name, int exponent = 1) const {
    return LaurentPoly::letter(letters_, name, exponent);
  }
  LaurentPoly constant(const Int& c) const {
    return LaurentPoly::constant(letters_, c);
  }

  friend bool operator==(const Grammar& a, const Grammar& b);

 private:
  struct Slot {
    bool has_value = false;
    LaurentPoly rhs{LetterSet{}};
  };
  LetterSet letters_;
  std::vector<Slot> rules_;
};

/// Parses the rule-file format:
///
///     # comment
///     letters: t          (optional; declares constant letters)
///     a -> a*(b+c)
///     b -> 2*b*c
///
/// Expressions use letters, non-negative integer literals, + - * ^ and
/// parentheses; `^` takes a non-negative integer exponent. Letters are
/// ordered by first declaration (header or left-hand side).
Grammar parse_grammar(std::string_view text);

/// Inverse of parse_grammar up to formatting; parse(unparse(g)) == g.
std::string unparse(const Grammar& g);

/// D_G(p). Negative powers follow D(l^-k) = -k l^(-k-1) D(l).
LaurentPoly derive(const Grammar& g, const LaurentPoly& p);
/// D_G^n(p); n == 0 returns p.
LaurentPoly derive_n(const Grammar& g, const LaurentPoly& p, unsigned n);
/// [p, D p, D^2 p, ..., D^n p].
std::vector<LaurentPoly> derive_sequence(const Grammar& g, const LaurentPoly& p,
                                         unsigned n);

/// Marker for "this letter becomes the output variable x".
struct OutputVar {
  friend bool operator==(OutputVar, OutputVar) { return true; }
};

/// Substitution of every letter by an integer constant or by x.
class Assignment {
 public:
  using Value = std::variant<Int, OutputVar>;

  Assignment& constant(std::string name, const Int& c);
  Assignment& variable(std::string name);
  const std::map<std::string, Value>& values() const noexcept { return values_; }

 private:
  std::map<std::string, Value> values_;
};

/// Evaluates p under `asg`, producing a polynomial in x. Throws
/// UnassignedLetter, NegativePowerAtZero, or NonPolynomialResult (a
/// negative total power of x, or a negative power of a constant other
/// than +-1).
UniPoly specialize(const LaurentPoly& p, const Assignment& asg);

/// Reads the coefficients of p along the exponent line base + k*step,
/// k = 0, 1, ...: the result's x^k coefficient is the coefficient of that
/// monomial. Throws PatternMismatch if p has any term off the line.
UniPoly extract_pattern(const LaurentPoly& p, const LaurentPoly::Exponents& base,
                        const LaurentPoly::Exponents& step);

/// The five grammars used by the family builders.
namespace grammars {
/// a -> ab, b -> ab (Eulerian).
const Grammar& eulerian();
/// x -> xy, y -> x (Andre; letters named x and y).
const Grammar& andre();
/// a -> ab, b -> bc, c -> b^2 (up-down and alternating runs).
const Grammar& runs();
/// a -> a(b+c), b -> 2bc, c -> 2b^2 (type B runs).
const Grammar& type_b_runs();
/// a -> abc, b -> bc^2, c -> b^2c (type B Eulerian and dual Stirling).
const Grammar& stirling();
}  // namespace grammars

}  // namespace combpoly
