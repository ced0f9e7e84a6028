#include "combpoly/grammar.hpp"

#include <cctype>
#include <optional>
#include <sstream>

#include "combpoly/errors.hpp"

namespace combpoly {

Grammar::Grammar(LetterSet letters, const std::map<std::string, LaurentPoly>& rules)
    : letters_(std::move(letters)), rules_(letters_.size()) {
  for (const auto& [name, rhs] : rules) {
    size_t i = letters_.index_of(name);
    if (!(rhs.letters() == letters_)) {
      throw LetterSetMismatch("rule for '" + name + "' uses a different letter set");
    }
    rules_[i].has_value = true;
    rules_[i].rhs = rhs;
  }
}

const LaurentPoly& Grammar::rule(size_t letter) const {
  if (!rules_.at(letter).has_value) {
    throw UnknownLetter("no rule for letter '" + letters_.name(letter) + "'");
  }
  return rules_[letter].rhs;
}

bool operator==(const Grammar& a, const Grammar& b) {
  if (!(a.letters_ == b.letters_)) return false;
  for (size_t i = 0; i < a.rules_.size(); ++i) {
    if (a.rules_[i].has_value != b.rules_[i].has_value) return false;
    if (a.rules_[i].has_value && !(a.rules_[i].rhs == b.rules_[i].rhs)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// parser

namespace {

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_';
}
bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

std::string_view strip_comment(std::string_view line) {
  auto pos = line.find('#');
  return pos == std::string_view::npos ? line : line.substr(0, pos);
}

bool is_blank(std::string_view s) {
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// Recursive-descent parser for one right-hand side.
class ExprParser {
 public:
  ExprParser(std::string_view src, size_t offset, int line, const LetterSet& letters)
      : src_(src), pos_(offset), line_(line), letters_(letters) {}

  LaurentPoly parse_all() {
    LaurentPoly p = expr();
    skip_ws();
    if (pos_ < src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw SyntaxError(msg, line_, static_cast<int>(pos_) + 1);
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  LaurentPoly expr() {
    LaurentPoly acc = term();
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  LaurentPoly term() {
    LaurentPoly acc = unary();
    while (accept('*')) acc = acc * unary();
    return acc;
  }

  LaurentPoly unary() {
    if (accept('-')) return -unary();
    return power();
  }

  LaurentPoly power() {
    LaurentPoly base = atom();
    if (accept('^')) {
      skip_ws();
      if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        fail("expected a non-negative integer exponent");
      }
      Int e = integer();
      if (!e.fits_sint_p() || e > 100000) fail("exponent too large");
      return base.pow(static_cast<int>(e.get_si()));
    }
    return base;
  }

  Int integer() {
    size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    return Int(std::string(src_.substr(start, pos_ - start)));
  }

  LaurentPoly atom() {
    skip_ws();
    if (pos_ >= src_.size()) fail("unexpected end of expression");
    char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      LaurentPoly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return LaurentPoly::constant(letters_, integer());
    }
    if (is_ident_start(c)) {
      size_t start = pos_;
      while (pos_ < src_.size() && is_ident_char(src_[pos_])) ++pos_;
      std::string name(src_.substr(start, pos_ - start));
      if (letters_.find(name) < 0) {
        throw UnknownLetter("line " + std::to_string(line_) + ", column " +
                            std::to_string(start + 1) + ": letter '" + name +
                            "' has no rule and is not declared");
      }
      return LaurentPoly::letter(letters_, name);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view src_;
  size_t pos_;
  int line_;
  const LetterSet& letters_;
};

struct RuleLine {
  int line;
  std::string lhs;
  std::string_view text;  // full line, comment stripped
  size_t rhs_offset;
};

}  // namespace

Grammar parse_grammar(std::string_view text) {
  std::vector<std::string> order;
  std::map<std::string, int> seen_lhs;
  std::vector<RuleLine> rules;
  std::vector<std::string> lines;

  auto declare = [&](const std::string& name) {
    for (const auto& n : order) {
      if (n == name) return;
    }
    order.push_back(name);
  };

  // First pass: collect declared letters and left-hand sides so that a
  // right-hand side may mention letters whose rules come later.
  {
    std::string_view rest = text;
    while (true) {
      auto nl = rest.find('\n');
      lines.emplace_back(rest.substr(0, nl));
      if (nl == std::string_view::npos) break;
      rest = rest.substr(nl + 1);
    }
  }
  for (size_t li = 0; li < lines.size(); ++li) {
    const int line_no = static_cast<int>(li) + 1;
    std::string_view line = strip_comment(lines[li]);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (is_blank(line)) continue;

    size_t p = 0;
    while (p < line.size() && std::isspace(static_cast<unsigned char>(line[p]))) ++p;
    if (!is_ident_start(line[p])) {
      throw SyntaxError("expected a letter name", line_no, static_cast<int>(p) + 1);
    }
    size_t start = p;
    while (p < line.size() && is_ident_char(line[p])) ++p;
    std::string name(line.substr(start, p - start));
    size_t after = p;
    while (p < line.size() && std::isspace(static_cast<unsigned char>(line[p]))) ++p;

    if (name == "letters" && p < line.size() && line[p] == ':') {
      ++p;
      while (true) {
        while (p < line.size() && std::isspace(static_cast<unsigned char>(line[p]))) ++p;
        if (p >= line.size()) break;
        if (!is_ident_start(line[p])) {
          throw SyntaxError("expected a letter name", line_no, static_cast<int>(p) + 1);
        }
        size_t s = p;
        while (p < line.size() && is_ident_char(line[p])) ++p;
        declare(std::string(line.substr(s, p - s)));
      }
      continue;
    }
    if (line.substr(p, 2) != "->") {
      throw SyntaxError("expected '->'", line_no, static_cast<int>(p < line.size() ? p : after) + 1);
    }
    if (seen_lhs.count(name) != 0) {
      throw DuplicateRule("letter '" + name + "' has rules on lines " +
                          std::to_string(seen_lhs[name]) + " and " + std::to_string(line_no));
    }
    seen_lhs[name] = line_no;
    declare(name);
    rules.push_back(RuleLine{line_no, name, line, p + 2});
  }

  LetterSet letters(order);
  std::map<std::string, LaurentPoly> parsed;
  for (const auto& r : rules) {
    ExprParser ep(r.text, r.rhs_offset, r.line, letters);
    parsed.emplace(r.lhs, ep.parse_all());
  }
  return Grammar(letters, parsed);
}

std::string unparse(const Grammar& g) {
  std::ostringstream os;
  // The header lists every letter so that letter order survives a round trip.
  os << "letters:";
  for (const auto& n : g.letters().names()) os << ' ' << n;
  os << '\n';
  for (size_t i = 0; i < g.letters().size(); ++i) {
    if (!g.has_rule(i)) continue;
    os << g.letters().name(i) << " -> " << g.rule(i).to_string() << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// derivation

LaurentPoly derive(const Grammar& g, const LaurentPoly& p) {
  if (!(p.letters() == g.letters())) {
    throw LetterSetMismatch("polynomial and grammar use different letter sets");
  }
  const size_t n = g.letters().size();
  LaurentPoly out(g.letters());
  LaurentPoly::Exponents e(n);
  Int coef;
  for (const auto& [exps, c] : p.terms()) {
    for (size_t i = 0; i < n; ++i) {
      if (exps[i] == 0 || !g.has_rule(i)) continue;
      // d(m) contributes e_i * m / l_i * rule(l_i).
      const Int scale = c * exps[i];
      for (const auto& [rexps, rc] : g.rule(i).terms()) {
        for (size_t j = 0; j < n; ++j) e[j] = exps[j] + rexps[j];
        e[i] -= 1;
        mpz_mul(coef.get_mpz_t(), scale.get_mpz_t(), rc.get_mpz_t());
        out.add_term(e, coef);
      }
    }
  }
  return out;
}

LaurentPoly derive_n(const Grammar& g, const LaurentPoly& p, unsigned n) {
  LaurentPoly cur = p;
  for (unsigned k = 0; k < n; ++k) cur = derive(g, cur);
  return cur;
}

std::vector<LaurentPoly> derive_sequence(const Grammar& g, const LaurentPoly& p,
                                         unsigned n) {
  std::vector<LaurentPoly> out;
  out.reserve(n + 1);
  out.push_back(p);
  for (unsigned k = 0; k < n; ++k) out.push_back(derive(g, out.back()));
  return out;
}

// ---------------------------------------------------------------------------
// specialization

Assignment& Assignment::constant(std::string name, const Int& c) {
  values_.insert_or_assign(std::move(name), Value(c));
  return *this;
}

Assignment& Assignment::variable(std::string name) {
  values_.insert_or_assign(std::move(name), Value(OutputVar{}));
  return *this;
}

UniPoly specialize(const LaurentPoly& p, const Assignment& asg) {
  const LetterSet& letters = p.letters();
  std::vector<const Assignment::Value*> slot(letters.size(), nullptr);
  for (size_t i = 0; i < letters.size(); ++i) {
    auto it = asg.values().find(letters.name(i));
    if (it != asg.values().end()) slot[i] = &it->second;
  }
  std::vector<Int> acc;
  for (const auto& [exps, c] : p.terms()) {
    Int value = c;
    long xpow = 0;
    for (size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] == 0) continue;
      if (slot[i] == nullptr) {
        throw UnassignedLetter("letter '" + letters.name(i) + "' has no value");
      }
      if (std::holds_alternative<OutputVar>(*slot[i])) {
        xpow += exps[i];
        continue;
      }
      const Int& v = std::get<Int>(*slot[i]);
      if (exps[i] > 0) {
        value *= pow_int(v, static_cast<unsigned long>(exps[i]));
      } else if (v == 0) {
        throw NegativePowerAtZero("letter '" + letters.name(i) +
                                  "' is 0 but appears with exponent " +
                                  std::to_string(exps[i]));
      } else if (abs(v) == 1) {
        value *= pow_int(v, static_cast<unsigned long>(-exps[i]));
      } else {
        throw NonPolynomialResult("negative power of constant " + v.get_str());
      }
    }
    if (value == 0) continue;
    if (xpow < 0) {
      throw NonPolynomialResult("term " + LaurentPoly::monomial(letters, exps, c).to_string() +
                                " leaves a negative power of x");
    }
    if (static_cast<size_t>(xpow) >= acc.size()) acc.resize(static_cast<size_t>(xpow) + 1, Int(0));
    acc[static_cast<size_t>(xpow)] += value;
  }
  return UniPoly(std::move(acc));
}

UniPoly extract_pattern(const LaurentPoly& p, const LaurentPoly::Exponents& base,
                        const LaurentPoly::Exponents& step) {
  const size_t n = p.letters().size();
  if (base.size() != n || step.size() != n) {
    throw LetterSetMismatch("pattern vectors do not match the letter set");
  }
  size_t pivot = n;
  for (size_t i = 0; i < n; ++i) {
    if (step[i] != 0) {
      pivot = i;
      break;
    }
  }
  if (pivot == n) throw RangeError("pattern step must be nonzero");
  std::vector<Int> out;
  for (const auto& [exps, c] : p.terms()) {
    const int diff = exps[pivot] - base[pivot];
    bool on_line = diff % step[pivot] == 0 && diff / step[pivot] >= 0;
    const int k = on_line ? diff / step[pivot] : -1;
    for (size_t i = 0; on_line && i < n; ++i) {
      on_line = exps[i] == base[i] + k * step[i];
    }
    if (!on_line) {
      throw PatternMismatch("term " + LaurentPoly::monomial(p.letters(), exps, c).to_string() +
                            " is off the declared exponent pattern");
    }
    if (static_cast<size_t>(k) >= out.size()) out.resize(static_cast<size_t>(k) + 1, Int(0));
    out[static_cast<size_t>(k)] += c;
  }
  return UniPoly(std::move(out));
}

namespace grammars {

const Grammar& eulerian() {
  static const Grammar g = parse_grammar("a -> a*b\nb -> a*b\n");
  return g;
}

const Grammar& andre() {
  static const Grammar g = parse_grammar("x -> x*y\ny -> x\n");
  return g;
}

const Grammar& runs() {
  static const Grammar g = parse_grammar("a -> a*b\nb -> b*c\nc -> b^2\n");
  return g;
}

const Grammar& type_b_runs() {
  static const Grammar g = parse_grammar("a -> a*(b+c)\nb -> 2*b*c\nc -> 2*b^2\n");
  return g;
}

const Grammar& stirling() {
  static const Grammar g = parse_grammar("a -> a*b*c\nb -> b*c^2\nc -> b^2*c\n");
  return g;
}

}  // namespace grammars

}  // namespace combpoly
