#include "combpoly/laurent.hpp"

#include <algorithm>
#include <sstream>

#include "combpoly/errors.hpp"

namespace combpoly {

LetterSet::LetterSet(std::vector<std::string> names)
    : names_(std::make_shared<const std::vector<std::string>>(std::move(names))) {}

int LetterSet::find(std::string_view name) const noexcept {
  for (size_t i = 0; i < names_->size(); ++i) {
    if ((*names_)[i] == name) return static_cast<int>(i);
  }
  return -1;
}

size_t LetterSet::index_of(std::string_view name) const {
  int i = find(name);
  if (i < 0) throw UnknownLetter("letter '" + std::string(name) + "' not in letter set");
  return static_cast<size_t>(i);
}

LaurentPoly::LaurentPoly(LetterSet letters) : letters_(std::move(letters)) {}

LaurentPoly LaurentPoly::constant(const LetterSet& letters, const Int& c) {
  LaurentPoly p(letters);
  p.add_term(Exponents(letters.size(), 0), c);
  return p;
}

LaurentPoly LaurentPoly::letter(const LetterSet& letters, std::string_view name,
                                int exponent) {
  Exponents e(letters.size(), 0);
  e[letters.index_of(name)] = exponent;
  return monomial(letters, std::move(e), Int(1));
}

LaurentPoly LaurentPoly::monomial(const LetterSet& letters, Exponents exps,
                                  const Int& c) {
  if (exps.size() != letters.size()) {
    throw LetterSetMismatch("exponent vector length does not match letter set");
  }
  LaurentPoly p(letters);
  p.add_term(exps, c);
  return p;
}

void LaurentPoly::add_term(const Exponents& exps, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Int LaurentPoly::coeff(const Exponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Int(0) : it->second;
}

bool LaurentPoly::is_polynomial() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) {
    return std::all_of(t.first.begin(), t.first.end(), [](int e) { return e >= 0; });
  });
}

void LaurentPoly::require_same_letters(const LaurentPoly& o) const {
  if (!(letters_ == o.letters_)) {
    throw LetterSetMismatch("operands use different letter sets");
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  require_same_letters(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  require_same_letters(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Int& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.require_same_letters(b);
  LaurentPoly out(a.letters_);
  const size_t n = a.letters_.size();
  LaurentPoly::Exponents e(n);
  Int prod;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (size_t i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
      mpz_mul(prod.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
      out.add_term(e, prod);
    }
  }
  return out;
}

LaurentPoly LaurentPoly::pow(int e) const {
  if (e < 0) {
    if (!is_monomial() || abs(terms_.begin()->second) != 1) {
      throw NonPolynomialResult("negative power of a non-unit: " + to_string());
    }
    const auto& [exps, c] = *terms_.begin();
    Exponents inv(exps.size());
    for (size_t i = 0; i < exps.size(); ++i) inv[i] = -exps[i];
    return monomial(letters_, std::move(inv), c).pow(-e);
  }
  LaurentPoly result = constant(letters_, Int(1));
  LaurentPoly base = *this;
  unsigned k = static_cast<unsigned>(e);
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k > 0) base = base * base;
  }
  return result;
}

LaurentPoly LaurentPoly::shifted(const Exponents& shift) const {
  if (shift.size() != letters_.size()) {
    throw LetterSetMismatch("shift vector length does not match letter set");
  }
  LaurentPoly out(letters_);
  for (const auto& [e, c] : terms_) {
    Exponents s = e;
    for (size_t i = 0; i < s.size(); ++i) s[i] += shift[i];
    out.terms_.emplace(std::move(s), c);
  }
  return out;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest exponent vectors first reads closest to hand-written form.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Int mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    bool wrote = false;
    if (mag != 1) {
      os << mag.get_str();
      wrote = true;
    }
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) os << '*';
      os << letters_.name(i);
      if (e[i] != 1) os << '^' << e[i];
      wrote = true;
    }
    if (!wrote) os << '1';
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) {
  return os << p.to_string();
}

LaurentPoly laurent_combine(CombineKind kind, const LaurentPoly& p,
                            const LaurentPoly& q) {
  switch (kind) {
    case CombineKind::add:
      return p + q;
    case CombineKind::mul:
      return p * q;
    case CombineKind::negate:
      return -p;
  }
  return -p;
}

}  // namespace combpoly
