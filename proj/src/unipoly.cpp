#include "combpoly/unipoly.hpp"

#include <algorithm>
#include <sstream>

#include "combpoly/errors.hpp"

namespace combpoly {

UniPoly::UniPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

UniPoly::UniPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

UniPoly UniPoly::constant(const Int& c) { return UniPoly(std::vector<Int>{c}); }

UniPoly UniPoly::monomial(const Int& c, unsigned degree) {
  std::vector<Int> v(degree + 1, Int(0));
  v[degree] = c;
  return UniPoly(std::move(v));
}

void UniPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Int UniPoly::coeff(long k) const {
  if (k < 0 || k >= static_cast<long>(coeffs_.size())) return Int(0);
  return coeffs_[static_cast<size_t>(k)];
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Int(0));
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Int(0));
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Int> out(a.coeffs_.size() + b.coeffs_.size() - 1, Int(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(),
                 b.coeffs_[j].get_mpz_t());
    }
  }
  return UniPoly(std::move(out));
}

UniPoly& UniPoly::operator*=(const UniPoly& o) {
  *this = *this * o;
  return *this;
}

UniPoly& UniPoly::operator*=(const Int& c) {
  for (auto& v : coeffs_) v *= c;
  normalize();
  return *this;
}

UniPoly UniPoly::pow(unsigned e) const {
  UniPoly result = constant(Int(1));
  UniPoly base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Int> out(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i) {
    out[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  }
  return UniPoly(std::move(out));
}

UniPoly UniPoly::reflect() const {
  UniPoly r = *this;
  for (size_t i = 1; i < r.coeffs_.size(); i += 2) r.coeffs_[i] = -r.coeffs_[i];
  return r;
}

UniPoly UniPoly::compose_square() const {
  if (is_zero()) return {};
  std::vector<Int> out(2 * coeffs_.size() - 1, Int(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) out[2 * i] = coeffs_[i];
  return UniPoly(std::move(out));
}

UniPoly UniPoly::reversed(unsigned n) const {
  if (degree() > static_cast<int>(n)) {
    throw RangeError("reversal length " + std::to_string(n) +
                     " below degree " + std::to_string(degree()));
  }
  std::vector<Int> out(n + 1, Int(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) out[n - i] = coeffs_[i];
  return UniPoly(std::move(out));
}

Int UniPoly::evaluate(const Int& at) const {
  Int acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

Int UniPoly::value_at_one() const {
  Int s(0);
  for (const auto& c : coeffs_) s += c;
  return s;
}

UniPoly UniPoly::exact_div(const UniPoly& q) const {
  if (q.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (is_zero()) return {};
  if (degree() < q.degree()) {
    throw NotDivisible(to_string() + " by " + q.to_string());
  }
  std::vector<Int> rem = coeffs_;
  const size_t qd = static_cast<size_t>(q.degree());
  const Int& lead = q.coeffs_.back();
  std::vector<Int> quot(rem.size() - qd, Int(0));
  for (size_t k = quot.size(); k-- > 0;) {
    const Int& top = rem[k + qd];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) {
      throw NotDivisible(to_string() + " by " + q.to_string());
    }
    Int t;
    mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    for (size_t j = 0; j <= qd; ++j) {
      mpz_submul(rem[k + j].get_mpz_t(), t.get_mpz_t(), q.coeffs_[j].get_mpz_t());
    }
    quot[k] = std::move(t);
  }
  if (std::any_of(rem.begin(), rem.end(), [](const Int& c) { return c != 0; })) {
    throw NotDivisible(to_string() + " by " + q.to_string());
  }
  return UniPoly(std::move(quot));
}

bool UniPoly::divisible_by(const UniPoly& q) const {
  try {
    (void)exact_div(q);
    return true;
  } catch (const NotDivisible&) {
    return false;
  }
}

unsigned UniPoly::multiplicity(const UniPoly& q) const {
  if (is_zero()) throw RangeError("multiplicity in the zero polynomial");
  if (q.degree() < 1) throw RangeError("multiplicity of a constant factor");
  unsigned m = 0;
  UniPoly cur = *this;
  while (true) {
    try {
      cur = cur.exact_div(q);
      ++m;
    } catch (const NotDivisible&) {
      return m;
    }
  }
}

std::string UniPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    const Int& c = coeffs_[i];
    if (c == 0) continue;
    Int mag = abs(c);
    if (c < 0) {
      os << '-';
    } else if (!first) {
      os << '+';
    }
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i >= 1) os << 'x';
    if (i >= 2) os << '^' << i;
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const UniPoly& p) {
  return os << p.to_string();
}

UniPoly upoly_mul(const UniPoly& p, const UniPoly& q) { return p * q; }

UniPoly upoly_exact_div(const UniPoly& p, const UniPoly& q) {
  return p.exact_div(q);
}

UniPoly rational_substitute(const UniPoly& p, const UniPoly& num,
                            const UniPoly& den, unsigned clear_power) {
  if (p.degree() > static_cast<int>(clear_power)) {
    throw PowerTooSmall("clear_power " + std::to_string(clear_power) +
                        " < degree " + std::to_string(p.degree()));
  }
  UniPoly out;
  UniPoly num_pow = UniPoly::constant(Int(1));
  for (int i = 0; i <= p.degree(); ++i) {
    if (p.coeff(i) != 0) {
      out += num_pow * den.pow(clear_power - static_cast<unsigned>(i)) * p.coeff(i);
    }
    num_pow *= num;
  }
  return out;
}

}  // namespace combpoly
