#include "combpoly/enumerate.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <utility>

#include "combpoly/errors.hpp"

namespace combpoly {

namespace {

constexpr std::array<std::pair<ObjectClass, std::string_view>, 6> kClassNames{{
    {ObjectClass::perm, "perm"},
    {ObjectClass::signed_perm, "signed"},
    {ObjectClass::up_signed, "up_signed"},
    {ObjectClass::stirling, "stirling"},
    {ObjectClass::dual_stirling, "dual_stirling"},
    {ObjectClass::tree012, "tree012"},
}};

constexpr std::array<std::pair<Stat, std::string_view>, 13> kStatNames{{
    {Stat::des, "des"},
    {Stat::exc, "exc"},
    {Stat::drop, "drop"},
    {Stat::fix, "fix"},
    {Stat::run, "run"},
    {Stat::udrun, "udrun"},
    {Stat::alternating, "alternating"},
    {Stat::desB, "desB"},
    {Stat::runB, "runB"},
    {Stat::ap, "ap"},
    {Stat::fap, "fap"},
    {Stat::leaves, "leaves"},
    {Stat::unary, "unary"},
}};

// Number of alternating runs of a sequence: one more than the number of
// interior turning points, and zero for sequences shorter than two.
template <class It>
int alternating_runs(It first, It last) {
  const auto len = std::distance(first, last);
  if (len < 2) return 0;
  int runs = 1;
  It a = first;
  It b = std::next(a);
  bool up = *a < *b;
  for (It c = std::next(b); c != last; ++a, ++b, ++c) {
    bool next_up = *b < *c;
    if (next_up != up) ++runs;
    up = next_up;
  }
  return runs;
}

void require_size(int n, ObjectClass cls) {
  if (n < 0) throw RangeError("negative size");
  if (n > max_enumeration_n(cls)) {
    throw TooLarge(std::string(to_string(cls)) + " enumeration limited to n <= " +
                   std::to_string(max_enumeration_n(cls)) + ", got " + std::to_string(n));
  }
}

[[noreturn]] void unsupported(ObjectClass cls, Stat stat) {
  throw UnsupportedStatForClass(std::string(to_string(stat)) + " is not defined on " +
                                std::string(to_string(cls)));
}

void add_power(std::vector<Int>& counts, int k) {
  if (static_cast<size_t>(k) >= counts.size()) counts.resize(k + 1);
  ++counts[k];
}

int ap_count(const StirlingWord& s) {
  int ap = 0;
  // 1-based i in 2..2n-1 is 0-based i in 1..2n-2.
  for (size_t i = 1; i + 1 < s.size(); ++i) {
    if (s[i - 1] < s[i] && s[i] == s[i + 1]) ++ap;
  }
  return ap;
}

int fap_count(const StirlingWord& s) {
  bool flag = s.size() >= 2 && s[0] == s[1];
  return 2 * ap_count(s) + (flag ? 1 : 0);
}

void phi_into(const StirlingWord& s, Word& out, std::vector<char>& seen) {
  seen.assign(s.size() / 2 + 1, 0);
  out.resize(s.size());
  for (size_t i = 0; i < s.size(); ++i) {
    int j = s[i];
    out[i] = seen[j] ? 2 * j - 1 : 2 * j;
    seen[j] = 1;
  }
}

}  // namespace

int Tree012::leaves() const {
  return static_cast<int>(std::count(children.begin(), children.end(), 0));
}

int Tree012::unary() const {
  return static_cast<int>(std::count(children.begin(), children.end(), 1));
}

std::string_view to_string(ObjectClass c) {
  for (const auto& [k, v] : kClassNames) {
    if (k == c) return v;
  }
  return "?";
}

std::string_view to_string(Stat s) {
  for (const auto& [k, v] : kStatNames) {
    if (k == s) return v;
  }
  return "?";
}

ObjectClass parse_object_class(std::string_view name) {
  for (const auto& [k, v] : kClassNames) {
    if (v == name) return k;
  }
  throw UnknownName("object class '" + std::string(name) + "'");
}

Stat parse_stat(std::string_view name) {
  for (const auto& [k, v] : kStatNames) {
    if (v == name) return k;
  }
  throw UnknownName("statistic '" + std::string(name) + "'");
}

int max_enumeration_n(ObjectClass c) {
  switch (c) {
    case ObjectClass::perm:
      return 9;
    case ObjectClass::signed_perm:
    case ObjectClass::up_signed:
      return 7;
    case ObjectClass::stirling:
    case ObjectClass::dual_stirling:
      return 8;
    case ObjectClass::tree012:
      return 10;
  }
  return 0;
}

void for_each_permutation(int n, const std::function<void(const Word&)>& visit) {
  Word w(n);
  std::iota(w.begin(), w.end(), 1);
  do {
    visit(w);
  } while (std::next_permutation(w.begin(), w.end()));
}

namespace {
void for_each_sign_pattern(const Word& base, int first_sign_free, SignedWord& out,
                           const std::function<void(const SignedWord&)>& visit) {
  const size_t n = base.size();
  const size_t free_bits = n - static_cast<size_t>(first_sign_free ? 0 : 1);
  const unsigned long patterns = 1ul << free_bits;
  for (unsigned long mask = 0; mask < patterns; ++mask) {
    for (size_t i = 0; i < n; ++i) {
      bool negative;
      if (first_sign_free) {
        negative = (mask >> i) & 1ul;
      } else {
        negative = i > 0 && ((mask >> (i - 1)) & 1ul);
      }
      out[i] = negative ? -base[i] : base[i];
    }
    visit(out);
  }
}
}  // namespace

void for_each_signed(int n, const std::function<void(const SignedWord&)>& visit) {
  SignedWord out(n);
  for_each_permutation(n, [&](const Word& w) { for_each_sign_pattern(w, 1, out, visit); });
}

void for_each_up_signed(int n, const std::function<void(const SignedWord&)>& visit) {
  if (n == 0) {
    visit(SignedWord{});
    return;
  }
  SignedWord out(n);
  for_each_permutation(n, [&](const Word& w) { for_each_sign_pattern(w, 0, out, visit); });
}

namespace {
void stirling_rec(int k, int n, StirlingWord& w,
                  const std::function<void(const StirlingWord&)>& visit) {
  if (k > n) {
    visit(w);
    return;
  }
  // w holds a Stirling permutation of order k-1; the pair kk may go into
  // any of its 2k-1 gaps.
  const size_t gaps = w.size() + 1;
  for (size_t g = 0; g < gaps; ++g) {
    w.insert(w.begin() + static_cast<long>(g), 2, k);
    stirling_rec(k + 1, n, w, visit);
    w.erase(w.begin() + static_cast<long>(g), w.begin() + static_cast<long>(g) + 2);
  }
}
}  // namespace

void for_each_stirling(int n, const std::function<void(const StirlingWord&)>& visit) {
  StirlingWord w;
  w.reserve(2 * static_cast<size_t>(n));
  stirling_rec(1, n, w, visit);
}

void for_each_dual_stirling(int n, const std::function<void(const Word&)>& visit) {
  Word out;
  std::vector<char> seen;
  // Generated words are valid by construction, so phi skips the check.
  for_each_stirling(n, [&](const StirlingWord& s) {
    phi_into(s, out, seen);
    visit(out);
  });
}

namespace {
void tree_rec(int v, int n, Tree012& t, const std::function<void(const Tree012&)>& visit) {
  if (v == n) {
    visit(t);
    return;
  }
  for (int p = 0; p < v; ++p) {
    if (t.children[p] >= 2) continue;
    t.parent[v] = p;
    ++t.children[p];
    tree_rec(v + 1, n, t, visit);
    --t.children[p];
  }
}
}  // namespace

void for_each_tree012(int n, const std::function<void(const Tree012&)>& visit) {
  if (n <= 0) return;
  Tree012 t;
  t.parent.assign(n, -1);
  t.children.assign(n, 0);
  tree_rec(1, n, t, visit);
}

int word_stat(const Word& w, Stat stat) {
  const int n = static_cast<int>(w.size());
  int count = 0;
  switch (stat) {
    case Stat::des:
      for (int i = 0; i + 1 < n; ++i) count += w[i] > w[i + 1];
      return count;
    case Stat::exc:
      for (int i = 0; i < n; ++i) count += w[i] > i + 1;
      return count;
    case Stat::drop:
      for (int i = 0; i < n; ++i) count += w[i] < i + 1;
      return count;
    case Stat::fix:
      for (int i = 0; i < n; ++i) count += w[i] == i + 1;
      return count;
    case Stat::run:
      return alternating_runs(w.begin(), w.end());
    case Stat::udrun: {
      Word z;
      z.reserve(w.size() + 1);
      z.push_back(0);
      z.insert(z.end(), w.begin(), w.end());
      return alternating_runs(z.begin(), z.end());
    }
    case Stat::alternating:
      for (int i = 0; i + 1 < n; ++i) {
        bool want_down = i % 2 == 0;
        if (want_down != (w[i] > w[i + 1])) return 0;
      }
      return 1;
    default:
      unsupported(ObjectClass::perm, stat);
  }
}

int signed_stat(const SignedWord& w, Stat stat) {
  std::vector<int> z;
  z.reserve(w.size() + 1);
  z.push_back(0);
  z.insert(z.end(), w.begin(), w.end());
  switch (stat) {
    case Stat::desB: {
      int count = 0;
      for (size_t i = 0; i + 1 < z.size(); ++i) count += z[i] > z[i + 1];
      return count;
    }
    case Stat::runB:
      return alternating_runs(z.begin(), z.end());
    default:
      unsupported(ObjectClass::signed_perm, stat);
  }
}

bool is_valid_stirling(const StirlingWord& s) {
  if (s.size() % 2 != 0) return false;
  const int n = static_cast<int>(s.size() / 2);
  std::vector<int> first(n + 1, -1), second(n + 1, -1);
  for (int i = 0; i < static_cast<int>(s.size()); ++i) {
    int v = s[i];
    if (v < 1 || v > n) return false;
    if (first[v] < 0) {
      first[v] = i;
    } else if (second[v] < 0) {
      second[v] = i;
    } else {
      return false;
    }
  }
  for (int v = 1; v <= n; ++v) {
    if (second[v] < 0) return false;
    for (int i = first[v] + 1; i < second[v]; ++i) {
      if (s[i] <= v) return false;
    }
  }
  return true;
}

int stirling_stat(const StirlingWord& s, Stat stat) {
  if (!is_valid_stirling(s)) throw InvalidStirlingWord("not a Stirling permutation");
  if (stat != Stat::ap && stat != Stat::fap) unsupported(ObjectClass::stirling, stat);
  return stat == Stat::ap ? ap_count(s) : fap_count(s);
}

Word phi(const StirlingWord& s) {
  if (!is_valid_stirling(s)) throw InvalidStirlingWord("not a Stirling permutation");
  Word out;
  std::vector<char> seen;
  phi_into(s, out, seen);
  return out;
}

UniPoly distribution(int n, ObjectClass cls, Stat stat) {
  require_size(n, cls);
  std::vector<Int> counts;
  switch (cls) {
    case ObjectClass::perm:
      word_stat(Word{}, stat);  // rejects unsupported stats up front
      for_each_permutation(n, [&](const Word& w) { add_power(counts, word_stat(w, stat)); });
      break;
    case ObjectClass::signed_perm:
    case ObjectClass::up_signed: {
      if (stat != Stat::desB && stat != Stat::runB) unsupported(cls, stat);
      auto visit = [&](const SignedWord& w) { add_power(counts, signed_stat(w, stat)); };
      if (cls == ObjectClass::signed_perm) {
        for_each_signed(n, visit);
      } else {
        for_each_up_signed(n, visit);
      }
      break;
    }
    case ObjectClass::stirling:
      if (stat != Stat::ap && stat != Stat::fap) unsupported(cls, stat);
      for_each_stirling(n, [&](const StirlingWord& s) {
        add_power(counts, stat == Stat::ap ? ap_count(s) : fap_count(s));
      });
      break;
    case ObjectClass::dual_stirling:
      if (stat != Stat::run && stat != Stat::des) unsupported(cls, stat);
      for_each_dual_stirling(n, [&](const Word& w) { add_power(counts, word_stat(w, stat)); });
      break;
    case ObjectClass::tree012:
      if (stat != Stat::leaves && stat != Stat::unary) unsupported(cls, stat);
      for_each_tree012(n, [&](const Tree012& t) {
        add_power(counts, stat == Stat::leaves ? t.leaves() : t.unary());
      });
      break;
  }
  return UniPoly(std::move(counts));
}

const LetterSet& andre_letters() {
  static const LetterSet letters({"x", "y"});
  return letters;
}

LaurentPoly andre_distribution(int n) {
  require_size(n, ObjectClass::tree012);
  LaurentPoly out(andre_letters());
  for_each_tree012(n, [&](const Tree012& t) { out.add_term({t.leaves(), t.unary()}, Int(1)); });
  return out;
}

}  // namespace combpoly
