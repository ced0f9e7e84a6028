#include "combpoly/families.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "combpoly/errors.hpp"
#include "combpoly/grammar.hpp"

namespace combpoly {

namespace {

constexpr std::array<std::pair<FamilyId, std::string_view>, 9> kFamilyNames{{
    {FamilyId::A, "A"},
    {FamilyId::Andre, "Andre"},
    {FamilyId::EulerNum, "EulerNum"},
    {FamilyId::R, "R"},
    {FamilyId::S, "S"},
    {FamilyId::T, "T"},
    {FamilyId::B, "B"},
    {FamilyId::F, "F"},
    {FamilyId::D, "D"},
}};

constexpr std::array<std::pair<DetVariant, std::string_view>, 11> kVariantNames{{
    {DetVariant::eulerian_thm, "eulerian_thm"},
    {DetVariant::andre_thm, "andre_thm"},
    {DetVariant::eulernum_cor, "eulernum_cor"},
    {DetVariant::sr_thmA, "sr_thmA"},
    {DetVariant::sr_thmB, "sr_thmB"},
    {DetVariant::t_thm, "t_thm"},
    {DetVariant::t_ts_thm, "t_ts_thm"},
    {DetVariant::f_bt_thm, "f_bt_thm"},
    {DetVariant::f_ff_thm, "f_ff_thm"},
    {DetVariant::kit93, "kit93"},
    {DetVariant::qi_tridiagonal, "qi_tridiagonal"},
}};

constexpr std::array<std::pair<MethodKind, std::string_view>, 10> kKindNames{{
    {MethodKind::recurrence, "recurrence"},
    {MethodKind::diff_recurrence, "diff_recurrence"},
    {MethodKind::triangle, "triangle"},
    {MethodKind::grammar, "grammar"},
    {MethodKind::determinant, "determinant"},
    {MethodKind::enumeration, "enumeration"},
    {MethodKind::explicit_formula, "explicit"},
    {MethodKind::andre_subst, "andre_subst"},
    {MethodKind::bona, "bona"},
    {MethodKind::b_recurrence, "b_recurrence"},
}};

template <class E, size_t N>
std::string_view lookup_name(const std::array<std::pair<E, std::string_view>, N>& table, E e) {
  for (const auto& [k, v] : table) {
    if (k == e) return v;
  }
  return "?";
}

template <class E, size_t N>
std::optional<E> lookup_value(const std::array<std::pair<E, std::string_view>, N>& table,
                              std::string_view name) {
  for (const auto& [k, v] : table) {
    if (v == name) return k;
  }
  return std::nullopt;
}

UniPoly one() { return UniPoly::constant(Int(1)); }
UniPoly xpoly() { return UniPoly::x(); }
UniPoly one_plus_x() { return UniPoly{1, 1}; }
UniPoly one_minus_x() { return UniPoly{1, -1}; }
UniPoly one_minus_x2() { return UniPoly{1, 0, -1}; }
Int sign(int e) { return e % 2 == 0 ? Int(1) : Int(-1); }
Int binom(int n, int k) { return binomial(n, k); }

Method basic(MethodKind kind, int min_n) {
  Method m{kind, std::nullopt, std::nullopt, std::nullopt, min_n, -1, true};
  return m;
}

Method det(DetVariant v, int min_n, bool cross = true) {
  Method m{MethodKind::determinant, v, std::nullopt, std::nullopt, min_n, -1, cross};
  return m;
}

Method enumer(ObjectClass cls, Stat stat, int min_n) {
  Method m{MethodKind::enumeration, std::nullopt, cls, stat, min_n, max_enumeration_n(cls), true};
  return m;
}

// ---------------------------------------------------------------------------
// Recurrence paths. Each returns the values 0..N (entries below the
// family's first index hold the conventional start values).

std::vector<UniPoly> eulerian_rec(int N) {
  std::vector<UniPoly> a{one()};
  if (N >= 1) a.push_back(xpoly());
  for (int n = 1; n + 1 <= N; ++n) {
    UniPoly next = UniPoly{1, n} * a[n];
    UniPoly sum;
    for (int r = 2; r <= n; ++r) {
      sum += one_minus_x().pow(n - r + 1) * a[r - 1] * binom(n, r - 2);
    }
    a.push_back(next + xpoly() * sum);
  }
  a.resize(N + 1);
  return a;
}

std::vector<UniPoly> r_diff(int N) {
  std::vector<UniPoly> r{one(), one()};
  for (int n = 0; n + 2 <= N; ++n) {
    const UniPoly& p = r[n + 1];
    r.push_back(UniPoly{0, 2, n} * p + UniPoly{0, 1, 0, -1} * p.derivative());
  }
  r.resize(N + 1);
  return r;
}

std::vector<UniPoly> s_diff(int N) {
  std::vector<UniPoly> s{one()};
  for (int n = 0; n + 1 <= N; ++n) {
    const UniPoly& p = s[n];
    s.push_back(UniPoly{0, 1, n} * p + UniPoly{0, 1, 0, -1} * p.derivative());
  }
  return s;
}

// T_0 is not defined by the family; index 0 holds zero.
std::vector<UniPoly> t_diff(int N) {
  std::vector<UniPoly> t{UniPoly()};
  if (N >= 1) t.push_back(xpoly());
  for (int n = 1; n + 1 <= N; ++n) {
    const UniPoly& p = t[n];
    t.push_back(UniPoly{-1, 3, 2 * n} * p + UniPoly{0, 2, 0, -2} * p.derivative());
  }
  t.resize(N + 1);
  return t;
}

std::vector<UniPoly> b_diff(int N) {
  std::vector<UniPoly> b{one()};
  for (int n = 0; n + 1 <= N; ++n) {
    const UniPoly& p = b[n];
    b.push_back(UniPoly{1, 2 * n + 1} * p + UniPoly{0, 2, -2} * p.derivative());
  }
  return b;
}

std::vector<UniPoly> f_diff(int N) {
  std::vector<UniPoly> f{one()};
  for (int n = 0; n + 1 <= N; ++n) {
    const UniPoly& p = f[n];
    f.push_back(UniPoly{0, 1, 2 * n} * p + UniPoly{0, 1, 0, -1} * p.derivative());
  }
  return f;
}

// E_{n+1} = sum_{r=1}^n C(n, r-1) a_{n-r+1} E_r with E_0 = E_1 = 1.
std::vector<Int> eulernum_rec(int N) {
  std::vector<Int> e{Int(1), Int(1)};
  for (int n = 1; n + 1 <= N; ++n) {
    Int sum = 0;
    for (int r = 1; r <= n; ++r) sum += binom(n, r - 1) * a_entry(n - r + 1) * e[r];
    e.push_back(sum);
  }
  e.resize(N + 1);
  return e;
}

// F_{n+1} = x F_n + sum_{r=2}^{n+1} C(n, r-2) ff_{n-r+2} F_{r-1}.
std::vector<UniPoly> f_ff_rec(int N) {
  std::vector<UniPoly> f{one()};
  for (int n = 0; n + 1 <= N; ++n) {
    UniPoly next = xpoly() * f[n];
    for (int r = 2; r <= n + 1; ++r) next += ff_entry(n - r + 2) * f[r - 1] * binom(n, r - 2);
    f.push_back(std::move(next));
  }
  return f;
}

// F_{n+1} = x B_n(x^2) + n x F_n - sum_{r=2}^n C(n, r-2) F_{n-r+2}(-x) F_{r-1}.
std::vector<UniPoly> f_b_rec(int N) {
  std::vector<UniPoly> b = b_diff(N);
  std::vector<UniPoly> f{one()};
  for (int n = 0; n + 1 <= N; ++n) {
    UniPoly next = xpoly() * b[n].compose_square() + UniPoly{0, n} * f[n];
    for (int r = 2; r <= n; ++r) {
      next -= f[n - r + 2].reflect() * f[r - 1] * binom(n, r - 2);
    }
    f.push_back(std::move(next));
  }
  return f;
}

// ---------------------------------------------------------------------------
// Grammar paths.

UniPoly grammar_value(FamilyId id, int n) {
  using namespace grammars;
  const unsigned k = static_cast<unsigned>(n);
  switch (id) {
    case FamilyId::A: {
      const Grammar& g = eulerian();
      return specialize(derive_n(g, g.var("a"), k), Assignment().constant("a", 1).variable("b"));
    }
    case FamilyId::EulerNum: {
      const Grammar& g = andre();
      return specialize(derive_n(g, g.var("y"), k),
                        Assignment().constant("x", 1).constant("y", 1));
    }
    case FamilyId::R: {
      const Grammar& g = runs();
      return specialize(derive_n(g, g.var("a", 2), k - 1),
                        Assignment().constant("a", 1).variable("b").constant("c", 1));
    }
    case FamilyId::S: {
      const Grammar& g = runs();
      return specialize(derive_n(g, g.var("a"), k),
                        Assignment().constant("a", 1).variable("b").constant("c", 1));
    }
    case FamilyId::T: {
      const Grammar& g = type_b_runs();
      UniPoly lifted = specialize(derive_n(g, g.var("a"), k),
                                  Assignment().variable("a").variable("b").constant("c", 1));
      try {
        return lifted.exact_div(one_plus_x());
      } catch (const NotDivisible&) {
        throw ExactDivisionFailed("(1+x) does not divide the grammar image for n = " +
                                  std::to_string(n));
      }
    }
    case FamilyId::B: {
      const Grammar& g = stirling();
      LaurentPoly d = derive_n(g, g.var("b") * g.var("c"), k);
      return extract_pattern(d, {0, 1, 2 * n + 1}, {0, 2, -2});
    }
    case FamilyId::F: {
      const Grammar& g = stirling();
      return specialize(derive_n(g, g.var("a"), k),
                        Assignment().constant("a", 1).variable("b").constant("c", 1));
    }
    default:
      break;
  }
  throw UnsupportedMethod("no grammar for family " + std::string(to_string(id)));
}

LaurentPoly andre_grammar(int n) {
  const Grammar& g = grammars::andre();
  LaurentPoly d = derive_n(g, g.var("y"), static_cast<unsigned>(n));
  // Rebase onto the shared {x, y} letter set so values compare directly.
  LaurentPoly out(andre_letters());
  for (const auto& [e, c] : d.terms()) out.add_term(e, c);
  return out;
}

// ---------------------------------------------------------------------------
// Explicit formulas.

UniPoly brenti_B(int n) {
  UniPoly out;
  for (int k = 0; k <= n; ++k) {
    Int inner = 0;
    for (int i = k; i <= n; ++i) {
      inner += binom(n, i) * pow_int(Int(2), static_cast<unsigned long>(i)) * stirling2(i, k);
    }
    out += UniPoly{-1, 1}.pow(n - k) * (factorial(k) * inner);
  }
  return out;
}

UniPoly stanley_R(int n) {
  std::vector<Int> c(n);
  for (int k = 0; k < n; ++k) c[k] = stanley_explicit_R(n, k);
  return UniPoly(std::move(c));
}

// ---------------------------------------------------------------------------

UniPoly enumeration_value(FamilyId id, int n, const Method& m) {
  UniPoly dist = distribution(n, *m.cls, *m.stat);
  switch (id) {
    case FamilyId::A:
      return n == 0 ? one() : xpoly() * dist;
    case FamilyId::EulerNum:
      return UniPoly::constant(dist.coeff(1));
    case FamilyId::D:
      return UniPoly::constant(dist.coeff(0));
    default:
      return dist;
  }
}

struct Shape {
  DetVariant v;
  FamilyId target;
  int index_offset;
  int order_offset;
  int min_n;
};

constexpr std::array<Shape, 13> kShapes{{
    {DetVariant::eulerian_thm, FamilyId::A, 1, 1, 0},
    {DetVariant::andre_thm, FamilyId::Andre, 1, 0, 1},
    {DetVariant::eulernum_cor, FamilyId::EulerNum, 1, 0, 0},
    {DetVariant::sr_thmA, FamilyId::R, 1, 1, 0},
    {DetVariant::sr_thmA, FamilyId::S, 1, 0, 1},
    {DetVariant::sr_thmB, FamilyId::R, 1, 0, 0},
    {DetVariant::sr_thmB, FamilyId::S, 1, 1, 0},
    {DetVariant::t_thm, FamilyId::T, 0, 0, 1},
    {DetVariant::t_ts_thm, FamilyId::T, 1, 1, 0},
    {DetVariant::f_bt_thm, FamilyId::F, 1, 1, 0},
    {DetVariant::f_ff_thm, FamilyId::F, 1, 1, 0},
    {DetVariant::kit93, FamilyId::D, 2, 0, 0},
    {DetVariant::qi_tridiagonal, FamilyId::D, 0, 1, 1},
}};

const Shape& shape(DetVariant v, FamilyId target) {
  for (const auto& s : kShapes) {
    if (s.v == v && s.target == target) return s;
  }
  throw UnsupportedMethod(std::string(to_string(v)) + " does not produce family " +
                          std::string(to_string(target)));
}

UniPoly determinant_value(FamilyId id, int n, DetVariant v) {
  const Shape& s = shape(v, id);
  FamilyValue d = determinant(build_matrix(v, n - s.index_offset, id));
  return as_uni(d);
}

// Builders. Rows and columns below are 1-based; `set` converts.
template <class R>
struct Builder {
  SquareMatrix<R> m;
  Builder(size_t order, R zero) : m(order, std::move(zero)) {}
  void set(int i, int j, R v) { m.at(i - 1, j - 1) = std::move(v); }
  void superdiagonal(const R& v) {
    for (size_t i = 1; i < m.order(); ++i) m.at(i - 1, i) = v;
  }
  HessMatrix<R> done() { return HessMatrix<R>(std::move(m)); }
};

HessMatrix<UniPoly> eulerian_matrix(int n) {
  const int order = n + 1;
  std::vector<UniPoly> a = eulerian_rec(n);
  Builder<UniPoly> b(order, UniPoly());
  b.superdiagonal(UniPoly{-1});
  b.set(1, 1, xpoly());
  for (int i = 2; i <= order; ++i) {
    b.set(i, 1, a[i - 1]);
    for (int j = 2; j <= i; ++j) {
      b.set(i, j, xpoly() * one_minus_x().pow(i - j) * binom(i - 1, j - 2));
    }
  }
  return b.done();
}

HessMatrix<LaurentPoly> andre_matrix(int n) {
  const LetterSet& L = andre_letters();
  Builder<LaurentPoly> b(n, LaurentPoly(L));
  b.superdiagonal(LaurentPoly::constant(L, Int(-1)));
  LaurentPoly x = LaurentPoly::letter(L, "x");
  for (int i = 1; i <= n; ++i) {
    b.set(i, 1, x * e_entry(i));
    for (int j = 2; j <= i; ++j) b.set(i, j, e_entry(i - j + 1) * binom(i, j - 1));
  }
  return b.done();
}

HessMatrix<Int> eulernum_matrix(int n) {
  Builder<Int> b(n, Int(0));
  b.superdiagonal(Int(-1));
  for (int i = 1; i <= n; ++i) {
    b.set(i, 1, a_entry(i));
    for (int j = 2; j <= i; ++j) b.set(i, j, binom(i, j - 1) * a_entry(i - j + 1));
  }
  return b.done();
}

HessMatrix<UniPoly> sr_a_matrix(int n, FamilyId target) {
  if (target == FamilyId::S) {
    Builder<UniPoly> b(n, UniPoly());
    b.superdiagonal(UniPoly{-1});
    for (int i = 1; i <= n; ++i) {
      b.set(i, 1, xpoly() * s_entry(i));
      for (int j = 2; j <= i; ++j) b.set(i, j, s_entry(i - j + 1) * binom(i, j - 1));
    }
    return b.done();
  }
  const int order = n + 1;
  Builder<UniPoly> b(order, UniPoly());
  b.superdiagonal(UniPoly{-1});
  b.set(1, 1, one());
  for (int i = 2; i <= order; ++i) {
    b.set(i, 1, r_entry(i - 1));
    for (int j = 2; j <= i; ++j) b.set(i, j, s_entry(i - j + 1) * binom(i - 1, j - 2));
  }
  return b.done();
}

HessMatrix<UniPoly> sr_b_matrix(int n, FamilyId target) {
  if (target == FamilyId::S) {
    const int order = n + 1;
    std::vector<UniPoly> s = s_diff(n);
    Builder<UniPoly> b(order, UniPoly());
    b.superdiagonal(UniPoly{-1});
    b.set(1, 1, xpoly());
    for (int i = 2; i <= order; ++i) {
      b.set(i, 1, xpoly() * s[i - 1]);
      for (int j = 2; j <= i; ++j) b.set(i, j, f_entry(i - j + 1) * binom(i - 1, j - 2));
    }
    return b.done();
  }
  std::vector<UniPoly> r = r_diff(n);
  Builder<UniPoly> b(n, UniPoly());
  b.superdiagonal(UniPoly{-1});
  if (n >= 1) b.set(1, 1, UniPoly{0, 2});
  for (int i = 2; i <= n; ++i) {
    b.set(i, 1, UniPoly{0, 2} * r[i]);
    for (int j = 2; j <= i; ++j) b.set(i, j, f_entry(i - j + 1) * binom(i - 1, j - 2));
  }
  return b.done();
}

HessMatrix<UniPoly> t_matrix(int n) {
  Builder<UniPoly> b(n, UniPoly());
  b.superdiagonal(UniPoly{-1});
  for (int i = 1; i <= n; ++i) {
    b.set(i, 1, xpoly() * t_entry(i).exact_div(one_plus_x()));
    for (int j = 2; j <= i; ++j) b.set(i, j, t_entry(i - j + 1) * binom(i, j - 1));
  }
  return b.done();
}

HessMatrix<UniPoly> t_ts_matrix(int n) {
  const int order = n + 1;
  std::vector<UniPoly> s = s_diff(n);
  Builder<UniPoly> b(order, UniPoly());
  b.superdiagonal(UniPoly{-1});
  b.set(1, 1, xpoly());
  for (int i = 2; i <= order; ++i) {
    b.set(i, 1, xpoly() * s[i - 1] * pow_int(Int(2), static_cast<unsigned long>(i - 1)));
    for (int j = 2; j <= i; ++j) b.set(i, j, t_entry(i - j + 1) * binom(i - 1, j - 2));
  }
  return b.done();
}

HessMatrix<UniPoly> f_bt_matrix(int n) {
  const int order = n + 1;
  std::vector<UniPoly> bb = b_diff(n);
  std::vector<UniPoly> f = f_diff(n);
  Builder<UniPoly> b(order, UniPoly());
  b.superdiagonal(UniPoly{-1});
  b.set(1, 1, xpoly());
  for (int i = 2; i <= order; ++i) {
    b.set(i, 1, xpoly() * bb[i - 1].compose_square());
    for (int j = 2; j <= i; ++j) b.set(i, j, -(f[i - j + 1].reflect() * binom(i - 1, j - 2)));
  }
  return b.done();
}

HessMatrix<UniPoly> f_ff_matrix(int n) {
  const int order = n + 1;
  std::vector<UniPoly> f = f_diff(n);
  Builder<UniPoly> b(order, UniPoly());
  b.superdiagonal(UniPoly{-1});
  b.set(1, 1, xpoly());
  for (int i = 2; i <= order; ++i) {
    b.set(i, 1, xpoly() * f[i - 1]);
    for (int j = 2; j <= i; ++j) b.set(i, j, ff_entry(i - j + 1) * binom(i - 1, j - 2));
  }
  return b.done();
}

HessMatrix<Int> kit93_matrix(int n) {
  Builder<Int> b(n, Int(0));
  b.superdiagonal(Int(-1));
  for (int i = 1; i <= n; ++i) {
    b.set(i, i, Int(i + 1));
    if (i >= 2) b.set(i, i - 1, Int(i + 1));
  }
  return b.done();
}

HessMatrix<Int> qi_matrix(int n) {
  const int order = n + 1;
  Builder<Int> b(order, Int(0));
  for (int i = 1; i <= order; ++i) {
    b.set(i, i, Int(i - 2));
    if (i + 1 <= order) b.set(i, i + 1, Int(1));
    if (i >= 2) b.set(i, i - 1, Int(2 - i));
  }
  return b.done();
}

}  // namespace

// ---------------------------------------------------------------------------

std::string_view to_string(FamilyId f) { return lookup_name(kFamilyNames, f); }
std::string_view to_string(DetVariant v) { return lookup_name(kVariantNames, v); }
std::string_view to_string(MethodKind k) { return lookup_name(kKindNames, k); }

FamilyId parse_family(std::string_view name) {
  if (auto f = lookup_value(kFamilyNames, name)) return *f;
  throw UnknownName("family '" + std::string(name) + "'");
}

DetVariant parse_det_variant(std::string_view name) {
  if (auto v = lookup_value(kVariantNames, name)) return *v;
  throw UnknownName("determinant variant '" + std::string(name) + "'");
}

const std::vector<FamilyId>& all_families() {
  static const std::vector<FamilyId> v = [] {
    std::vector<FamilyId> out;
    for (const auto& [k, _] : kFamilyNames) out.push_back(k);
    return out;
  }();
  return v;
}

const std::vector<DetVariant>& all_det_variants() {
  static const std::vector<DetVariant> v = [] {
    std::vector<DetVariant> out;
    for (const auto& [k, _] : kVariantNames) out.push_back(k);
    return out;
  }();
  return v;
}

std::string Method::name() const {
  std::string out(to_string(kind));
  if (variant) {
    out += ':';
    out += to_string(*variant);
  }
  if (stat) {
    out += ':';
    out += to_string(*stat);
  }
  return out;
}

const std::vector<Method>& supported_methods(FamilyId f) {
  using K = MethodKind;
  using V = DetVariant;
  using C = ObjectClass;
  static const std::vector<Method> kA{basic(K::recurrence, 0), basic(K::grammar, 0),
                                      det(V::eulerian_thm, 1), enumer(C::perm, Stat::des, 1),
                                      enumer(C::perm, Stat::exc, 1),
                                      enumer(C::perm, Stat::drop, 1)};
  static const std::vector<Method> kAndre{basic(K::grammar, 1), det(V::andre_thm, 2),
                                          enumer(C::tree012, Stat::leaves, 1)};
  static const std::vector<Method> kEulerNum{basic(K::recurrence, 1), det(V::eulernum_cor, 1),
                                             enumer(C::perm, Stat::alternating, 0),
                                             basic(K::grammar, 0)};
  static const std::vector<Method> kR{basic(K::triangle, 1),    basic(K::diff_recurrence, 0),
                                      det(V::sr_thmA, 1),       det(V::sr_thmB, 1),
                                      basic(K::grammar, 1),     enumer(C::perm, Stat::run, 0),
                                      basic(K::explicit_formula, 2), basic(K::andre_subst, 2)};
  static const std::vector<Method> kS{basic(K::diff_recurrence, 0), det(V::sr_thmA, 2),
                                      det(V::sr_thmB, 1),           basic(K::grammar, 0),
                                      enumer(C::perm, Stat::udrun, 0), basic(K::bona, 2)};
  static const std::vector<Method> kT{basic(K::triangle, 1), basic(K::diff_recurrence, 1),
                                      det(V::t_thm, 1),      det(V::t_ts_thm, 1),
                                      basic(K::grammar, 1),  enumer(C::up_signed, Stat::runB, 1)};
  static const std::vector<Method> kB{basic(K::diff_recurrence, 0),
                                      basic(K::explicit_formula, 0), basic(K::grammar, 0),
                                      enumer(C::signed_perm, Stat::desB, 0)};
  static const std::vector<Method> kF{basic(K::diff_recurrence, 0),
                                      basic(K::grammar, 0),
                                      det(V::f_bt_thm, 1),
                                      det(V::f_ff_thm, 1),
                                      enumer(C::dual_stirling, Stat::run, 0),
                                      enumer(C::stirling, Stat::fap, 0),
                                      basic(K::recurrence, 0),
                                      basic(K::b_recurrence, 0)};
  static const std::vector<Method> kD{det(V::kit93, 2), det(V::qi_tridiagonal, 1, false),
                                      enumer(C::perm, Stat::fix, 0)};
  switch (f) {
    case FamilyId::A: return kA;
    case FamilyId::Andre: return kAndre;
    case FamilyId::EulerNum: return kEulerNum;
    case FamilyId::R: return kR;
    case FamilyId::S: return kS;
    case FamilyId::T: return kT;
    case FamilyId::B: return kB;
    case FamilyId::F: return kF;
    case FamilyId::D: return kD;
  }
  return kD;
}

Method parse_method(FamilyId f, std::string_view name) {
  const auto& methods = supported_methods(f);
  for (const auto& m : methods) {
    if (m.name() == name) return m;
  }
  for (const auto& m : methods) {
    if (to_string(m.kind) == name) return m;
  }
  // Enumeration may also be named by its object class.
  for (const auto& m : methods) {
    if (m.cls && "enumeration:" + std::string(to_string(*m.cls)) == name) return m;
  }
  throw UnsupportedMethod("family " + std::string(to_string(f)) + " has no method '" +
                          std::string(name) + "'");
}

Method reference_method(FamilyId f) {
  switch (f) {
    case FamilyId::A:
    case FamilyId::EulerNum:
      return parse_method(f, "recurrence");
    case FamilyId::Andre:
      return parse_method(f, "grammar");
    case FamilyId::D:
      return parse_method(f, "enumeration");
    default:
      return parse_method(f, "diff_recurrence");
  }
}

std::string to_string(const FamilyValue& v) {
  return std::visit([](const auto& p) { return p.to_string(); }, v);
}

const UniPoly& as_uni(const FamilyValue& v) { return std::get<UniPoly>(v); }

FamilyValue family(FamilyId id, int n, const Method& method) {
  const auto& methods = supported_methods(id);
  if (std::find(methods.begin(), methods.end(), method) == methods.end()) {
    throw UnsupportedMethod("family " + std::string(to_string(id)) + " has no method '" +
                            method.name() + "'");
  }
  if (n < method.min_n) {
    throw UnsupportedOrder(method.name() + " for family " + std::string(to_string(id)) +
                           " starts at n = " + std::to_string(method.min_n));
  }
  if (method.max_n >= 0 && n > method.max_n) {
    throw TooLarge(method.name() + " limited to n <= " + std::to_string(method.max_n));
  }
  if (id == FamilyId::Andre) {
    switch (method.kind) {
      case MethodKind::grammar:
        return andre_grammar(n);
      case MethodKind::determinant:
        return determinant(build_matrix(*method.variant, n - 1, FamilyId::Andre));
      case MethodKind::enumeration:
        return andre_distribution(n);
      default:
        break;
    }
  }
  switch (method.kind) {
    case MethodKind::recurrence:
      if (id == FamilyId::A) return eulerian_rec(n)[n];
      if (id == FamilyId::EulerNum) return UniPoly::constant(eulernum_rec(n)[n]);
      if (id == FamilyId::F) return f_ff_rec(n)[n];
      break;
    case MethodKind::b_recurrence:
      return f_b_rec(n)[n];
    case MethodKind::diff_recurrence:
      switch (id) {
        case FamilyId::R: return r_diff(n)[n];
        case FamilyId::S: return s_diff(n)[n];
        case FamilyId::T: return t_diff(n)[n];
        case FamilyId::B: return b_diff(n)[n];
        case FamilyId::F: return f_diff(n)[n];
        default: break;
      }
      break;
    case MethodKind::triangle:
      return triangle_row(id, n);
    case MethodKind::grammar:
      return grammar_value(id, n);
    case MethodKind::determinant:
      return determinant_value(id, n, *method.variant);
    case MethodKind::enumeration:
      return enumeration_value(id, n, method);
    case MethodKind::explicit_formula:
      if (id == FamilyId::B) return brenti_B(n);
      return stanley_R(n);
    case MethodKind::andre_subst: {
      UniPoly e = andre_at_y1(andre_grammar(n));
      return rational_substitute(e, xpoly(), one_plus_x(), static_cast<unsigned>(n - 1)) * Int(2);
    }
    case MethodKind::bona: {
      UniPoly r = r_diff(n)[n];
      return (one_plus_x() * r).exact_div(UniPoly{2});
    }
  }
  throw UnsupportedMethod(method.name() + " for family " + std::string(to_string(id)));
}

FamilyValue family(FamilyId id, int n, std::string_view method) {
  return family(id, n, parse_method(id, method));
}

UniPoly family_poly(FamilyId id, int n, const Method& method) {
  if (id == FamilyId::Andre) throw UnsupportedMethod("Andre values are bivariate");
  return as_uni(family(id, n, method));
}

UniPoly family_poly(FamilyId id, int n, std::string_view method) {
  return family_poly(id, n, parse_method(id, method));
}

FamilyId default_target(DetVariant v) {
  for (const auto& s : kShapes) {
    if (s.v == v) return s.target;
  }
  return FamilyId::D;
}

void check_target(DetVariant v, FamilyId target) { (void)shape(v, target); }

int matrix_order(DetVariant v, int n, FamilyId target) {
  return n + shape(v, target).order_offset;
}

int family_index(DetVariant v, int n, FamilyId target) {
  return n + shape(v, target).index_offset;
}

int min_parameter(DetVariant v, FamilyId target) { return shape(v, target).min_n; }

MatrixValue build_matrix(DetVariant v, int n, FamilyId target) {
  const Shape& s = shape(v, target);
  if (n < s.min_n) {
    throw UnsupportedOrder(std::string(to_string(v)) + " needs n >= " + std::to_string(s.min_n) +
                           ", got " + std::to_string(n));
  }
  switch (v) {
    case DetVariant::eulerian_thm: return eulerian_matrix(n);
    case DetVariant::andre_thm: return andre_matrix(n);
    case DetVariant::eulernum_cor: return eulernum_matrix(n);
    case DetVariant::sr_thmA: return sr_a_matrix(n, target);
    case DetVariant::sr_thmB: return sr_b_matrix(n, target);
    case DetVariant::t_thm: return t_matrix(n);
    case DetVariant::t_ts_thm: return t_ts_matrix(n);
    case DetVariant::f_bt_thm: return f_bt_matrix(n);
    case DetVariant::f_ff_thm: return f_ff_matrix(n);
    case DetVariant::kit93: return kit93_matrix(n);
    case DetVariant::qi_tridiagonal: return qi_matrix(n);
  }
  throw UnsupportedMethod("unknown variant");
}

MatrixValue build_matrix(DetVariant v, int n) { return build_matrix(v, n, default_target(v)); }

size_t order_of(const MatrixValue& m) {
  return std::visit([](const auto& h) { return h.order(); }, m);
}

namespace {
FamilyValue lift(const Int& v) { return UniPoly::constant(v); }
FamilyValue lift(const UniPoly& v) { return v; }
FamilyValue lift(const LaurentPoly& v) { return v; }
}  // namespace

FamilyValue determinant(const MatrixValue& m) {
  return std::visit([](const auto& h) { return lift(det_recursive(h)); }, m);
}

std::vector<FamilyValue> leading_determinants(const MatrixValue& m) {
  return std::visit(
      [](const auto& h) {
        std::vector<FamilyValue> out;
        for (const auto& d : leading_minors(h)) out.push_back(lift(d));
        return out;
      },
      m);
}

Int triangle_entry(FamilyId id, int n, int k) {
  if (id != FamilyId::R && id != FamilyId::T) {
    throw UnsupportedMethod("no triangle for family " + std::string(to_string(id)));
  }
  if (n < 1 || k < 0 || k > n) return Int(0);
  return triangle_row(id, n).coeff(k);
}

UniPoly triangle_row(FamilyId id, int n) {
  if (id != FamilyId::R && id != FamilyId::T) {
    throw UnsupportedMethod("no triangle for family " + std::string(to_string(id)));
  }
  if (n < 1) throw UnsupportedOrder("triangles start at n = 1");
  // row[k] for k in 0..n, with out-of-range reads giving zero.
  std::vector<Int> row(2, Int(0));
  row[id == FamilyId::R ? 0 : 1] = 1;
  auto at = [](const std::vector<Int>& r, int k) {
    return (k < 0 || k >= static_cast<int>(r.size())) ? Int(0) : r[k];
  };
  for (int m = 2; m <= n; ++m) {
    std::vector<Int> next(m + 1, Int(0));
    for (int k = 0; k <= m; ++k) {
      if (id == FamilyId::R) {
        next[k] = k * at(row, k) + 2 * at(row, k - 1) + (m - k) * at(row, k - 2);
      } else {
        next[k] = (2 * k - 1) * at(row, k) + 3 * at(row, k - 1) +
                  (2 * m - 2 * k + 2) * at(row, k - 2);
      }
    }
    row = std::move(next);
  }
  return UniPoly(std::move(row));
}

Int stanley_explicit_R(int n, int k, StanleyReading reading) {
  if (n < 2) throw UnsupportedOrder("explicit formula needs n >= 2");
  if (k < 0) return Int(0);
  const int r0 = reading == StanleyReading::r_from_zero ? 0 : 1;
  Rat total = 0;
  for (int i = 0; i <= k; ++i) {
    Int inner = 0;
    for (int r = r0; r <= i; ++r) {
      if ((r - i) % 2 != 0) continue;
      for (int m = 0; r + 2 * m <= i; ++m) {
        inner += pow_int(Int(-2), static_cast<unsigned long>(m)) * binom(i - m, (i + r) / 2) *
                 binom(n, m) * pow_int(Int(r), static_cast<unsigned long>(n));
      }
    }
    const int zi = k - i;
    Int z = zi == 0 ? Int(2) : Int(4);
    // 1 / 2^(i-1) is 2 for i = 0.
    Rat weight = i == 0 ? Rat(2) : make_rat(Int(1), pow_int(Int(2), static_cast<unsigned long>(i - 1)));
    total += weight * Rat(sign(zi) * z * inner);
  }
  total.canonicalize();
  return rat_to_int(total);
}

StanleyCalibration calibrate_stanley(int max_n) {
  StanleyCalibration cal;
  auto matches = [&](StanleyReading reading) {
    for (int n = 2; n <= max_n; ++n) {
      for (int k = 0; k <= n - 1; ++k) {
        try {
          if (stanley_explicit_R(n, k, reading) != triangle_entry(FamilyId::R, n, k)) return false;
        } catch (const NonIntegerResult&) {
          return false;
        }
      }
    }
    return true;
  };
  cal.r_from_zero_matches = matches(StanleyReading::r_from_zero);
  cal.r_from_one_matches = matches(StanleyReading::r_from_one);
  cal.chosen = cal.r_from_zero_matches || !cal.r_from_one_matches ? StanleyReading::r_from_zero
                                                                   : StanleyReading::r_from_one;
  return cal;
}

UniPoly s_entry(int n) {
  return one_plus_x() * one_minus_x2().pow((n - 1) / 2) * sign(n + 1);
}

UniPoly r_entry(int n) {
  return UniPoly{-1, 1} * one_minus_x2().pow((n - 1) / 2) * sign(n - 1);
}

UniPoly f_entry(int n) { return one_minus_x2().pow(n / 2) * sign(n + 1); }

UniPoly t_entry(int n) {
  const int k = (n + 1) / 2;
  if (n % 2 == 1) return one_plus_x() * one_minus_x2().pow(k - 1);
  return -one_minus_x2().pow(k);
}

UniPoly ff_entry(int n) {
  const int k = (n + 1) / 2;
  const UniPoly x2m1{-1, 0, 1};
  if (n % 2 == 1) return UniPoly{1, 0, 1} * x2m1.pow(2 * k - 2);
  return -x2m1.pow(2 * k);
}

LaurentPoly e_entry(int n) {
  const LetterSet& L = andre_letters();
  LaurentPoly x = LaurentPoly::letter(L, "x");
  LaurentPoly y = LaurentPoly::letter(L, "y");
  LaurentPoly base = x * Int(2) - y * y;
  const int k = (n + 1) / 2;
  LaurentPoly head = n % 2 == 1 ? y : x - y * y;
  return head * base.pow(k - 1) * sign(k - 1);
}

Int a_entry(int n) {
  if (n % 2 == 0) return Int(0);
  return sign((n + 1) / 2 - 1);
}

UniPoly andre_at_y1(const LaurentPoly& e) {
  return specialize(e, Assignment().variable("x").constant("y", 1));
}

Int andre_at_11(const LaurentPoly& e) { return andre_at_y1(e).value_at_one(); }

}  // namespace combpoly
