// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "closed_forms.hpp"
#include "combpoly/cli.hpp"
#include "combpoly/families.hpp"
#include "combpoly/verify.hpp"

using namespace combpoly;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

LaurentPoly xy(int xe, int ye, long c) {
  return LaurentPoly::monomial(andre_letters(), {xe, ye}, Int(c));
}

// Every cross-checked method that applies at n must give `expected`.
void expect_all_methods(Outcome& o, FamilyId f, int n, const FamilyValue& expected) {
  for (const auto& m : supported_methods(f)) {
    if (!m.cross_checked || n < m.min_n || (m.max_n >= 0 && n > m.max_n)) continue;
    const auto t0 = Clock::now();
    FamilyValue got = family(f, n, m);
    double secs = seconds_since(t0);
    if (!(got == expected)) {
      o.fail(std::string(to_string(f)) + "_" + std::to_string(n) + " by " + m.name() + " = " +
             to_string(got) + ", expected " + to_string(expected));
    } else if (secs >= 1.0) {
      o.fail(std::string(to_string(f)) + "_" + std::to_string(n) + " by " + m.name() + " took " +
             std::to_string(secs) + " s");
    }
  }
}

Outcome known_values() {
  Outcome o;
  using P = UniPoly;
  expect_all_methods(o, FamilyId::A, 4, P{0, 1, 11, 11, 1});
  if (family_poly(FamilyId::A, 4, "determinant") != P{0, 1, 11, 11, 1}) o.fail("A_4 determinant");

  expect_all_methods(o, FamilyId::R, 2, P{0, 2});
  expect_all_methods(o, FamilyId::R, 3, P{0, 2, 4});
  expect_all_methods(o, FamilyId::R, 4, P{0, 2, 12, 10});

  expect_all_methods(o, FamilyId::S, 1, P{0, 1});
  expect_all_methods(o, FamilyId::S, 2, P{0, 1, 1});
  expect_all_methods(o, FamilyId::S, 3, P{0, 1, 3, 2});
  expect_all_methods(o, FamilyId::S, 4, P{0, 1, 7, 11, 5});

  expect_all_methods(o, FamilyId::T, 2, P{0, 1, 3});
  expect_all_methods(o, FamilyId::T, 3, P{0, 1, 12, 11});
  expect_all_methods(o, FamilyId::T, 4, P{0, 1, 39, 95, 57});

  expect_all_methods(o, FamilyId::F, 1, P{0, 1});
  expect_all_methods(o, FamilyId::F, 2, P{0, 1, 1, 1});
  expect_all_methods(o, FamilyId::F, 3, P{0, 1, 3, 7, 3, 1});
  expect_all_methods(o, FamilyId::F, 4, P{0, 1, 7, 29, 31, 29, 7, 1});

  expect_all_methods(o, FamilyId::B, 0, P{1});
  expect_all_methods(o, FamilyId::B, 1, P{1, 1});
  expect_all_methods(o, FamilyId::B, 2, P{1, 6, 1});

  expect_all_methods(o, FamilyId::Andre, 1, xy(1, 0, 1));
  expect_all_methods(o, FamilyId::Andre, 2, xy(1, 1, 1));
  expect_all_methods(o, FamilyId::Andre, 3, xy(1, 2, 1) + xy(2, 0, 1));
  expect_all_methods(o, FamilyId::Andre, 4, xy(1, 3, 1) + xy(2, 1, 4));

  const long d[] = {0, 0, 1, 2, 9, 44};
  for (int n = 1; n <= 5; ++n) expect_all_methods(o, FamilyId::D, n, P{d[n]});
  expect_all_methods(o, FamilyId::EulerNum, 1, P{1});
  expect_all_methods(o, FamilyId::EulerNum, 2, P{1});
  expect_all_methods(o, FamilyId::EulerNum, 3, P{2});
  return o;
}

Outcome cross_method() {
  Outcome o;
  const auto t0 = Clock::now();
  Report r = run_suite(expand_selection("crossmethod"));
  for (const auto& e : r.entries) {
    if (e.status != Status::pass || e.n_max != 25) {
      std::string why = e.id.name() + " " + std::string(to_string(e.status));
      if (e.counterexample) why += " at n=" + std::to_string(e.counterexample->n) + ": " +
                                   e.counterexample->lhs + " vs " + e.counterexample->rhs;
      o.fail(why);
    }
  }
  // Each enumeration must actually have been exercised up to its guard.
  for (FamilyId f : all_families()) {
    for (const auto& m : supported_methods(f)) {
      if (m.kind != MethodKind::enumeration) continue;
      int guard = m.cls ? max_enumeration_n(*m.cls) : 0;
      if (m.max_n != guard) o.fail(std::string(to_string(f)) + " " + m.name() + " bound");
    }
  }
  double secs = seconds_since(t0);
  if (secs >= 120.0) o.fail("took " + std::to_string(secs) + " s");
  if (o.ok) o.detail = std::to_string(r.entries.size()) + " families, " + std::to_string(secs) + " s";
  return o;
}

Outcome determinants() {
  Outcome o;
  for (DetVariant v : all_det_variants()) {
    if (v == DetVariant::qi_tridiagonal || v == DetVariant::kit93) continue;
    std::vector<FamilyId> targets{default_target(v)};
    if (v == DetVariant::sr_thmA || v == DetVariant::sr_thmB) targets = {FamilyId::R, FamilyId::S};
    for (FamilyId t : targets) {
      const Method ref = reference_method(t);
      const int hi = t == FamilyId::Andre ? 12 : 20;
      for (int n = min_parameter(v, t); family_index(v, n, t) <= hi; ++n) {
        int idx = family_index(v, n, t);
        if (idx < ref.min_n) continue;
        FamilyValue got = determinant(build_matrix(v, n, t));
        if (!(got == family(t, idx, ref))) {
          o.fail(std::string(to_string(v)) + " " + std::string(to_string(t)) + "_" +
                 std::to_string(idx));
        }
      }
    }
  }
  // kit93: d_3..d_9 against enumeration, d_10..d_12 by nested prefixes.
  auto big = build_matrix(DetVariant::kit93, 10);
  auto prefixes = leading_determinants(big);
  for (int n = 1; n <= 10; ++n) {
    int idx = family_index(DetVariant::kit93, n, FamilyId::D);
    FamilyValue got = determinant(build_matrix(DetVariant::kit93, n));
    if (!(got == prefixes[order_of(build_matrix(DetVariant::kit93, n))])) {
      o.fail("kit93 prefix at d_" + std::to_string(idx));
    }
    if (idx <= 9 && !(got == family(FamilyId::D, idx, "enumeration"))) {
      o.fail("kit93 d_" + std::to_string(idx) + " = " + to_string(got));
    }
  }
  return o;
}

Outcome closed_forms() {
  Outcome o;
  int checked = 0;
  for (const auto& cf : fixtures::closed_forms()) {
    auto seq = derive_sequence(*cf.grammar, cf.start, cf.order(10));
    for (int k = 1; k <= 10; ++k) {
      ++checked;
      if (!(seq[cf.order(k)] == cf.expected(k))) o.fail(cf.name + " at k=" + std::to_string(k));
    }
  }
  if (o.ok) o.detail = std::to_string(checked) + " instances";
  return o;
}

Outcome identities() {
  Outcome o;
  auto sel = expand_selection(
      "bona,convolution,andre_subst,eulerian_cor,eulernum_cor_rec,sr_corA,sr_corB,"
      "t_cor_multiplicity,ts_recurrence,bt_cor,ff_cor,div_S,div_R");
  std::map<std::string, int> bounds = {{"bona", 20},   {"convolution", 12},
                                       {"andre_subst", 12}, {"div_S", 20},
                                       {"div_R", 20}, {"t_cor_multiplicity", 20}};
  Report r = run_suite(sel, bounds);
  if (r.entries.size() != sel.size()) o.fail("missing entries");
  for (const auto& e : r.entries) {
    if (e.status != Status::pass) {
      std::string why = e.id.name();
      if (e.counterexample) why += " at n=" + std::to_string(e.counterexample->n);
      o.fail(why);
    }
  }
  if (o.ok) o.detail = std::to_string(r.entries.size()) + " identities";
  return o;
}

Outcome oracles() {
  Outcome o;
  std::mt19937 rng(31337);
  std::uniform_int_distribution<int> deg(0, 2), coef(-5, 5), ord(0, 6);
  for (int i = 0; i < 200; ++i) {
    size_t order = ord(rng);
    SquareMatrix<UniPoly> m(order, UniPoly());
    for (size_t r = 0; r < order; ++r) {
      for (size_t c = 0; c < order && c <= r + 1; ++c) {
        std::vector<Int> cs(deg(rng) + 1);
        for (auto& v : cs) v = coef(rng);
        m.at(r, c) = UniPoly(cs);
      }
    }
    if (!(det_recursive(HessMatrix<UniPoly>(m)) == det_naive(m))) {
      o.fail("random matrix " + std::to_string(i));
    }
  }
  Report r = run_suite(expand_selection("leibniz,det_oracle"));
  for (const auto& e : r.entries) {
    if (e.status != Status::pass) o.fail(e.id.name());
  }
  return o;
}

Outcome qi_documented() {
  Outcome o;
  Report r = run_suite(expand_selection("qi_flag"));
  if (r.entries.size() != 1 || r.entries[0].status != Status::flag) {
    o.fail("qi_flag did not flag");
  } else {
    o.detail = r.entries[0].observed;
    if (r.entries[0].n_min != 1 || r.entries[0].n_max != 8) o.fail("range");
  }
  std::ostringstream out, err;
  if (cli::run({"verify"}, out, err) != cli::kExitOk) o.fail("verify did not exit 0");
  std::ostringstream out2, err2;
  if (cli::run({"verify", "--suite", "qi_flag", "--strict-flags"}, out2, err2) !=
      cli::kExitCheckFailed) {
    o.fail("--strict-flags did not fail");
  }
  return o;
}

Outcome stanley() {
  Outcome o;
  StanleyCalibration c = calibrate_stanley(8);
  if (!c.r_from_zero_matches && !c.r_from_one_matches) o.fail("no reading matches");
  for (int n = 2; n <= 8; ++n) {
    for (int k = 0; k <= n - 1; ++k) {
      if (stanley_explicit_R(n, k, c.chosen) != triangle_entry(FamilyId::R, n, k)) {
        o.fail("R(" + std::to_string(n) + "," + std::to_string(k) + ")");
      }
    }
  }
  if (o.ok) {
    o.detail = std::string("reading r>=") + (c.chosen == StanleyReading::r_from_zero ? "0" : "1") +
               " (r>=0 " + (c.r_from_zero_matches ? "matches" : "differs") + ", r>=1 " +
               (c.r_from_one_matches ? "matches" : "differs") + ")";
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"known small values", known_values},
      {"cross-method agreement", cross_method},
      {"determinant representations", determinants},
      {"grammar closed forms", closed_forms},
      {"identity suite", identities},
      {"determinant and Leibniz oracles", oracles},
      {"tridiagonal discrepancy flagged", qi_documented},
      {"explicit R against triangle", stanley},
  };
  int failures = 0;
  int i = 1;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::printf("%s %d %s%s%s\n", o.ok ? "PASS" : "FAIL", i++, c.name,
                o.detail.empty() ? "" : ": ", o.detail.c_str());
    std::fflush(stdout);
    if (!o.ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
