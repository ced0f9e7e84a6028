#include <gtest/gtest.h>

#include "combpoly/errors.hpp"
#include "combpoly/families.hpp"

using namespace combpoly;

namespace {

const HessMatrix<UniPoly>& uni(const MatrixValue& m) { return std::get<HessMatrix<UniPoly>>(m); }

}  // namespace

TEST(Family, Examples) {
  EXPECT_EQ(family_poly(FamilyId::A, 4, "determinant"), UniPoly({0, 1, 11, 11, 1}));
  EXPECT_EQ(family_poly(FamilyId::T, 3, "triangle"), UniPoly({0, 1, 12, 11}));
  EXPECT_EQ(family_poly(FamilyId::F, 4, "diff_recurrence"),
            UniPoly({0, 1, 7, 29, 31, 29, 7, 1}));
  EXPECT_EQ(family_poly(FamilyId::D, 5, "determinant:kit93"), UniPoly({44}));
  EXPECT_EQ(family_poly(FamilyId::EulerNum, 4, "enumeration"), UniPoly({5}));
  for (const auto& m : supported_methods(FamilyId::S)) {
    if (m.min_n <= 0) {
      EXPECT_EQ(family_poly(FamilyId::S, 0, m), UniPoly({1})) << m.name();
    }
  }
  EXPECT_EQ(family_poly(FamilyId::R, 0, "diff_recurrence"), UniPoly({1}));
  EXPECT_EQ(family_poly(FamilyId::R, 1, "diff_recurrence"), UniPoly({1}));
}

TEST(Family, Errors) {
  EXPECT_THROW(family(FamilyId::D, 3, "grammar"), UnsupportedMethod);
  EXPECT_THROW(family(FamilyId::A, 3, "nonsense"), UnsupportedMethod);
  EXPECT_THROW(family(FamilyId::A, 10, "enumeration"), TooLarge);
  EXPECT_THROW(family(FamilyId::Andre, 0, "grammar"), UnsupportedOrder);
  EXPECT_THROW(family_poly(FamilyId::Andre, 3, "grammar"), UnsupportedMethod);
  EXPECT_THROW(parse_family("Q"), UnknownName);
  EXPECT_THROW(parse_det_variant("nope"), UnknownName);
}

TEST(Family, MethodNames) {
  for (FamilyId f : all_families()) {
    for (const auto& m : supported_methods(f)) {
      EXPECT_EQ(parse_method(f, m.name()), m) << m.name();
    }
  }
  EXPECT_EQ(parse_method(FamilyId::R, "determinant").name(), "determinant:sr_thmA");
  EXPECT_EQ(parse_method(FamilyId::R, "determinant:sr_thmB").variant, DetVariant::sr_thmB);
}

TEST(Family, CrossMethodSmall) {
  for (FamilyId f : all_families()) {
    Method ref = reference_method(f);
    for (const auto& m : supported_methods(f)) {
      if (!m.cross_checked) continue;
      int hi = m.max_n >= 0 ? std::min(m.max_n, 6) : 12;
      if (ref.max_n >= 0) hi = std::min(hi, ref.max_n);
      for (int n = std::max(m.min_n, ref.min_n); n <= hi; ++n) {
        EXPECT_EQ(family(f, n, m), family(f, n, ref)) << to_string(f) << " " << m.name() << " n=" << n;
      }
    }
  }
}

TEST(Family, ConstantTerms) {
  for (FamilyId f : {FamilyId::A, FamilyId::R, FamilyId::S, FamilyId::T, FamilyId::F}) {
    for (int n = 2; n <= 15; ++n) {
      EXPECT_EQ(family_poly(f, n, reference_method(f)).coeff(0), 0) << to_string(f) << n;
    }
  }
  for (int n = 0; n <= 15; ++n) EXPECT_EQ(family_poly(FamilyId::B, n, "diff_recurrence").coeff(0), 1);
}

TEST(Family, AndreAtOneOneIsEulerNumber) {
  for (int n = 1; n <= 9; ++n) {
    const auto e = std::get<LaurentPoly>(family(FamilyId::Andre, n, "grammar"));
    EXPECT_EQ(UniPoly({andre_at_11(e)}), family_poly(FamilyId::EulerNum, n, "enumeration")) << n;
  }
}

TEST(Family, LargeOrderIsExact) {
  UniPoly f25 = family_poly(FamilyId::F, 25, "diff_recurrence");
  EXPECT_EQ(f25, family_poly(FamilyId::F, 25, "grammar"));
  // F_n(1) = (2n-1)!! counts Stirling permutations.
  Int dfact = 1;
  for (int i = 1; i <= 49; i += 2) dfact *= i;
  EXPECT_EQ(f25.value_at_one(), dfact);
}

TEST(BuildMatrix, RunsExample) {
  auto h = uni(build_matrix(DetVariant::sr_thmB, 3, FamilyId::R));
  ASSERT_EQ(h.order(), 3u);
  SquareMatrix<UniPoly> expected(3, UniPoly());
  expected.at(0, 0) = {0, 2};
  expected.at(0, 1) = {-1};
  expected.at(1, 0) = {0, 0, 4};
  expected.at(1, 1) = {1};
  expected.at(1, 2) = {-1};
  expected.at(2, 0) = {0, 0, 4, 8};
  expected.at(2, 1) = {-1, 0, 1};
  expected.at(2, 2) = {2};
  EXPECT_EQ(h.matrix(), expected);
  EXPECT_EQ(det_recursive(h), UniPoly({0, 2, 12, 10}));
}

TEST(BuildMatrix, EulerianWorkedExample) {
  auto h = uni(build_matrix(DetVariant::eulerian_thm, 3));
  ASSERT_EQ(h.order(), 4u);
  SquareMatrix<UniPoly> e(4, UniPoly());
  e.at(0, 0) = {0, 1};
  e.at(0, 1) = {-1};
  e.at(1, 0) = {0, 1};
  e.at(1, 1) = {0, 1};
  e.at(1, 2) = {-1};
  e.at(2, 0) = {0, 1, 1};
  e.at(2, 1) = {0, 1, -1};
  e.at(2, 2) = {0, 2};
  e.at(2, 3) = {-1};
  e.at(3, 0) = {0, 1, 4, 1};
  e.at(3, 1) = {0, 1, -2, 1};
  e.at(3, 2) = {0, 3, -3};
  e.at(3, 3) = {0, 3};
  EXPECT_EQ(h.matrix(), e);
  EXPECT_EQ(det_recursive(h), UniPoly({0, 1, 11, 11, 1}));
}

TEST(BuildMatrix, Kit93Example) {
  auto h = std::get<HessMatrix<Int>>(build_matrix(DetVariant::kit93, 2));
  SquareMatrix<Int> e(2, Int(0));
  e.at(0, 0) = 2;
  e.at(0, 1) = -1;
  e.at(1, 0) = 3;
  e.at(1, 1) = 3;
  EXPECT_EQ(h.matrix(), e);
}

TEST(BuildMatrix, Errors) {
  EXPECT_THROW(build_matrix(DetVariant::andre_thm, 0), UnsupportedOrder);
  EXPECT_THROW(build_matrix(DetVariant::t_thm, 0), UnsupportedOrder);
  EXPECT_THROW(build_matrix(DetVariant::eulerian_thm, 3, FamilyId::F), UnsupportedMethod);
  EXPECT_NO_THROW(check_target(DetVariant::sr_thmA, FamilyId::S));
  EXPECT_THROW(check_target(DetVariant::sr_thmA, FamilyId::T), UnsupportedMethod);
}

TEST(BuildMatrix, PrefixConsistency) {
  for (DetVariant v : all_det_variants()) {
    std::vector<FamilyId> targets{default_target(v)};
    if (v == DetVariant::sr_thmA || v == DetVariant::sr_thmB) targets = {FamilyId::R, FamilyId::S};
    for (FamilyId t : targets) {
      const int lo = min_parameter(v, t);
      const int hi = t == FamilyId::Andre ? 8 : 10;
      auto big = build_matrix(v, hi, t);
      auto dets = leading_determinants(big);
      for (int n = lo; n <= hi; ++n) {
        auto small = build_matrix(v, n, t);
        size_t k = order_of(small);
        ASSERT_LT(k, dets.size());
        EXPECT_EQ(determinant(small), dets[k]) << to_string(v) << " n=" << n;
        if (v != DetVariant::qi_tridiagonal && n >= lo) {
          Method ref = reference_method(t);
          int idx = family_index(v, n, t);
          if (idx >= ref.min_n && (ref.max_n < 0 || idx <= ref.max_n)) {
            EXPECT_EQ(dets[k], family(t, idx, ref)) << to_string(v) << " n=" << n;
          }
        }
      }
    }
  }
}

TEST(BuildMatrix, QiLiteralEntries) {
  // Taken literally, the tridiagonal entries give -d_n.
  const int d[] = {1, 0, 1, 2, 9, 44, 265, 1854, 14833};
  for (int n = 1; n <= 8; ++n) {
    EXPECT_EQ(as_uni(determinant(build_matrix(DetVariant::qi_tridiagonal, n))),
              UniPoly({-d[n]})) << n;
  }
}

TEST(BuildMatrix, CornerOfDualStirlingMatrix) {
  // A corner entry of 1 instead of x gives 2x+x^3 rather than
  // F_2 = x+x^2+x^3.
  auto h = uni(build_matrix(DetVariant::f_bt_thm, 1));
  EXPECT_EQ(det_recursive(h), UniPoly({0, 1, 1, 1}));
  SquareMatrix<UniPoly> corner1 = h.matrix();
  corner1.at(0, 0) = UniPoly({1});
  EXPECT_EQ(det_recursive(HessMatrix<UniPoly>(corner1)), UniPoly({0, 2, 0, 1}));
}

TEST(EntryGenerators, FirstValues) {
  EXPECT_EQ(s_entry(1), UniPoly({1, 1}));
  EXPECT_EQ(r_entry(1), UniPoly({-1, 1}));
  EXPECT_EQ(f_entry(1), UniPoly({1}));
  EXPECT_EQ(f_entry(2), UniPoly({-1, 0, 1}));
  EXPECT_EQ(t_entry(1), UniPoly({1, 1}));
  EXPECT_EQ(a_entry(1), 1);
  EXPECT_EQ(a_entry(2), 0);
  EXPECT_EQ(a_entry(3), -1);
  const LetterSet& s = andre_letters();
  LaurentPoly x = LaurentPoly::letter(s, "x"), y = LaurentPoly::letter(s, "y");
  EXPECT_EQ(e_entry(1), y);
  EXPECT_EQ(e_entry(2), x - y * y);
  EXPECT_EQ(e_entry(3), -(y * (Int(2) * x - y * y)));
}

TEST(Triangle, Examples) {
  EXPECT_EQ(triangle_entry(FamilyId::R, 1, 0), 1);
  EXPECT_EQ(triangle_entry(FamilyId::R, 4, 3), 10);
  EXPECT_EQ(triangle_entry(FamilyId::T, 1, 2), 0);
  EXPECT_EQ(triangle_entry(FamilyId::T, 1, 1), 1);
  EXPECT_EQ(triangle_entry(FamilyId::R, 4, 9), 0);
  EXPECT_EQ(triangle_row(FamilyId::R, 4), UniPoly({0, 2, 12, 10}));
}

TEST(Stanley, Examples) {
  EXPECT_EQ(stanley_explicit_R(3, 2), 4);
  EXPECT_EQ(stanley_explicit_R(4, 1), 2);
}

TEST(Stanley, CalibrationAgainstTriangle) {
  StanleyCalibration c = calibrate_stanley(8);
  EXPECT_TRUE(c.r_from_zero_matches || c.r_from_one_matches);
  for (int n = 2; n <= 8; ++n) {
    for (int k = 0; k <= n - 1; ++k) {
      EXPECT_EQ(stanley_explicit_R(n, k, c.chosen), triangle_entry(FamilyId::R, n, k));
    }
  }
}
