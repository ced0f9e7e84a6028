#include <gtest/gtest.h>

#include "combpoly/enumerate.hpp"
#include "combpoly/errors.hpp"

using namespace combpoly;

TEST(WordStat, Runs) {
  Word w{8, 2, 3, 1, 5, 4, 6, 7};
  EXPECT_EQ(word_stat(w, Stat::run), 6);
  EXPECT_EQ(word_stat(w, Stat::udrun), 7);
  EXPECT_EQ(word_stat({1}, Stat::run), 0);
  EXPECT_EQ(word_stat({1}, Stat::udrun), 1);
}

TEST(WordStat, DescentsExcedancesFixed) {
  for (int n = 1; n <= 6; ++n) {
    Word id(n);
    for (int i = 0; i < n; ++i) id[i] = i + 1;
    EXPECT_EQ(word_stat(id, Stat::des), 0);
    EXPECT_EQ(word_stat(id, Stat::fix), n);
  }
  Word w{3, 1, 2};
  EXPECT_EQ(word_stat(w, Stat::des), 1);
  EXPECT_EQ(word_stat(w, Stat::exc), 1);
  EXPECT_EQ(word_stat(w, Stat::drop), 2);
  EXPECT_EQ(word_stat(w, Stat::fix), 0);
}

TEST(WordStat, Alternating) {
  EXPECT_EQ(word_stat({2, 1, 3}, Stat::alternating), 1);
  EXPECT_EQ(word_stat({3, 1, 2}, Stat::alternating), 1);
  EXPECT_EQ(word_stat({1, 3, 2}, Stat::alternating), 0);
  EXPECT_EQ(word_stat({2, 1, 4, 3}, Stat::alternating), 1);
}

TEST(WordStat, RejectsForeignStats) {
  EXPECT_THROW(word_stat({1, 2}, Stat::desB), UnsupportedStatForClass);
  EXPECT_THROW(word_stat({1, 2}, Stat::fap), UnsupportedStatForClass);
}

TEST(SignedStat, Examples) {
  EXPECT_EQ(signed_stat({-1}, Stat::desB), 1);
  EXPECT_EQ(signed_stat({1, 2, 3, 4}, Stat::desB), 0);
  EXPECT_EQ(signed_stat({2, -1}, Stat::runB), 2);
  EXPECT_EQ(signed_stat({1}, Stat::runB), 1);
  EXPECT_THROW(signed_stat({1}, Stat::des), UnsupportedStatForClass);
}

TEST(StirlingStat, Examples) {
  EXPECT_EQ(stirling_stat({1, 1}, Stat::fap), 1);
  EXPECT_EQ(stirling_stat({1, 2, 2, 1}, Stat::fap), 2);
  EXPECT_EQ(stirling_stat({2, 2, 1, 1}, Stat::fap), 1);
  EXPECT_EQ(stirling_stat({1, 2, 2, 1}, Stat::ap), 1);
  EXPECT_THROW(stirling_stat({2, 1, 2, 1}, Stat::fap), InvalidStirlingWord);
  EXPECT_THROW(stirling_stat({1, 1, 1}, Stat::ap), InvalidStirlingWord);
}

TEST(StirlingStat, Validity) {
  EXPECT_TRUE(is_valid_stirling({2, 2, 1, 3, 3, 1}));
  EXPECT_FALSE(is_valid_stirling({1, 2, 1, 2}));
  EXPECT_FALSE(is_valid_stirling({1, 1, 3, 3}));
}

TEST(Phi, Examples) {
  EXPECT_EQ(phi({2, 2, 1, 3, 3, 1}), (Word{4, 3, 2, 6, 5, 1}));
  EXPECT_EQ(phi({1, 1}), (Word{2, 1}));
  EXPECT_EQ(phi({1, 1, 2, 2}), (Word{2, 1, 4, 3}));
  EXPECT_THROW(phi({1, 2, 1, 2}), InvalidStirlingWord);
}

TEST(Distribution, Examples) {
  EXPECT_EQ(distribution(3, ObjectClass::perm, Stat::run), UniPoly({0, 2, 4}));
  EXPECT_EQ(distribution(2, ObjectClass::up_signed, Stat::runB), UniPoly({0, 1, 3}));
  const LetterSet& s = andre_letters();
  LaurentPoly x = LaurentPoly::letter(s, "x"), y = LaurentPoly::letter(s, "y");
  EXPECT_EQ(andre_distribution(4), x * y.pow(3) + Int(4) * x * x * y);
  EXPECT_EQ(andre_distribution(1), x);
  EXPECT_EQ(distribution(2, ObjectClass::stirling, Stat::fap), UniPoly({0, 1, 1, 1}));
  EXPECT_EQ(distribution(1, ObjectClass::signed_perm, Stat::desB), UniPoly({1, 1}));
  EXPECT_EQ(distribution(2, ObjectClass::signed_perm, Stat::desB), UniPoly({1, 6, 1}));
}

TEST(Distribution, Guards) {
  EXPECT_THROW(distribution(10, ObjectClass::perm, Stat::des), TooLarge);
  EXPECT_THROW(distribution(8, ObjectClass::signed_perm, Stat::desB), TooLarge);
  EXPECT_THROW(distribution(9, ObjectClass::stirling, Stat::fap), TooLarge);
  EXPECT_THROW(andre_distribution(11), TooLarge);
  EXPECT_THROW(distribution(3, ObjectClass::perm, Stat::fap), UnsupportedStatForClass);
  EXPECT_THROW(distribution(3, ObjectClass::stirling, Stat::des), UnsupportedStatForClass);
  EXPECT_EQ(max_enumeration_n(ObjectClass::perm), 9);
  EXPECT_EQ(max_enumeration_n(ObjectClass::up_signed), 7);
  EXPECT_EQ(max_enumeration_n(ObjectClass::dual_stirling), 8);
  EXPECT_EQ(max_enumeration_n(ObjectClass::tree012), 10);
}

TEST(Distribution, Equidistribution) {
  for (int n = 1; n <= 8; ++n) {
    UniPoly d = distribution(n, ObjectClass::perm, Stat::des);
    EXPECT_EQ(d, distribution(n, ObjectClass::perm, Stat::exc)) << n;
    EXPECT_EQ(d, distribution(n, ObjectClass::perm, Stat::drop)) << n;
  }
}

TEST(Distribution, Degrees) {
  for (int n = 2; n <= 8; ++n) {
    EXPECT_EQ(distribution(n, ObjectClass::perm, Stat::udrun).degree(), n);
    EXPECT_EQ(distribution(n, ObjectClass::perm, Stat::run).degree(), n - 1);
  }
}

TEST(Generators, StirlingCountAndValidity) {
  long expected = 1;
  for (int n = 1; n <= 8; ++n) {
    expected *= 2 * n - 1;
    long count = 0;
    bool all_valid = true;
    for_each_stirling(n, [&](const StirlingWord& s) {
      ++count;
      if (n <= 6) all_valid = all_valid && is_valid_stirling(s);
    });
    EXPECT_EQ(count, expected) << n;
    EXPECT_TRUE(all_valid);
  }
}

TEST(Generators, FapEqualsRunOfDual) {
  for (int n = 1; n <= 6; ++n) {
    for_each_stirling(n, [&](const StirlingWord& s) {
      ASSERT_EQ(stirling_stat(s, Stat::fap), word_stat(phi(s), Stat::run));
    });
  }
}

TEST(Generators, AlternatingCounts) {
  const long euler[] = {1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936};
  for (int n = 1; n <= 9; ++n) {
    EXPECT_EQ(distribution(n, ObjectClass::perm, Stat::alternating).coeff(1), euler[n]) << n;
  }
}

TEST(Generators, Counts) {
  long perms = 0, signs = 0, ups = 0;
  for_each_permutation(5, [&](const Word&) { ++perms; });
  for_each_signed(4, [&](const SignedWord&) { ++signs; });
  for_each_up_signed(4, [&](const SignedWord& w) {
    ++ups;
    EXPECT_GT(w[0], 0);
  });
  EXPECT_EQ(perms, 120);
  EXPECT_EQ(signs, 384);
  EXPECT_EQ(ups, 192);
}

TEST(Generators, Trees) {
  // 0-1-2 increasing trees on n vertices are counted by the Euler numbers.
  const long euler[] = {1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936, 50521};
  for (int n = 1; n <= 10; ++n) {
    long count = 0;
    for_each_tree012(n, [&](const Tree012& t) {
      ++count;
      for (int v = 1; v < n; ++v) ASSERT_LT(t.parent[v], v);
      for (int c : t.children) ASSERT_LE(c, 2);
    });
    EXPECT_EQ(count, euler[n]) << n;
  }
}

TEST(Names, RoundTrip) {
  for (auto c : {ObjectClass::perm, ObjectClass::signed_perm, ObjectClass::up_signed,
                 ObjectClass::stirling, ObjectClass::dual_stirling, ObjectClass::tree012}) {
    EXPECT_EQ(parse_object_class(to_string(c)), c);
  }
  EXPECT_EQ(parse_stat("fap"), Stat::fap);
  EXPECT_THROW(parse_stat("nope"), UnknownName);
  EXPECT_THROW(parse_object_class("nope"), UnknownName);
}
