#pragma once

// Brute-force generators and statistics: the ground truth every other
// method is compared against. Generators stream one object at a time to a
// visitor; nothing is materialized beyond the current object.

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "combpoly/laurent.hpp"
#include "combpoly/unipoly.hpp"

namespace combpoly {

/// One-line permutation of {1..n}.
using Word = std::vector<int>;
/// Signed permutation pi(1)..pi(n); the implicit pi(0) = 0 is not stored.
using SignedWord = std::vector<int>;
/// Word over {1,1,...,n,n}.
using StirlingWord = std::vector<int>;

/// Increasing tree on vertices 0..n-1 rooted at 0, each vertex with at most
/// two (unordered) children.
struct Tree012 {
  std::vector<int> parent;    // parent[0] == -1
  std::vector<int> children;  // child count per vertex
  int leaves() const;
  int unary() const;  // vertices with exactly one child
};

enum class ObjectClass { perm, signed_perm, up_signed, stirling, dual_stirling, tree012 };

enum class Stat {
  des,
  exc,
  drop,
  fix,
  run,
  udrun,
  alternating,  // 1 if pi(1) > pi(2) < pi(3) > ..., else 0
  desB,
  runB,
  ap,
  fap,
  leaves,
  unary,
};

std::string_view to_string(ObjectClass c);
std::string_view to_string(Stat s);
/// Throws UnknownName.
ObjectClass parse_object_class(std::string_view name);
Stat parse_stat(std::string_view name);

/// Size limits for brute force; distribution() throws TooLarge above them.
int max_enumeration_n(ObjectClass c);

// Visitors receive a reference that is only valid during the call.
void for_each_permutation(int n, const std::function<void(const Word&)>& visit);
void for_each_signed(int n, const std::function<void(const SignedWord&)>& visit);
/// Signed permutations with pi(1) > 0.
void for_each_up_signed(int n, const std::function<void(const SignedWord&)>& visit);
/// Stirling permutations, built by inserting the pair nn into every gap of
/// each word for n-1.
void for_each_stirling(int n, const std::function<void(const StirlingWord&)>& visit);
/// Images under phi of the Stirling permutations.
void for_each_dual_stirling(int n, const std::function<void(const Word&)>& visit);
void for_each_tree012(int n, const std::function<void(const Tree012&)>& visit);

/// Statistic of an ordinary permutation word. Accepts des, exc, drop, fix,
/// run, udrun, alternating; anything else throws UnsupportedStatForClass.
int word_stat(const Word& w, Stat stat);
/// desB or runB, computed on the word 0 pi(1) ... pi(n).
int signed_stat(const SignedWord& w, Stat stat);
/// ap or fap. Throws InvalidStirlingWord on a malformed word.
int stirling_stat(const StirlingWord& s, Stat stat);

bool is_valid_stirling(const StirlingWord& s);
/// First copy of j becomes 2j, second copy becomes 2j-1.
Word phi(const StirlingWord& s);

/// Sum over the class of x^stat.
UniPoly distribution(int n, ObjectClass cls, Stat stat);
/// Sum over 0-1-2 increasing trees on n vertices of x^leaves y^unary, as a
/// polynomial over the letters {x, y}.
LaurentPoly andre_distribution(int n);
/// Letter set {x, y} shared by every bivariate Andre value.
const LetterSet& andre_letters();

}  // namespace combpoly
