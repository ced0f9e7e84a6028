#pragma once

// Every polynomial family, by every available method: recurrences,
// grammars, Hessenberg determinants, explicit sums and brute force.

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "combpoly/enumerate.hpp"
#include "combpoly/hessenberg.hpp"
#include "combpoly/laurent.hpp"
#include "combpoly/unipoly.hpp"

namespace combpoly {

enum class FamilyId { A, Andre, EulerNum, R, S, T, B, F, D };

enum class DetVariant {
  eulerian_thm,
  andre_thm,
  eulernum_cor,
  sr_thmA,
  sr_thmB,
  t_thm,
  t_ts_thm,
  f_bt_thm,
  f_ff_thm,
  kit93,
  qi_tridiagonal,
};

enum class MethodKind {
  recurrence,
  diff_recurrence,
  triangle,
  grammar,
  determinant,
  enumeration,
  explicit_formula,
  andre_subst,  // R from the Andre polynomials
  bona,         // S from R
  b_recurrence, // F from B and F(-x)
};

std::string_view to_string(FamilyId f);
std::string_view to_string(DetVariant v);
std::string_view to_string(MethodKind k);
/// Throw UnknownName.
FamilyId parse_family(std::string_view name);
DetVariant parse_det_variant(std::string_view name);

const std::vector<FamilyId>& all_families();
const std::vector<DetVariant>& all_det_variants();

struct Method {
  MethodKind kind;
  std::optional<DetVariant> variant;  // determinant only
  std::optional<ObjectClass> cls;     // enumeration only
  std::optional<Stat> stat;           // enumeration only
  int min_n = 0;
  int max_n = -1;  // -1: no intrinsic limit
  /// False for methods known not to reproduce the family (qi_tridiagonal).
  bool cross_checked = true;

  /// "grammar", "determinant:sr_thmB", "enumeration:fap", ...
  std::string name() const;
  friend bool operator==(const Method& a, const Method& b) { return a.name() == b.name(); }
};

const std::vector<Method>& supported_methods(FamilyId f);
/// Looks a method up by name. A bare "determinant" or "enumeration" picks
/// the first one listed for the family. Throws UnsupportedMethod.
Method parse_method(FamilyId f, std::string_view name);
/// The method other methods are compared against.
Method reference_method(FamilyId f);

/// Univariate families give a UniPoly (EulerNum and D as constants);
/// Andre gives a polynomial over the letters {x, y}.
using FamilyValue = std::variant<UniPoly, LaurentPoly>;
std::string to_string(const FamilyValue& v);
/// Throws std::bad_variant_access for bivariate values.
const UniPoly& as_uni(const FamilyValue& v);

/// Throws UnsupportedMethod, UnsupportedOrder (n below the method's
/// range), TooLarge (enumeration guard).
FamilyValue family(FamilyId id, int n, const Method& method);
FamilyValue family(FamilyId id, int n, std::string_view method);
/// Univariate shortcut; throws UnsupportedMethod for Andre.
UniPoly family_poly(FamilyId id, int n, const Method& method);
UniPoly family_poly(FamilyId id, int n, std::string_view method);

using MatrixValue =
    std::variant<HessMatrix<Int>, HessMatrix<UniPoly>, HessMatrix<LaurentPoly>>;

/// sr_thmA and sr_thmB each carry one matrix for S and one for R.
FamilyId default_target(DetVariant v);
/// Throws UnsupportedMethod when `target` is not produced by `v`.
void check_target(DetVariant v, FamilyId target);
/// Matrix order for parameter n.
int matrix_order(DetVariant v, int n, FamilyId target);
/// Family index whose value the determinant equals (up to sign for
/// qi_tridiagonal).
int family_index(DetVariant v, int n, FamilyId target);
int min_parameter(DetVariant v, FamilyId target);

/// The determinant matrix of variant `v` for parameter n. Entries that refer to the family
/// itself are filled by the recurrence path. Throws UnsupportedOrder.
MatrixValue build_matrix(DetVariant v, int n, FamilyId target);
MatrixValue build_matrix(DetVariant v, int n);
size_t order_of(const MatrixValue& m);
FamilyValue determinant(const MatrixValue& m);
/// Determinants of every leading block, det H_0 .. det H_order.
std::vector<FamilyValue> leading_determinants(const MatrixValue& m);

/// Alternating run (R) and type B run (T) triangles; 0 outside the
/// triangle. n >= 1.
Int triangle_entry(FamilyId id, int n, int k);
/// Row n as a polynomial sum_k entry(n, k) x^k.
UniPoly triangle_row(FamilyId id, int n);

/// Which starting value of r the inner sum of the explicit R(n,k) formula
/// uses; both are admitted because the index range does not pin it down.
enum class StanleyReading { r_from_zero, r_from_one };
/// Explicit R(n, k) evaluated in exact rationals. n >= 2. Throws
/// NonIntegerResult when the sum is not an integer.
Int stanley_explicit_R(int n, int k, StanleyReading reading = StanleyReading::r_from_zero);

struct StanleyCalibration {
  bool r_from_zero_matches = false;
  bool r_from_one_matches = false;
  StanleyReading chosen = StanleyReading::r_from_zero;
};
/// Compares both readings against triangle_entry for 2 <= n <= max_n,
/// 0 <= k <= n-1, and picks the literal r >= 0 reading when it matches.
StanleyCalibration calibrate_stanley(int max_n = 8);

// Entry generators of the determinant matrices.
UniPoly s_entry(int n);   // (-1)^(n+1) (1+x) (1-x^2)^floor((n-1)/2)
UniPoly r_entry(int n);   // (-1)^(n-1) (x-1) (1-x^2)^floor((n-1)/2)
UniPoly f_entry(int n);   // (-1)^(n+1) (1-x^2)^floor(n/2)
UniPoly t_entry(int n);   // (1+x)(1-x^2)^(k-1) or -(1-x^2)^k
UniPoly ff_entry(int n);  // (1+x^2)(x^2-1)^(2k-2) or -(x^2-1)^(2k)
LaurentPoly e_entry(int n);  // over {x, y}
Int a_entry(int n);          // 1, 0, -1, 0, 1, ...

/// E_n(x, 1) from a bivariate Andre value.
UniPoly andre_at_y1(const LaurentPoly& e);
/// E_n(1, 1).
Int andre_at_11(const LaurentPoly& e);

}  // namespace combpoly
