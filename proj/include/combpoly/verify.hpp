#pragma once

// Named identity checks over the family engine and a runner that collects
// them into a Report.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "combpoly/families.hpp"

namespace combpoly {

enum class CheckKind {
  crossmethod,
  bona,
  convolution,
  andre_subst,
  eulerian_cor,
  eulernum_cor_rec,
  sr_corA,
  sr_corB,
  t_cor_multiplicity,
  ts_recurrence,
  bt_cor,
  ff_cor,
  div_S,
  div_R,
  qi_flag,
  leibniz,
  det_oracle,
};

struct CheckId {
  CheckKind kind;
  std::optional<FamilyId> family;  // crossmethod only

  /// "bona", "crossmethod:R", ...
  std::string name() const;
  friend bool operator==(const CheckId& a, const CheckId& b) {
    return a.kind == b.kind && a.family == b.family;
  }
};

/// Accepts every name produced by CheckId::name(), plus a bare
/// "crossmethod" which is not a single check (see expand_selection).
/// Throws UnknownCheck.
CheckId parse_check(std::string_view name);
/// Canonical order: crossmethod per family, then the identities.
const std::vector<CheckId>& all_checks();
/// Splits a comma-separated selection; "all" and "crossmethod" expand.
std::vector<CheckId> expand_selection(std::string_view spec);

struct CheckInfo {
  int min_n;      // first n at which the statement applies
  int default_max;
  std::string statement;  // the identity, in plain notation
  bool fatal = true;      // false for flag-level checks
};
CheckInfo check_info(const CheckId& id);

enum class Status { pass, fail, flag };
std::string_view to_string(Status s);

struct Counterexample {
  int n = 0;
  std::string lhs;
  std::string rhs;
};

struct CheckResult {
  Status status = Status::pass;
  std::optional<Counterexample> counterexample;
  std::string observed;  // flag entries: the relation seen
};

/// One check at one n. Throws UnknownCheck and, when n is outside the
/// check's range, UnsupportedOrder.
CheckResult check(const CheckId& id, int n);

struct ReportEntry {
  CheckId id;
  int n_min = 0;
  int n_max = -1;
  Status status = Status::pass;
  std::optional<Counterexample> counterexample;
  std::string observed;
  double elapsed_ms = 0;
};

struct Report {
  std::vector<ReportEntry> entries;

  size_t count(Status s) const;
  /// True when nothing failed and, with strict_flags, nothing flagged.
  bool ok(bool strict_flags = false) const;
};

/// Runs each selected check for every n from its minimum to its bound
/// (`max_n`, keyed by check name, overrides the default). Entries follow
/// the canonical order whatever the selection order; duplicates collapse.
Report run_suite(const std::vector<CheckId>& selection,
                 const std::map<std::string, int>& max_n = {});

}  // namespace combpoly
