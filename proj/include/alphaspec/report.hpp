#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace alphaspec {

/// One failed check. `value` is the measured quantity the check compared
/// (a slack, or rho(graph) - rho(partner)), so the record can be re-derived
/// from the graph6 strings alone.
struct Violation {
  std::string check;  // bound id, or a relation such as "rho-decrease"
  std::string graph6;
  std::optional<std::string> partner;
  double alpha = 0.0;
  std::optional<int> parameter;
  double value = 0.0;
  /// "contradiction": the inequality fails; "below-margin": it holds but
  /// by less than the configured margin; "equality-mismatch",
  /// "extremal-mismatch" for equality and argmax classification,
  /// "closed-form" when an extremal value disagrees with its formula.
  std::string kind;
  std::string details;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct Witness {
  std::string role;  // e.g. "max", "second-max", "min", "equality"
  std::string graph6;
  double alpha = 0.0;
  double value = 0.0;
  std::optional<std::string> family;
  std::optional<int> parameter;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct TheoremReport {
  std::string theorem_id;
  /// Ranges and settings: "n", "alphas", "margin", ...
  std::map<std::string, std::string> parameters;
  std::size_t instances_checked = 0;
  std::size_t instances_skipped = 0;
  /// Strict comparisons inside the double-precision window that were
  /// settled by the extended-precision eigensolver.
  std::size_t certified_ties = 0;
  /// Smallest gap or strict-bound slack seen over all strict checks.
  std::optional<double> smallest_gap;
  std::vector<Violation> violations;
  std::vector<Witness> extremal_witnesses;
  std::vector<Witness> equality_witnesses;
  std::vector<std::string> notes;

  bool passed() const noexcept { return violations.empty(); }
  const char* status() const noexcept { return passed() ? "PASS" : "FAIL"; }

  /// Appends other's counts and lists after this report's, keeping order.
  void merge(const TheoremReport& other);
  void observe_gap(double gap) {
    if (!smallest_gap || gap < *smallest_gap) smallest_gap = gap;
  }

  friend bool operator==(const TheoremReport&, const TheoremReport&) = default;
};

}  // namespace alphaspec
