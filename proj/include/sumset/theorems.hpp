#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sumset/sumset_core.hpp"

namespace sumset {

/// Outcome of one executable theorem or invariant check on one set. A failed
/// check always names a finite witness that can be re-checked by hand.
struct TheoremReport {
  std::string id;
  bool holds = true;
  std::string witness;  // empty when the check holds
  std::optional<std::int64_t> s;

  static TheoremReport pass(std::string id) { return {std::move(id), true, {}, std::nullopt}; }
  static TheoremReport fail(std::string id, std::string witness,
                            std::optional<std::int64_t> s = std::nullopt) {
    return {std::move(id), false, std::move(witness), s};
  }

  friend bool operator==(const TheoremReport&, const TheoremReport&) = default;
};

/// |sA| - |(s-1)A| >= min{a_n, s(n-2)+1} for 2 <= s <= s_max (Lev's bound).
/// Throws ValidationError when s_max < 2.
TheoremReport lev_check(const NormalForm& a, std::int64_t s_max);

/// Whether x_n acts injectively on the hyperplane-section algebra: for every
/// s in [1, rho+1] and alpha in sA \ (s-1)A, alpha + a_n is not in sA.
/// This is equivalent to k[C_A] being arithmetically Cohen-Macaulay.
bool cm_test(const NormalForm& a);

struct BermejoBound {
  std::int64_t bound = 0;       // ceil((a_n - 1) / (n - 2))
  std::int64_t r_plus_one = 0;  // computed regularity index + 1
  bool holds() const { return r_plus_one <= bound; }
};

/// Regularity bound for Cohen-Macaulay curves. nullopt when cm_test fails.
/// Throws ValidationError for n = 2.
std::optional<BermejoBound> bermejo_bound(const NormalForm& a);

/// The finite conditions of the rigidity theorem:
///   (3) |sA| = s(n-1)+1 for some s in [2, s_max]
///   (4) A = {0, 1, ..., n-1}
///   (5) |sA| = s(n-1)+1 for all s in [0, s_max]
struct RigidityReport {
  bool some_s = false;
  std::optional<std::int64_t> some_s_witness;
  bool is_interval = false;
  bool all_s = false;
  TheoremReport verdict;

  bool equivalent() const { return some_s == is_interval && is_interval == all_s; }
};

/// Throws ValidationError when s_max < 2.
RigidityReport rigidity_classifier(const NormalForm& a, std::int64_t s_max);

/// Check groups selectable for sweeps.
struct SuiteOptions {
  bool growth = true;
  bool hilbert = true;
  bool structure = true;
  bool lev = true;
  bool rigidity = true;
  bool cm = true;
  bool ideal = true;

  /// Parses "all" or a comma list of group names. Throws ValidationError.
  static SuiteOptions parse(const std::string& text);
};

/// Headline values computed while running the suite (one sweep CSV row).
struct SuiteSummary {
  std::int64_t n = 0;
  std::vector<std::int64_t> a;
  std::int64_t delta1 = 0, delta2 = 0;
  std::int64_t hp_const = 0;
  std::int64_t r = 0;
  std::int64_t rho = 0;
  std::int64_t sigma = 0;
  std::optional<std::int64_t> num_generators;
  bool cm = false;
  std::optional<std::int64_t> bermejo;
  bool lev_ok = true;
  bool rigidity_ok = true;
};

struct SuiteResult {
  SuiteSummary summary;
  std::vector<TheoremReport> reports;

  bool all_hold() const;
};

SuiteResult run_suite(const NormalForm& a, const SuiteOptions& options = {});

/// Every module invariant on A, aggregated.
std::vector<TheoremReport> verify_suite(const NormalForm& a);

}  // namespace sumset
