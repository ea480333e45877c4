#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "sumset/sumset_core.hpp"

namespace sumset {

/// Hilbert polynomial HP(s) = slope * s + constant of the monomial curve C_A,
/// the regularity index r of its Hilbert function, and the combinatorial
/// regularity bound rho(A).
struct HilbertData {
  std::int64_t hp_slope = 0;  // a_n = deg C_A
  std::int64_t hp_const = 0;  // 1 - delta_1 - delta_2
  std::int64_t r = 0;         // least s0 with HF(s) = HP(s) for all s >= s0
  std::int64_t rho = 0;

  std::int64_t hp(std::int64_t s) const { return hp_slope * s + hp_const; }

  friend bool operator==(const HilbertData&, const HilbertData&) = default;
};

struct SingularityReport {
  std::int64_t delta1 = 0;
  std::int64_t delta2 = 0;
  bool smooth1 = true;  // a_2 == 1
  bool smooth2 = true;  // a_n - a_{n-1} == 1
  std::int64_t pa = 0;  // arithmetic genus

  friend bool operator==(const SingularityReport&, const SingularityReport&) = default;
};

/// rho(A) = 1 + max over 2 <= i < j <= n of (a_i - a_{i-1}) + (a_j - a_{j-1}).
/// For n = 2 (A = {0,1}) returns 3.
std::int64_t rho_bound(const NormalForm& a);

/// 1 + largest consecutive gap, only when both torus-fixed points are smooth.
std::optional<std::int64_t> smooth_reg_bound(const NormalForm& a);

SingularityReport singularity_report(const NormalForm& a);

/// r is found by scanning HF downward from rho(A), where HF = HP is certified.
HilbertData hilbert_polynomial(const NormalForm& a);

/// Same, reusing a precomputed growth table that reaches at least rho(A).
HilbertData hilbert_polynomial(const NormalForm& a, const GrowthTable& hf);

/// Exponent pairs (a_n - a_i, a_i) of X_i -> u^{a_n - a_i} v^{a_i}.
std::vector<std::pair<std::int64_t, std::int64_t>> parameterization(const NormalForm& a);

/// Saturating binomial coefficient C(n, k).
std::uint64_t binomial_sat(std::uint64_t n, std::uint64_t k);

/// Result of checking s(n-1)+1 <= |sA| <= C(s+n-1, s) for s = 0..s_max.
struct BoundsReport {
  struct Violation {
    std::int64_t s = 0;
    std::int64_t card = 0;
    std::int64_t lower = 0;
    std::uint64_t upper = 0;
  };
  std::int64_t s_max = 0;
  std::optional<Violation> violation;
  bool ok() const { return !violation.has_value(); }
};

BoundsReport bounds_check(const NormalForm& a, std::int64_t s_max);
BoundsReport bounds_check(const NormalForm& a, const GrowthTable& hf);

}  // namespace sumset
