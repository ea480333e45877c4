#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sumset/semigroup.hpp"
#include "sumset/sumset_core.hpp"

namespace sumset {

enum class DecompositionStatus { Valid, IntervalEmpty, SetMismatch };

const char* to_string(DecompositionStatus status);

/// sA against C1 ⊔ [c1, s*a_n - c2] ⊔ (s*a_n - C2), with c_i the conductor
/// and C_i the small elements of the germ semigroups.
struct Decomposition {
  std::int64_t s = 0;
  std::int64_t top = 0;  // s * a_n
  std::int64_t c1 = 0;
  std::int64_t c2 = 0;
  std::vector<std::int64_t> C1;
  std::vector<std::int64_t> C2;
  DecompositionStatus status = DecompositionStatus::SetMismatch;

  bool valid() const { return status == DecompositionStatus::Valid; }
  std::int64_t middle_lo() const { return c1; }
  std::int64_t middle_hi() const { return top - c2; }
  /// Elements of s*a_n - C2, ascending.
  std::vector<std::int64_t> upper_block() const;
  /// s*a_n + 1 - (c1 - |C1|) - (c2 - |C2|).
  std::int64_t predicted_card() const;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// Renders "{0,2} ⊔ [4,33] ⊔ {35}" (∅ for empty blocks).
std::string render(const Decomposition& d);

Decomposition decompose_at(const NormalForm& a, std::int64_t s);
Decomposition decompose_at(const NormalForm& a, const SumsetImage& img,
                           const NumericalSemigroup& left, const NumericalSemigroup& right);

/// Least s from which the decomposition holds for every larger s.
struct StabilizationCertificate {
  std::int64_t sigma_empirical = 0;
  std::int64_t sigma_formula = 0;  // max(1, r, ceil((c1 + c2) / a_n))
  std::int64_t window = 0;         // scanned s = 1..window

  friend bool operator==(const StabilizationCertificate&, const StabilizationCertificate&) = default;
};

/// Scans s = 1..window with window >= max(rho + 4, sigma_formula + 2). Beyond
/// sigma_formula, sA ⊆ Γ1 ∩ (s*a_n - Γ2) and both sides have HP(s) elements,
/// so validity at one such s certifies every larger s.
StabilizationCertificate stabilization_threshold(const NormalForm& a);

/// c_i and C_i read off a stabilized sumset sA, set against the germ semigroups.
struct RefinementReport {
  std::int64_t s = 0;  // fold count the blocks were read from
  std::int64_t c1 = 0, small1 = 0, delta1 = 0, conductor1 = 0;
  std::int64_t c2 = 0, small2 = 0, delta2 = 0, conductor2 = 0;
  bool ok() const {
    return delta1 == c1 - small1 && delta2 == c2 - small2 && c1 == conductor1 &&
           c2 == conductor2;
  }
};

/// Extracts c_i as the start of the long run of sA from either end and
/// C_i as the members below c_i - 1, then checks delta_i = c_i - |C_i| with
/// delta_i counted from the semigroup's gaps.
RefinementReport verify_refinement(const NormalForm& a);

}  // namespace sumset
