#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sumset/bitmap.hpp"
#include "sumset/sumset_core.hpp"

namespace sumset {

/// A numerical semigroup given by generators with gcd 1.
///
/// Conventions: for the semigroup N itself the conductor is 0 and the
/// Frobenius number is -1, so small_elements() is empty and genus() is 0.
class NumericalSemigroup {
 public:
  /// Throws ValidationError on an empty generator list, a non-positive
  /// generator, or gcd != 1; LimitError if the sieve window exceeds the budget.
  static NumericalSemigroup from_generators(std::span<const std::int64_t> generators);

  /// Sorted, deduplicated generators as supplied.
  std::span<const std::int64_t> generators() const { return generators_; }
  std::int64_t frobenius() const { return conductor_ - 1; }
  std::int64_t conductor() const { return conductor_; }
  std::span<const std::int64_t> gaps() const { return gaps_; }
  /// Number of gaps (singularity order when the semigroup is a curve germ's).
  std::int64_t genus() const { return static_cast<std::int64_t>(gaps_.size()); }

  bool contains(std::int64_t x) const {
    if (x < 0) return false;
    if (x >= conductor_) return true;
    return membership_.test(static_cast<std::size_t>(x));
  }

  /// Members in [0, conductor - 2]; empty when conductor <= 1.
  std::vector<std::int64_t> small_elements() const;

  /// Stored membership window [0, conductor + max generator].
  const Bitmap& membership() const { return membership_; }

 private:
  std::vector<std::int64_t> generators_;
  Bitmap membership_;
  std::int64_t conductor_ = 0;
  std::vector<std::int64_t> gaps_;
};

inline NumericalSemigroup semigroup_from_generators(std::span<const std::int64_t> gens) {
  return NumericalSemigroup::from_generators(gens);
}

/// Semigroup of the germ at P1: <a_2, ..., a_n>.
NumericalSemigroup left_semigroup(const NormalForm& a);

/// Semigroup of the germ at P2: <a_n - a_{n-1}, ..., a_n - a_2, a_n>.
NumericalSemigroup right_semigroup(const NormalForm& a);

inline std::vector<std::int64_t> small_elements(const NumericalSemigroup& g) {
  return g.small_elements();
}

}  // namespace sumset
