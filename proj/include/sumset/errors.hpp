#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sumset {

/// Malformed or out-of-domain input (CLI exit code 1).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input is well-formed but exceeds a configured resource limit (CLI exit code 2).
class LimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Resource limits shared by the sumset and semigroup kernels.
struct Limits {
  /// Largest admissible element of a normalized set.
  static constexpr std::int64_t kMaxElement = std::int64_t{1} << 20;
  static constexpr std::uint64_t kDefaultMaxBits = std::uint64_t{1} << 28;

  /// Largest bitmap (in bits) any single sumset or semigroup sieve may allocate.
  std::uint64_t max_bits = kDefaultMaxBits;

  /// Reads SUMSET_MAX_BITS from the environment, falling back to the default.
  static Limits from_env();
};

/// Process-wide limits, initialized from the environment on first use.
const Limits& limits();

}  // namespace sumset
