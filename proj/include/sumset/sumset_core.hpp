#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sumset/bitmap.hpp"
#include "sumset/errors.hpp"

namespace sumset {

/// Which shift-OR kernel drives the sumset iteration.
enum class Kernel { Serial, Parallel };

/// A set A = {0 = a_1 < a_2 < ... < a_n} with gcd(a_2, ..., a_n) = 1, together
/// with the affine map raw_i = shift + scale * a_i back to the input it came from.
class NormalForm {
 public:
  /// Subtracts the minimum and divides by the gcd of the differences.
  /// Throws ValidationError when raw has fewer than two elements, a negative
  /// entry, a repeated element, or is not increasing.
  static NormalForm normalize(std::span<const std::int64_t> raw);

  /// Throws ValidationError unless elements already are a normal form.
  static NormalForm from_normal(std::span<const std::int64_t> elements);

  std::span<const std::int64_t> elements() const { return a_; }
  std::int64_t operator[](std::size_t i) const { return a_[i]; }
  std::size_t size() const { return a_.size(); }
  /// a_n, the largest element (degree of the associated curve).
  std::int64_t back() const { return a_.back(); }
  std::int64_t shift() const { return shift_; }
  std::int64_t scale() const { return scale_; }

  /// The raw input this normal form was reduced from.
  std::vector<std::int64_t> raw() const;

  friend bool operator==(const NormalForm&, const NormalForm&) = default;

 private:
  NormalForm(std::vector<std::int64_t> a, std::int64_t shift, std::int64_t scale)
      : a_(std::move(a)), shift_(shift), scale_(scale) {}

  std::vector<std::int64_t> a_;
  std::int64_t shift_ = 0;
  std::int64_t scale_ = 1;
};

/// The s-fold sumset sA as a bitmap over [0, s * a_n].
struct SumsetImage {
  std::int64_t s = 0;
  Bitmap bits;
  std::int64_t card = 0;

  std::int64_t max() const { return static_cast<std::int64_t>(bits.size()) - 1; }
  bool contains(std::int64_t x) const {
    return x >= 0 && bits.test(static_cast<std::size_t>(x));
  }
  std::vector<std::int64_t> elements() const { return bits.positions(); }
};

/// |0A|, |1A|, ..., |s_max A|; equals the Hilbert function of the curve.
struct GrowthTable {
  std::vector<std::int64_t> values;
};

/// Parses "a,b,c" into integers. Throws ValidationError on malformed text.
std::vector<std::int64_t> parse_set(const std::string& text);

std::string format_set(std::span<const std::int64_t> values, const char* sep = ",");

/// Throws LimitError if s * a_n overflows or exceeds the configured bitmap budget.
void check_sumset_limits(const NormalForm& a, std::int64_t s);

/// Exact sA computed as s rounds of (k+1)A = OR_i (kA << a_i).
SumsetImage sumset(const NormalForm& a, std::int64_t s, Kernel kernel = Kernel::Parallel);

/// One step of the iteration: (s+1)A from sA.
SumsetImage next_sumset(const NormalForm& a, const SumsetImage& prev,
                        Kernel kernel = Kernel::Parallel);

/// 0A, 1A, ..., s_max A.
std::vector<SumsetImage> sumset_chain(const NormalForm& a, std::int64_t s_max,
                                      Kernel kernel = Kernel::Parallel);

GrowthTable growth_table(const NormalForm& a, std::int64_t s_max,
                         Kernel kernel = Kernel::Parallel);

}  // namespace sumset
