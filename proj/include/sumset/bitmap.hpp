#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace sumset {

/// Fixed-width bitmap over [0, size()).
class Bitmap {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  Bitmap() = default;
  explicit Bitmap(std::size_t nbits) : words_(word_count(nbits), 0), nbits_(nbits) {}

  static constexpr std::size_t word_count(std::size_t nbits) {
    return (nbits + kWordBits - 1) / kWordBits;
  }

  std::size_t size() const { return nbits_; }

  bool test(std::size_t i) const {
    return i < nbits_ && ((words_[i / kWordBits] >> (i % kWordBits)) & 1U);
  }
  void set(std::size_t i) { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  void reset(std::size_t i) { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }

  std::size_t count() const {
    std::size_t total = 0;
    for (Word w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }

  /// Sorted positions of the set bits.
  std::vector<std::int64_t> positions() const {
    std::vector<std::int64_t> out;
    out.reserve(count());
    for (std::size_t k = 0; k < words_.size(); ++k) {
      Word w = words_[k];
      while (w != 0) {
        out.push_back(static_cast<std::int64_t>(k * kWordBits +
                                                static_cast<std::size_t>(std::countr_zero(w))));
        w &= w - 1;
      }
    }
    return out;
  }

  std::span<const Word> words() const { return words_; }
  std::span<Word> words() { return words_; }

  /// Same size and same bits.
  friend bool operator==(const Bitmap&, const Bitmap&) = default;

 private:
  std::vector<Word> words_;
  std::size_t nbits_ = 0;
};

}  // namespace sumset
