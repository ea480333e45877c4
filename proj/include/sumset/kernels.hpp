#pragma once

#include <cstdint>
#include <span>

#include "sumset/bitmap.hpp"

namespace sumset::kernels {

// dst |= OR over k of (src << shifts[k]), truncated to dst's width. Bits of
// dst beyond its logical size must be zero on entry and stay zero on exit
// as long as the shifted sources fit.
//
// shift_or_serial is the reference: it walks source words and scatters into
// destination words. shift_or_parallel gathers each destination word
// independently, so its OpenMP loop has no write sharing.

void shift_or_serial(std::span<const Bitmap::Word> src, std::span<Bitmap::Word> dst,
                     std::span<const std::int64_t> shifts);

void shift_or_parallel(std::span<const Bitmap::Word> src, std::span<Bitmap::Word> dst,
                       std::span<const std::int64_t> shifts);

/// Below this many destination words the parallel kernel runs single-threaded.
inline constexpr std::size_t kParallelMinWords = 4096;

}  // namespace sumset::kernels
