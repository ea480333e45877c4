#include "sumset/kernels.hpp"

#include <cstddef>

namespace sumset::kernels {

void shift_or_serial(std::span<const Bitmap::Word> src, std::span<Bitmap::Word> dst,
                     std::span<const std::int64_t> shifts) {
  constexpr std::size_t W = Bitmap::kWordBits;
  for (std::int64_t shift : shifts) {
    const auto q = static_cast<std::size_t>(shift) / W;
    const auto r = static_cast<unsigned>(static_cast<std::size_t>(shift) % W);
    for (std::size_t j = 0; j < src.size() && j + q < dst.size(); ++j) {
      const Bitmap::Word w = src[j];
      if (w == 0) continue;
      dst[j + q] |= w << r;
      if (r != 0 && j + q + 1 < dst.size()) dst[j + q + 1] |= w >> (W - r);
    }
  }
}

void shift_or_parallel(std::span<const Bitmap::Word> src, std::span<Bitmap::Word> dst,
                       std::span<const std::int64_t> shifts) {
  constexpr std::size_t W = Bitmap::kWordBits;
  const auto nd = static_cast<std::ptrdiff_t>(dst.size());
  const auto ns = static_cast<std::ptrdiff_t>(src.size());
  const Bitmap::Word* in = src.data();
  Bitmap::Word* out = dst.data();
  const std::int64_t* sh = shifts.data();
  const auto nshift = static_cast<std::ptrdiff_t>(shifts.size());

#pragma omp parallel for schedule(static) if (dst.size() >= kParallelMinWords)
  for (std::ptrdiff_t k = 0; k < nd; ++k) {
    Bitmap::Word acc = out[k];
    for (std::ptrdiff_t t = 0; t < nshift; ++t) {
      const auto q = static_cast<std::ptrdiff_t>(sh[t] / static_cast<std::int64_t>(W));
      const auto r = static_cast<unsigned>(sh[t] % static_cast<std::int64_t>(W));
      const std::ptrdiff_t j = k - q;
      if (j >= 0 && j < ns) acc |= in[j] << r;
      if (r != 0 && j - 1 >= 0 && j - 1 < ns) acc |= in[j - 1] >> (W - r);
    }
    out[k] = acc;
  }
}

}  // namespace sumset::kernels
