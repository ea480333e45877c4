#include <doctest.h>

#include <random>
#include <vector>

#include "sumset/kernels.hpp"

using sumset::Bitmap;
namespace k = sumset::kernels;

namespace {

Bitmap random_bitmap(std::mt19937_64& rng, std::size_t nbits, double density) {
  Bitmap b(nbits);
  std::bernoulli_distribution coin(density);
  for (std::size_t i = 0; i < nbits; ++i)
    if (coin(rng)) b.set(i);
  return b;
}

}  // namespace

TEST_CASE("parallel shift-or matches the serial reference") {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t nsrc = 1 + rng() % 3000;
    std::vector<std::int64_t> shifts{0};
    const int extra = 1 + static_cast<int>(rng() % 6);
    std::int64_t last = 0;
    for (int i = 0; i < extra; ++i) shifts.push_back(last += 1 + static_cast<std::int64_t>(rng() % 150));
    const std::size_t ndst = nsrc + static_cast<std::size_t>(shifts.back());

    const Bitmap src = random_bitmap(rng, nsrc, 0.1 + 0.8 * (trial % 5) / 5.0);
    Bitmap serial(ndst), parallel(ndst);
    k::shift_or_serial(src.words(), serial.words(), shifts);
    k::shift_or_parallel(src.words(), parallel.words(), shifts);
    REQUIRE(serial == parallel);

    // Bit-level definition.
    for (std::size_t x = 0; x < ndst; ++x) {
      bool expect = false;
      for (auto sh : shifts)
        if (x >= static_cast<std::size_t>(sh) && src.test(x - static_cast<std::size_t>(sh))) expect = true;
      if (serial.test(x) != expect) FAIL("bit " << x);
    }
  }
}

TEST_CASE("parallel kernel crosses the threading threshold") {
  std::mt19937_64 rng(7);
  const std::size_t nsrc = k::kParallelMinWords * 64 * 2;
  const std::vector<std::int64_t> shifts{0, 3, 64, 129, 1000};
  const Bitmap src = random_bitmap(rng, nsrc, 0.01);
  Bitmap serial(nsrc + 1000), parallel(nsrc + 1000);
  k::shift_or_serial(src.words(), serial.words(), shifts);
  k::shift_or_parallel(src.words(), parallel.words(), shifts);
  CHECK(serial == parallel);
}

TEST_CASE("bitmap positions and count") {
  Bitmap b(130);
  for (std::size_t i : {0u, 63u, 64u, 129u}) b.set(i);
  CHECK(b.count() == 4);
  CHECK(b.positions() == std::vector<std::int64_t>{0, 63, 64, 129});
  CHECK_FALSE(b.test(130));
  b.reset(63);
  CHECK_FALSE(b.test(63));
}
