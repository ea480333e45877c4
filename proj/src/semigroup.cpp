#include "sumset/semigroup.hpp"

#include <algorithm>
#include <numeric>

namespace sumset {

NumericalSemigroup NumericalSemigroup::from_generators(std::span<const std::int64_t> generators) {
  if (generators.empty()) throw ValidationError("semigroup needs at least one generator");
  std::vector<std::int64_t> gens(generators.begin(), generators.end());
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  if (gens.front() <= 0) throw ValidationError("semigroup generators must be positive");
  std::int64_t g = 0;
  for (std::int64_t x : gens) g = std::gcd(g, x);
  if (g != 1) throw ValidationError("semigroup generators must have gcd 1 (gcd is " +
                                    std::to_string(g) + ")");

  const std::int64_t gmin = gens.front();
  const std::int64_t gmax = gens.back();
  // Schur: the Frobenius number is below gmin * gmax, so the sieve finds a run
  // of gmin consecutive members (which fixes the conductor) inside this window.
  const std::int64_t window = gmin * gmax + gmax + 1;
  if (static_cast<std::uint64_t>(window) > limits().max_bits)
    throw LimitError("semigroup sieve window of " + std::to_string(window) +
                     " exceeds budget (SUMSET_MAX_BITS)");

  std::vector<char> member(static_cast<std::size_t>(window), 0);
  member[0] = 1;
  std::int64_t run = 0;
  std::int64_t conductor = -1;
  for (std::int64_t x = 0; x < window; ++x) {
    if (x > 0) {
      for (std::int64_t gen : gens) {
        if (gen > x) break;
        if (member[static_cast<std::size_t>(x - gen)]) {
          member[static_cast<std::size_t>(x)] = 1;
          break;
        }
      }
    }
    run = member[static_cast<std::size_t>(x)] ? run + 1 : 0;
    if (run == gmin) {
      conductor = x - gmin + 1;
      break;
    }
  }
  if (conductor < 0) throw LimitError("semigroup sieve did not stabilize");

  NumericalSemigroup sg;
  sg.generators_ = std::move(gens);
  sg.conductor_ = conductor;
  sg.membership_ = Bitmap(static_cast<std::size_t>(conductor + gmax + 1));
  for (std::int64_t x = 0; x <= conductor + gmax; ++x) {
    if (x >= conductor || member[static_cast<std::size_t>(x)])
      sg.membership_.set(static_cast<std::size_t>(x));
    else
      sg.gaps_.push_back(x);
  }
  return sg;
}

std::vector<std::int64_t> NumericalSemigroup::small_elements() const {
  std::vector<std::int64_t> out;
  for (std::int64_t x = 0; x <= conductor_ - 2; ++x)
    if (contains(x)) out.push_back(x);
  return out;
}

NumericalSemigroup left_semigroup(const NormalForm& a) {
  auto el = a.elements();
  return NumericalSemigroup::from_generators(el.subspan(1));
}

NumericalSemigroup right_semigroup(const NormalForm& a) {
  const std::int64_t an = a.back();
  std::vector<std::int64_t> gens;
  gens.reserve(a.size() - 1);
  for (std::size_t i = 0; i + 1 < a.size(); ++i) gens.push_back(an - a[i]);
  return NumericalSemigroup::from_generators(gens);
}

}  // namespace sumset
