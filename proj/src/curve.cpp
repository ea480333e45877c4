#include "sumset/curve.hpp"

#include <algorithm>

#include "sumset/semigroup.hpp"

namespace sumset {

std::int64_t rho_bound(const NormalForm& a) {
  if (a.size() == 2) return 1 + 2 * (a[1] - a[0]);
  std::int64_t best = 0;
  std::int64_t second = 0;
  for (std::size_t i = 1; i < a.size(); ++i) {
    const std::int64_t gap = a[i] - a[i - 1];
    if (gap > best) {
      second = best;
      best = gap;
    } else if (gap > second) {
      second = gap;
    }
  }
  return 1 + best + second;
}

std::optional<std::int64_t> smooth_reg_bound(const NormalForm& a) {
  const std::size_t n = a.size();
  if (a[1] != 1 || a[n - 1] - a[n - 2] != 1) return std::nullopt;
  std::int64_t best = 0;
  for (std::size_t i = 1; i < n; ++i) best = std::max(best, a[i] - a[i - 1]);
  return 1 + best;
}

SingularityReport singularity_report(const NormalForm& a) {
  SingularityReport rep;
  rep.delta1 = left_semigroup(a).genus();
  rep.delta2 = right_semigroup(a).genus();
  rep.smooth1 = a[1] == 1;
  rep.smooth2 = a.back() - a[a.size() - 2] == 1;
  rep.pa = rep.delta1 + rep.delta2;
  return rep;
}

HilbertData hilbert_polynomial(const NormalForm& a, const GrowthTable& hf) {
  HilbertData h;
  const SingularityReport sing = singularity_report(a);
  h.hp_slope = a.back();
  h.hp_const = 1 - sing.pa;
  h.rho = rho_bound(a);
  if (static_cast<std::int64_t>(hf.values.size()) <= h.rho)
    throw ValidationError("growth table shorter than rho(A) + 1");
  std::int64_t r = h.rho;
  while (r > 0 && hf.values[static_cast<std::size_t>(r - 1)] == h.hp(r - 1)) --r;
  h.r = r;
  return h;
}

HilbertData hilbert_polynomial(const NormalForm& a) {
  return hilbert_polynomial(a, growth_table(a, rho_bound(a)));
}

std::vector<std::pair<std::int64_t, std::int64_t>> parameterization(const NormalForm& a) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  out.reserve(a.size());
  for (std::int64_t x : a.elements()) out.emplace_back(a.back() - x, x);
  return out;
}

std::uint64_t binomial_sat(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 acc = 1;
  constexpr auto cap = static_cast<unsigned __int128>(UINT64_MAX);
  for (std::uint64_t i = 1; i <= k; ++i) {
    // acc * (n - k + i) / i stays integral at every step.
    acc = acc * (n - k + i) / i;
    if (acc > cap) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(acc);
}

BoundsReport bounds_check(const NormalForm& a, const GrowthTable& hf) {
  BoundsReport rep;
  const auto n = static_cast<std::int64_t>(a.size());
  rep.s_max = static_cast<std::int64_t>(hf.values.size()) - 1;
  for (std::int64_t s = 0; s <= rep.s_max; ++s) {
    const std::int64_t card = hf.values[static_cast<std::size_t>(s)];
    const std::int64_t lower = s * (n - 1) + 1;
    const std::uint64_t upper =
        binomial_sat(static_cast<std::uint64_t>(s + n - 1), static_cast<std::uint64_t>(s));
    if (card < lower || static_cast<std::uint64_t>(card) > upper) {
      rep.violation = BoundsReport::Violation{s, card, lower, upper};
      break;
    }
  }
  return rep;
}

BoundsReport bounds_check(const NormalForm& a, std::int64_t s_max) {
  return bounds_check(a, growth_table(a, s_max));
}

}  // namespace sumset
