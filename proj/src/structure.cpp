#include "sumset/structure.hpp"

#include <algorithm>
#include <sstream>

#include "sumset/curve.hpp"

namespace sumset {

const char* to_string(DecompositionStatus status) {
  switch (status) {
    case DecompositionStatus::Valid: return "valid";
    case DecompositionStatus::IntervalEmpty: return "interval-empty";
    case DecompositionStatus::SetMismatch: return "set mismatch";
  }
  return "?";
}

std::vector<std::int64_t> Decomposition::upper_block() const {
  std::vector<std::int64_t> out;
  out.reserve(C2.size());
  for (auto it = C2.rbegin(); it != C2.rend(); ++it) out.push_back(top - *it);
  return out;
}

std::int64_t Decomposition::predicted_card() const {
  return top + 1 - (c1 - static_cast<std::int64_t>(C1.size())) -
         (c2 - static_cast<std::int64_t>(C2.size()));
}

namespace {
std::string render_block(const std::vector<std::int64_t>& xs) {
  if (xs.empty()) return "∅";
  return "{" + format_set(xs) + "}";
}
}  // namespace

std::string render(const Decomposition& d) {
  std::ostringstream os;
  os << render_block(d.C1) << " ⊔ ";
  if (d.middle_lo() > d.middle_hi())
    os << "∅";
  else
    os << "[" << d.middle_lo() << "," << d.middle_hi() << "]";
  os << " ⊔ " << render_block(d.upper_block());
  return os.str();
}

Decomposition decompose_at(const NormalForm& a, const SumsetImage& img,
                           const NumericalSemigroup& left, const NumericalSemigroup& right) {
  if (img.s < 1) throw ValidationError("decomposition needs s >= 1");
  Decomposition d;
  d.s = img.s;
  d.top = img.s * a.back();
  d.c1 = left.conductor();
  d.c2 = right.conductor();
  d.C1 = left.small_elements();
  d.C2 = right.small_elements();
  if (d.c1 > d.top - d.c2) {
    d.status = DecompositionStatus::IntervalEmpty;
    return d;
  }
  Bitmap expected(static_cast<std::size_t>(d.top + 1));
  for (std::int64_t x : d.C1) expected.set(static_cast<std::size_t>(x));
  for (std::int64_t x = d.c1; x <= d.top - d.c2; ++x) expected.set(static_cast<std::size_t>(x));
  for (std::int64_t x : d.C2) expected.set(static_cast<std::size_t>(d.top - x));
  d.status = expected == img.bits ? DecompositionStatus::Valid : DecompositionStatus::SetMismatch;
  return d;
}

Decomposition decompose_at(const NormalForm& a, std::int64_t s) {
  if (s < 1) throw ValidationError("decomposition needs s >= 1");
  return decompose_at(a, sumset(a, s), left_semigroup(a), right_semigroup(a));
}

StabilizationCertificate stabilization_threshold(const NormalForm& a) {
  const NumericalSemigroup left = left_semigroup(a);
  const NumericalSemigroup right = right_semigroup(a);
  const std::int64_t an = a.back();
  const std::int64_t rho = rho_bound(a);

  StabilizationCertificate cert;
  const std::int64_t ceil_c = (left.conductor() + right.conductor() + an - 1) / an;
  cert.window = rho + 4;
  // r <= rho, so the formula needs HF only up to rho.
  std::vector<SumsetImage> chain = sumset_chain(a, cert.window);
  GrowthTable hf;
  for (const auto& img : chain) hf.values.push_back(img.card);
  const HilbertData h = hilbert_polynomial(a, hf);
  cert.sigma_formula = std::max<std::int64_t>({1, h.r, ceil_c});
  if (cert.window < cert.sigma_formula + 2) {
    cert.window = cert.sigma_formula + 2;
    while (static_cast<std::int64_t>(chain.size()) <= cert.window)
      chain.push_back(next_sumset(a, chain.back()));
  }

  std::int64_t sigma = cert.window + 1;
  for (std::int64_t s = cert.window; s >= 1; --s) {
    if (!decompose_at(a, chain[static_cast<std::size_t>(s)], left, right).valid()) break;
    sigma = s;
  }
  cert.sigma_empirical = sigma;
  return cert;
}

RefinementReport verify_refinement(const NormalForm& a) {
  const NumericalSemigroup left = left_semigroup(a);
  const NumericalSemigroup right = right_semigroup(a);
  const StabilizationCertificate cert = stabilization_threshold(a);
  // At s = 2 * window, top / 2 = window * a_n >= c1 + c2 lies in the middle interval.
  const SumsetImage img = sumset(a, 2 * cert.window);
  const std::int64_t top = img.max();

  RefinementReport rep;
  rep.s = img.s;
  std::int64_t lo = top / 2;
  while (lo > 0 && img.contains(lo - 1)) --lo;
  std::int64_t hi = top / 2;
  while (hi < top && img.contains(hi + 1)) ++hi;
  rep.c1 = lo;
  rep.c2 = top - hi;
  for (std::int64_t x = 0; x + 1 < lo; ++x) rep.small1 += img.contains(x) ? 1 : 0;
  for (std::int64_t x = 0; x + 1 < rep.c2; ++x) rep.small2 += img.contains(top - x) ? 1 : 0;
  rep.delta1 = left.genus();
  rep.conductor1 = left.conductor();
  rep.delta2 = right.genus();
  rep.conductor2 = right.conductor();
  return rep;
}

}  // namespace sumset
