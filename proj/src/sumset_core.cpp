#include "sumset/sumset_core.hpp"

#include <charconv>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <sstream>

#include "sumset/kernels.hpp"

namespace sumset {

Limits Limits::from_env() {
  Limits lim;
  if (const char* env = std::getenv("SUMSET_MAX_BITS"); env != nullptr && *env != '\0') {
    std::uint64_t v = 0;
    const char* end = env + std::char_traits<char>::length(env);
    auto [p, ec] = std::from_chars(env, end, v);
    if (ec == std::errc{} && p == end && v > 0) lim.max_bits = v;
  }
  return lim;
}

const Limits& limits() {
  static const Limits lim = Limits::from_env();
  return lim;
}

NormalForm NormalForm::normalize(std::span<const std::int64_t> raw) {
  if (raw.size() < 2) throw ValidationError("set needs at least two elements");
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i] < 0) throw ValidationError("elements must be non-negative");
    if (i > 0 && raw[i] == raw[i - 1])
      throw ValidationError("repeated element " + std::to_string(raw[i]));
    if (i > 0 && raw[i] < raw[i - 1]) throw ValidationError("elements must be increasing");
  }
  const std::int64_t q0 = raw.front();
  std::int64_t d = 0;
  for (std::int64_t x : raw) d = std::gcd(d, x - q0);
  std::vector<std::int64_t> a;
  a.reserve(raw.size());
  for (std::int64_t x : raw) a.push_back((x - q0) / d);
  if (a.back() > Limits::kMaxElement)
    throw LimitError("normalized a_n = " + std::to_string(a.back()) + " exceeds limit " +
                     std::to_string(Limits::kMaxElement));
  return NormalForm(std::move(a), q0, d);
}

NormalForm NormalForm::from_normal(std::span<const std::int64_t> elements) {
  NormalForm nf = normalize(elements);
  if (nf.shift() != 0 || nf.scale() != 1)
    throw ValidationError("set is not in normal form (needs 0 and gcd 1)");
  return nf;
}

std::vector<std::int64_t> NormalForm::raw() const {
  std::vector<std::int64_t> out;
  out.reserve(a_.size());
  for (std::int64_t x : a_) out.push_back(shift_ + scale_ * x);
  return out;
}

std::vector<std::int64_t> parse_set(const std::string& text) {
  std::vector<std::int64_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    std::string tok = text.substr(pos, comma - pos);
    const auto first = tok.find_first_not_of(" \t");
    const auto last = tok.find_last_not_of(" \t");
    if (first == std::string::npos) throw ValidationError("empty element in set '" + text + "'");
    tok = tok.substr(first, last - first + 1);
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || p != tok.data() + tok.size())
      throw ValidationError("not an integer: '" + tok + "'");
    if (v < 0) throw ValidationError("elements must be non-negative");
    out.push_back(v);
    pos = comma + 1;
  }
  return out;
}

std::string format_set(std::span<const std::int64_t> values, const char* sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) os << sep;
    os << values[i];
  }
  return os.str();
}

void check_sumset_limits(const NormalForm& a, std::int64_t s) {
  if (s < 0) throw ValidationError("fold count must be non-negative");
  const std::int64_t an = a.back();
  if (s > 0 && an > (std::numeric_limits<std::int64_t>::max() - 1) / s)
    throw LimitError("s * a_n overflows a 64-bit integer");
  const auto bits = static_cast<std::uint64_t>(s * an + 1);
  if (bits > limits().max_bits)
    throw LimitError("sumset bitmap of " + std::to_string(bits) + " bits exceeds budget of " +
                     std::to_string(limits().max_bits) + " (SUMSET_MAX_BITS)");
}

SumsetImage next_sumset(const NormalForm& a, const SumsetImage& prev, Kernel kernel) {
  const std::int64_t s = prev.s + 1;
  check_sumset_limits(a, s);
  SumsetImage next{s, Bitmap(static_cast<std::size_t>(s * a.back() + 1)), 0};
  if (kernel == Kernel::Serial)
    kernels::shift_or_serial(prev.bits.words(), next.bits.words(), a.elements());
  else
    kernels::shift_or_parallel(prev.bits.words(), next.bits.words(), a.elements());
  next.card = static_cast<std::int64_t>(next.bits.count());
  return next;
}

namespace {
SumsetImage zero_fold() {
  SumsetImage img{0, Bitmap(1), 1};
  img.bits.set(0);
  return img;
}
}  // namespace

SumsetImage sumset(const NormalForm& a, std::int64_t s, Kernel kernel) {
  check_sumset_limits(a, s);
  SumsetImage img = zero_fold();
  for (std::int64_t k = 0; k < s; ++k) img = next_sumset(a, img, kernel);
  return img;
}

std::vector<SumsetImage> sumset_chain(const NormalForm& a, std::int64_t s_max, Kernel kernel) {
  check_sumset_limits(a, s_max);
  std::vector<SumsetImage> chain;
  chain.reserve(static_cast<std::size_t>(s_max) + 1);
  chain.push_back(zero_fold());
  for (std::int64_t k = 0; k < s_max; ++k) chain.push_back(next_sumset(a, chain.back(), kernel));
  return chain;
}

GrowthTable growth_table(const NormalForm& a, std::int64_t s_max, Kernel kernel) {
  check_sumset_limits(a, s_max);
  GrowthTable table;
  table.values.reserve(static_cast<std::size_t>(s_max) + 1);
  SumsetImage img = zero_fold();
  table.values.push_back(img.card);
  for (std::int64_t k = 0; k < s_max; ++k) {
    img = next_sumset(a, img, kernel);
    table.values.push_back(img.card);
  }
  return table;
}

}  // namespace sumset
