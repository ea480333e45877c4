#include "sumset/toric.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "sumset/curve.hpp"

namespace sumset {

namespace {

// Degree-s monomials in n variables above which enumeration is refused.
constexpr std::uint64_t kMaxMonomialsPerDegree = std::uint64_t{1} << 24;

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x != y) parent_[std::max(x, y)] = std::min(x, y);
  }

 private:
  std::vector<std::size_t> parent_;
};

void check_length(const NormalForm& a, const Exponent& e) {
  if (e.size() != a.size())
    throw ValidationError("exponent vector has length " + std::to_string(e.size()) +
                          ", expected " + std::to_string(a.size()));
  for (auto x : e)
    if (x < 0) throw ValidationError("exponents must be non-negative");
}

void check_monomial_budget(const NormalForm& a, std::int64_t s) {
  const std::uint64_t count = binomial_sat(static_cast<std::uint64_t>(s) + a.size() - 1,
                                           a.size() - 1);
  if (count > kMaxMonomialsPerDegree)
    throw LimitError("degree-" + std::to_string(s) + " monomial count " + std::to_string(count) +
                     " exceeds enumeration budget");
}

void enumerate_fiber(std::span<const std::int64_t> el, std::size_t i, std::int64_t left,
                     std::int64_t rem, Exponent& cur, std::vector<Exponent>& out) {
  const std::size_t n = el.size();
  if (i + 1 == n) {
    if (rem == left * el[i]) {
      cur[i] = static_cast<std::int32_t>(left);
      out.push_back(cur);
      cur[i] = 0;
    }
    return;
  }
  // Remaining A-degree must lie in [left * a_i, left * a_n] for the tail i..n-1.
  if (rem < left * el[i] || rem > left * el[n - 1]) return;
  for (std::int64_t k = left; k >= 0; --k) {
    cur[i] = static_cast<std::int32_t>(k);
    enumerate_fiber(el, i + 1, left - k, rem - k * el[i], cur, out);
  }
  cur[i] = 0;
}

void enumerate_degree(std::span<const std::int64_t> el, std::size_t i, std::int64_t left,
                      std::int64_t m, Exponent& cur, std::map<std::int64_t, std::vector<Exponent>>& out) {
  const std::size_t n = el.size();
  if (i + 1 == n) {
    cur[i] = static_cast<std::int32_t>(left);
    out[m + left * el[i]].push_back(cur);
    cur[i] = 0;
    return;
  }
  for (std::int64_t k = left; k >= 0; --k) {
    cur[i] = static_cast<std::int32_t>(k);
    enumerate_degree(el, i + 1, left - k, m + k * el[i], cur, out);
  }
  cur[i] = 0;
}

bool dominates(const Exponent& e, const Exponent& g) {
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] < g[i]) return false;
  return true;
}

}  // namespace

std::int64_t total_degree(const Exponent& e) {
  return std::accumulate(e.begin(), e.end(), std::int64_t{0});
}

std::int64_t a_degree(const NormalForm& a, const Exponent& e) {
  std::int64_t m = 0;
  for (std::size_t i = 0; i < e.size(); ++i) m += e[i] * a[i];
  return m;
}

bool degrevlex_less(const Exponent& lhs, const Exponent& rhs) {
  const std::int64_t dl = total_degree(lhs);
  const std::int64_t dr = total_degree(rhs);
  if (dl != dr) return dl < dr;
  for (std::size_t i = lhs.size(); i-- > 0;) {
    if (lhs[i] != rhs[i]) return lhs[i] > rhs[i];
  }
  return false;
}

Binomial make_binomial(const NormalForm& a, Exponent alpha, Exponent beta) {
  check_length(a, alpha);
  check_length(a, beta);
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    const auto common = std::min(alpha[i], beta[i]);
    alpha[i] -= common;
    beta[i] -= common;
  }
  if (degrevlex_less(alpha, beta)) std::swap(alpha, beta);
  Binomial b;
  b.degree = total_degree(alpha);
  b.a_degree = a_degree(a, alpha);
  b.alpha = std::move(alpha);
  b.beta = std::move(beta);
  return b;
}

std::string render_monomial(const Exponent& e) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!first) os << '*';
    first = false;
    os << 'x' << (i + 1);
    if (e[i] > 1) os << '^' << e[i];
  }
  if (first) os << '1';
  return os.str();
}

std::string render(const Binomial& b) {
  return render_monomial(b.alpha) + " - " + render_monomial(b.beta);
}

bool binomial_in_ideal(const NormalForm& a, const Exponent& alpha, const Exponent& beta) {
  check_length(a, alpha);
  check_length(a, beta);
  return total_degree(alpha) == total_degree(beta) && a_degree(a, alpha) == a_degree(a, beta);
}

Fiber fiber(const NormalForm& a, std::int64_t s, std::int64_t m) {
  if (s < 0) throw ValidationError("fiber degree must be non-negative");
  Fiber f{s, m, {}};
  if (m < 0 || m > s * a.back()) return f;
  Exponent cur(a.size(), 0);
  enumerate_fiber(a.elements(), 0, s, m, cur, f.elements);
  std::sort(f.elements.begin(), f.elements.end());
  return f;
}

std::vector<Fiber> fibers_of_degree(const NormalForm& a, std::int64_t s) {
  if (s < 0) throw ValidationError("fiber degree must be non-negative");
  check_monomial_budget(a, s);
  std::map<std::int64_t, std::vector<Exponent>> buckets;
  Exponent cur(a.size(), 0);
  enumerate_degree(a.elements(), 0, s, 0, cur, buckets);
  std::vector<Fiber> out;
  out.reserve(buckets.size());
  for (auto& [m, elems] : buckets) {
    std::sort(elems.begin(), elems.end());
    out.push_back(Fiber{s, m, std::move(elems)});
  }
  return out;
}

std::vector<std::vector<Exponent>> fiber_components(const Fiber& f) {
  const std::size_t size = f.elements.size();
  std::vector<std::vector<Exponent>> comps;
  if (size == 0) return comps;
  const std::size_t n = f.elements.front().size();
  DisjointSets ds(size);
  for (std::size_t var = 0; var < n; ++var) {
    std::size_t anchor = size;
    for (std::size_t k = 0; k < size; ++k) {
      if (f.elements[k][var] == 0) continue;
      if (anchor == size)
        anchor = k;
      else
        ds.unite(anchor, k);
    }
  }
  std::map<std::size_t, std::size_t> slot;
  for (std::size_t k = 0; k < size; ++k) {
    auto [it, inserted] = slot.try_emplace(ds.find(k), comps.size());
    if (inserted) comps.emplace_back();
    comps[it->second].push_back(f.elements[k]);
  }
  for (auto& c : comps) std::sort(c.begin(), c.end(), degrevlex_less);
  std::sort(comps.begin(), comps.end(),
            [](const auto& x, const auto& y) { return degrevlex_less(x.front(), y.front()); });
  return comps;
}

GeneratorSet minimal_generators(const NormalForm& a, std::int64_t degree_cap) {
  if (degree_cap < 2) throw ValidationError("degree cap must be at least 2");
  GeneratorSet out;
  out.degree_cap = degree_cap;
  for (std::int64_t s = 2; s <= degree_cap; ++s) {
    for (const Fiber& f : fibers_of_degree(a, s)) {
      if (f.elements.size() < 2) continue;
      const auto comps = fiber_components(f);
      for (std::size_t k = 1; k < comps.size(); ++k)
        out.generators.push_back(make_binomial(a, comps[k].front(), comps[0].front()));
    }
  }
  std::sort(out.generators.begin(), out.generators.end(), [](const Binomial& x, const Binomial& y) {
    if (x.degree != y.degree) return x.degree < y.degree;
    if (x.a_degree != y.a_degree) return x.a_degree < y.a_degree;
    return x.alpha < y.alpha;
  });
  return out;
}

GeneratorSet minimal_generators(const NormalForm& a) {
  return minimal_generators(a, rho_bound(a) + 1);
}

bool fiber_connected_by_moves(const Fiber& f, std::span<const Binomial> moves, std::ptrdiff_t skip) {
  const std::size_t size = f.elements.size();
  if (size <= 1) return true;
  // f.elements is sorted lexicographically, so targets are found by binary search.
  DisjointSets ds(size);
  std::size_t merges = 0;
  Exponent target;
  for (std::size_t k = 0; k < size && merges + 1 < size; ++k) {
    const Exponent& e = f.elements[k];
    for (std::size_t g = 0; g < moves.size(); ++g) {
      if (static_cast<std::ptrdiff_t>(g) == skip) continue;
      const Binomial& b = moves[g];
      if (b.degree > f.s) continue;
      for (int side = 0; side < 2; ++side) {
        const Exponent& from = side == 0 ? b.alpha : b.beta;
        const Exponent& to = side == 0 ? b.beta : b.alpha;
        if (!dominates(e, from)) continue;
        target = e;
        for (std::size_t i = 0; i < target.size(); ++i) target[i] += to[i] - from[i];
        auto it = std::lower_bound(f.elements.begin(), f.elements.end(), target);
        if (it == f.elements.end() || *it != target) continue;
        const auto j = static_cast<std::size_t>(it - f.elements.begin());
        if (ds.find(j) != ds.find(k)) {
          ds.unite(j, k);
          ++merges;
        }
      }
    }
  }
  return merges + 1 == size;
}

}  // namespace sumset
