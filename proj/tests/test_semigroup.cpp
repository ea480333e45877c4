#include <doctest.h>

#include "oracles.hpp"
#include "sumset/semigroup.hpp"

using namespace sumset;

namespace {
using V = std::vector<std::int64_t>;
V vec(std::span<const std::int64_t> s) { return V(s.begin(), s.end()); }
NumericalSemigroup sg(V gens) { return semigroup_from_generators(gens); }
NormalForm nf(V v) { return NormalForm::from_normal(v); }
}  // namespace

TEST_CASE("semigroup examples") {
  const auto g1 = sg({2, 4, 5, 7});
  CHECK(vec(g1.gaps()) == V{1, 3});
  CHECK(g1.genus() == 2);
  CHECK(g1.conductor() == 4);
  CHECK(g1.frobenius() == 3);

  const auto g2 = sg({2, 3, 5, 7});
  CHECK(vec(g2.gaps()) == V{1});
  CHECK(g2.genus() == 1);
  CHECK(g2.conductor() == 2);

  const auto nat = sg({1});
  CHECK(nat.gaps().empty());
  CHECK(nat.genus() == 0);
  CHECK(nat.conductor() == 0);
  CHECK(nat.frobenius() == -1);
  CHECK(nat.small_elements().empty());

  // Frozen from the brute-force combination oracle.
  const V frozen_gaps{1, 2, 3, 4, 5, 6, 11, 12, 13};
  CHECK(oracle::gaps({7, 8, 9, 10}, 100) == frozen_gaps);
  const auto g3 = sg({7, 8, 9, 10});
  CHECK(vec(g3.gaps()) == frozen_gaps);
  CHECK(g3.genus() == 9);
  CHECK(g3.conductor() == 14);
}

TEST_CASE("semigroup rejects bad generators") {
  CHECK_THROWS_AS(sg({}), ValidationError);
  CHECK_THROWS_AS(sg({2, 4}), ValidationError);
  CHECK_THROWS_AS(sg({0, 1}), ValidationError);
}

TEST_CASE("germ semigroups of A") {
  CHECK(left_semigroup(nf({0, 2, 4, 5, 7})).genus() == 2);
  CHECK(vec(left_semigroup(nf({0, 2, 4, 5, 7})).generators()) == V{2, 4, 5, 7});
  CHECK(left_semigroup(nf({0, 1, 3, 4})).genus() == 0);
  CHECK(left_semigroup(nf({0, 7, 8, 9, 10})).genus() == 9);

  const auto r1 = right_semigroup(nf({0, 2, 4, 5, 7}));
  CHECK(vec(r1.generators()) == V{2, 3, 5, 7});
  CHECK(r1.genus() == 1);
  CHECK(right_semigroup(nf({0, 1, 3, 4})).genus() == 0);
  const auto r3 = right_semigroup(nf({0, 7, 8, 9, 10}));
  CHECK(vec(r3.generators()) == V{1, 2, 3, 10});
  CHECK(r3.genus() == 0);
}

TEST_CASE("small elements") {
  CHECK(sg({2, 4, 5, 7}).small_elements() == V{0, 2});
  CHECK(sg({2, 3, 5, 7}).small_elements() == V{0});
  CHECK(sg({1}).small_elements().empty());
}

TEST_CASE("property: sieve agrees with brute force and genus bookkeeping holds") {
  // Every generator set drawn from [1, 15] of size <= 3 with gcd 1.
  std::size_t checked = 0;
  for (std::int64_t x = 1; x <= 15; ++x)
    for (std::int64_t y = x; y <= 15; ++y)
      for (std::int64_t z = y; z <= 15; ++z) {
        V gens{x, y, z};
        if (std::gcd(std::gcd(x, y), z) != 1) continue;
        const auto g = sg(gens);
        for (std::int64_t m = 0; m <= g.conductor() + 15; ++m)
          REQUIRE(g.contains(m) == oracle::in_semigroup(gens, m));
        std::int64_t below = 0;
        for (std::int64_t m = 0; m < g.conductor(); ++m) below += g.contains(m) ? 1 : 0;
        CHECK(g.genus() == g.conductor() - below);
        CHECK(static_cast<std::int64_t>(g.small_elements().size()) == below);
        if (g.conductor() > 0) CHECK_FALSE(g.contains(g.frobenius()));
        ++checked;
      }
  CHECK(checked > 500);
}

TEST_CASE("property: membership closed under addition in the stored window") {
  for (std::int64_t x = 2; x <= 20; ++x)
    for (std::int64_t y = x + 1; y <= 20; ++y) {
      if (std::gcd(x, y) != 1) continue;
      const auto g = sg({x, y});
      const auto top = static_cast<std::int64_t>(g.membership().size()) - 1;
      for (std::int64_t p = 0; p <= top; ++p)
        for (std::int64_t q = p; p + q <= top; ++q)
          if (g.contains(p) && g.contains(q)) REQUIRE(g.contains(p + q));
      // Two coprime generators: genus (x-1)(y-1)/2.
      CHECK(g.genus() == (x - 1) * (y - 1) / 2);
    }
}

TEST_CASE("property: genus = conductor - members below conductor, generators up to 20") {
  std::size_t checked = 0;
  for (std::uint32_t mask = 1; mask < (1u << 20); ++mask) {
    if (__builtin_popcount(mask) > 4) continue;
    V gens;
    std::int64_t g = 0;
    for (int b = 0; b < 20; ++b)
      if (mask & (1u << b)) {
        gens.push_back(b + 1);
        g = std::gcd(g, std::int64_t{b + 1});
      }
    if (g != 1) continue;
    const auto sgp = sg(gens);
    std::int64_t below = 0;
    for (std::int64_t m = 0; m < sgp.conductor(); ++m) below += sgp.contains(m) ? 1 : 0;
    REQUIRE(sgp.genus() == sgp.conductor() - below);
    for (std::int64_t gen : gens) REQUIRE(sgp.contains(gen));
    ++checked;
  }
  CHECK(checked > 5000);
}
