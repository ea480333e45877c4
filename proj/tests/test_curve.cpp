#include <doctest.h>

#include <numeric>

#include "sumset/curve.hpp"

using namespace sumset;

namespace {
using V = std::vector<std::int64_t>;
NormalForm nf(V v) { return NormalForm::from_normal(v); }
}  // namespace

TEST_CASE("Hilbert polynomial and regularity index") {
  const HilbertData h1 = hilbert_polynomial(nf({0, 2, 4, 5, 7}));
  CHECK(h1.hp_slope == 7);
  CHECK(h1.hp_const == -2);
  CHECK(h1.r == 1);  // HF(1) = 5 = HP(1), HF(0) = 1 != -2
  CHECK(h1.rho == 5);

  const HilbertData h2 = hilbert_polynomial(nf({0, 1, 3, 4}));
  CHECK(h2.hp_slope == 4);
  CHECK(h2.hp_const == 1);
  CHECK(h2.r == 2);  // HF(1) = 4 != 5

  const HilbertData h3 = hilbert_polynomial(nf({0, 7, 8, 9, 10}));
  CHECK(h3.hp_slope == 10);
  CHECK(h3.hp_const == -8);
  // From HF = 1,5,12,22,...: HF(2) = 12 = HP(2), HF(1) = 5 != 2.
  CHECK(h3.r == 2);
  CHECK(h3.rho == 9);

  const HilbertData h4 = hilbert_polynomial(nf({0, 1}));
  CHECK(h4.r == 0);
  CHECK(h4.rho == 3);
}

TEST_CASE("rho bound") {
  CHECK(rho_bound(nf({0, 2, 4, 5, 7})) == 5);
  CHECK(rho_bound(nf({0, 1, 3, 4})) == 4);
  for (std::int64_t n = 3; n <= 8; ++n) {
    V rnc(static_cast<std::size_t>(n));
    std::iota(rnc.begin(), rnc.end(), 0);
    CHECK(rho_bound(nf(rnc)) == 3);
  }
  CHECK(rho_bound(nf({0, 1})) == 3);
}

TEST_CASE("smooth regularity bound") {
  CHECK(smooth_reg_bound(nf({0, 1, 3, 4})) == 3);
  CHECK(smooth_reg_bound(nf({0, 1, 2})) == 2);
  CHECK_FALSE(smooth_reg_bound(nf({0, 2, 4, 5, 7})).has_value());
  CHECK_FALSE(smooth_reg_bound(nf({0, 1, 3})).has_value());
}

TEST_CASE("singularity reports") {
  const auto s1 = singularity_report(nf({0, 2, 4, 5, 7}));
  CHECK(s1.delta1 == 2);
  CHECK(s1.delta2 == 1);
  CHECK(s1.pa == 3);
  CHECK_FALSE(s1.smooth1);
  CHECK_FALSE(s1.smooth2);

  const auto s2 = singularity_report(nf({0, 1, 3, 4}));
  CHECK(s2.delta1 == 0);
  CHECK(s2.delta2 == 0);
  CHECK(s2.pa == 0);
  CHECK(s2.smooth1);
  CHECK(s2.smooth2);

  const auto s3 = singularity_report(nf({0, 7, 8, 9, 10}));
  CHECK(s3.delta1 == 9);
  CHECK(s3.delta2 == 0);
  CHECK(1 - s3.pa == -8);
}

TEST_CASE("parameterization exponents") {
  using P = std::vector<std::pair<std::int64_t, std::int64_t>>;
  CHECK(parameterization(nf({0, 2, 4, 5, 7})) == P{{7, 0}, {5, 2}, {3, 4}, {2, 5}, {0, 7}});
  CHECK(parameterization(nf({0, 1, 3, 4})) == P{{4, 0}, {3, 1}, {1, 3}, {0, 4}});
  CHECK(parameterization(nf({0, 1, 2, 3})) == P{{3, 0}, {2, 1}, {1, 2}, {0, 3}});
}

TEST_CASE("binomial coefficients saturate") {
  CHECK(binomial_sat(6, 2) == 15);
  CHECK(binomial_sat(6, 3) == 20);
  CHECK(binomial_sat(5, 7) == 0);
  CHECK(binomial_sat(200, 100) == UINT64_MAX);
}

TEST_CASE("growth bounds") {
  CHECK(bounds_check(nf({0, 2, 4, 5, 7}), 8).ok());
  CHECK(bounds_check(nf({0, 1, 3, 4}), 8).ok());
  // Lower bound is tight for an arithmetic progression.
  const auto table = growth_table(nf({0, 1, 2}), 6);
  for (std::int64_t s = 0; s <= 6; ++s) CHECK(table.values[static_cast<std::size_t>(s)] == 2 * s + 1);
  CHECK(bounds_check(nf({0, 1, 2}), 6).ok());

  GrowthTable bogus{{1, 5, 8}};  // |2A| = 8 < 2*4 + 1
  const auto rep = bounds_check(nf({0, 2, 4, 5, 7}), bogus);
  REQUIRE_FALSE(rep.ok());
  CHECK(rep.violation->s == 2);
  CHECK(rep.violation->lower == 9);
  CHECK(rep.violation->upper == 15);
}
