#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <stdexcept>

#include "gradenorm/expansion.hpp"
#include "test_support.hpp"

using namespace gradenorm;
using gradenorm::testing::random_profile;

namespace {

const TermOrbit& find_orbit(const std::vector<TermOrbit>& orbits, int level, int split) {
  for (const auto& o : orbits) {
    if (o.level == level && o.split == split) return o;
  }
  throw std::logic_error("orbit not found");
}

}  // namespace

TEST_CASE("lhs orbits for r = 5") {
  const auto orbits = lhs_orbits(GradingSignature(5));
  CHECK(orbits.size() == 15);
  CHECK(find_orbit(orbits, 1, 3).coefficient == 120);
  CHECK(find_orbit(orbits, 2, 3).coefficient == 56);
  CHECK(find_orbit(orbits, 3, 2).coefficient == 15);
  CHECK(find_orbit(orbits, 2, 4).is_middle);
  CHECK_FALSE(find_orbit(orbits, 2, 3).is_middle);
  CHECK(find_orbit(orbits, 4, 1).exponents() == ExponentPair(Rational(3), Rational(1)));
}

TEST_CASE("lhs orbits for r = 1") {
  const auto orbits = lhs_orbits(GradingSignature(1));
  REQUIRE(orbits.size() == 1);
  CHECK(orbits[0].level == 1);
  CHECK(orbits[0].split == 1);
  CHECK(orbits[0].coefficient == 2);
  CHECK(orbits[0].is_middle);
}

TEST_CASE("orbit count is sum of e_i / 2") {
  for (int r = 1; r <= 20; ++r) {
    CHECK(lhs_orbits(GradingSignature(r)).size() == static_cast<std::size_t>(r * (r + 1) / 2));
  }
}

TEST_CASE("rhs orbits") {
  const auto r5 = rhs_orbits(GradingSignature(5));
  REQUIRE(r5.size() == 5);
  const int expected[] = {10, 45, 120, 210, 252};
  for (int k = 0; k < 5; ++k) {
    CHECK(r5[k].k == k + 1);
    CHECK(r5[k].coefficient == expected[k]);
    CHECK(r5[k].is_middle == (k == 4));
  }
  // The 210 group is A^6 B^4 + A^4 B^6.
  CHECK(r5[3].exponents() == ExponentPair(Rational(6), Rational(4)));
  const auto r1 = rhs_orbits(GradingSignature(1));
  REQUIRE(r1.size() == 1);
  CHECK(r1[0].coefficient == 2);
  CHECK(r1[0].is_middle);
  CHECK(rhs_orbits(GradingSignature(6)).back().coefficient == 924);
  CHECK_THROWS_AS(rhs_orbit(GradingSignature(3), 0), std::domain_error);
  CHECK_THROWS_AS(rhs_orbit(GradingSignature(3), 4), std::domain_error);
  CHECK_THROWS_AS(lhs_orbit(GradingSignature(3), 2, 3), std::domain_error);
}

TEST_CASE("shadow examples") {
  const GradingSignature sig(5);
  CHECK(shadow(sig, 3, 2).exponents == ExponentPair(Rational::parse("28/5"), Rational::parse("12/5")));
  CHECK(shadow(sig, 3, 3).exponents == ExponentPair(Rational::parse("21/5"), Rational::parse("9/5")));
  CHECK(shadow(sig, 3, 1).exponents == ExponentPair(Rational(7), Rational(3)));
  for (int r = 1; r <= 8; ++r) {
    const GradingSignature s(r);
    for (int i = 1; i <= r; ++i) {
      const Rational half(s.exponent(i) / 2);
      CHECK(shadow(s, r, i).exponents == ExponentPair(half, half));
    }
  }
  CHECK_THROWS_AS(shadow(sig, 0, 1), std::domain_error);
  CHECK_THROWS_AS(shadow(sig, 6, 1), std::domain_error);
  CHECK_THROWS_AS(shadow(sig, 1, 6), std::domain_error);
}

TEST_CASE("shadow degree and first-level identities are exact") {
  for (int r = 1; r <= 12; ++r) {
    const GradingSignature sig(r);
    for (int k = 1; k <= r; ++k) {
      CHECK(shadow(sig, k, 1).exponents == ExponentPair(Rational(2 * r - k), Rational(k)));
      for (int i = 1; i <= r; ++i) CHECK(shadow(sig, k, i).exponents.degree() == sig.exponent(i));
    }
  }
}

TEST_CASE("coefficient ledger matches Pascal row sums") {
  for (int r = 1; r <= 25; ++r) {
    const GradingSignature sig(r);
    BigInt total = 2 * r;  // the two pure terms per level
    for (const auto& o : lhs_orbits(sig)) total += o.is_middle ? o.coefficient : 2 * o.coefficient;
    BigInt rows = 0;
    for (int e : sig.exponents()) rows += BigInt(1) << static_cast<mp_bitcnt_t>(e);
    CHECK(total == rows);

    BigInt rhs_total = 2;
    for (const auto& o : rhs_orbits(sig)) rhs_total += o.is_middle ? o.coefficient : 2 * o.coefficient;
    CHECK(rhs_total == (BigInt(1) << static_cast<mp_bitcnt_t>(2 * r)));
  }
}

TEST_CASE("orbits reassemble both binomial expansions numerically") {
  std::mt19937_64 rng(51);
  for (int r = 1; r <= 8; ++r) {
    const GradingSignature sig(r);
    for (int n = 0; n < 200; ++n) {
      const ScalarProfile a = random_profile(sig, rng, -1.0, 1.0);
      const ScalarProfile b = random_profile(sig, rng, -1.0, 1.0);
      double lhs_direct = 0.0;
      double lhs_orbit_sum = 0.0;
      for (int i = 1; i <= r; ++i) {
        const int e = sig.exponent(i);
        lhs_direct += std::pow(a[i] + b[i], e);
        lhs_orbit_sum += std::pow(a[i], e) + std::pow(b[i], e);
      }
      for (const auto& o : lhs_orbits(sig)) {
        lhs_orbit_sum += o.coefficient.get_d() * orbit_value(o, a[o.level], b[o.level]);
      }
      CHECK(lhs_orbit_sum == doctest::Approx(lhs_direct).epsilon(1e-12));

      const double big_a = scalar_norm(a);
      const double big_b = scalar_norm(b);
      double rhs_orbit_sum = std::pow(big_a, 2 * r) + std::pow(big_b, 2 * r);
      for (const auto& o : rhs_orbits(sig)) rhs_orbit_sum += o.coefficient.get_d() * orbit_value(o, big_a, big_b);
      CHECK(rhs_orbit_sum == doctest::Approx(std::pow(big_a + big_b, 2 * r)).epsilon(1e-12));
    }
  }
}

TEST_CASE("pure terms cancel") {
  CHECK(pure_terms_cancel(GradingSignature(5)));
  CHECK(pure_terms_cancel(GradingSignature(1)));
  CHECK(pure_terms_cancel(GradingSignature(8)));
  CHECK(pure_terms_cancel(GradingSignature(12), 200, 99));
}

TEST_CASE("holder shadow bound examples") {
  const GradingSignature sig(5);
  std::mt19937_64 rng(61);
  const ScalarProfile a = random_profile(sig, rng);
  const ScalarProfile zero(sig, {0, 0, 0, 0, 0});
  CHECK(holder_shadow_bound_check(sig, 3, a, zero) == 0.0);
  for (int n = 0; n < 100; ++n) {
    const ScalarProfile p = random_profile(sig, rng);
    const double rhs = std::pow(scalar_norm(p), 10);
    CHECK(holder_shadow_bound_check(sig, 3, p, p) <= 1e-12 * std::max(1.0, rhs));
  }
  const ScalarProfile ones(sig, {1, 1, 1, 1, 1});
  CHECK(std::abs(holder_shadow_bound_check(sig, 5, ones, ones)) <= 1e-12 * 5.0);
  CHECK_THROWS_AS(holder_shadow_bound_check(sig, 0, ones, ones), std::domain_error);
  CHECK_THROWS_AS(holder_shadow_bound_check(sig, 6, ones, ones), std::domain_error);
}

TEST_CASE("holder shadow bound holds on random profiles") {
  std::mt19937_64 rng(67);
  for (int r : {3, 4, 5, 6}) {
    const GradingSignature sig(r);
    for (int k = 1; k <= r; ++k) {
      double worst = -1.0;
      for (int n = 0; n < 100000; ++n) {
        const ScalarProfile a = random_profile(sig, rng, -3.0, 3.0, 0.1);
        const ScalarProfile b = random_profile(sig, rng, -3.0, 3.0, 0.1);
        const double rhs = std::pow(scalar_norm(a), 2 * r - k) * std::pow(scalar_norm(b), k);
        worst = std::max(worst, holder_shadow_bound_check(sig, k, a, b) / std::max(1.0, rhs));
      }
      CAPTURE(r);
      CAPTURE(k);
      CHECK(worst <= 1e-12);
    }
  }
}
