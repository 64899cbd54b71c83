#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <stdexcept>

#include "gradenorm/numeric_search.hpp"
#include "test_support.hpp"

using namespace gradenorm;
using gradenorm::testing::random_profile;

namespace {

SearchConfig small_config(int r, std::int64_t samples = 50'000) {
  SearchConfig c;
  c.r = r;
  c.sample_count = samples;
  c.grid_cap = 4096;
  c.ascent_starts = 4;
  c.ascent_steps = 60;
  return c;
}

}  // namespace

TEST_CASE("scalar defect examples") {
  std::mt19937_64 rng(81);
  const GradingSignature sig5(5);
  const ScalarProfile a = random_profile(sig5, rng);
  CHECK(scalar_defect(a, ScalarProfile(sig5, {0, 0, 0, 0, 0})) == 0.0);
  const ScalarProfile ones(sig5, {1, 1, 1, 1, 1});
  // 1364^{1/10} - 2 * 5^{1/10}
  CHECK(scalar_defect(ones, ones) == doctest::Approx(-0.291066969529309942042).epsilon(1e-13));
  CHECK(scalar_defect(ones, ones) < 0.0);
  const GradingSignature sig1(1);
  for (int n = 0; n < 1000; ++n) {
    CHECK(scalar_defect(random_profile(sig1, rng), random_profile(sig1, rng)) == 0.0);
  }
  CHECK_THROWS_AS(scalar_defect(ones, ScalarProfile(GradingSignature(4), {1, 1, 1, 1})), std::domain_error);
}

TEST_CASE("search config validation") {
  SearchConfig c;
  CHECK_NOTHROW(c.validate());
  c.sample_count = 0;
  CHECK_THROWS_AS(c.validate(), std::domain_error);
  c = SearchConfig{};
  c.tolerance = 0.0;
  CHECK_THROWS_AS(c.validate(), std::domain_error);
  c = SearchConfig{};
  c.r = 0;
  CHECK_THROWS_AS(hunt(c), std::domain_error);
}

TEST_CASE("hunt finds no violation for r = 2, 3, 5") {
  for (int r : {2, 3, 5}) {
    const SearchOutcome out = hunt(small_config(r));
    CAPTURE(r);
    CHECK_FALSE(out.violation_found);
    CHECK(out.max_relative_defect <= 1e-12);
    CHECK(out.samples_evaluated >= 50'000);
    CHECK(out.argmax.a.signature().r() == r);
    CHECK(relative_defect(out.argmax.a, out.argmax.b) == out.max_relative_defect);
  }
}

TEST_CASE("hunt is deterministic and independent of the thread count") {
  SearchConfig c = small_config(4, 20'000);
  c.threads = 1;
  const SearchOutcome one = hunt(c);
  const SearchOutcome again = hunt(c);
  c.threads = 3;
  const SearchOutcome three = hunt(c);
  for (const SearchOutcome* other : {&again, &three}) {
    CHECK(other->max_defect == one.max_defect);
    CHECK(other->max_relative_defect == one.max_relative_defect);
    CHECK(other->argmax.a == one.argmax.a);
    CHECK(other->argmax.b == one.argmax.b);
    CHECK(other->samples_evaluated == one.samples_evaluated);
  }
  c.rng_seed = 43;
  CHECK_FALSE(hunt(c).argmax.a == one.argmax.a);
}

TEST_CASE("hunt covers huge grids by subsampling") {
  SearchConfig c = small_config(12, 5'000);
  c.grid_cap = 1000;
  const SearchOutcome out = hunt(c);
  CHECK_FALSE(out.violation_found);
  CHECK(out.samples_evaluated >= 6'000);
}

TEST_CASE("refine stays nonnegative and never gets worse") {
  std::mt19937_64 rng(83);
  for (int r = 1; r <= 6; ++r) {
    const GradingSignature sig(r);
    for (int n = 0; n < 20; ++n) {
      const ProfilePair start{random_profile(sig, rng, -3, 3, 0.2), random_profile(sig, rng, -3, 3, 0.2)};
      std::int64_t evals = 0;
      const ProfilePair end = refine(start, 30, 0.9, &evals);
      CHECK(evals > 0);
      for (double v : end.a.magnitudes()) CHECK(v >= 0.0);
      for (double v : end.b.magnitudes()) CHECK(v >= 0.0);
      CHECK(relative_defect(end.a, end.b) >= relative_defect(start.a, start.b));
    }
  }
}

TEST_CASE("line margin examples") {
  const GradingSignature sig(5);
  // 56 (2^5 + 2^3) - 120 (2^{28/5} + 2^{12/5}), frozen from high-precision evaluation.
  CHECK(line_margin(sig, {2, 3, 3}, 2.0, 1.0) == doctest::Approx(-4213.71541257091788).epsilon(1e-13));
  // Equal variables: (c_L - c_R) * 2 x^{e_i}.
  for (double x : {0.3, 1.0, 7.5}) {
    CHECK(line_margin(sig, {2, 3, 3}, x, x) == doctest::Approx((56.0 - 120.0) * 2.0 * std::pow(x, 8)).epsilon(1e-13));
  }
  CHECK(line_margin(sig, {2, 3, 3}, 0.0, 3.0) == 0.0);
  CHECK(line_margin(sig, {2, 3, 3}, 3.0, 0.0) == 0.0);
  // Middle line: 70 a^4 b^4 - 252 a^4 b^4.
  CHECK(line_margin(sig, {2, 4, 5}, 2.0, 1.0) == doctest::Approx((70.0 - 252.0) * 16.0));
}

TEST_CASE("numeric line checks agree with the exact checker") {
  SearchConfig c;
  c.sample_count = 10'000;
  for (int r = 1; r <= 6; ++r) {
    const GradingSignature sig(r);
    const auto cert = std::get<Certificate>(search_certificate(sig));
    for (const auto& line : cert.lines) {
      CAPTURE(r);
      CAPTURE(line.level);
      CAPTURE(line.split);
      CHECK(check_line_numeric(sig, line, c) <= 1e-12);
    }
  }
  // A coefficient violation is visible at x == y.
  CHECK(check_line_numeric(GradingSignature(5), {3, 2, 1}, c) > 0.0);
  // A majorization violation shows up for unbalanced (x, y).
  CHECK(check_line_numeric(GradingSignature(5), {3, 1, 3}, c) > 0.0);
}

TEST_CASE("thread count honours GRADENORM_THREADS") {
  ::setenv("GRADENORM_THREADS", "1", 1);
  CHECK(default_thread_count() == 1);
  ::setenv("GRADENORM_THREADS", "junk", 1);
  CHECK(default_thread_count() >= 1);
  ::unsetenv("GRADENORM_THREADS");
}
