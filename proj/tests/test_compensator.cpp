#include <doctest.h>

#include <stdexcept>

#include "skewcomp/compensator.hpp"
#include "skewcomp/oracles.hpp"
#include "skewcomp/verify.hpp"

using namespace skewcomp;

namespace {

WindowParams binary64_params() {
  WindowParams p;
  p.fp_mode = FpFormat::Binary64;
  return p;
}

}  // namespace

TEST_CASE("ratio estimate invariants") {
  CHECK_NOTHROW(RatioEstimate(4, 6));
  CHECK_NOTHROW(RatioEstimate(6, 4));  // D > A allowed
  CHECK_THROWS_AS(RatioEstimate(0, 6), std::invalid_argument);
  CHECK_THROWS_AS(RatioEstimate(4, 0), std::invalid_argument);
  CHECK_THROWS_AS(RatioEstimate(std::int64_t{1} << 33, 4),
                  std::invalid_argument);
}

TEST_CASE("candidate window") {
  auto w = candidate_window(5, RatioEstimate(4, 6), binary64_params());
  CHECK(w.k == 3);
  CHECK(w.l == 1);
  CHECK(w.quotient == doctest::Approx(10.0 / 3.0));

  auto w0 = candidate_window(0, RatioEstimate(4, 6), binary64_params());
  CHECK(w0.k == 0);
  CHECK(w0.l == 0);

  CHECK_THROWS_AS(candidate_window(5, RatioEstimate(6, 4), binary64_params()),
                  std::invalid_argument);
}

TEST_CASE("case-1 compensation") {
  CHECK(compensate_case1(5, RatioEstimate(4, 6)).j == 3);
  CHECK(compensate_case1(6, RatioEstimate(4, 6)).j == 4);
  CHECK(compensate_case1(0, RatioEstimate(4, 6)).j == 0);

  auto out = compensate_case1(5, RatioEstimate(4, 6));
  CHECK(out.case_used == RatioCase::LtOne);
  CHECK(out.walk_steps == out.candidate_count - 1);
  CHECK(out.candidate_lo <= out.j);
  CHECK(out.j <= out.candidate_lo + out.candidate_count - 1);
}

TEST_CASE("full compensation cases") {
  // 5 * 6/4 = 7.5, half rounds up.
  auto gt = compensate(5, RatioEstimate(6, 4));
  CHECK(gt.j == 8);
  CHECK(gt.case_used == RatioCase::GtOne);

  auto eq = compensate(7, RatioEstimate(5, 5));
  CHECK(eq.j == 7);
  CHECK(eq.case_used == RatioCase::EqOne);

  CHECK(compensate(0, RatioEstimate(3, 7)).j == 0);
  CHECK_THROWS_AS(compensate(-1, RatioEstimate(3, 7)), std::invalid_argument);
}

TEST_CASE("case-2 decomposition identity") {
  for (std::int64_t a = 2; a <= 24; ++a) {
    for (std::int64_t d = a + 1; d <= 3 * a; ++d) {
      if (d % a == 0) continue;
      for (std::int64_t i = 0; i <= 3 * a; ++i) {
        std::int64_t whole = (d / a) * i;
        std::int64_t residual_j =
            compensate_case1(i, RatioEstimate(d % a, a)).j;
        REQUIRE(compensate(i, RatioEstimate(d, a)).j == whole + residual_j);
      }
    }
  }
}

TEST_CASE("multiple-of-A ratios are exact") {
  CHECK(compensate(7, RatioEstimate(10, 5)).j == 14);
  CHECK(compensate(9, RatioEstimate(12, 4)).j == 27);
}

TEST_CASE("within-window and bound properties, randomized") {
  VerifyOptions opts;
  opts.random_trials = 20'000;
  opts.threads = 2;
  CHECK(verify_nearest_bound(opts).passed);
  CHECK(verify_window_robustness(opts).passed);
}

TEST_CASE("oracle equivalence vs the reference walk, exhaustive") {
  VerifyOptions opts;
  opts.max_a = 24;
  CHECK(verify_oracle_equivalence(opts).passed);
}

TEST_CASE("logical clock update") {
  ClockState state(100, 50, RatioEstimate(4, 6));
  CHECK(logical_clock_update(state, 55) == 103);
  CHECK(logical_clock_update(state, 50) == 100);  // zero elapsed
  CHECK_THROWS_AS(logical_clock_update(state, 49), std::invalid_argument);
}

TEST_CASE("unit ratio never drifts over repeated rounds") {
  ClockState state(0, 0, RatioEstimate(7, 7));
  std::int64_t t = 0;
  for (int round = 0; round < 1000; ++round) {
    t += 123;
    resync(state, t, RatioEstimate(7, 7));
    REQUIRE(state.logical_anchor == t);
  }
}

TEST_CASE("compensation is a pure function of its inputs") {
  WindowParams params;
  auto a = compensate(123'456'789, RatioEstimate(999'917, 1'000'003), params);
  auto b = compensate(123'456'789, RatioEstimate(999'917, 1'000'003), params);
  CHECK(a.j == b.j);
  CHECK(a.candidate_lo == b.candidate_lo);
  CHECK(a.candidate_count == b.candidate_count);
  CHECK(a.walk_steps == b.walk_steps);
  CHECK(a.case_used == b.case_used);
}
