#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "skewcomp/experiment.hpp"

namespace skewcomp {

struct VerifyResult {
  std::string name;
  bool passed = false;
  std::string detail;  // counterexample tuple or summary
};

struct VerifyOptions {
  std::int64_t max_a = 64;           // exhaustive slope sweep bound
  std::int64_t random_trials = 100'000;
  std::uint64_t seed = 1;
  int threads = 0;  // 0 = hardware concurrency
};

// Each suite runs to completion and reports the first counterexample found.

/// |td| < 2*delta_a along walks of >= 3*delta_a steps, all slopes with
/// delta_a <= max_a.
VerifyResult verify_walk_rounding_exhaustive(const VerifyOptions& opts);

/// Same bound for random slopes with delta_a up to 10^6.
VerifyResult verify_walk_rounding_randomized(const VerifyOptions& opts);

/// |2*(x*delta_b - y*delta_a)| <= delta_a on every walk point, ties upward.
VerifyResult verify_nearest_lattice(const VerifyOptions& opts);

/// y[x + delta_a] = y[x] + delta_b.
VerifyResult verify_periodicity(const VerifyOptions& opts);

/// otd at each walk point (TdConsistent) equals the td the walk held there.
VerifyResult verify_convention_consistency(const VerifyOptions& opts);

/// compensate_case1 equals reference_walk at x = i for all A <= max_a,
/// 0 < D < A, 0 <= i <= 4A.
VerifyResult verify_oracle_equivalence(const VerifyOptions& opts);

/// Walks started from every point of the backward-reachable set of (i, j)
/// reach (i, j); small instances, enumerated directly.
VerifyResult verify_backward_reachability(const VerifyOptions& opts);

/// |compensate(i) - floor(i*D/A)| <= 1 and 2*|i*D - j*A| <= A for random
/// (i, D, A) across the benchmark magnitudes, exact arithmetic.
VerifyResult verify_nearest_bound(const VerifyOptions& opts);

/// The exact compensated clock lies inside [k, k+l] for both window formats.
VerifyResult verify_window_robustness(const VerifyOptions& opts);

std::vector<VerifyResult> run_all_suites(const VerifyOptions& opts);

}  // namespace skewcomp
