// Acceptance suite: one line per criterion, exit nonzero on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "skewcomp/experiment.hpp"
#include "skewcomp/verify.hpp"

using namespace skewcomp;

namespace {

int failures = 0;

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

void report(const std::string& name, bool ok, const std::string& detail) {
  std::printf("%s %s: %s\n", ok ? "PASS" : "FAIL", name.c_str(),
              detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string stats_str(const ErrorStats& s) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "(max=%lld min=%lld avg=%.4f)",
                static_cast<long long>(s.max), static_cast<long long>(s.min),
                s.avg);
  return buf;
}

bool within_half(double value, double target) {
  double lo = 0.5 * std::fabs(target), hi = 1.5 * std::fabs(target);
  return std::fabs(value) >= lo && std::fabs(value) <= hi &&
         (value == 0.0 || (value < 0) == (target < 0));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// 1. compensate_case1 equals the reference walk for every slope with A <= 64,
//    every 0 < D < A, every 0 <= i <= 4A; must finish within a minute.
void criterion1() {
  auto start = std::chrono::steady_clock::now();
  VerifyOptions opts;
  opts.max_a = 64;
  VerifyResult r = verify_oracle_equivalence(opts);
  double elapsed = seconds_since(start);
  char buf[160];
  std::snprintf(buf, sizeof buf, "%s (%.1f s)", r.detail.c_str(), elapsed);
  report("criterion-1 oracle-equivalence", r.passed && elapsed < 60.0, buf);
}

// 2. -2*delta_a < td < 2*delta_a: exhaustive to 64 plus 1e5 random slopes up
//    to 1e6, walks of >= 3*delta_a steps.
void criterion2() {
  VerifyOptions opts;
  opts.max_a = 64;
  opts.random_trials = 100'000;
  VerifyResult ex = verify_walk_rounding_exhaustive(opts);
  VerifyResult rnd = verify_walk_rounding_randomized(opts);
  report("criterion-2 walk-rounding", ex.passed && rnd.passed,
         ex.detail + "; " + rnd.detail);
}

// 3. |compensate - exact floor| <= 1 for 1e6 random (i, D, A) at benchmark
//    magnitudes, exact integers, under a minute.
void criterion3() {
  auto start = std::chrono::steady_clock::now();
  VerifyOptions opts;
  opts.random_trials = 1'000'000;
  VerifyResult r = verify_nearest_bound(opts);
  double elapsed = seconds_since(start);
  char buf[160];
  std::snprintf(buf, sizeof buf, "%s (%.1f s)", r.detail.c_str(), elapsed);
  report("criterion-3 nearest-bound", r.passed && elapsed < 60.0, buf);
}

// 4. Proposed rows: constant -1 under the documented matching configuration
//    (window-top candidate, additive margin, binary64 window); and errors
//    within +/-1 for 100% of samples under floor, nearest, and ceil.
//    Default-scale run, under two minutes.
void criterion4() {
  auto start = std::chrono::steady_clock::now();

  ExperimentConfig match;
  match.policy = CandidatePolicy::WindowTop;
  match.margin = MarginKind::Additive;
  match.fp_window_mode = FpFormat::Binary64;
  match.threads = 0;
  auto samples = generate_samples(match);
  bool constant_ok = true;
  std::string detail;
  for (std::int64_t clock : match.clocks) {
    ErrorStats s = run_cell(clock, samples, match, Algorithm::Proposed);
    if (s.max != -1 || s.min != -1 || s.avg != -1.0) {
      constant_ok = false;
      detail += " clock " + std::to_string(clock) + " " + stats_str(s);
    }
  }

  ExperimentConfig walk;
  walk.threads = 0;
  bool bounded_ok = true;
  for (RoundingMode rounding : {RoundingMode::Floor, RoundingMode::NearestHalfUp,
                                RoundingMode::Ceil}) {
    walk.rounding = rounding;
    for (std::int64_t clock : walk.clocks) {
      ErrorStats s = run_cell(clock, samples, walk, Algorithm::Proposed);
      if (s.max > 1 || s.min < -1) {
        bounded_ok = false;
        detail += " unbounded at clock " + std::to_string(clock) + " " +
                  stats_str(s);
      }
    }
  }

  double elapsed = seconds_since(start);
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "constant=-1 %s, +/-1 across roundings %s (%.1f s)%s",
                constant_ok ? "yes" : "NO", bounded_ok ? "yes" : "NO", elapsed,
                detail.c_str());
  report("criterion-4 proposed-rows",
         constant_ok && bounded_ok && elapsed < 120.0, buf);
}

// 5. Binary32 baseline rows: exact zeros at 1e6 and 1e7; 1e8 and 1e9 match
//    the reference magnitudes within +/-50% and show the blow-up.
void criterion5() {
  ExperimentConfig config;
  config.threads = 0;
  auto samples = generate_samples(config);
  ErrorStats row[4];
  for (int n = 0; n < 4; ++n) {
    row[n] = run_cell(config.clocks[static_cast<std::size_t>(n)], samples,
                      config, Algorithm::Binary32Baseline);
  }
  bool ok = true;
  std::string detail;
  for (int n = 0; n < 2; ++n) {
    if (row[n].max != 0 || row[n].min != 0 || row[n].avg != 0.0) {
      ok = false;
      detail += " nonzero row " + std::to_string(n) + " " + stats_str(row[n]);
    }
  }
  struct Target {
    double max, min, avg;
  };
  const Target targets[2] = {{1, -4, -2.0004}, {44, -19, 12.382}};
  for (int n = 0; n < 2; ++n) {
    const ErrorStats& s = row[n + 2];
    if (!within_half(static_cast<double>(s.max), targets[n].max) ||
        !within_half(static_cast<double>(s.min), targets[n].min) ||
        !within_half(s.avg, targets[n].avg)) {
      ok = false;
      detail += " off-target row " + std::to_string(n + 2) + " " +
                stats_str(s);
    }
  }
  std::int64_t blowup7 = std::max<std::int64_t>(std::llabs(row[1].max), std::llabs(row[1].min));
  std::int64_t blowup8 = std::max<std::int64_t>(std::llabs(row[2].max), std::llabs(row[2].min));
  if (blowup8 <= blowup7) {
    ok = false;
    detail += " no blow-up between 1e7 and 1e8";
  }
  report("criterion-5 binary32-rows", ok,
         stats_str(row[2]) + " " + stats_str(row[3]) + detail);
}

// 6. y[x + delta_a] = y[x] + delta_b over exhaustive small slopes.
void criterion6() {
  VerifyOptions opts;
  opts.max_a = 64;
  VerifyResult r = verify_periodicity(opts);
  report("criterion-6 periodicity", r.passed, r.detail);
}

// 7. Over 1000 recursive rounds at 1e6 ticks each, proposed |drift| <= rounds
//    while the binary32 backend drifts at least 10x further once the
//    cumulative clock passes 1e8.
void criterion7() {
  ExperimentConfig config;
  auto series = run_drift(config, 1000, 1'000'000);
  bool proposed_ok = true;
  std::int64_t max_dp = 0, max_d32_late = 0;
  for (const auto& p : series) {
    if (std::llabs(p.proposed_drift) > p.round) proposed_ok = false;
    max_dp = std::max<std::int64_t>(max_dp, std::llabs(p.proposed_drift));
    if (p.round >= 100) {  // cumulative >= 1e8 ticks
      max_d32_late = std::max<std::int64_t>(max_d32_late, std::llabs(p.binary32_drift));
    }
  }
  bool ratio_ok = max_d32_late >= 10 * std::max<std::int64_t>(max_dp, 1);
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "max proposed |drift|=%lld, max binary32 |drift|=%lld past 1e8",
                static_cast<long long>(max_dp),
                static_cast<long long>(max_d32_late));
  report("criterion-7 drift", proposed_ok && ratio_ok, buf);
}

// 8. bench with a fixed seed emits byte-identical CSV across runs and thread
//    counts.
void criterion8() {
  const std::string cli = ACCEPTANCE_CLI_PATH;
  const std::string base =
      " bench --samples 2e5 --seed 7 --threads %d --out /tmp/skewcomp_acc_%d.csv"
      " 2>/dev/null";
  char cmd[512];
  bool ran = true;
  int runs[3] = {1, 4, 1};
  for (int n = 0; n < 3; ++n) {
    std::snprintf(cmd, sizeof cmd, ("\"" + cli + "\"" + base).c_str(), runs[n],
                  n);
    if (std::system(cmd) != 0) ran = false;
  }
  std::string a = read_file("/tmp/skewcomp_acc_0.csv");
  std::string b = read_file("/tmp/skewcomp_acc_1.csv");
  std::string c = read_file("/tmp/skewcomp_acc_2.csv");
  bool ok = ran && !a.empty() && a == b && a == c;
  report("criterion-8 determinism", ok,
         ok ? "byte-identical across runs and thread counts"
            : "outputs differ or bench failed");
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  std::printf("%s (%d failure%s)\n", failures == 0 ? "ACCEPTED" : "REJECTED",
              failures, failures == 1 ? "" : "s");
  return failures == 0 ? 0 : 1;
}
