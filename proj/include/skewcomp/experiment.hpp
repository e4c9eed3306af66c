#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "skewcomp/oracles.hpp"

namespace skewcomp {

enum class Algorithm { Proposed, Binary32Baseline };

/// Which value of the candidate window the proposed backend reports.
/// BresenhamWalk is the exact windowed walk; WindowTop
/// reports the upper window bound k+l instead. WindowTop combined with the
/// Additive margin and a Binary64 window quotient yields a constant -1 error
/// against the binary64 floor reference; it exists as a diagnostic to
/// document that behaviour, not as a compensator.
enum class CandidatePolicy { BresenhamWalk, WindowTop };

struct ExperimentConfig {
  std::int64_t d = 1'000'000;
  std::int64_t sample_count = 1'000'000;
  double skew_ppm = 100.0;
  double epsilon = 1e-7;
  std::vector<std::int64_t> clocks = {1'000'000, 10'000'000, 100'000'000,
                                      1'000'000'000};
  std::uint64_t seed = 0x5eed5eed;
  RoundingMode rounding = RoundingMode::Floor;
  TdConvention convention = TdConvention::TdConsistent;
  FpFormat fp_window_mode = FpFormat::Binary32;
  MarginKind margin = MarginKind::Scaled;
  /// Order used for both the binary32 baseline and the binary64 reference.
  /// DivLast reproduces the published single-precision error rows.
  QuotientOrder baseline_order = QuotientOrder::DivLast;
  CandidatePolicy policy = CandidatePolicy::BresenhamWalk;
  int threads = 1;  // 0 = hardware concurrency
};

/// Compensation-error statistics over one (algorithm, clock) cell.
/// Error per sample is reference - algorithm, where the reference is the
/// binary64 baseline under the configured rounding mode. avg is an exact
/// integer sum divided once.
struct ErrorStats {
  std::int64_t max = 0;
  std::int64_t min = 0;
  double avg = 0.0;
  std::int64_t count = 0;
};

struct ResultRow {
  Algorithm algorithm;
  std::int64_t clock;
  ErrorStats stats;
};

struct ResultTable {
  std::vector<ResultRow> rows;
};

struct DriftPoint {
  std::int64_t round;
  std::int64_t proposed_drift;
  std::int64_t binary32_drift;
};

/// Deterministic A samples: per index n, s ~ Uniform[-ppm, +ppm] derived from
/// (seed, n) via SplitMix64, A = round(D*(1+s)). Identical across runs and
/// thread counts.
std::vector<std::int64_t> generate_samples(const ExperimentConfig& config);

ErrorStats run_cell(std::int64_t clock,
                    const std::vector<std::int64_t>& samples,
                    const ExperimentConfig& config, Algorithm algorithm);

/// All clocks x both algorithms; baseline rows first. Progress on stderr.
ResultTable run_table(const ExperimentConfig& config);

/// Recursive accumulation study. Each round re-anchors with a fresh sampled
/// ratio and advances the hardware clock by interval_ticks. The proposed
/// backend accumulates exact integers; the binary32 backend keeps its logical
/// clock as a binary32 value, so each update is exposed to both quotient and
/// accumulation rounding. Drift is measured against the exact per-round
/// oracle under config.rounding.
std::vector<DriftPoint> run_drift(const ExperimentConfig& config,
                                  std::int64_t rounds,
                                  std::int64_t interval_ticks);

/// CSV: header "algorithm,clock,max,min,avg", avg with 6 significant digits.
std::string emit_csv(const ResultTable& table);
std::string emit_markdown(const ResultTable& table);
std::string emit_drift_csv(const std::vector<DriftPoint>& series);

const char* algorithm_name(Algorithm a);

}  // namespace skewcomp
