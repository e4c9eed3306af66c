#pragma once

#include <cstdint>

#include "skewcomp/bresenham.hpp"

namespace skewcomp {

enum class FpFormat { Binary32, Binary64 };

/// How the candidate window half-width grows with the hardware clock.
///
/// Scaled uses 1 + eps*max(1, i) where eps is epsilon raised, for binary32
/// windows, to a floor of 3*2^-24 that covers the five roundings in the
/// quotient (operand conversions, divide, multiply). Additive uses the plain
/// 1 + epsilon and is only safe when the quotient is evaluated in binary64.
enum class MarginKind { Scaled, Additive };

///// Integer estimate of the inverse clock-frequency ratio: D/A = 1/(1+skew).
/// Either of D, A may be larger.
struct RatioEstimate {
  std::int64_t d;  // cumulative interdeparture ticks
  std::int64_t a;  // cumulative interarrival ticks

  RatioEstimate(std::int64_t d_, std::int64_t a_);
};

struct WindowParams {
  double epsilon = 1e-7;  // precision-loss allowance
  FpFormat fp_mode = FpFormat::Binary32;
  MarginKind margin = MarginKind::Scaled;
  TdConvention convention = TdConvention::TdConsistent;
};

struct CandidateWindow {
  std::int64_t k = 0;    // lowest candidate
  std::int64_t l = 0;    // k..k+l are candidates
  double quotient = 0;   // i*(D/A) as evaluated in fp_mode
};

enum class RatioCase { LtOne, EqOne, GtOne };

struct CompensationOutcome {
  std::int64_t j = 0;               // skew-compensated ticks
  std::int64_t candidate_lo = 0;    // k
  std::int64_t candidate_count = 1; // l + 1
  std::int64_t walk_steps = 0;      // l
  RatioCase case_used = RatioCase::EqOne;
};

/// Half-width used around the floating-point quotient estimate.
double window_margin(std::int64_t i, const WindowParams& params);

/// Candidate range [k, k+l] for the compensated clock, clamped to [0, i].
/// Requires 0 < D < A. Throws std::runtime_error if clamping empties the
/// window (inconsistent inputs).
CandidateWindow candidate_window(std::int64_t i, const RatioEstimate& ratio,
                                 const WindowParams& params = {});

/// D < A only: windowed walk. Starts at (i-l, k) with the extended decision
/// variable there and applies l steps of the recursion; j is the y reached
/// at x = i. Equals reference_walk({A, D}, i)[i] under TdConsistent.
CompensationOutcome compensate_case1(std::int64_t i, const RatioEstimate& ratio,
                                     const WindowParams& params = {});

/// Full compensation. D == A maps i to itself; D > A is decomposed as
/// j = (D/A)*i + case1 over the residual slope (D mod A, A).
CompensationOutcome compensate(std::int64_t i, const RatioEstimate& ratio,
                               const WindowParams& params = {});

/// Sync-epoch anchors for the recursive logical-clock update. Single-writer:
/// resync calls must be externally serialized; reads between syncs are safe.
struct ClockState {
  std::int64_t logical_anchor = 0;   // logical ticks at last sync
  std::int64_t hardware_anchor = 0;  // hardware ticks at last sync
  RatioEstimate ratio;

  explicit ClockState(RatioEstimate r) : ratio(r) {}
  ClockState(std::int64_t logical, std::int64_t hardware, RatioEstimate r);
};

/// Logical clock at hardware time T >= the anchor. Pure; does not re-anchor.
/// Throws std::invalid_argument on clock rollback (T before the anchor).
std::int64_t logical_clock_update(const ClockState& state, std::int64_t t_hw,
                                  const WindowParams& params = {});

/// Re-anchors the state at a new sync epoch with a fresh ratio estimate.
void resync(ClockState& state, std::int64_t t_hw, RatioEstimate fresh,
            const WindowParams& params = {});

}  // namespace skewcomp
