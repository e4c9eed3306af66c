#include "skewcomp/compensator.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "skewcomp/oracles.hpp"

namespace skewcomp {

namespace {

constexpr std::int64_t kMaxTick = std::int64_t{1} << 32;

void check_clock(std::int64_t i) {
  if (i < 0) throw std::invalid_argument("compensate: clock must be >= 0");
}

}  // namespace

RatioEstimate::RatioEstimate(std::int64_t d_, std::int64_t a_) : d(d_), a(a_) {
  if (d <= 0 || a <= 0) {
    throw std::invalid_argument("RatioEstimate: D and A must be > 0");
  }
  if (d >= kMaxTick || a >= kMaxTick) {
    throw std::invalid_argument("RatioEstimate: D and A must fit 32 bits");
  }
}

double window_margin(std::int64_t i, const WindowParams& params) {
  if (params.margin == MarginKind::Additive) {
    return 1.0 + params.epsilon;
  }
  // A binary32 quotient of operands up to 2^32 carries up to five roundings
  // (three conversions, one division, one multiplication), each bounded by
  // 2^-25 or 2^-24 relative, 3*2^-24 in total. epsilon below that floor
  // cannot bracket the worst case.
  constexpr double kBinary32Loss = 3.0 * 0x1.0p-24;
  double eps = params.fp_mode == FpFormat::Binary32 &&
                       params.epsilon < kBinary32Loss
                   ? kBinary32Loss
                   : params.epsilon;
  return 1.0 + eps * static_cast<double>(i > 1 ? i : std::int64_t{1});
}

CandidateWindow candidate_window(std::int64_t i, const RatioEstimate& ratio,
                                 const WindowParams& params) {
  check_clock(i);
  if (ratio.d >= ratio.a) {
    throw std::invalid_argument("candidate_window: requires D < A");
  }
  double q = fp_quotient(i, ratio.d, ratio.a, params.fp_mode,
                         QuotientOrder::MulLast);
  double margin = window_margin(i, params);
  double lo = std::ceil(q - margin);
  double hi = std::floor(q + margin);
  std::int64_t k = lo < 0 ? 0 : static_cast<std::int64_t>(lo);
  std::int64_t top = hi > static_cast<double>(i)
                         ? i
                         : static_cast<std::int64_t>(hi);
  if (top < k) {
    throw std::runtime_error(
        "candidate_window: window empty after clamping (i=" +
        std::to_string(i) + ", D=" + std::to_string(ratio.d) +
        ", A=" + std::to_string(ratio.a) + ")");
  }
  return {k, top - k, q};
}

CompensationOutcome compensate_case1(std::int64_t i, const RatioEstimate& ratio,
                                     const WindowParams& params) {
  CandidateWindow w = candidate_window(i, ratio, params);
  CompensationOutcome out;
  out.candidate_lo = w.k;
  out.candidate_count = w.l + 1;
  out.walk_steps = w.l;
  out.case_used = RatioCase::LtOne;
  if (w.l == 0) {
    // (i, k) is the only point satisfying the window bound.
    out.j = w.k;
    return out;
  }
  Slope slope(ratio.a, ratio.d);
  LatticePoint start{i - w.l, w.k};
  DecisionVar td = otd(start, slope, params.convention);
  std::int64_t y = start.y;
  for (std::int64_t n = 0; n < w.l; ++n) {
    auto [movement, next] = step(td, slope);
    if (movement == Movement::Diagonal) ++y;
    td = next;
  }
  out.j = y;
  return out;
}

CompensationOutcome compensate(std::int64_t i, const RatioEstimate& ratio,
                               const WindowParams& params) {
  check_clock(i);
  if (ratio.d == ratio.a) {
    return {i, i, 1, 0, RatioCase::EqOne};
  }
  if (ratio.d < ratio.a) {
    return compensate_case1(i, ratio, params);
  }
  // D > A: j = (D div A)*i + case1 over the residual slope (D mod A, A).
  std::int64_t whole = ratio.d / ratio.a;
  std::int64_t residual = ratio.d % ratio.a;
  std::int64_t base = 0;
  if (__builtin_mul_overflow(whole, i, &base)) {
    throw std::overflow_error("compensate: (D/A)*i exceeds 64-bit range");
  }
  if (residual == 0) {
    return {base, base, 1, 0, RatioCase::GtOne};
  }
  CompensationOutcome inner =
      compensate_case1(i, RatioEstimate(residual, ratio.a), params);
  inner.j += base;
  inner.candidate_lo += base;
  inner.case_used = RatioCase::GtOne;
  return inner;
}

ClockState::ClockState(std::int64_t logical, std::int64_t hardware,
                       RatioEstimate r)
    : logical_anchor(logical), hardware_anchor(hardware), ratio(r) {
  if (logical < 0 || hardware < 0) {
    throw std::invalid_argument("ClockState: anchors must be >= 0");
  }
}

std::int64_t logical_clock_update(const ClockState& state, std::int64_t t_hw,
                                  const WindowParams& params) {
  if (t_hw < state.hardware_anchor) {
    throw std::invalid_argument("logical_clock_update: hardware clock rollback");
  }
  std::int64_t elapsed = t_hw - state.hardware_anchor;
  return state.logical_anchor + compensate(elapsed, state.ratio, params).j;
}

void resync(ClockState& state, std::int64_t t_hw, RatioEstimate fresh,
            const WindowParams& params) {
  std::int64_t logical = logical_clock_update(state, t_hw, params);
  state.logical_anchor = logical;
  state.hardware_anchor = t_hw;
  state.ratio = fresh;
}

}  // namespace skewcomp
