#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace skewcomp {

/// Movement of the integer line walk: M1 advances x only, M2 advances x and y.
enum class Movement { Horizontal, Diagonal };

/// Convention for the extended decision variable at an arbitrary lattice point.
///
/// OriginZero evaluates 2*(x*delta_b - y*delta_a), which is 0 at the origin.
/// TdConsistent adds the constant 2*delta_b - delta_a so that the value at any
/// point of the canonical walk equals the decision variable the recursion
/// holds there (the recursion starts at 2*delta_b - delta_a, not 0). All
/// boundedness and reachability guarantees are stated for TdConsistent.
enum class TdConvention { OriginZero, TdConsistent };

/// Line parameters in normal form: 0 < delta_b < delta_a. Callers with a
/// ratio >= 1 normalize first (see compensator.hpp).
struct Slope {
  std::int64_t delta_a;  // x extent, ticks
  std::int64_t delta_b;  // y extent, ticks

  Slope(std::int64_t da, std::int64_t db);
};

struct LatticePoint {
  std::int64_t x = 0;  // hardware-clock ticks
  std::int64_t y = 0;  // logical-clock ticks
};

struct DecisionVar {
  std::int64_t value = 0;
  TdConvention convention = TdConvention::TdConsistent;
};

/// Decision variable at the origin: 2*delta_b - delta_a (TdConsistent).
DecisionVar initial_td(const Slope& slope);

/// One step of the recursion. value >= 0 takes M2 and adds
/// 2*delta_b - 2*delta_a; value < 0 takes M1 and adds 2*delta_b.
std::pair<Movement, DecisionVar> step(DecisionVar td, const Slope& slope);

/// Decision variable at an arbitrary point with y <= x. Throws
/// std::overflow_error if x*delta_b does not fit in 64 bits.
DecisionVar otd(LatticePoint p, const Slope& slope,
                TdConvention convention = TdConvention::TdConsistent);

/// Ground-truth walk from the origin: y values for x = 0..x_max. Extends past
/// delta_a by periodicity of the recursion.
std::vector<std::int64_t> reference_walk(const Slope& slope,
                                         std::int64_t x_max);

}  // namespace skewcomp
