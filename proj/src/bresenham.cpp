#include "skewcomp/bresenham.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace skewcomp {

namespace {

constexpr std::int64_t kMaxExtent =
    std::int64_t{1} << 32;  // API values must fit unsigned 32 bits

}  // namespace

Slope::Slope(std::int64_t da, std::int64_t db) : delta_a(da), delta_b(db) {
  if (db <= 0 || da <= db) {
    throw std::invalid_argument("Slope: need 0 < delta_b < delta_a, got (" +
                                std::to_string(da) + ", " + std::to_string(db) +
                                ")");
  }
  if (da >= kMaxExtent) {
    throw std::invalid_argument("Slope: delta_a exceeds 32-bit range");
  }
}

DecisionVar initial_td(const Slope& slope) {
  return {2 * slope.delta_b - slope.delta_a, TdConvention::TdConsistent};
}

std::pair<Movement, DecisionVar> step(DecisionVar td, const Slope& slope) {
  if (td.value >= 0) {
    td.value += 2 * slope.delta_b - 2 * slope.delta_a;
    return {Movement::Diagonal, td};
  }
  td.value += 2 * slope.delta_b;
  return {Movement::Horizontal, td};
}

DecisionVar otd(LatticePoint p, const Slope& slope, TdConvention convention) {
  if (p.x < 0 || p.y < 0 || p.y > p.x) {
    throw std::invalid_argument("otd: point must satisfy 0 <= y <= x");
  }
  constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();
  if (p.x > kMax / (2 * slope.delta_b)) {
    throw std::overflow_error("otd: x*delta_b exceeds 64-bit range");
  }
  std::int64_t value = 2 * (p.x * slope.delta_b - p.y * slope.delta_a);
  if (convention == TdConvention::TdConsistent) {
    value += 2 * slope.delta_b - slope.delta_a;
  }
  return {value, convention};
}

std::vector<std::int64_t> reference_walk(const Slope& slope,
                                         std::int64_t x_max) {
  if (x_max < 0) {
    throw std::invalid_argument("reference_walk: x_max must be >= 0");
  }
  std::vector<std::int64_t> ys;
  ys.reserve(static_cast<std::size_t>(x_max) + 1);
  std::int64_t y = 0;
  ys.push_back(y);
  DecisionVar td = initial_td(slope);
  for (std::int64_t x = 0; x < x_max; ++x) {
    auto [movement, next] = step(td, slope);
    if (movement == Movement::Diagonal) ++y;
    ys.push_back(y);
    td = next;
  }
  return ys;
}

}  // namespace skewcomp
