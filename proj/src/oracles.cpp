#include "skewcomp/oracles.hpp"

#include <cmath>
#include <stdexcept>

namespace skewcomp {

namespace {

std::int64_t floordiv(__int128 num, __int128 den) {
  // den > 0; num may be negative.
  __int128 q = num / den;
  if (num % den != 0 && num < 0) --q;
  return static_cast<std::int64_t>(q);
}

}  // namespace

std::int64_t exact_quotient(std::int64_t i, std::int64_t d, std::int64_t a,
                            RoundingMode rounding) {
  if (a <= 0) throw std::invalid_argument("exact_quotient: A must be > 0");
  if (i < 0 || d < 0) {
    throw std::invalid_argument("exact_quotient: i and D must be >= 0");
  }
  __int128 num = static_cast<__int128>(i) * d;
  switch (rounding) {
    case RoundingMode::Floor:
      return floordiv(num, a);
    case RoundingMode::Ceil:
      return floordiv(num + a - 1, a);
    case RoundingMode::NearestHalfUp:
      return floordiv(2 * num + a, 2 * static_cast<__int128>(a));
  }
  throw std::logic_error("exact_quotient: bad rounding mode");
}

double fp_quotient(std::int64_t i, std::int64_t d, std::int64_t a,
                   FpFormat format, QuotientOrder order) {
  if (a <= 0) throw std::invalid_argument("fp_quotient: A must be > 0");
  if (format == FpFormat::Binary32) {
    // Each conversion and operation rounds to binary32 (nearest-even on any
    // IEEE-754 platform); volatile blocks contraction into FMA.
    volatile float fi = static_cast<float>(i);
    volatile float fd = static_cast<float>(d);
    volatile float fa = static_cast<float>(a);
    if (order == QuotientOrder::MulLast) {
      volatile float q = fd / fa;
      volatile float r = fi * q;
      return static_cast<double>(r);
    }
    volatile float p = fi * fd;
    volatile float r = p / fa;
    return static_cast<double>(r);
  }
  double di = static_cast<double>(i);
  double dd = static_cast<double>(d);
  double da = static_cast<double>(a);
  return order == QuotientOrder::MulLast ? di * (dd / da) : (di * dd) / da;
}

std::int64_t float_compensate(std::int64_t i, std::int64_t d, std::int64_t a,
                              FpFormat format, RoundingMode rounding,
                              QuotientOrder order) {
  double q = fp_quotient(i, d, a, format, order);
  switch (rounding) {
    case RoundingMode::Floor:
      return static_cast<std::int64_t>(std::floor(q));
    case RoundingMode::Ceil:
      return static_cast<std::int64_t>(std::ceil(q));
    case RoundingMode::NearestHalfUp:
      return static_cast<std::int64_t>(std::floor(q + 0.5));
  }
  throw std::logic_error("float_compensate: bad rounding mode");
}

}  // namespace skewcomp
