#pragma once

#include <cstdint>

#include "skewcomp/compensator.hpp"

namespace skewcomp {

enum class RoundingMode { Floor, NearestHalfUp, Ceil };

/// Expression tree for the floating-point quotient i*D/A.
/// MulLast computes i * (D / A); DivLast computes (i * D) / A.
enum class QuotientOrder { MulLast, DivLast };

/// i*D/A rounded to an integer in exact arithmetic (128-bit intermediates).
/// NearestHalfUp is floor((2*i*D + A) / (2*A)). Requires a > 0, i >= 0.
std::int64_t exact_quotient(std::int64_t i, std::int64_t d, std::int64_t a,
                            RoundingMode rounding);

/// i*D/A with every operand converted to the format and every operation
/// rounded in it (round-to-nearest-even), returned widened to double.
double fp_quotient(std::int64_t i, std::int64_t d, std::int64_t a,
                   FpFormat format, QuotientOrder order = QuotientOrder::MulLast);

/// The floating-point baseline compensator: fp_quotient followed by an
/// integer rounding. This is the scheme whose precision loss the exact
/// algorithm removes.
std::int64_t float_compensate(std::int64_t i, std::int64_t d, std::int64_t a,
                              FpFormat format, RoundingMode rounding,
                              QuotientOrder order = QuotientOrder::MulLast);

}  // namespace skewcomp
