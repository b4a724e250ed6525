#pragma once

// Directed rounding primitives. Two interchangeable policies are provided:
//
//  - NextafterRounding computes in round-to-nearest and recovers the exact
//    rounding error with error-free transformations (TwoSum, fma). The result
//    is moved one ulp outward only when the operation was inexact, so exact
//    results stay tight. No floating-point environment state is touched.
//
//  - HardwareRounding switches the FPU rounding mode around each operation and
//    restores it afterwards. Its translation unit is compiled with
//    -frounding-math.
//
// The policy used by Interval is selected at configure time
// (TOWEL_HARDWARE_ROUNDING).

#include <cmath>
#include <limits>

namespace towel::rounding {

struct NextafterRounding {
    static double add_down(double a, double b) noexcept;
    static double add_up(double a, double b) noexcept;
    static double sub_down(double a, double b) noexcept { return add_down(a, -b); }
    static double sub_up(double a, double b) noexcept { return add_up(a, -b); }
    static double mul_down(double a, double b) noexcept;
    static double mul_up(double a, double b) noexcept;
    static double div_down(double a, double b) noexcept;
    static double div_up(double a, double b) noexcept;
};

struct HardwareRounding {
    static double add_down(double a, double b) noexcept;
    static double add_up(double a, double b) noexcept;
    static double sub_down(double a, double b) noexcept;
    static double sub_up(double a, double b) noexcept;
    static double mul_down(double a, double b) noexcept;
    static double mul_up(double a, double b) noexcept;
    static double div_down(double a, double b) noexcept;
    static double div_up(double a, double b) noexcept;
};

#if defined(TOWEL_HARDWARE_ROUNDING) && TOWEL_HARDWARE_ROUNDING
using Default = HardwareRounding;
#else
using Default = NextafterRounding;
#endif

namespace detail {

inline double down(double x) noexcept { return std::nextafter(x, -std::numeric_limits<double>::infinity()); }
inline double up(double x) noexcept { return std::nextafter(x, std::numeric_limits<double>::infinity()); }

// Below this magnitude fma-based error terms may themselves be rounded
// (gradual underflow), so results are widened unconditionally.
inline constexpr double kExactErrorFloor = 0x1p-960;

// Exact rounding error of a + b, valid for finite a + b under round-to-nearest.
inline double two_sum_error(double a, double b, double s) noexcept
{
    const double bb = s - a;
    return (a - (s - bb)) + (b - bb);
}

} // namespace detail

inline double NextafterRounding::add_down(double a, double b) noexcept
{
    const double s = a + b;
    if (!std::isfinite(s)) {
        return s;
    }
    return detail::two_sum_error(a, b, s) < 0.0 ? detail::down(s) : s;
}

inline double NextafterRounding::add_up(double a, double b) noexcept
{
    const double s = a + b;
    if (!std::isfinite(s)) {
        return s;
    }
    return detail::two_sum_error(a, b, s) > 0.0 ? detail::up(s) : s;
}

inline double NextafterRounding::mul_down(double a, double b) noexcept
{
    const double p = a * b;
    if (!std::isfinite(p)) {
        return p;
    }
    if (a == 0.0 || b == 0.0) {
        return 0.0;
    }
    if (std::fabs(p) < detail::kExactErrorFloor) {
        return detail::down(p);
    }
    return std::fma(a, b, -p) < 0.0 ? detail::down(p) : p;
}

inline double NextafterRounding::mul_up(double a, double b) noexcept
{
    const double p = a * b;
    if (!std::isfinite(p)) {
        return p;
    }
    if (a == 0.0 || b == 0.0) {
        return 0.0;
    }
    if (std::fabs(p) < detail::kExactErrorFloor) {
        return detail::up(p);
    }
    return std::fma(a, b, -p) > 0.0 ? detail::up(p) : p;
}

inline double NextafterRounding::div_down(double a, double b) noexcept
{
    const double q = a / b;
    if (!std::isfinite(q)) {
        return q;
    }
    if (a == 0.0) {
        return 0.0;
    }
    if (std::fabs(q) < detail::kExactErrorFloor || std::fabs(a) < detail::kExactErrorFloor) {
        return detail::down(q);
    }
    // a - q*b is exact; the true quotient is q + r/b.
    const double r = std::fma(-q, b, a);
    const bool below = (r < 0.0) != (b < 0.0) && r != 0.0;
    return below ? detail::down(q) : q;
}

inline double NextafterRounding::div_up(double a, double b) noexcept
{
    const double q = a / b;
    if (!std::isfinite(q)) {
        return q;
    }
    if (a == 0.0) {
        return 0.0;
    }
    if (std::fabs(q) < detail::kExactErrorFloor || std::fabs(a) < detail::kExactErrorFloor) {
        return detail::up(q);
    }
    const double r = std::fma(-q, b, a);
    const bool above = (r > 0.0) != (b < 0.0) && r != 0.0;
    return above ? detail::up(q) : q;
}

} // namespace towel::rounding
