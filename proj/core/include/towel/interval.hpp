#pragma once

#include <algorithm>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

#include "towel/errors.hpp"
#include "towel/rounding.hpp"

namespace towel {

// Closed interval [lo, hi] of doubles with finite endpoints. Every arithmetic
// operation rounds outward, so the result contains the exact real image of the
// operands. Empty sets are never Interval values; operations that may produce
// one (intersect) return std::optional.
class Interval {
public:
    using Rounding = rounding::Default;

    constexpr Interval() noexcept = default;

    // Degenerate interval. Throws ArgumentError for a non-finite value.
    Interval(double value); // NOLINT(google-explicit-constructor)

    // Throws ArgumentError unless lo <= hi and both are finite.
    Interval(double lo, double hi);

    // Tightest enclosure of a decimal literal such as "1.76" or "-2.5e-3".
    // The result is degenerate when the literal is a dyadic double and one ulp
    // wide otherwise. Throws ParseError on malformed input.
    static Interval from_decimal(std::string_view literal);

    [[nodiscard]] double lo() const noexcept { return lo_; }
    [[nodiscard]] double hi() const noexcept { return hi_; }

    // Round-to-nearest midpoint; always lies in [lo, hi].
    [[nodiscard]] double mid() const noexcept;
    // Upper bound on hi - lo.
    [[nodiscard]] double width() const noexcept { return Rounding::sub_up(hi_, lo_); }
    [[nodiscard]] bool is_degenerate() const noexcept { return lo_ == hi_; }

    [[nodiscard]] bool contains(double x) const noexcept { return lo_ <= x && x <= hi_; }
    [[nodiscard]] bool contains_zero() const noexcept { return lo_ <= 0.0 && 0.0 <= hi_; }
    [[nodiscard]] bool subset_of(const Interval& other) const noexcept
    {
        return other.lo_ <= lo_ && hi_ <= other.hi_;
    }
    // Strictly inside, with no shared endpoint.
    [[nodiscard]] bool interior_subset_of(const Interval& other) const noexcept
    {
        return other.lo_ < lo_ && hi_ < other.hi_;
    }

    Interval& operator+=(const Interval& rhs);
    Interval& operator-=(const Interval& rhs);
    Interval& operator*=(const Interval& rhs);

    // Endpoint identity, not set-theoretic comparison.
    friend bool operator==(const Interval&, const Interval&) = default;

private:
    struct Unchecked {};
    constexpr Interval(double lo, double hi, Unchecked) noexcept : lo_(lo), hi_(hi) {}

    // Wraps a computed result, raising EnclosureError on overflow or NaN.
    static Interval checked(double lo, double hi);

    friend Interval operator+(const Interval&, const Interval&);
    friend Interval operator-(const Interval&, const Interval&);
    friend Interval operator*(const Interval&, const Interval&);
    friend Interval operator/(const Interval&, const Interval&);
    friend Interval operator-(const Interval&) noexcept;
    friend Interval sqr(const Interval&);
    friend Interval hull(const Interval&, const Interval&) noexcept;
    friend std::optional<Interval> intersect(const Interval&, const Interval&) noexcept;

    double lo_ = 0.0;
    double hi_ = 0.0;
};

Interval operator+(const Interval& x, const Interval& y);
Interval operator-(const Interval& x, const Interval& y);
Interval operator*(const Interval& x, const Interval& y);
// Throws ArgumentError when the divisor contains zero.
Interval operator/(const Interval& x, const Interval& y);
Interval operator-(const Interval& x) noexcept;

// x*x with dependency taken into account: sqr([-2,1]) == [0,4].
Interval sqr(const Interval& x);

inline Interval scalar_mul(double s, const Interval& x) { return Interval(s) * x; }

Interval hull(const Interval& x, const Interval& y) noexcept;
std::optional<Interval> intersect(const Interval& x, const Interval& y) noexcept;
inline bool is_disjoint(const Interval& x, const Interval& y) noexcept
{
    return x.hi() < y.lo() || y.hi() < x.lo();
}

// Smallest and largest absolute value over the interval. Both are exact.
double mig(const Interval& x) noexcept;
double mag(const Interval& x) noexcept;

// k pieces covering x: the first starts at x.lo, the last ends at x.hi and
// consecutive pieces share an endpoint. Throws ArgumentError when k == 0.
std::vector<Interval> split(const Interval& x, std::size_t k);

std::ostream& operator<<(std::ostream& os, const Interval& x);

} // namespace towel
