#include "towel/interval.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <ostream>
#include <string>

namespace towel {

namespace {

using boost::multiprecision::cpp_int;

struct DecimalLiteral {
    bool negative = false;
    cpp_int digits;       // all significant digits as an integer
    long exponent10 = 0;  // value = digits * 10^exponent10
};

bool is_digit(char c) { return c >= '0' && c <= '9'; }

DecimalLiteral parse_decimal(std::string_view s)
{
    DecimalLiteral out;
    std::size_t i = 0;
    auto fail = [&](const char* why) {
        throw ParseError("malformed decimal literal '" + std::string(s) + "': " + why);
    };
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        out.negative = s[i] == '-';
        ++i;
    }
    std::size_t mantissa_digits = 0;
    while (i < s.size() && is_digit(s[i])) {
        out.digits = out.digits * 10 + (s[i] - '0');
        ++i;
        ++mantissa_digits;
    }
    if (i < s.size() && s[i] == '.') {
        ++i;
        while (i < s.size() && is_digit(s[i])) {
            out.digits = out.digits * 10 + (s[i] - '0');
            --out.exponent10;
            ++i;
            ++mantissa_digits;
        }
    }
    if (mantissa_digits == 0) {
        fail("no digits");
    }
    if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        ++i;
        bool exp_negative = false;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            exp_negative = s[i] == '-';
            ++i;
        }
        long e = 0;
        std::size_t exp_digits = 0;
        while (i < s.size() && is_digit(s[i])) {
            if (e > 100000) {
                fail("exponent out of range");
            }
            e = e * 10 + (s[i] - '0');
            ++i;
            ++exp_digits;
        }
        if (exp_digits == 0) {
            fail("empty exponent");
        }
        out.exponent10 += exp_negative ? -e : e;
    }
    if (i != s.size()) {
        fail("trailing characters");
    }
    return out;
}

// Sign of (|decimal| - |d|) computed exactly. d must be finite and >= 0.
int compare_magnitude(const DecimalLiteral& lit, double d)
{
    int e2 = 0;
    const double frac = std::frexp(d, &e2);
    // d = m * 2^(e2 - 53) with integer m
    const auto m = static_cast<long long>(std::ldexp(frac, 53));
    cpp_int lhs = lit.digits;
    cpp_int rhs = m;
    const long shift2 = static_cast<long>(e2) - 53;
    if (lit.exponent10 >= 0) {
        lhs *= boost::multiprecision::pow(cpp_int(10), static_cast<unsigned>(lit.exponent10));
    } else {
        rhs *= boost::multiprecision::pow(cpp_int(10), static_cast<unsigned>(-lit.exponent10));
    }
    if (shift2 >= 0) {
        rhs <<= static_cast<unsigned>(shift2);
    } else {
        lhs <<= static_cast<unsigned>(-shift2);
    }
    return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

} // namespace

Interval::Interval(double value) : Interval(value, value) {}

Interval::Interval(double lo, double hi) : lo_(lo), hi_(hi)
{
    if (!std::isfinite(lo) || !std::isfinite(hi)) {
        throw ArgumentError("interval endpoints must be finite");
    }
    if (!(lo <= hi)) {
        throw ArgumentError("interval requires lo <= hi");
    }
}

Interval Interval::checked(double lo, double hi)
{
    if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo <= hi)) {
        throw EnclosureError("interval operation overflowed to a non-finite endpoint");
    }
    return Interval(lo, hi, Unchecked{});
}

Interval Interval::from_decimal(std::string_view literal)
{
    const DecimalLiteral lit = parse_decimal(literal);
    if (lit.digits == 0) {
        return Interval(0.0);
    }
    errno = 0;
    const std::string text(literal);
    const double nearest = std::strtod(text.c_str(), nullptr);
    if (!std::isfinite(nearest) || errno == ERANGE) {
        throw ParseError("decimal literal '" + text + "' is outside the double range");
    }
    const double magnitude = std::fabs(nearest);
    const int cmp = compare_magnitude(lit, magnitude);
    double lo_mag = magnitude;
    double hi_mag = magnitude;
    if (cmp < 0) {
        lo_mag = rounding::detail::down(magnitude);
    } else if (cmp > 0) {
        hi_mag = rounding::detail::up(magnitude);
    }
    if (!std::isfinite(hi_mag)) {
        throw ParseError("decimal literal '" + text + "' is outside the double range");
    }
    return lit.negative ? Interval(-hi_mag, -lo_mag) : Interval(lo_mag, hi_mag);
}

double Interval::mid() const noexcept
{
    const double m = 0.5 * lo_ + 0.5 * hi_;
    return std::clamp(m, lo_, hi_);
}

Interval& Interval::operator+=(const Interval& rhs) { return *this = *this + rhs; }
Interval& Interval::operator-=(const Interval& rhs) { return *this = *this - rhs; }
Interval& Interval::operator*=(const Interval& rhs) { return *this = *this * rhs; }

Interval operator+(const Interval& x, const Interval& y)
{
    using R = Interval::Rounding;
    return Interval::checked(R::add_down(x.lo_, y.lo_), R::add_up(x.hi_, y.hi_));
}

Interval operator-(const Interval& x, const Interval& y)
{
    using R = Interval::Rounding;
    return Interval::checked(R::sub_down(x.lo_, y.hi_), R::sub_up(x.hi_, y.lo_));
}

Interval operator*(const Interval& x, const Interval& y)
{
    using R = Interval::Rounding;
    const double a = x.lo_, b = x.hi_, c = y.lo_, d = y.hi_;
    if (a >= 0.0 && c >= 0.0) {
        return Interval::checked(R::mul_down(a, c), R::mul_up(b, d));
    }
    if (b <= 0.0 && d <= 0.0) {
        return Interval::checked(R::mul_down(b, d), R::mul_up(a, c));
    }
    const double lo = std::min({R::mul_down(a, c), R::mul_down(a, d), R::mul_down(b, c), R::mul_down(b, d)});
    const double hi = std::max({R::mul_up(a, c), R::mul_up(a, d), R::mul_up(b, c), R::mul_up(b, d)});
    return Interval::checked(lo, hi);
}

Interval operator/(const Interval& x, const Interval& y)
{
    using R = Interval::Rounding;
    if (y.contains_zero()) {
        throw ArgumentError("interval division by an interval containing zero");
    }
    const double a = x.lo_, b = x.hi_, c = y.lo_, d = y.hi_;
    const double lo = std::min({R::div_down(a, c), R::div_down(a, d), R::div_down(b, c), R::div_down(b, d)});
    const double hi = std::max({R::div_up(a, c), R::div_up(a, d), R::div_up(b, c), R::div_up(b, d)});
    return Interval::checked(lo, hi);
}

Interval operator-(const Interval& x) noexcept
{
    return Interval(-x.hi_, -x.lo_, Interval::Unchecked{});
}

Interval sqr(const Interval& x)
{
    using R = Interval::Rounding;
    if (x.lo_ >= 0.0) {
        return Interval::checked(R::mul_down(x.lo_, x.lo_), R::mul_up(x.hi_, x.hi_));
    }
    if (x.hi_ <= 0.0) {
        return Interval::checked(R::mul_down(x.hi_, x.hi_), R::mul_up(x.lo_, x.lo_));
    }
    return Interval::checked(0.0, std::max(R::mul_up(x.lo_, x.lo_), R::mul_up(x.hi_, x.hi_)));
}

Interval hull(const Interval& x, const Interval& y) noexcept
{
    return Interval(std::min(x.lo_, y.lo_), std::max(x.hi_, y.hi_), Interval::Unchecked{});
}

std::optional<Interval> intersect(const Interval& x, const Interval& y) noexcept
{
    const double lo = std::max(x.lo_, y.lo_);
    const double hi = std::min(x.hi_, y.hi_);
    if (lo > hi) {
        return std::nullopt;
    }
    return Interval(lo, hi, Interval::Unchecked{});
}

double mig(const Interval& x) noexcept
{
    if (x.contains_zero()) {
        return 0.0;
    }
    return std::min(std::fabs(x.lo()), std::fabs(x.hi()));
}

double mag(const Interval& x) noexcept
{
    return std::max(std::fabs(x.lo()), std::fabs(x.hi()));
}

std::vector<Interval> split(const Interval& x, std::size_t k)
{
    if (k == 0) {
        throw ArgumentError("split requires at least one piece");
    }
    std::vector<Interval> pieces;
    pieces.reserve(k);
    double left = x.lo();
    for (std::size_t i = 1; i <= k; ++i) {
        double right = x.hi();
        if (i < k) {
            const double t = static_cast<double>(i) / static_cast<double>(k);
            // Interior cut points only need to be monotone; coverage comes from
            // the shared endpoints.
            right = std::clamp(std::fma(t, x.hi(), std::fma(-t, x.lo(), x.lo())), left, x.hi());
        }
        pieces.emplace_back(left, right);
        left = right;
    }
    return pieces;
}

std::ostream& operator<<(std::ostream& os, const Interval& x)
{
    return os << '[' << x.lo() << ", " << x.hi() << ']';
}

} // namespace towel
