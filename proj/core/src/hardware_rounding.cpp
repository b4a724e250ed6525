// Compiled with -frounding-math so the optimizer keeps each operation inside
// the rounding mode that was active when it executed.
#include "towel/rounding.hpp"

#include <cfenv>

namespace towel::rounding {

namespace {

class ModeGuard {
public:
    explicit ModeGuard(int mode) noexcept : saved_(std::fegetround()) { std::fesetround(mode); }
    ~ModeGuard() { std::fesetround(saved_); }
    ModeGuard(const ModeGuard&) = delete;
    ModeGuard& operator=(const ModeGuard&) = delete;

private:
    int saved_;
};

template <typename Op>
double with_mode(int mode, Op op) noexcept
{
    const ModeGuard guard(mode);
    volatile double r = op();
    return r;
}

} // namespace

double HardwareRounding::add_down(double a, double b) noexcept
{
    return with_mode(FE_DOWNWARD, [&] { return a + b; });
}
double HardwareRounding::add_up(double a, double b) noexcept
{
    return with_mode(FE_UPWARD, [&] { return a + b; });
}
double HardwareRounding::sub_down(double a, double b) noexcept
{
    return with_mode(FE_DOWNWARD, [&] { return a - b; });
}
double HardwareRounding::sub_up(double a, double b) noexcept
{
    return with_mode(FE_UPWARD, [&] { return a - b; });
}
double HardwareRounding::mul_down(double a, double b) noexcept
{
    return with_mode(FE_DOWNWARD, [&] { return a * b; });
}
double HardwareRounding::mul_up(double a, double b) noexcept
{
    return with_mode(FE_UPWARD, [&] { return a * b; });
}
double HardwareRounding::div_down(double a, double b) noexcept
{
    return with_mode(FE_DOWNWARD, [&] { return a / b; });
}
double HardwareRounding::div_up(double a, double b) noexcept
{
    return with_mode(FE_UPWARD, [&] { return a / b; });
}

} // namespace towel::rounding
