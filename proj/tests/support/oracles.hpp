#pragma once

// Independent reference computations for the test suites. Nothing here calls
// into the interval kernel's arithmetic: values are computed exactly with GMP
// rationals, in 50-digit binary floating point, or with Eigen's symmetric
// eigensolver.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstddef>
#include <random>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/gmp.hpp>

#include "towel/box.hpp"
#include "towel/imatrix.hpp"
#include "towel/interval.hpp"

namespace towel::testing {

using Rational = boost::multiprecision::mpq_rational;
using BigFloat = boost::multiprecision::cpp_bin_float_50;

inline Rational exact(double d) { return Rational(d); }

inline bool contains_exact(const Interval& x, const Rational& v)
{
    return exact(x.lo()) <= v && v <= exact(x.hi());
}

using RationalPoint = std::array<Rational, 3>;

// H(x, y, z) = (44/25 - y^2 - z/10, x, y) evaluated exactly.
inline RationalPoint henon_exact(const RationalPoint& p)
{
    static const Rational a(44, 25);
    static const Rational b(1, 10);
    return {a - p[1] * p[1] - b * p[2], p[0], p[1]};
}

using RationalMatrix = std::array<std::array<Rational, 3>, 3>;

inline RationalMatrix multiply(const RationalMatrix& x, const RationalMatrix& y)
{
    RationalMatrix r;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            r[i][j] = 0;
            for (int k = 0; k < 3; ++k) {
                r[i][j] += x[i][k] * y[k][j];
            }
        }
    }
    return r;
}

// D(H^k)(p) = DH(p_{k-1}) ... DH(p_0), exact.
inline RationalMatrix henon_jacobian_exact(RationalPoint p, std::size_t k)
{
    RationalMatrix acc{};
    for (int i = 0; i < 3; ++i) {
        acc[i][i] = 1;
    }
    for (std::size_t step = 0; step < k; ++step) {
        RationalMatrix d{};
        d[0][1] = -2 * p[1];
        d[0][2] = Rational(-1, 10);
        d[1][0] = 1;
        d[2][1] = 1;
        acc = multiply(d, acc);
        p = henon_exact(p);
    }
    return acc;
}

// Positive root of x^2 + 1.1 x - 1.76 = 0, i.e. the fixed point x = y = z of H.
inline BigFloat henon_fixed_point()
{
    const BigFloat b = BigFloat(11) / 10;
    const BigFloat c = BigFloat(176) / 100;
    return (-b + boost::multiprecision::sqrt(b * b + 4 * c)) / 2;
}

inline Eigen::Matrix3d to_eigen(const IMatrix& m)
{
    Eigen::Matrix3d e;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            e(i, j) = m(i, j).mid();
        }
    }
    return e;
}

inline double min_eigenvalue(const Eigen::Matrix3d& symmetric)
{
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> solver(symmetric, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

// Integer cofactor determinant.
inline long long det_exact(const std::array<std::array<long long, 3>, 3>& m)
{
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
         + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

// ---- random generators ----------------------------------------------------

class Generator {
public:
    explicit Generator(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    long long integer(long long lo, long long hi) { return std::uniform_int_distribution<long long>(lo, hi)(rng_); }

    // Mix of magnitudes and signs, including exact zero endpoints.
    Interval interval(double scale = 10.0)
    {
        const int kind = static_cast<int>(integer(0, 9));
        if (kind == 0) {
            const double v = uniform(-scale, scale);
            return Interval(v);
        }
        const double mag = kind < 5 ? scale : scale * std::pow(10.0, -static_cast<double>(integer(1, 12)));
        double a = uniform(-mag, mag);
        double b = uniform(-mag, mag);
        if (kind == 9) {
            a = 0.0;
        }
        return Interval(std::min(a, b), std::max(a, b));
    }

    double member(const Interval& x)
    {
        switch (integer(0, 5)) {
        case 0:
            return x.lo();
        case 1:
            return x.hi();
        default:
            return std::clamp(uniform(x.lo(), x.hi()), x.lo(), x.hi());
        }
    }

    // Random sub-interval of x.
    Interval inner(const Interval& x)
    {
        double a = member(x);
        double b = member(x);
        return Interval(std::min(a, b), std::max(a, b));
    }

    Box box(const Box& within)
    {
        Box out(within.dimension());
        for (std::size_t i = 0; i < within.dimension(); ++i) {
            out[i] = inner(within[i]);
        }
        return out;
    }

    std::vector<double> point(const Box& x)
    {
        std::vector<double> p;
        for (const auto& c : x) {
            p.push_back(member(c));
        }
        return p;
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

} // namespace towel::testing
