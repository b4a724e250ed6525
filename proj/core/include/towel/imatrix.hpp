#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <vector>

#include "towel/box.hpp"
#include "towel/interval.hpp"

namespace towel {

// Dense row-major interval matrix. Only small sizes (n <= 3) appear here, so
// storage is a flat vector and all products are naive triple loops.
class IMatrix {
public:
    IMatrix() = default;
    IMatrix(std::size_t rows, std::size_t cols, const Interval& fill = Interval(0.0));
    // Throws ArgumentError on ragged rows.
    IMatrix(std::initializer_list<std::initializer_list<Interval>> rows);

    static IMatrix identity(std::size_t n);
    static IMatrix diagonal(std::span<const Interval> diag);

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }

    Interval& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    [[nodiscard]] const Interval& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    [[nodiscard]] IMatrix transpose() const;
    [[nodiscard]] IMatrix block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const;
    // Entrywise midpoints as a degenerate matrix.
    [[nodiscard]] IMatrix midpoint() const;
    [[nodiscard]] bool contains(const IMatrix& other) const;

    friend bool operator==(const IMatrix&, const IMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Interval> data_;
};

// Dimension mismatches raise ArgumentError.
IMatrix operator*(const IMatrix& a, const IMatrix& b);
Box operator*(const IMatrix& a, const Box& x);
IMatrix operator+(const IMatrix& a, const IMatrix& b);
IMatrix operator-(const IMatrix& a, const IMatrix& b);

// Cofactor expansion, n in {1, 2, 3}.
Interval det(const IMatrix& a);

// Adjugate over determinant. Throws SingularityError when det(a) contains 0.
IMatrix inverse3(const IMatrix& a);

// Leading principal minors of the symmetric members of s. Off-diagonal pairs
// are intersected first (every symmetric member has s_ij == s_ji inside both
// enclosures). Returns an empty vector if no symmetric member exists.
std::vector<Interval> sylvester_minors(const IMatrix& s);

// Sufficient test: true only if every leading minor has a strictly positive
// lower bound, which makes every symmetric member positive definite. A false
// result is inconclusive.
bool is_positive_definite(const IMatrix& s);

std::ostream& operator<<(std::ostream& os, const IMatrix& a);

} // namespace towel
