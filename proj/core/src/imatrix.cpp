#include "towel/imatrix.hpp"

#include <ostream>

namespace towel {

IMatrix::IMatrix(std::size_t rows, std::size_t cols, const Interval& fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill)
{
}

IMatrix::IMatrix(std::initializer_list<std::initializer_list<Interval>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0)
{
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) {
            throw ArgumentError("ragged matrix rows");
        }
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

IMatrix IMatrix::identity(std::size_t n)
{
    IMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = Interval(1.0);
    }
    return m;
}

IMatrix IMatrix::diagonal(std::span<const Interval> diag)
{
    IMatrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) {
        m(i, i) = diag[i];
    }
    return m;
}

IMatrix IMatrix::transpose() const
{
    IMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            t(c, r) = (*this)(r, c);
        }
    }
    return t;
}

IMatrix IMatrix::block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const
{
    if (row0 + nrows > rows_ || col0 + ncols > cols_) {
        throw ArgumentError("matrix block out of range");
    }
    IMatrix b(nrows, ncols);
    for (std::size_t r = 0; r < nrows; ++r) {
        for (std::size_t c = 0; c < ncols; ++c) {
            b(r, c) = (*this)(row0 + r, col0 + c);
        }
    }
    return b;
}

IMatrix IMatrix::midpoint() const
{
    IMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) {
        m.data_[i] = Interval(data_[i].mid());
    }
    return m;
}

bool IMatrix::contains(const IMatrix& other) const
{
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        return false;
    }
    for (std::size_t i = 0; i < data_.size(); ++i) {
        if (!other.data_[i].subset_of(data_[i])) {
            return false;
        }
    }
    return true;
}

IMatrix operator*(const IMatrix& a, const IMatrix& b)
{
    if (a.cols() != b.rows()) {
        throw ArgumentError("matrix product dimension mismatch");
    }
    IMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < b.cols(); ++c) {
            Interval acc(0.0);
            for (std::size_t k = 0; k < a.cols(); ++k) {
                acc += a(r, k) * b(k, c);
            }
            out(r, c) = acc;
        }
    }
    return out;
}

Box operator*(const IMatrix& a, const Box& x)
{
    if (a.cols() != x.dimension()) {
        throw ArgumentError("matrix-vector dimension mismatch");
    }
    Box out(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        Interval acc(0.0);
        for (std::size_t k = 0; k < a.cols(); ++k) {
            acc += a(r, k) * x[k];
        }
        out[r] = acc;
    }
    return out;
}

IMatrix operator+(const IMatrix& a, const IMatrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ArgumentError("matrix sum dimension mismatch");
    }
    IMatrix out(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            out(r, c) = a(r, c) + b(r, c);
        }
    }
    return out;
}

IMatrix operator-(const IMatrix& a, const IMatrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ArgumentError("matrix difference dimension mismatch");
    }
    IMatrix out(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            out(r, c) = a(r, c) - b(r, c);
        }
    }
    return out;
}

namespace {

Interval det2(const Interval& a, const Interval& b, const Interval& c, const Interval& d)
{
    return a * d - b * c;
}

} // namespace

Interval det(const IMatrix& a)
{
    if (!a.is_square()) {
        throw ArgumentError("determinant of a non-square matrix");
    }
    switch (a.rows()) {
    case 1:
        return a(0, 0);
    case 2:
        return det2(a(0, 0), a(0, 1), a(1, 0), a(1, 1));
    case 3:
        return a(0, 0) * det2(a(1, 1), a(1, 2), a(2, 1), a(2, 2))
             - a(0, 1) * det2(a(1, 0), a(1, 2), a(2, 0), a(2, 2))
             + a(0, 2) * det2(a(1, 0), a(1, 1), a(2, 0), a(2, 1));
    default:
        throw ArgumentError("determinant supports n in {1, 2, 3}");
    }
}

IMatrix inverse3(const IMatrix& a)
{
    if (a.rows() != 3 || a.cols() != 3) {
        throw ArgumentError("inverse3 expects a 3x3 matrix");
    }
    const Interval d = det(a);
    if (d.contains_zero()) {
        throw SingularityError("matrix determinant encloses zero");
    }
    // inv(i, j) = cofactor(j, i) / det
    auto minor = [&](std::size_t r, std::size_t c) {
        std::size_t rs[2], cs[2];
        for (std::size_t i = 0, k = 0; i < 3; ++i) {
            if (i != r) {
                rs[k++] = i;
            }
        }
        for (std::size_t j = 0, k = 0; j < 3; ++j) {
            if (j != c) {
                cs[k++] = j;
            }
        }
        return det2(a(rs[0], cs[0]), a(rs[0], cs[1]), a(rs[1], cs[0]), a(rs[1], cs[1]));
    };
    IMatrix inv(3, 3);
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            Interval cof = minor(j, i);
            if ((i + j) % 2 == 1) {
                cof = -cof;
            }
            inv(i, j) = cof / d;
        }
    }
    return inv;
}

std::vector<Interval> sylvester_minors(const IMatrix& s)
{
    if (!s.is_square() || s.rows() == 0 || s.rows() > 3) {
        throw ArgumentError("Sylvester test supports square matrices with n in {1, 2, 3}");
    }
    const std::size_t n = s.rows();
    IMatrix t(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        t(i, i) = s(i, i);
        for (std::size_t j = i + 1; j < n; ++j) {
            auto common = intersect(s(i, j), s(j, i));
            if (!common) {
                return {};
            }
            t(i, j) = *common;
            t(j, i) = *common;
        }
    }
    std::vector<Interval> minors;
    minors.push_back(t(0, 0));
    if (n >= 2) {
        minors.push_back(t(0, 0) * t(1, 1) - sqr(t(0, 1)));
    }
    if (n == 3) {
        // Symmetric expansion keeps each squared off-diagonal term tight.
        const Interval two_cross = Interval(2.0) * (t(0, 1) * t(1, 2) * t(0, 2));
        minors.push_back(t(0, 0) * t(1, 1) * t(2, 2) + two_cross - t(0, 0) * sqr(t(1, 2))
                         - t(1, 1) * sqr(t(0, 2)) - t(2, 2) * sqr(t(0, 1)));
    }
    return minors;
}

bool is_positive_definite(const IMatrix& s)
{
    const auto minors = sylvester_minors(s);
    if (minors.empty()) {
        return false;
    }
    for (const auto& m : minors) {
        if (!(m.lo() > 0.0)) {
            return false;
        }
    }
    return true;
}

std::ostream& operator<<(std::ostream& os, const IMatrix& a)
{
    os << '[';
    for (std::size_t r = 0; r < a.rows(); ++r) {
        os << (r ? "; " : "");
        for (std::size_t c = 0; c < a.cols(); ++c) {
            os << (c ? ", " : "") << a(r, c);
        }
    }
    return os << ']';
}

} // namespace towel
