#include "towel/box.hpp"

#include <ostream>

namespace towel {

namespace {

void require_same_dimension(const Box& x, const Box& y)
{
    if (x.dimension() != y.dimension()) {
        throw ArgumentError("box dimension mismatch");
    }
}

} // namespace

Box Box::point(std::span<const double> p)
{
    std::vector<Interval> coords;
    coords.reserve(p.size());
    for (double v : p) {
        coords.emplace_back(v);
    }
    return Box(std::move(coords));
}

Box Box::unit_cube(std::size_t dimension)
{
    return Box(dimension, Interval(-1.0, 1.0));
}

std::vector<double> Box::midpoint() const
{
    std::vector<double> m;
    m.reserve(coords_.size());
    for (const auto& c : coords_) {
        m.push_back(c.mid());
    }
    return m;
}

bool Box::contains(std::span<const double> p) const
{
    if (p.size() != coords_.size()) {
        throw ArgumentError("point dimension mismatch");
    }
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (!coords_[i].contains(p[i])) {
            return false;
        }
    }
    return true;
}

bool Box::subset_of(const Box& other) const
{
    require_same_dimension(*this, other);
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (!coords_[i].subset_of(other.coords_[i])) {
            return false;
        }
    }
    return true;
}

bool Box::is_disjoint(const Box& other) const
{
    require_same_dimension(*this, other);
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (towel::is_disjoint(coords_[i], other.coords_[i])) {
            return true;
        }
    }
    return false;
}

Box operator+(const Box& x, const Box& y)
{
    require_same_dimension(x, y);
    Box out(x.dimension());
    for (std::size_t i = 0; i < x.dimension(); ++i) {
        out[i] = x[i] + y[i];
    }
    return out;
}

Box operator-(const Box& x, const Box& y)
{
    require_same_dimension(x, y);
    Box out(x.dimension());
    for (std::size_t i = 0; i < x.dimension(); ++i) {
        out[i] = x[i] - y[i];
    }
    return out;
}

Box hull(const Box& x, const Box& y)
{
    require_same_dimension(x, y);
    Box out(x.dimension());
    for (std::size_t i = 0; i < x.dimension(); ++i) {
        out[i] = hull(x[i], y[i]);
    }
    return out;
}

std::optional<Box> intersect(const Box& x, const Box& y)
{
    require_same_dimension(x, y);
    Box out(x.dimension());
    for (std::size_t i = 0; i < x.dimension(); ++i) {
        auto c = intersect(x[i], y[i]);
        if (!c) {
            return std::nullopt;
        }
        out[i] = *c;
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Box& x)
{
    os << '(';
    for (std::size_t i = 0; i < x.dimension(); ++i) {
        os << (i ? ", " : "") << x[i];
    }
    return os << ')';
}

BoxGrid::BoxGrid(const Box& box, std::span<const std::size_t> counts)
    : counts_(counts.begin(), counts.end())
{
    if (counts_.size() != box.dimension()) {
        throw ArgumentError("grid needs one count per box dimension");
    }
    size_ = 1;
    pieces_.reserve(counts_.size());
    for (std::size_t d = 0; d < counts_.size(); ++d) {
        if (counts_[d] == 0) {
            throw ArgumentError("grid counts must be positive");
        }
        pieces_.push_back(split(box[d], counts_[d]));
        size_ *= counts_[d];
    }
}

std::vector<std::size_t> BoxGrid::unravel(std::size_t index) const
{
    std::vector<std::size_t> idx(counts_.size());
    for (std::size_t d = counts_.size(); d-- > 0;) {
        idx[d] = index % counts_[d];
        index /= counts_[d];
    }
    return idx;
}

Box BoxGrid::operator[](std::size_t index) const
{
    if (index >= size_) {
        throw ArgumentError("grid index out of range");
    }
    const auto idx = unravel(index);
    Box out(counts_.size());
    for (std::size_t d = 0; d < counts_.size(); ++d) {
        out[d] = pieces_[d][idx[d]];
    }
    return out;
}

} // namespace towel
