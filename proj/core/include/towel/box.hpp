#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <iterator>
#include <optional>
#include <span>
#include <vector>

#include "towel/interval.hpp"

namespace towel {

// Interval vector of fixed dimension.
class Box {
public:
    Box() = default;
    explicit Box(std::size_t dimension, const Interval& fill = Interval(0.0)) : coords_(dimension, fill) {}
    explicit Box(std::vector<Interval> coords) : coords_(std::move(coords)) {}
    Box(std::initializer_list<Interval> coords) : coords_(coords) {}

    // Degenerate box at a point.
    static Box point(std::span<const double> p);
    // [-1, 1]^n, the model cube of every chart.
    static Box unit_cube(std::size_t dimension);

    [[nodiscard]] std::size_t dimension() const noexcept { return coords_.size(); }
    [[nodiscard]] const Interval& operator[](std::size_t i) const { return coords_[i]; }
    Interval& operator[](std::size_t i) { return coords_[i]; }
    [[nodiscard]] std::span<const Interval> coords() const noexcept { return coords_; }

    auto begin() const noexcept { return coords_.begin(); }
    auto end() const noexcept { return coords_.end(); }

    [[nodiscard]] std::vector<double> midpoint() const;
    [[nodiscard]] bool contains(std::span<const double> p) const;
    [[nodiscard]] bool subset_of(const Box& other) const;
    // True when at least one coordinate pair is disjoint, i.e. the boxes do not meet.
    [[nodiscard]] bool is_disjoint(const Box& other) const;

    friend bool operator==(const Box&, const Box&) = default;

private:
    std::vector<Interval> coords_;
};

Box operator+(const Box& x, const Box& y);
Box operator-(const Box& x, const Box& y);
Box hull(const Box& x, const Box& y);
std::optional<Box> intersect(const Box& x, const Box& y);

std::ostream& operator<<(std::ostream& os, const Box& x);

// Deterministic row-major subdivision of a box (last coordinate varies
// fastest). Random access so workers can claim indices independently.
class BoxGrid {
public:
    // Throws ArgumentError on a zero count or dimension mismatch.
    BoxGrid(const Box& box, std::span<const std::size_t> counts);

    [[nodiscard]] std::size_t size() const noexcept { return size_; }
    [[nodiscard]] std::span<const std::size_t> counts() const noexcept { return counts_; }
    [[nodiscard]] Box operator[](std::size_t index) const;
    // Per-dimension piece indices of a flat index.
    [[nodiscard]] std::vector<std::size_t> unravel(std::size_t index) const;

    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = Box;
        using difference_type = std::ptrdiff_t;
        using pointer = void;
        using reference = Box;

        iterator() = default;
        iterator(const BoxGrid* grid, std::size_t index) : grid_(grid), index_(index) {}
        Box operator*() const { return (*grid_)[index_]; }
        iterator& operator++()
        {
            ++index_;
            return *this;
        }
        iterator operator++(int)
        {
            auto old = *this;
            ++index_;
            return old;
        }
        friend bool operator==(const iterator& a, const iterator& b) { return a.index_ == b.index_; }

    private:
        const BoxGrid* grid_ = nullptr;
        std::size_t index_ = 0;
    };

    [[nodiscard]] iterator begin() const { return {this, 0}; }
    [[nodiscard]] iterator end() const { return {this, size_}; }

private:
    std::vector<std::size_t> counts_;
    std::vector<std::vector<Interval>> pieces_;
    std::size_t size_ = 0;
};

inline BoxGrid subdivide_box(const Box& box, std::span<const std::size_t> counts) { return BoxGrid(box, counts); }

} // namespace towel
