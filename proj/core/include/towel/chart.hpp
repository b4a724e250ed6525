#pragma once

#include "towel/box.hpp"
#include "towel/imatrix.hpp"

namespace towel {

// Affine chart p -> basis^{-1} (p - center). Its inverse, local -> world,
// is p -> center + basis * p. The stored inverse is an interval enclosure
// checked to satisfy basis * basis_inv ∋ I at construction.
class AffineChart {
public:
    // Throws SingularityError when the basis cannot be rigorously inverted.
    AffineChart(Box center, IMatrix basis);

    static AffineChart identity(std::size_t n);

    [[nodiscard]] const Box& center() const noexcept { return center_; }
    [[nodiscard]] const IMatrix& basis() const noexcept { return basis_; }
    [[nodiscard]] const IMatrix& basis_inv() const noexcept { return basis_inv_; }
    [[nodiscard]] std::size_t dimension() const noexcept { return center_.dimension(); }

    [[nodiscard]] Box world_from_local(const Box& local) const;
    [[nodiscard]] Box local_from_world(const Box& world) const;

    friend bool operator==(const AffineChart&, const AffineChart&) = default;

private:
    Box center_;
    IMatrix basis_;
    IMatrix basis_inv_;
};

} // namespace towel
