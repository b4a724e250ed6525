#include "towel/chart.hpp"

namespace towel {

AffineChart::AffineChart(Box center, IMatrix basis)
    : center_(std::move(center)), basis_(std::move(basis))
{
    if (center_.dimension() != 3 || basis_.rows() != 3 || basis_.cols() != 3) {
        throw ArgumentError("affine charts are three-dimensional");
    }
    basis_inv_ = inverse3(basis_);
    if (!(basis_ * basis_inv_).contains(IMatrix::identity(3))) {
        throw SingularityError("chart inverse failed the identity containment check");
    }
}

AffineChart AffineChart::identity(std::size_t n)
{
    return AffineChart(Box(n, Interval(0.0)), IMatrix::identity(n));
}

Box AffineChart::world_from_local(const Box& local) const
{
    return center_ + basis_ * local;
}

Box AffineChart::local_from_world(const Box& world) const
{
    return basis_inv_ * (world - center_);
}

} // namespace towel
