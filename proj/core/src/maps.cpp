#include "towel/maps.hpp"

#include <cmath>
#include <sstream>

namespace towel {

HenonParams HenonParams::from_decimals(std::string_view a, std::string_view b)
{
    HenonParams p;
    p.a = Interval::from_decimal(a);
    p.b = Interval::from_decimal(b);
    p.a_literal = std::string(a);
    p.b_literal = std::string(b);
    return p;
}

Box HenonMap::image(const Box& box) const
{
    if (box.dimension() != 3) {
        throw ArgumentError("Henon map acts on R^3");
    }
    const Interval& x = box[0];
    const Interval& y = box[1];
    const Interval& z = box[2];
    return Box{params_.a - sqr(y) - params_.b * z, x, y};
}

IMatrix HenonMap::derivative(const Box& box) const
{
    if (box.dimension() != 3) {
        throw ArgumentError("Henon map acts on R^3");
    }
    const Interval zero(0.0);
    const Interval one(1.0);
    return IMatrix{
        {zero, Interval(-2.0) * box[1], -params_.b},
        {one, zero, zero},
        {zero, one, zero},
    };
}

std::string HenonMap::describe() const
{
    return "henon(a=" + params_.a_literal + ", b=" + params_.b_literal + ")";
}

LinearMap::LinearMap(IMatrix matrix) : matrix_(std::move(matrix))
{
    if (!matrix_.is_square()) {
        throw ArgumentError("linear map needs a square matrix");
    }
}

std::string LinearMap::describe() const
{
    std::ostringstream os;
    os << "linear" << matrix_;
    return os.str();
}

std::string_view to_string(EnclosureForm form) noexcept
{
    switch (form) {
    case EnclosureForm::Naive:
        return "naive";
    case EnclosureForm::MeanValue:
        return "mean-value";
    }
    return "unknown";
}

EnclosureForm parse_enclosure_form(std::string_view text)
{
    if (text == "naive") {
        return EnclosureForm::Naive;
    }
    if (text == "mean-value") {
        return EnclosureForm::MeanValue;
    }
    throw ParseError("unknown enclosure form '" + std::string(text) + "'");
}

IteratedMap::IteratedMap(std::shared_ptr<const BaseMap> base, std::size_t k, std::optional<AffineChart> pre,
                         std::optional<AffineChart> post)
    : base_(std::move(base)), k_(k), pre_(std::move(pre)), post_(std::move(post))
{
    if (!base_) {
        throw ArgumentError("iterated map needs a base map");
    }
    if (k_ == 0) {
        throw ArgumentError("iterate count must be at least 1");
    }
    const auto n = base_->dimension();
    if ((pre_ && pre_->dimension() != n) || (post_ && post_->dimension() != n)) {
        throw ArgumentError("chart dimension differs from map dimension");
    }
}

IteratedMap IteratedMap::conjugated(const AffineChart& pre, const AffineChart& post) const
{
    return IteratedMap(base_, k_, pre, post);
}

Box IteratedMap::eval(const Box& x) const
{
    if (x.dimension() != dimension()) {
        throw ArgumentError("box dimension differs from map dimension");
    }
    Box y = pre_ ? pre_->world_from_local(x) : x;
    for (std::size_t i = 0; i < k_; ++i) {
        y = base_->image(y);
    }
    return post_ ? post_->local_from_world(y) : y;
}

IMatrix IteratedMap::jacobian(const Box& x) const
{
    if (x.dimension() != dimension()) {
        throw ArgumentError("box dimension differs from map dimension");
    }
    Box y = pre_ ? pre_->world_from_local(x) : x;
    IMatrix j = pre_ ? pre_->basis() : IMatrix::identity(dimension());
    for (std::size_t i = 0; i < k_; ++i) {
        j = base_->derivative(y) * j;
        if (i + 1 < k_) {
            y = base_->image(y);
        }
    }
    return post_ ? post_->basis_inv() * j : j;
}

Box IteratedMap::eval_mean_value(const Box& x) const
{
    const auto m = x.midpoint();
    const Box center = Box::point(m);
    const Box mean_value = eval(center) + jacobian(x) * (x - center);
    auto tight = intersect(mean_value, eval(x));
    if (!tight) {
        // Both are enclosures of the same nonempty set.
        throw EnclosureError("mean-value and natural enclosures do not intersect");
    }
    return *tight;
}

Box IteratedMap::enclose(const Box& x, EnclosureForm form) const
{
    return form == EnclosureForm::MeanValue ? eval_mean_value(x) : eval(x);
}

std::optional<Point3> eval_point_fast(const Point3& p, std::size_t k, double a, double b)
{
    Point3 q = p;
    for (std::size_t i = 0; i < k; ++i) {
        q = {a - q[1] * q[1] - b * q[2], q[0], q[1]};
        if (!std::isfinite(q[0])) {
            return std::nullopt;
        }
    }
    return q;
}

} // namespace towel
