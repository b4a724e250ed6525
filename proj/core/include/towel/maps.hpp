#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "towel/box.hpp"
#include "towel/chart.hpp"
#include "towel/imatrix.hpp"

namespace towel {

// A C^1 self-map of R^n with interval image and derivative enclosures.
class BaseMap {
public:
    virtual ~BaseMap() = default;

    [[nodiscard]] virtual std::size_t dimension() const noexcept = 0;
    // Encloses { g(x) : x in box }.
    [[nodiscard]] virtual Box image(const Box& box) const = 0;
    // Encloses { Dg(x) : x in box }.
    [[nodiscard]] virtual IMatrix derivative(const Box& box) const = 0;
    [[nodiscard]] virtual std::string describe() const = 0;
};

// Coefficients of H(x, y, z) = (a - y^2 - b z, x, y).
struct HenonParams {
    Interval a = Interval::from_decimal("1.76");
    Interval b = Interval::from_decimal("0.1");
    std::string a_literal = "1.76";
    std::string b_literal = "0.1";

    static HenonParams from_decimals(std::string_view a, std::string_view b);

    friend bool operator==(const HenonParams&, const HenonParams&) = default;
};

class HenonMap final : public BaseMap {
public:
    explicit HenonMap(HenonParams params = {}) : params_(std::move(params)) {}

    [[nodiscard]] const HenonParams& params() const noexcept { return params_; }
    [[nodiscard]] std::size_t dimension() const noexcept override { return 3; }
    [[nodiscard]] Box image(const Box& box) const override;
    // Rows (0, -2y, -b), (1, 0, 0), (0, 1, 0).
    [[nodiscard]] IMatrix derivative(const Box& box) const override;
    [[nodiscard]] std::string describe() const override;

private:
    HenonParams params_;
};

// x -> L x for an interval matrix L.
class LinearMap final : public BaseMap {
public:
    explicit LinearMap(IMatrix matrix);

    [[nodiscard]] const IMatrix& matrix() const noexcept { return matrix_; }
    [[nodiscard]] std::size_t dimension() const noexcept override { return matrix_.rows(); }
    [[nodiscard]] Box image(const Box& box) const override { return matrix_ * box; }
    [[nodiscard]] IMatrix derivative(const Box&) const override { return matrix_; }
    [[nodiscard]] std::string describe() const override;

private:
    IMatrix matrix_;
};

enum class EnclosureForm {
    // Natural interval extension, step by step.
    Naive,
    // f(m) + Df(X) (X - m), intersected with the naive enclosure.
    MeanValue,
};

std::string_view to_string(EnclosureForm form) noexcept;
// Accepts "naive" and "mean-value"; throws ParseError otherwise.
EnclosureForm parse_enclosure_form(std::string_view text);

// post_chart ∘ g^k ∘ pre_chart^{-1}, where a chart maps world to local
// coordinates. Either chart may be absent (identity).
class IteratedMap {
public:
    // Throws ArgumentError when k == 0 or dimensions disagree.
    IteratedMap(std::shared_ptr<const BaseMap> base, std::size_t k,
                std::optional<AffineChart> pre = std::nullopt, std::optional<AffineChart> post = std::nullopt);

    [[nodiscard]] const BaseMap& base() const noexcept { return *base_; }
    [[nodiscard]] const std::shared_ptr<const BaseMap>& base_ptr() const noexcept { return base_; }
    [[nodiscard]] std::size_t iterate() const noexcept { return k_; }
    [[nodiscard]] const std::optional<AffineChart>& pre_chart() const noexcept { return pre_; }
    [[nodiscard]] const std::optional<AffineChart>& post_chart() const noexcept { return post_; }
    [[nodiscard]] std::size_t dimension() const noexcept { return base_->dimension(); }

    // Same base and iterate, new charts.
    [[nodiscard]] IteratedMap conjugated(const AffineChart& pre, const AffineChart& post) const;

    // Natural-extension enclosure of the image.
    [[nodiscard]] Box eval(const Box& x) const;
    // Chain-rule enclosure of the derivative over x, using the eval
    // intermediates as orbit boxes.
    [[nodiscard]] IMatrix jacobian(const Box& x) const;
    // Mean-value enclosure intersected with eval(x).
    [[nodiscard]] Box eval_mean_value(const Box& x) const;
    [[nodiscard]] Box enclose(const Box& x, EnclosureForm form) const;

private:
    std::shared_ptr<const BaseMap> base_;
    std::size_t k_;
    std::optional<AffineChart> pre_;
    std::optional<AffineChart> post_;
};

using Point3 = std::array<double, 3>;

// Plain floating-point iteration of H, k steps. NOT rigorous; meant for
// sampling pictures of the attractor. Returns nullopt if the orbit leaves
// the finite doubles.
std::optional<Point3> eval_point_fast(const Point3& p, std::size_t k, double a = 1.76, double b = 0.1);

} // namespace towel
