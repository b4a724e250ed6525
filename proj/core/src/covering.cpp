#include "towel/covering.hpp"

#include <chrono>
#include <optional>

#include "towel/parallel.hpp"

namespace towel {

void CoveringConfig::validate(std::size_t n) const
{
    if (body_grid.size() != n) {
        throw ArgumentError("body grid needs one count per dimension");
    }
    if (face_grid.size() + 1 != n) {
        throw ArgumentError("face grid needs n - 1 counts");
    }
    for (auto c : body_grid) {
        if (c == 0) {
            throw ArgumentError("body grid counts must be positive");
        }
    }
    for (auto c : face_grid) {
        if (c == 0) {
            throw ArgumentError("face grid counts must be positive");
        }
    }
}

std::size_t ConditionIIOutcome::failed() const noexcept
{
    std::size_t total = 0;
    for (const auto& f : faces) {
        total += f.failed;
    }
    return total;
}

BodyVerdict classify_body_image(const Box& image, std::size_t u)
{
    for (std::size_t i = 0; i < u; ++i) {
        if (mig(image[i]) > 1.0) {
            return BodyVerdict::OutsideUnstable;
        }
    }
    for (std::size_t j = u; j < image.dimension(); ++j) {
        if (!(mag(image[j]) < 1.0)) {
            return BodyVerdict::Failed;
        }
    }
    return BodyVerdict::InsideStable;
}

IteratedMap local_map(const IteratedMap& f, const HSet& n0, const HSet& n1)
{
    if (f.pre_chart() || f.post_chart()) {
        throw ArgumentError("covering checks attach the h-set charts themselves; pass a chart-free map");
    }
    return f.conjugated(n0.chart(), n1.chart());
}

LinearizationA linearization_at_center(const IteratedMap& f, const HSet& n0, const HSet& n1)
{
    const IteratedMap fc = local_map(f, n0, n1);
    const IMatrix j = fc.jacobian(Box(fc.dimension(), Interval(0.0)));
    return LinearizationA{j.block(0, 0, n0.u(), n0.u()).midpoint()};
}

namespace {

void require_compatible(const IteratedMap& f, const HSet& n0, const HSet& n1, const CoveringConfig& cfg)
{
    if (n0.u() != n1.u() || n0.s() != n1.s()) {
        throw ArgumentError("covering relation needs equal exit and entry dimensions");
    }
    if (n0.u() == 0) {
        throw ArgumentError("covering checks need at least one exit direction");
    }
    if (f.dimension() != n0.dimension() || f.dimension() != n1.dimension()) {
        throw ArgumentError("map and h-set dimensions differ");
    }
    cfg.validate(f.dimension());
}

} // namespace

ConditionIOutcome check_condition_I(const IteratedMap& f, const HSet& n0, const HSet& n1, const CoveringConfig& cfg)
{
    require_compatible(f, n0, n1, cfg);
    const IteratedMap fc = local_map(f, n0, n1);
    const BoxGrid grid(Box::unit_cube(fc.dimension()), cfg.body_grid);
    const std::size_t u = n0.u();

    struct Item {
        BodyVerdict verdict = BodyVerdict::Failed;
        std::optional<Box> image;  // kept for failures only
    };
    auto items = parallel_map(grid.size(), cfg.workers, [&](std::size_t i) {
        Box y = fc.enclose(grid[i], cfg.enclosure);
        Item item{classify_body_image(y, u), std::nullopt};
        if (item.verdict == BodyVerdict::Failed) {
            item.image = std::move(y);
        }
        return item;
    });

    ConditionIOutcome out;
    out.boxes = grid.size();
    for (std::size_t i = 0; i < items.size(); ++i) {
        switch (items[i].verdict) {
        case BodyVerdict::OutsideUnstable:
            ++out.outside_unstable;
            break;
        case BodyVerdict::InsideStable:
            ++out.inside_stable;
            break;
        case BodyVerdict::Failed:
            ++out.failed;
            if (out.witnesses.size() < cfg.max_failures_reported) {
                out.witnesses.push_back(BodyWitness{i, grid[i], *items[i].image});
            }
            break;
        }
    }
    return out;
}

Box face_part_hull(const IteratedMap& local, const LinearizationA& a, std::size_t u, const Box& part,
                   EnclosureForm form)
{
    const Box yf = local.enclose(part, form);
    Box ya(part.dimension(), Interval(0.0));
    for (std::size_t i = 0; i < u; ++i) {
        Interval acc(0.0);
        for (std::size_t j = 0; j < u; ++j) {
            acc += a.matrix(i, j) * part[j];
        }
        ya[i] = acc;
    }
    return hull(yf, ya);
}

ConditionIIOutcome check_condition_II(const IteratedMap& f, const HSet& n0, const HSet& n1, const LinearizationA& a,
                                      const CoveringConfig& cfg)
{
    require_compatible(f, n0, n1, cfg);
    const std::size_t u = n0.u();
    if (a.matrix.rows() != u || a.matrix.cols() != u) {
        throw ArgumentError("linearization must be u x u");
    }
    const IteratedMap fc = local_map(f, n0, n1);
    const std::size_t n = fc.dimension();

    ConditionIIOutcome out;
    for (const LocalFace& face : n0.exit_faces()) {
        // Subdivide the free coordinates and re-insert the pinned one.
        std::vector<Interval> free;
        for (std::size_t d = 0; d < n; ++d) {
            if (d != face.fixed_dim) {
                free.push_back(face.extent[d]);
            }
        }
        const BoxGrid grid(Box(std::move(free)), cfg.face_grid);
        auto part_at = [&](std::size_t i) {
            const Box sub = grid[i];
            Box part(n);
            for (std::size_t d = 0, k = 0; d < n; ++d) {
                part[d] = d == face.fixed_dim ? face.extent[d] : sub[k++];
            }
            return part;
        };

        struct Item {
            bool accepted = false;
            std::optional<Box> hull;
        };
        auto items = parallel_map(grid.size(), cfg.workers, [&](std::size_t i) {
            Box h = face_part_hull(fc, a, u, part_at(i), cfg.enclosure);
            bool accepted = false;
            for (std::size_t k = 0; k < u && !accepted; ++k) {
                accepted = mig(h[k]) > 1.0;
            }
            return Item{accepted, accepted ? std::nullopt : std::optional<Box>(std::move(h))};
        });

        FaceOutcome fo{face.fixed_dim, face.sign, grid.size(), 0};
        for (std::size_t i = 0; i < items.size(); ++i) {
            if (items[i].accepted) {
                continue;
            }
            ++fo.failed;
            if (out.witnesses.size() < cfg.max_failures_reported) {
                out.witnesses.push_back(FaceWitness{face.fixed_dim, face.sign, i, part_at(i), *items[i].hull});
            }
        }
        out.faces.push_back(fo);
    }
    return out;
}

CoveringCertificate verify_covering(const IteratedMap& f, const HSet& n0, const HSet& n1, const CoveringConfig& cfg)
{
    const auto start = std::chrono::steady_clock::now();
    require_compatible(f, n0, n1, cfg);

    CoveringCertificate cert;
    cert.source = n0.name();
    cert.target = n1.name();
    cert.map = f.base().describe();
    cert.map_iterate = f.iterate();
    cert.body_grid = cfg.body_grid;
    cert.face_grid = cfg.face_grid;
    cert.enclosure = cfg.enclosure;
    cert.a = linearization_at_center(f, n0, n1);
    cert.condition_i = check_condition_I(f, n0, n1, cfg);
    cert.condition_ii = check_condition_II(f, n0, n1, cert.a, cfg);
    cert.passed = cert.condition_i.passed() && cert.condition_ii.passed();
    cert.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return cert;
}

} // namespace towel
