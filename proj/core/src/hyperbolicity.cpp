#include "towel/hyperbolicity.hpp"

#include <chrono>

#include "towel/parallel.hpp"

namespace towel {

ConeQuadraticForm::ConeQuadraticForm(std::size_t u, std::size_t s) : u_(u), s_(s), q_(IMatrix::identity(u + s))
{
    for (std::size_t i = u; i < u + s; ++i) {
        q_(i, i) = Interval(-1.0);
    }
}

IMatrix cone_matrix(const IMatrix& df, const ConeQuadraticForm& q)
{
    const std::size_t n = q.u() + q.s();
    if (df.rows() != n || df.cols() != n) {
        throw ArgumentError("cone matrix needs an n x n derivative");
    }
    auto sign = [&](std::size_t k) { return k < q.u() ? 1.0 : -1.0; };
    IMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            Interval acc(0.0);
            for (std::size_t k = 0; k < n; ++k) {
                const Interval term = i == j ? sqr(df(k, i)) : df(k, i) * df(k, j);
                acc += sign(k) > 0 ? term : -term;
            }
            if (i == j) {
                acc -= Interval(sign(i));
            }
            out(i, j) = acc;
            out(j, i) = acc;
        }
    }
    return out;
}

std::vector<NamedMap> horseshoe_map_pairs(const IteratedMap& f, const HSet& a, const HSet& b)
{
    if (f.pre_chart() || f.post_chart()) {
        throw ArgumentError("pass a chart-free map; charts come from the h-sets");
    }
    return {
        {a.name() + a.name(), f.conjugated(a.chart(), a.chart())},
        {a.name() + b.name(), f.conjugated(a.chart(), b.chart())},
        {b.name() + a.name(), f.conjugated(b.chart(), a.chart())},
        {b.name() + b.name(), f.conjugated(b.chart(), b.chart())},
    };
}

ConeVerdict classify_cone_box(const IteratedMap& fij, const Box& local, const ConeQuadraticForm& q,
                              EnclosureForm form, std::vector<Interval>* minors)
{
    const Box image = fij.enclose(local, form);
    if (image.is_disjoint(Box::unit_cube(image.dimension()))) {
        return ConeVerdict::SkippedDisjoint;
    }
    const IMatrix c = cone_matrix(fij.jacobian(local), q);
    auto m = sylvester_minors(c);
    bool positive = !m.empty();
    for (const auto& v : m) {
        positive = positive && v.lo() > 0.0;
    }
    if (minors) {
        *minors = std::move(m);
    }
    return positive ? ConeVerdict::PositiveDefinite : ConeVerdict::Failed;
}

HyperbolicityCertificate check_strong_hyperbolicity(std::span<const NamedMap> maps, const ConeQuadraticForm& q,
                                                    const HyperbolicityConfig& cfg)
{
    const auto start = std::chrono::steady_clock::now();
    const std::size_t n = q.u() + q.s();
    const BoxGrid grid(Box::unit_cube(n), cfg.grid);

    HyperbolicityCertificate cert;
    cert.grid = cfg.grid;
    cert.enclosure = cfg.enclosure;
    for (const NamedMap& nm : maps) {
        if (nm.map.dimension() != n) {
            throw ArgumentError("map dimension differs from the cone form");
        }
        auto verdicts = parallel_map(grid.size(), cfg.workers, [&](std::size_t i) {
            return classify_cone_box(nm.map, grid[i], q, cfg.enclosure);
        });
        MapPairOutcome outcome;
        outcome.id = nm.id;
        outcome.boxes = grid.size();
        for (std::size_t i = 0; i < verdicts.size(); ++i) {
            switch (verdicts[i]) {
            case ConeVerdict::SkippedDisjoint:
                ++outcome.skipped_disjoint;
                break;
            case ConeVerdict::PositiveDefinite:
                ++outcome.positive_definite;
                break;
            case ConeVerdict::Failed:
                ++outcome.failed;
                if (outcome.witnesses.size() < cfg.max_failures_reported) {
                    ConeWitness w{i, grid[i], {}};
                    classify_cone_box(nm.map, w.local, q, cfg.enclosure, &w.minors);
                    outcome.witnesses.push_back(std::move(w));
                }
                break;
            }
        }
        cert.maps.push_back(std::move(outcome));
    }
    cert.passed = !cert.maps.empty();
    for (const auto& m : cert.maps) {
        cert.passed = cert.passed && m.passed();
    }
    cert.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return cert;
}

} // namespace towel
