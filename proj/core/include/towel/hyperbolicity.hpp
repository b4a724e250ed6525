#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "towel/box.hpp"
#include "towel/hset.hpp"
#include "towel/imatrix.hpp"
#include "towel/maps.hpp"

namespace towel {

// Q = diag(1,...,1, -1,...,-1) with u ones and s minus ones.
class ConeQuadraticForm {
public:
    ConeQuadraticForm(std::size_t u, std::size_t s);

    [[nodiscard]] std::size_t u() const noexcept { return u_; }
    [[nodiscard]] std::size_t s() const noexcept { return s_; }
    [[nodiscard]] const IMatrix& matrix() const noexcept { return q_; }

private:
    std::size_t u_;
    std::size_t s_;
    IMatrix q_;
};

// Enclosure of Df^T Q Df - Q. Diagonal entries use sqr so each is evaluated
// without dependency loss; the result is exactly symmetric.
IMatrix cone_matrix(const IMatrix& df, const ConeQuadraticForm& q);

// A chart-conjugated map f_ij = C_j ∘ g^k ∘ C_i^{-1} with its label.
struct NamedMap {
    std::string id;
    IteratedMap map;
};

// The four maps between h-sets a and b: aa, ab, ba, bb.
std::vector<NamedMap> horseshoe_map_pairs(const IteratedMap& f, const HSet& a, const HSet& b);

struct ConeWitness {
    std::size_t index = 0;
    Box local;
    std::vector<Interval> minors;  // leading principal minors of the cone matrix

    friend bool operator==(const ConeWitness&, const ConeWitness&) = default;
};

struct MapPairOutcome {
    std::string id;
    std::size_t boxes = 0;
    std::size_t skipped_disjoint = 0;
    std::size_t positive_definite = 0;
    std::size_t failed = 0;
    std::vector<ConeWitness> witnesses;

    [[nodiscard]] bool passed() const noexcept { return failed == 0; }
    friend bool operator==(const MapPairOutcome&, const MapPairOutcome&) = default;
};

struct HyperbolicityConfig {
    std::vector<std::size_t> grid{25, 25, 25};
    std::size_t max_failures_reported = 16;
    EnclosureForm enclosure = EnclosureForm::MeanValue;
    std::size_t workers = 0;
};

struct HyperbolicityCertificate {
    std::vector<std::size_t> grid;
    EnclosureForm enclosure = EnclosureForm::MeanValue;
    std::vector<MapPairOutcome> maps;
    bool passed = false;
    double wall_seconds = 0.0;

    friend bool operator==(const HyperbolicityCertificate&, const HyperbolicityCertificate&) = default;
};

enum class ConeVerdict { SkippedDisjoint, PositiveDefinite, Failed };

// Decision for one sub-box of the model cube: skip when the image misses
// [-1,1]^n, otherwise require the cone matrix over the box to be positive
// definite.
ConeVerdict classify_cone_box(const IteratedMap& fij, const Box& local, const ConeQuadraticForm& q,
                              EnclosureForm form, std::vector<Interval>* minors = nullptr);

// Every map must be chart-conjugated onto the model cube [-1,1]^n.
HyperbolicityCertificate check_strong_hyperbolicity(std::span<const NamedMap> maps, const ConeQuadraticForm& q,
                                                    const HyperbolicityConfig& cfg);

} // namespace towel
