#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "towel/box.hpp"
#include "towel/hset.hpp"
#include "towel/imatrix.hpp"
#include "towel/maps.hpp"

namespace towel {

struct CoveringConfig {
    // Subdivision of the model cube of the source set.
    std::vector<std::size_t> body_grid{20, 20, 20};
    // Subdivision of each exit face, over its n - 1 free coordinates in
    // increasing order.
    std::vector<std::size_t> face_grid{10, 10};
    std::size_t max_failures_reported = 16;
    EnclosureForm enclosure = EnclosureForm::MeanValue;
    // 0 selects default_workers().
    std::size_t workers = 0;

    // Throws ArgumentError on zero counts or wrong grid lengths for dimension n.
    void validate(std::size_t n) const;
};

// Point u x u matrix, the endpoint of the linear homotopy.
struct LinearizationA {
    IMatrix matrix;

    friend bool operator==(const LinearizationA&, const LinearizationA&) = default;
};

struct BodyWitness {
    std::size_t index = 0;
    Box local;  // sub-box of the source model cube
    Box image;  // enclosure of its image in target local coordinates

    friend bool operator==(const BodyWitness&, const BodyWitness&) = default;
};

struct ConditionIOutcome {
    std::size_t boxes = 0;
    // Accepted because some unstable coordinate of the image has mig > 1.
    std::size_t outside_unstable = 0;
    // Accepted because every stable coordinate of the image has mag < 1.
    std::size_t inside_stable = 0;
    std::size_t failed = 0;
    std::vector<BodyWitness> witnesses;  // lowest failing indices first

    [[nodiscard]] bool passed() const noexcept { return failed == 0; }
    friend bool operator==(const ConditionIOutcome&, const ConditionIOutcome&) = default;
};

struct FaceWitness {
    std::size_t fixed_dim = 0;
    int sign = 1;
    std::size_t index = 0;
    Box local;  // face part in source local coordinates
    Box hull;   // hull of the f-image and the (A, 0)-image

    friend bool operator==(const FaceWitness&, const FaceWitness&) = default;
};

struct FaceOutcome {
    std::size_t fixed_dim = 0;
    int sign = 1;
    std::size_t parts = 0;
    std::size_t failed = 0;

    friend bool operator==(const FaceOutcome&, const FaceOutcome&) = default;
};

struct ConditionIIOutcome {
    std::vector<FaceOutcome> faces;
    std::vector<FaceWitness> witnesses;

    [[nodiscard]] std::size_t failed() const noexcept;
    [[nodiscard]] bool passed() const noexcept { return failed() == 0; }
    friend bool operator==(const ConditionIIOutcome&, const ConditionIIOutcome&) = default;
};

struct CoveringCertificate {
    std::string source;
    std::string target;
    std::string map;  // BaseMap::describe() and iterate
    std::size_t map_iterate = 1;
    bool passed = false;
    LinearizationA a;
    ConditionIOutcome condition_i;
    ConditionIIOutcome condition_ii;
    std::vector<std::size_t> body_grid;
    std::vector<std::size_t> face_grid;
    EnclosureForm enclosure = EnclosureForm::MeanValue;
    double wall_seconds = 0.0;

    friend bool operator==(const CoveringCertificate&, const CoveringCertificate&) = default;
};

enum class BodyVerdict { OutsideUnstable, InsideStable, Failed };

// Condition I disjunct on an image box in target local coordinates, whose
// first u coordinates are unstable.
BodyVerdict classify_body_image(const Box& image, std::size_t u);

// C_1 ∘ f ∘ C_0^{-1}. Throws ArgumentError if f already carries charts.
IteratedMap local_map(const IteratedMap& f, const HSet& n0, const HSet& n1);

// Midpoint of the upper-left u x u block of D(C_1 ∘ f ∘ C_0^{-1}) at 0.
LinearizationA linearization_at_center(const IteratedMap& f, const HSet& n0, const HSet& n1);

// Sub-box P of the model cube is accepted iff for Y = [f_c(P)] some unstable
// i has mig(Y_i) > 1 or every stable j has mag(Y_j) < 1.
ConditionIOutcome check_condition_I(const IteratedMap& f, const HSet& n0, const HSet& n1, const CoveringConfig& cfg);

// Face part F is accepted iff some unstable i has mig(hull(Y_f, Y_A)_i) > 1,
// where Y_f = [f_c(F)] and Y_A = (A F_u, 0). The hull contains the whole
// straight-line homotopy between the two images.
ConditionIIOutcome check_condition_II(const IteratedMap& f, const HSet& n0, const HSet& n1, const LinearizationA& a,
                                      const CoveringConfig& cfg);

// Hull of [f_c(part)] and (A part_u, 0), exposed for testing.
Box face_part_hull(const IteratedMap& local_map, const LinearizationA& a, std::size_t u, const Box& part,
                   EnclosureForm form);

// f must be chart-free; the charts of n0 and n1 are attached here. Throws
// ArgumentError when u or s differ between the sets.
CoveringCertificate verify_covering(const IteratedMap& f, const HSet& n0, const HSet& n1, const CoveringConfig& cfg);

} // namespace towel
