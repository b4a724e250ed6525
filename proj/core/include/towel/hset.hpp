#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "towel/box.hpp"
#include "towel/chart.hpp"

namespace towel {

// Decimal-string description of an h-set, as written in configuration files
// and echoed into reports.
struct HSetDefinition {
    std::vector<std::string> center;
    std::vector<std::vector<std::string>> basis;
    std::size_t u = 0;
    std::size_t s = 0;

    friend bool operator==(const HSetDefinition&, const HSetDefinition&) = default;
};

// One piece of the exit set in local coordinates: coordinate fixed_dim is
// pinned to sign, every other coordinate spans [-1, 1].
struct LocalFace {
    std::size_t fixed_dim = 0;  // zero-based, always < u
    int sign = 1;
    Box extent;

    friend bool operator==(const LocalFace&, const LocalFace&) = default;
};

// An h-set with support center + basis * [-1,1]^3. The first u local
// coordinates are exit (unstable) directions, the remaining s are entry
// (stable) directions.
class HSet {
public:
    // Throws ArgumentError for bad shapes or u + s != 3, ParseError for bad
    // literals and SingularityError if the basis cannot be inverted.
    HSet(std::string name, HSetDefinition definition);

    [[nodiscard]] const std::string& name() const noexcept { return name_; }
    [[nodiscard]] const HSetDefinition& definition() const noexcept { return definition_; }
    [[nodiscard]] const AffineChart& chart() const noexcept { return chart_; }
    [[nodiscard]] std::size_t u() const noexcept { return definition_.u; }
    [[nodiscard]] std::size_t s() const noexcept { return definition_.s; }
    [[nodiscard]] std::size_t dimension() const noexcept { return chart_.dimension(); }

    [[nodiscard]] Box world_from_local(const Box& local) const { return chart_.world_from_local(local); }
    [[nodiscard]] Box local_from_world(const Box& world) const { return chart_.local_from_world(world); }
    // Interval hull of the support.
    [[nodiscard]] Box support_hull() const { return world_from_local(Box::unit_cube(dimension())); }

    // 2u faces ordered (dim 0, -1), (dim 0, +1), (dim 1, -1), ...
    [[nodiscard]] std::vector<LocalFace> exit_faces() const;

private:
    std::string name_;
    HSetDefinition definition_;
    AffineChart chart_;
};

// The h-sets a and b of the 3D Henon horseshoe, both with u = 2, s = 1.
struct HorseshoeSets {
    HSet a;
    HSet b;
};
HorseshoeSets make_horseshoe_hsets();
HSetDefinition horseshoe_definition_a();
HSetDefinition horseshoe_definition_b();

void to_json(nlohmann::json& j, const HSetDefinition& d);
// Rejects JSON numbers: every decimal must be given as a string.
void from_json(const nlohmann::json& j, HSetDefinition& d);

// Reads {"<name>": {center, basis, u, s}, ...}. Throws ParseError.
std::map<std::string, HSetDefinition> load_hset_definitions(const std::filesystem::path& path);

} // namespace towel
