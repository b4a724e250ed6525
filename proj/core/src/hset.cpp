#include "towel/hset.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

namespace towel {

namespace {

AffineChart make_chart(const HSetDefinition& d)
{
    const std::size_t n = d.center.size();
    if (n != 3 || d.basis.size() != n) {
        throw ArgumentError("h-set needs a 3-vector center and a 3x3 basis");
    }
    if (d.u + d.s != n) {
        throw ArgumentError("h-set requires u + s equal to the space dimension");
    }
    Box center(n);
    IMatrix basis(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        center[i] = Interval::from_decimal(d.center[i]);
        if (d.basis[i].size() != n) {
            throw ArgumentError("h-set basis rows must have 3 entries");
        }
        for (std::size_t j = 0; j < n; ++j) {
            basis(i, j) = Interval::from_decimal(d.basis[i][j]);
        }
    }
    return AffineChart(std::move(center), std::move(basis));
}

} // namespace

HSet::HSet(std::string name, HSetDefinition definition)
    : name_(std::move(name)), definition_(std::move(definition)), chart_(make_chart(definition_))
{
}

std::vector<LocalFace> HSet::exit_faces() const
{
    std::vector<LocalFace> faces;
    faces.reserve(2 * u());
    for (std::size_t dim = 0; dim < u(); ++dim) {
        for (int sign : {-1, 1}) {
            Box extent = Box::unit_cube(dimension());
            extent[dim] = Interval(static_cast<double>(sign));
            faces.push_back(LocalFace{dim, sign, std::move(extent)});
        }
    }
    return faces;
}

HSetDefinition horseshoe_definition_a()
{
    return HSetDefinition{
        {"0.81", "1.0225", "0.975"},
        {{"0", "0.19", "-0.03"}, {"0.1825", "0", "0"}, {"0", "-0.095", "-0.06"}},
        2,
        1,
    };
}

HSetDefinition horseshoe_definition_b()
{
    return HSetDefinition{
        {"0.81", "1.4875", "0.975"},
        {{"0", "0.19", "-0.03"}, {"0.1225", "0", "0"}, {"0", "-0.095", "-0.06"}},
        2,
        1,
    };
}

HorseshoeSets make_horseshoe_hsets()
{
    return HorseshoeSets{HSet("a", horseshoe_definition_a()), HSet("b", horseshoe_definition_b())};
}

void to_json(nlohmann::json& j, const HSetDefinition& d)
{
    j = nlohmann::json{{"center", d.center}, {"basis", d.basis}, {"u", d.u}, {"s", d.s}};
}

void from_json(const nlohmann::json& j, HSetDefinition& d)
{
    auto decimal = [](const nlohmann::json& v) {
        if (!v.is_string()) {
            throw ParseError("h-set decimals must be JSON strings, got " + v.dump());
        }
        return v.get<std::string>();
    };
    try {
        d.center.clear();
        for (const auto& v : j.at("center")) {
            d.center.push_back(decimal(v));
        }
        d.basis.clear();
        for (const auto& row : j.at("basis")) {
            if (!row.is_array()) {
                throw ParseError("h-set basis must be an array of rows");
            }
            auto& out = d.basis.emplace_back();
            for (const auto& v : row) {
                out.push_back(decimal(v));
            }
        }
        d.u = j.at("u").get<std::size_t>();
        d.s = j.at("s").get<std::size_t>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid h-set definition: ") + e.what());
    }
}

std::map<std::string, HSetDefinition> load_hset_definitions(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open h-set file " + path.string());
    }
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("h-set file " + path.string() + ": " + e.what());
    }
    if (!doc.is_object()) {
        throw ParseError("h-set file must hold an object keyed by set name");
    }
    std::map<std::string, HSetDefinition> out;
    for (const auto& [name, value] : doc.items()) {
        out.emplace(name, value.get<HSetDefinition>());
    }
    return out;
}

} // namespace towel
