#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "towel/covering.hpp"
#include "towel/hset.hpp"
#include "towel/hyperbolicity.hpp"
#include "towel/maps.hpp"

namespace towel {

inline constexpr std::string_view kVersion = "1.0.0";

enum class ProofScope { Symbolic, Hyperbolicity, All };
std::string_view to_string(ProofScope scope) noexcept;
ProofScope parse_proof_scope(std::string_view text);

struct MapDescription {
    std::string family = "henon";
    std::string a = "1.76";
    std::string b = "0.1";
    std::size_t iterate = 4;

    friend bool operator==(const MapDescription&, const MapDescription&) = default;
};

struct ProofReport {
    std::string version{kVersion};
    ProofScope scope = ProofScope::All;
    MapDescription map;
    std::map<std::string, HSetDefinition> hsets;
    std::string enclosure;
    std::size_t workers = 1;
    std::vector<CoveringCertificate> coverings;
    std::optional<HyperbolicityCertificate> hyperbolicity;
    std::optional<bool> symbolic_verdict;
    std::optional<bool> hyperbolicity_verdict;
    // True iff every certificate required by the scope passed.
    bool verdict = false;
    std::vector<std::string> conclusions;
    double total_runtime_seconds = 0.0;

    friend bool operator==(const ProofReport&, const ProofReport&) = default;
};

// Directed graph on h-set names whose edges are passed covering certificates.
class CoveringGraph {
public:
    CoveringGraph() = default;
    explicit CoveringGraph(const ProofReport& report);

    [[nodiscard]] const std::set<std::string>& nodes() const noexcept { return nodes_; }
    [[nodiscard]] bool has_edge(const std::string& from, const std::string& to) const;
    // Both sets cover themselves and each other.
    [[nodiscard]] bool is_horseshoe(const std::string& n0, const std::string& n1) const;

private:
    std::set<std::string> nodes_;
    std::set<std::pair<std::string, std::string>> edges_;
};

// Raised when a consequence is requested without the certificates backing it.
class ConsequenceRefused : public Error {
public:
    using Error::Error;
};

// Statement of the periodic orbit forced by a cyclic word over {a, b}.
// Throws ArgumentError for an empty word or foreign symbols and
// ConsequenceRefused when the report does not certify the coverings the word
// needs.
std::string periodic_orbit_statement(const ProofReport& report, std::string_view word);

struct ProofOptions {
    // "henon", or "identity" for the trivial map used as a negative control.
    std::string map_family = "henon";
    HenonParams params;
    std::size_t map_iterate = 4;
    std::map<std::string, HSetDefinition> hsets{{"a", horseshoe_definition_a()}, {"b", horseshoe_definition_b()}};
    CoveringConfig covering;
    HyperbolicityConfig hyperbolicity;
    EnclosureForm enclosure = EnclosureForm::MeanValue;
    std::size_t workers = 0;
};

// Runs the covering chain a=>a, a=>b, b=>a, b=>b and/or the cone condition on
// the four maps between a and b, and assembles the report.
ProofReport run_proof(const ProofOptions& options, ProofScope scope);

void to_json(nlohmann::json& j, const Interval& x);
void from_json(const nlohmann::json& j, Interval& x);
void to_json(nlohmann::json& j, const Box& x);
void from_json(const nlohmann::json& j, Box& x);
void to_json(nlohmann::json& j, const IMatrix& m);
void from_json(const nlohmann::json& j, IMatrix& m);
void to_json(nlohmann::json& j, const CoveringCertificate& c);
void from_json(const nlohmann::json& j, CoveringCertificate& c);
void to_json(nlohmann::json& j, const HyperbolicityCertificate& c);
void from_json(const nlohmann::json& j, HyperbolicityCertificate& c);
void to_json(nlohmann::json& j, const ProofReport& r);
void from_json(const nlohmann::json& j, ProofReport& r);

std::string serialize_report(const ProofReport& report);
// Throws ParseError.
ProofReport parse_report(std::string_view text);
void write_report(const ProofReport& report, const std::filesystem::path& path);
ProofReport read_report(const std::filesystem::path& path);

} // namespace towel
