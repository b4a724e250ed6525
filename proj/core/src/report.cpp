#include "towel/report.hpp"

#include <chrono>
#include <fstream>
#include <memory>
#include <sstream>

#include "towel/parallel.hpp"

namespace towel {

using nlohmann::json;

std::string_view to_string(ProofScope scope) noexcept
{
    switch (scope) {
    case ProofScope::Symbolic:
        return "symbolic";
    case ProofScope::Hyperbolicity:
        return "hyperbolicity";
    case ProofScope::All:
        return "all";
    }
    return "unknown";
}

ProofScope parse_proof_scope(std::string_view text)
{
    if (text == "symbolic") {
        return ProofScope::Symbolic;
    }
    if (text == "hyperbolicity") {
        return ProofScope::Hyperbolicity;
    }
    if (text == "all") {
        return ProofScope::All;
    }
    throw ParseError("unknown proof scope '" + std::string(text) + "'");
}

CoveringGraph::CoveringGraph(const ProofReport& report)
{
    for (const auto& [name, def] : report.hsets) {
        nodes_.insert(name);
    }
    for (const auto& c : report.coverings) {
        if (c.passed) {
            edges_.emplace(c.source, c.target);
        }
    }
}

bool CoveringGraph::has_edge(const std::string& from, const std::string& to) const
{
    return edges_.count({from, to}) > 0;
}

bool CoveringGraph::is_horseshoe(const std::string& n0, const std::string& n1) const
{
    return n0 != n1 && has_edge(n0, n0) && has_edge(n0, n1) && has_edge(n1, n0) && has_edge(n1, n1);
}

namespace {

std::string iterate_name(std::size_t k, std::size_t multiple = 1)
{
    const std::size_t power = k * multiple;
    return power == 1 ? "H" : "H^" + std::to_string(power);
}

std::string join(const std::vector<std::string>& parts, std::string_view sep)
{
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        out += (i ? std::string(sep) : std::string()) + parts[i];
    }
    return out;
}

} // namespace

std::string periodic_orbit_statement(const ProofReport& report, std::string_view word)
{
    if (word.empty()) {
        throw ArgumentError("periodic word must be nonempty");
    }
    for (char c : word) {
        if (c != 'a' && c != 'b') {
            throw ArgumentError("periodic word may only contain the symbols a and b");
        }
    }
    const CoveringGraph graph(report);
    if (report.symbolic_verdict != true || !graph.is_horseshoe("a", "b")) {
        throw ConsequenceRefused("report does not certify the covering relations a=>a, a=>b, b=>a, b=>b");
    }
    const std::size_t n = word.size();
    const std::size_t k = report.map.iterate;
    const std::string f = iterate_name(k);

    std::ostringstream os;
    os << "word: " << word << " (period " << n << " for " << f << ")\n";
    std::vector<std::string> chain;
    for (std::size_t i = 0; i <= n; ++i) {
        chain.emplace_back(1, word[i % n]);
    }
    os << "covering chain: " << join(chain, " => ") << "\n";
    std::vector<std::string> clauses;
    for (std::size_t i = 1; i < n; ++i) {
        clauses.push_back(iterate_name(k, i) + "(x) in int|" + word[i] + "|");
    }
    clauses.push_back(iterate_name(k, n) + "(x) = x");
    os << "consequence: there exists x in int|" << word[0] << "| with " << join(clauses, ", ") << ".\n";
    os << "supports (world coordinates, support = center + basis * [-1,1]^3):\n";
    for (const std::string name : {"a", "b"}) {
        if (word.find(name[0]) == std::string_view::npos) {
            continue;
        }
        const auto& def = report.hsets.at(name);
        const HSet set(name, def);
        std::vector<std::string> rows;
        for (const auto& row : def.basis) {
            rows.push_back("(" + join(row, ", ") + ")");
        }
        std::ostringstream hull;
        hull << set.support_hull();
        os << "  " << name << ": center (" << join(def.center, ", ") << "), basis rows " << join(rows, " ")
           << ", u=" << def.u << ", s=" << def.s << ", hull " << hull.str() << "\n";
    }
    return os.str();
}

ProofReport run_proof(const ProofOptions& options, ProofScope scope)
{
    const auto start = std::chrono::steady_clock::now();
    const auto find = [&](const std::string& name) {
        auto it = options.hsets.find(name);
        if (it == options.hsets.end()) {
            throw ArgumentError("h-set definitions must include '" + name + "'");
        }
        return HSet(name, it->second);
    };
    const HSet a = find("a");
    const HSet b = find("b");
    std::shared_ptr<const BaseMap> base;
    if (options.map_family == "henon") {
        base = std::make_shared<HenonMap>(options.params);
    } else if (options.map_family == "identity") {
        base = std::make_shared<LinearMap>(IMatrix::identity(a.dimension()));
    } else {
        throw ArgumentError("unknown map family '" + options.map_family + "'");
    }
    const IteratedMap f(base, options.map_iterate);
    const std::size_t workers = options.workers == 0 ? default_workers() : options.workers;

    ProofReport report;
    report.scope = scope;
    report.map = MapDescription{options.map_family, options.params.a_literal, options.params.b_literal, options.map_iterate};
    report.hsets = {{"a", a.definition()}, {"b", b.definition()}};
    report.enclosure = std::string(to_string(options.enclosure));
    report.workers = workers;

    const std::string fk = iterate_name(options.map_iterate);
    if (scope != ProofScope::Hyperbolicity) {
        CoveringConfig cfg = options.covering;
        cfg.enclosure = options.enclosure;
        cfg.workers = workers;
        for (const auto& [n0, n1] : {std::pair{&a, &a}, {&a, &b}, {&b, &a}, {&b, &b}}) {
            report.coverings.push_back(verify_covering(f, *n0, *n1, cfg));
        }
        const bool disjoint = a.support_hull().is_disjoint(b.support_hull());
        const bool horseshoe = CoveringGraph(report).is_horseshoe("a", "b");
        report.symbolic_verdict = horseshoe && disjoint;
        if (*report.symbolic_verdict) {
            report.conclusions.push_back(
                "topological horseshoe: the disjoint h-sets a and b each " + fk
                + "-cover themselves and each other, so " + fk
                + " on Inv(a u b) is semi-conjugate to the shift on two symbols");
            report.conclusions.push_back("every cyclic word over {a, b} is realized by a periodic orbit of " + fk
                                         + " through the interiors of a and b in that order");
        }
    }
    if (scope != ProofScope::Symbolic) {
        HyperbolicityConfig cfg = options.hyperbolicity;
        cfg.enclosure = options.enclosure;
        cfg.workers = workers;
        const auto maps = horseshoe_map_pairs(f, a, b);
        report.hyperbolicity = check_strong_hyperbolicity(maps, ConeQuadraticForm(a.u(), a.s()), cfg);
        report.hyperbolicity_verdict = report.hyperbolicity->passed;
        if (report.hyperbolicity->passed) {
            report.conclusions.push_back("cone condition: Df^T Q Df - Q is positive definite on every sub-box whose "
                                         "image meets the model cube, so "
                                         + fk + " is strongly hyperbolic on a u b");
            report.conclusions.push_back(fk + " is uniformly hyperbolic on Inv(a u b)");
        }
    }
    report.verdict = report.symbolic_verdict.value_or(true) && report.hyperbolicity_verdict.value_or(true);
    report.total_runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

// ---- JSON ----------------------------------------------------------------

void to_json(json& j, const Interval& x) { j = json::array({x.lo(), x.hi()}); }

void from_json(const json& j, Interval& x)
{
    if (!j.is_array() || j.size() != 2) {
        throw ParseError("interval must be a [lo, hi] pair");
    }
    x = Interval(j[0].get<double>(), j[1].get<double>());
}

void to_json(json& j, const Box& x)
{
    j = json::array();
    for (const auto& c : x) {
        j.push_back(c);
    }
}

void from_json(const json& j, Box& x) { x = Box(j.get<std::vector<Interval>>()); }

void to_json(json& j, const IMatrix& m)
{
    j = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) {
            row.push_back(m(r, c));
        }
        j.push_back(std::move(row));
    }
}

void from_json(const json& j, IMatrix& m)
{
    const auto rows = j.get<std::vector<std::vector<Interval>>>();
    const std::size_t ncols = rows.empty() ? 0 : rows.front().size();
    m = IMatrix(rows.size(), ncols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != ncols) {
            throw ParseError("ragged matrix in report");
        }
        for (std::size_t c = 0; c < ncols; ++c) {
            m(r, c) = rows[r][c];
        }
    }
}

void to_json(json& j, const CoveringCertificate& c)
{
    json witnesses_i = json::array();
    for (const auto& w : c.condition_i.witnesses) {
        witnesses_i.push_back({{"index", w.index}, {"local", w.local}, {"image", w.image}});
    }
    json faces = json::array();
    for (const auto& f : c.condition_ii.faces) {
        faces.push_back({{"dim", f.fixed_dim}, {"sign", f.sign}, {"parts", f.parts}, {"failed", f.failed}});
    }
    json witnesses_ii = json::array();
    for (const auto& w : c.condition_ii.witnesses) {
        witnesses_ii.push_back({{"dim", w.fixed_dim},
                                {"sign", w.sign},
                                {"index", w.index},
                                {"local", w.local},
                                {"hull", w.hull}});
    }
    j = json{
        {"source", c.source},
        {"target", c.target},
        {"map", c.map},
        {"map_iterate", c.map_iterate},
        {"passed", c.passed},
        {"A", c.a.matrix},
        {"body_grid", c.body_grid},
        {"face_grid", c.face_grid},
        {"enclosure", to_string(c.enclosure)},
        {"condition_I",
         {{"boxes", c.condition_i.boxes},
          {"outside_unstable", c.condition_i.outside_unstable},
          {"inside_stable", c.condition_i.inside_stable},
          {"failed", c.condition_i.failed},
          {"witnesses", std::move(witnesses_i)}}},
        {"condition_II", {{"faces", std::move(faces)}, {"witnesses", std::move(witnesses_ii)}}},
        {"wall_seconds", c.wall_seconds},
    };
}

void from_json(const json& j, CoveringCertificate& c)
{
    c.source = j.at("source").get<std::string>();
    c.target = j.at("target").get<std::string>();
    c.map = j.at("map").get<std::string>();
    c.map_iterate = j.at("map_iterate").get<std::size_t>();
    c.passed = j.at("passed").get<bool>();
    c.a.matrix = j.at("A").get<IMatrix>();
    c.body_grid = j.at("body_grid").get<std::vector<std::size_t>>();
    c.face_grid = j.at("face_grid").get<std::vector<std::size_t>>();
    c.enclosure = parse_enclosure_form(j.at("enclosure").get<std::string>());
    const auto& ci = j.at("condition_I");
    c.condition_i.boxes = ci.at("boxes").get<std::size_t>();
    c.condition_i.outside_unstable = ci.at("outside_unstable").get<std::size_t>();
    c.condition_i.inside_stable = ci.at("inside_stable").get<std::size_t>();
    c.condition_i.failed = ci.at("failed").get<std::size_t>();
    c.condition_i.witnesses.clear();
    for (const auto& w : ci.at("witnesses")) {
        c.condition_i.witnesses.push_back(
            BodyWitness{w.at("index").get<std::size_t>(), w.at("local").get<Box>(), w.at("image").get<Box>()});
    }
    const auto& cii = j.at("condition_II");
    c.condition_ii.faces.clear();
    for (const auto& f : cii.at("faces")) {
        c.condition_ii.faces.push_back(FaceOutcome{f.at("dim").get<std::size_t>(), f.at("sign").get<int>(),
                                                   f.at("parts").get<std::size_t>(), f.at("failed").get<std::size_t>()});
    }
    c.condition_ii.witnesses.clear();
    for (const auto& w : cii.at("witnesses")) {
        c.condition_ii.witnesses.push_back(FaceWitness{w.at("dim").get<std::size_t>(), w.at("sign").get<int>(),
                                                       w.at("index").get<std::size_t>(), w.at("local").get<Box>(),
                                                       w.at("hull").get<Box>()});
    }
    c.wall_seconds = j.at("wall_seconds").get<double>();
}

void to_json(json& j, const HyperbolicityCertificate& c)
{
    json maps = json::array();
    for (const auto& m : c.maps) {
        json witnesses = json::array();
        for (const auto& w : m.witnesses) {
            witnesses.push_back({{"index", w.index}, {"local", w.local}, {"minors", w.minors}});
        }
        maps.push_back({{"id", m.id},
                        {"boxes", m.boxes},
                        {"skipped_disjoint", m.skipped_disjoint},
                        {"positive_definite", m.positive_definite},
                        {"failed", m.failed},
                        {"witnesses", std::move(witnesses)}});
    }
    j = json{
        {"grid", c.grid},
        {"enclosure", to_string(c.enclosure)},
        {"maps", std::move(maps)},
        {"passed", c.passed},
        {"wall_seconds", c.wall_seconds},
    };
}

void from_json(const json& j, HyperbolicityCertificate& c)
{
    c.grid = j.at("grid").get<std::vector<std::size_t>>();
    c.enclosure = parse_enclosure_form(j.at("enclosure").get<std::string>());
    c.maps.clear();
    for (const auto& m : j.at("maps")) {
        MapPairOutcome o;
        o.id = m.at("id").get<std::string>();
        o.boxes = m.at("boxes").get<std::size_t>();
        o.skipped_disjoint = m.at("skipped_disjoint").get<std::size_t>();
        o.positive_definite = m.at("positive_definite").get<std::size_t>();
        o.failed = m.at("failed").get<std::size_t>();
        for (const auto& w : m.at("witnesses")) {
            o.witnesses.push_back(ConeWitness{w.at("index").get<std::size_t>(), w.at("local").get<Box>(),
                                              w.at("minors").get<std::vector<Interval>>()});
        }
        c.maps.push_back(std::move(o));
    }
    c.passed = j.at("passed").get<bool>();
    c.wall_seconds = j.at("wall_seconds").get<double>();
}

namespace {

template <typename T>
json optional_to_json(const std::optional<T>& v)
{
    return v ? json(*v) : json(nullptr);
}

template <typename T>
std::optional<T> optional_from_json(const json& j)
{
    if (j.is_null()) {
        return std::nullopt;
    }
    return j.get<T>();
}

} // namespace

void to_json(json& j, const ProofReport& r)
{
    json hsets = json::object();
    for (const auto& [name, def] : r.hsets) {
        hsets[name] = def;
    }
    j = json{
        {"version", r.version},
        {"scope", to_string(r.scope)},
        {"map", {{"family", r.map.family}, {"a", r.map.a}, {"b", r.map.b}, {"iterate", r.map.iterate}}},
        {"hsets", std::move(hsets)},
        {"enclosure", r.enclosure},
        {"workers", r.workers},
        {"coverings", r.coverings},
        {"hyperbolicity", optional_to_json(r.hyperbolicity)},
        {"symbolic_verdict", optional_to_json(r.symbolic_verdict)},
        {"hyperbolicity_verdict", optional_to_json(r.hyperbolicity_verdict)},
        {"verdict", r.verdict},
        {"conclusions", r.conclusions},
        {"total_runtime_seconds", r.total_runtime_seconds},
    };
}

void from_json(const json& j, ProofReport& r)
{
    r.version = j.at("version").get<std::string>();
    r.scope = parse_proof_scope(j.at("scope").get<std::string>());
    const auto& m = j.at("map");
    r.map = MapDescription{m.at("family").get<std::string>(), m.at("a").get<std::string>(),
                           m.at("b").get<std::string>(), m.at("iterate").get<std::size_t>()};
    r.hsets.clear();
    for (const auto& [name, def] : j.at("hsets").items()) {
        r.hsets.emplace(name, def.get<HSetDefinition>());
    }
    r.enclosure = j.at("enclosure").get<std::string>();
    r.workers = j.at("workers").get<std::size_t>();
    r.coverings = j.at("coverings").get<std::vector<CoveringCertificate>>();
    r.hyperbolicity = optional_from_json<HyperbolicityCertificate>(j.at("hyperbolicity"));
    r.symbolic_verdict = optional_from_json<bool>(j.at("symbolic_verdict"));
    r.hyperbolicity_verdict = optional_from_json<bool>(j.at("hyperbolicity_verdict"));
    r.verdict = j.at("verdict").get<bool>();
    r.conclusions = j.at("conclusions").get<std::vector<std::string>>();
    r.total_runtime_seconds = j.at("total_runtime_seconds").get<double>();
}

std::string serialize_report(const ProofReport& report)
{
    return json(report).dump(2) + "\n";
}

ProofReport parse_report(std::string_view text)
{
    try {
        return json::parse(text).get<ProofReport>();
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed report: ") + e.what());
    } catch (const ArgumentError& e) {
        throw ParseError(std::string("malformed report: ") + e.what());
    }
}

void write_report(const ProofReport& report, const std::filesystem::path& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("cannot write report to " + path.string());
    }
    out << serialize_report(report);
    if (!out) {
        throw Error("failed writing report to " + path.string());
    }
}

ProofReport read_report(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open report " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_report(buf.str());
}

} // namespace towel
