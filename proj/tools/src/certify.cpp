#include "towel/cli/certify.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "towel/report.hpp"

namespace towel::cli {

namespace {

std::string format_coord(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string grid_string(const std::vector<std::size_t>& g)
{
    std::string s;
    for (std::size_t i = 0; i < g.size(); ++i) {
        s += (i ? "x" : "") + std::to_string(g[i]);
    }
    return s;
}

struct VerifyFlags {
    std::vector<std::size_t> body_grid{20, 20, 20};
    std::vector<std::size_t> face_grid{10, 10};
    std::vector<std::size_t> hyp_grid{25, 25, 25};
    std::string map_family = "henon";
    std::size_t map_iterate = 4;
    std::size_t workers = 0;
    std::size_t max_failures = 16;
    std::string enclosure = "mean-value";
    std::string report_path;
    std::string hsets_path;
};

void add_verify_flags(CLI::App& cmd, VerifyFlags& f, bool covering, bool hyperbolicity)
{
    if (covering) {
        cmd.add_option("--body-grid", f.body_grid, "condition I subdivision k,k,k")
            ->delimiter(',')
            ->expected(3)
            ->check(CLI::PositiveNumber);
        cmd.add_option("--face-grid", f.face_grid, "condition II subdivision per exit face m,m")
            ->delimiter(',')
            ->expected(2)
            ->check(CLI::PositiveNumber);
    }
    if (hyperbolicity) {
        cmd.add_option("--hyp-grid", f.hyp_grid, "cone condition subdivision k,k,k")
            ->delimiter(',')
            ->expected(3)
            ->check(CLI::PositiveNumber);
    }
    cmd.add_option("--map", f.map_family, "map to certify (identity is a negative control)")
        ->check(CLI::IsMember({"henon", "identity"}));
    cmd.add_option("--map-iterate", f.map_iterate, "iterate of the Henon map to certify")->check(CLI::PositiveNumber);
    cmd.add_option("--workers", f.workers, "worker threads (0 = available parallelism)");
    cmd.add_option("--max-failures", f.max_failures, "failing witnesses kept per check");
    cmd.add_option("--enclosure", f.enclosure, "image enclosure form")
        ->check(CLI::IsMember({"mean-value", "naive"}));
    cmd.add_option("--report", f.report_path, "write the JSON proof report here");
    cmd.add_option("--hsets", f.hsets_path, "JSON file with decimal-string definitions of h-sets a and b");
}

ProofOptions options_from(const VerifyFlags& f)
{
    ProofOptions o;
    o.map_family = f.map_family;
    o.map_iterate = f.map_iterate;
    o.covering.body_grid = f.body_grid;
    o.covering.face_grid = f.face_grid;
    o.covering.max_failures_reported = f.max_failures;
    o.hyperbolicity.grid = f.hyp_grid;
    o.hyperbolicity.max_failures_reported = f.max_failures;
    o.enclosure = parse_enclosure_form(f.enclosure);
    o.workers = f.workers;
    if (!f.hsets_path.empty()) {
        o.hsets = load_hset_definitions(f.hsets_path);
    }
    return o;
}

void print_summary(const ProofReport& r, std::ostream& out)
{
    for (const auto& c : r.coverings) {
        out << c.source << " => " << c.target << ": " << (c.passed ? "PASS" : "FAIL") << "  [condition I "
            << grid_string(c.body_grid) << ": " << c.condition_i.outside_unstable << " outside-unstable, "
            << c.condition_i.inside_stable << " inside-stable, " << c.condition_i.failed << " failed; condition II "
            << grid_string(c.face_grid) << " per face: " << c.condition_ii.failed() << " failed]\n";
    }
    if (r.hyperbolicity) {
        const auto& h = *r.hyperbolicity;
        for (const auto& m : h.maps) {
            out << "cone f_" << m.id << ": " << (m.passed() ? "PASS" : "FAIL") << "  [grid " << grid_string(h.grid)
                << ": " << m.skipped_disjoint << " skipped-disjoint, " << m.positive_definite
                << " positive-definite, " << m.failed << " failed]\n";
        }
    }
    for (const auto& c : r.conclusions) {
        out << "conclusion: " << c << "\n";
    }
    out << "verdict: " << (r.verdict ? "PASS" : "FAIL") << "\n";
}

int run_verify(const VerifyFlags& f, ProofScope scope, std::ostream& out)
{
    const ProofReport report = run_proof(options_from(f), scope);
    print_summary(report, out);
    if (!f.report_path.empty()) {
        write_report(report, f.report_path);
        out << "report: " << f.report_path << "\n";
    }
    return report.verdict ? kExitPass : kExitFail;
}

} // namespace

AttractorSampleResult write_attractor_sample(const Point3& seed, std::size_t transient, std::size_t count,
                                             std::ostream& csv)
{
    AttractorSampleResult result;
    csv << "# NON-RIGOROUS SAMPLE\nx,y,z\n";
    Point3 p = seed;
    for (std::size_t i = 0; i < transient; ++i) {
        auto next = eval_point_fast(p, 1);
        if (!next) {
            result.diverged = true;
            return result;
        }
        p = *next;
    }
    for (std::size_t i = 0; i < count; ++i) {
        auto next = eval_point_fast(p, 1);
        if (!next) {
            result.diverged = true;
            return result;
        }
        p = *next;
        csv << format_coord(p[0]) << ',' << format_coord(p[1]) << ',' << format_coord(p[2]) << '\n';
        ++result.rows_written;
    }
    return result;
}

int run_certify(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Rigorous covering-relation and cone-condition certificates for the 3D Henon map"};
    app.require_subcommand(1);

    VerifyFlags symbolic_flags;
    auto* symbolic = app.add_subcommand("verify-symbolic", "certify the covering chain a=>a=>b=>b=>a");
    add_verify_flags(*symbolic, symbolic_flags, true, false);

    VerifyFlags hyp_flags;
    auto* hyp = app.add_subcommand("verify-hyperbolicity", "certify the cone condition on a u b");
    add_verify_flags(*hyp, hyp_flags, false, true);

    VerifyFlags all_flags;
    auto* all = app.add_subcommand("verify-all", "both certificates in one report");
    add_verify_flags(*all, all_flags, true, true);

    std::string orbit_report;
    std::string word;
    auto* orbits = app.add_subcommand("periodic-orbits", "periodic orbit forced by a cyclic word over {a, b}");
    orbits->add_option("--report", orbit_report, "report from a verify run")->required();
    orbits->add_option("--word,word", word, "cyclic word such as abba")->required();

    std::vector<double> seed{0.0, 0.0, 0.0};
    std::size_t transient = 1000;
    std::size_t count = 100000;
    std::string out_path;
    auto* sample = app.add_subcommand("attractor-sample", "NON-RIGOROUS orbit sample of H for plotting");
    sample->add_option("--seed", seed, "x,y,z")->delimiter(',')->expected(3);
    sample->add_option("--transient", transient, "steps discarded before writing");
    sample->add_option("--count", count, "rows written");
    sample->add_option("--out", out_path, "CSV output path")->required();

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (symbolic->parsed()) {
            return run_verify(symbolic_flags, ProofScope::Symbolic, out);
        }
        if (hyp->parsed()) {
            return run_verify(hyp_flags, ProofScope::Hyperbolicity, out);
        }
        if (all->parsed()) {
            return run_verify(all_flags, ProofScope::All, out);
        }
        if (orbits->parsed()) {
            ProofReport report;
            try {
                report = read_report(orbit_report);
            } catch (const ParseError& e) {
                err << "refusing: " << e.what() << "\n";
                return kExitFail;
            }
            out << periodic_orbit_statement(report, word);
            return kExitPass;
        }
        if (sample->parsed()) {
            std::ofstream csv(out_path, std::ios::binary);
            if (!csv) {
                err << "cannot open " << out_path << "\n";
                return kExitUsage;
            }
            const auto r = write_attractor_sample({seed[0], seed[1], seed[2]}, transient, count, csv);
            if (r.diverged) {
                err << "orbit diverged; wrote " << r.rows_written << " rows\n";
                return kExitFail;
            }
            out << "wrote " << r.rows_written << " NON-RIGOROUS rows to " << out_path << "\n";
            return kExitPass;
        }
    } catch (const ConsequenceRefused& e) {
        err << "refusing: " << e.what() << "\n";
        return kExitFail;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace towel::cli
