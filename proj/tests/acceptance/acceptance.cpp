// Acceptance runner: prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "support/oracles.hpp"
#include "towel/report.hpp"

namespace fs = std::filesystem;
using namespace towel;
using namespace towel::testing;

namespace {

const fs::path kWork = fs::temp_directory_path() / "towel_acceptance";

struct Check {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what)
    {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

struct CliRun {
    int code = -1;
    std::string out;
};

CliRun certify(const std::string& args)
{
    static int counter = 0;
    const fs::path log = kWork / ("cli_" + std::to_string(counter++) + ".log");
    const std::string cmd = std::string("\"") + TOWEL_CERTIFY_PATH + "\" " + args + " > \"" + log.string() + "\" 2>&1";
    const int status = std::system(cmd.c_str());
    CliRun r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(log);
    std::ostringstream ss;
    ss << in.rdbuf();
    r.out = ss.str();
    return r;
}

std::string path_arg(const fs::path& p) { return "\"" + p.string() + "\""; }

std::string read_text(const fs::path& p)
{
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void report_line(const std::string& id, const std::string& title, const Check& c, bool& all)
{
    std::cout << id << ' ' << (c.ok ? "PASS" : "FAIL") << ": " << title;
    if (!c.ok) {
        std::cout << " (" << c.detail << ")";
    }
    std::cout << std::endl;
    all = all && c.ok;
}

const fs::path kFullReport = kWork / "full.json";

// 1. All four coverings at body 20^3 / faces 10^2 with zero failing witnesses.
Check coverings_at_default_grids()
{
    Check c;
    const CliRun run = certify("verify-all --body-grid 20,20,20 --face-grid 10,10 --hyp-grid 25,25,25 --report "
                               + path_arg(kFullReport));
    c.require(run.code == 0, "verify-all exit code " + std::to_string(run.code));
    if (!c.ok) {
        return c;
    }
    const ProofReport r = read_report(kFullReport);
    c.require(r.verdict && r.symbolic_verdict == true, "symbolic verdict false");
    c.require(r.coverings.size() == 4, "expected four covering certificates");
    const std::vector<std::string> pairs{"aa", "ab", "ba", "bb"};
    for (std::size_t i = 0; i < r.coverings.size() && i < 4; ++i) {
        const auto& cert = r.coverings[i];
        c.require(cert.source + cert.target == pairs[i], "unexpected relation order");
        c.require(cert.passed, cert.source + "=>" + cert.target + " failed");
        c.require(cert.condition_i.witnesses.empty() && cert.condition_ii.witnesses.empty(),
                  "nonempty witness list");
        c.require(cert.condition_i.boxes == 8000, "body box count");
        std::size_t parts = 0;
        for (const auto& f : cert.condition_ii.faces) {
            parts += f.parts;
        }
        c.require(parts == 400, "face part count");
        c.require(cert.body_grid == std::vector<std::size_t>{20, 20, 20}, "body grid");
        c.require(cert.face_grid == std::vector<std::size_t>{10, 10}, "face grid");
    }
    return c;
}

// 2. Cone condition at 25^3 on all four maps, and failure on the single box.
Check hyperbolicity_at_default_grid()
{
    Check c;
    if (!fs::exists(kFullReport)) {
        c.require(false, "no report from the full run");
        return c;
    }
    const ProofReport r = read_report(kFullReport);
    c.require(r.hyperbolicity.has_value() && r.hyperbolicity_verdict == true, "hyperbolicity verdict false");
    if (r.hyperbolicity) {
        const auto& h = *r.hyperbolicity;
        c.require(h.grid == std::vector<std::size_t>{25, 25, 25}, "grid");
        c.require(h.maps.size() == 4, "expected four maps");
        std::size_t decisions = 0;
        for (const auto& m : h.maps) {
            c.require(m.failed == 0 && m.witnesses.empty(), "map " + m.id + " failed");
            c.require(m.skipped_disjoint + m.positive_definite == m.boxes, "decision count for " + m.id);
            decisions += m.boxes;
        }
        c.require(decisions == 4 * 15625, "total decisions " + std::to_string(decisions));
    }
    const fs::path coarse = kWork / "coarse.json";
    const CliRun run = certify("verify-hyperbolicity --hyp-grid 1,1,1 --report " + path_arg(coarse));
    c.require(run.code == 1, "coarse grid exit code " + std::to_string(run.code));
    if (run.code == 1) {
        const ProofReport cr = read_report(coarse);
        bool all_fail = cr.hyperbolicity && cr.hyperbolicity->maps.size() == 4;
        for (const auto& m : cr.hyperbolicity->maps) {
            all_fail = all_fail && m.failed == 1 && !m.witnesses.empty();
        }
        c.require(all_fail, "coarse grid did not fail on every map");
    }
    return c;
}

Box random_box(Generator& gen, double scale)
{
    Box b(3);
    for (std::size_t i = 0; i < 3; ++i) {
        b[i] = gen.interval(scale);
    }
    return b;
}

// 3. 10^5 point-in-image checks and 10^4 inclusion-monotonicity cases.
Check enclosure_suite()
{
    Check c;
    Generator gen(20240601);
    const auto henon = std::make_shared<HenonMap>();
    std::size_t checks = 0;
    std::size_t violations = 0;
    const auto expect = [&](bool inside) {
        ++checks;
        violations += inside ? 0 : 1;
    };

    // Scalar operations.
    for (int i = 0; i < 40000; ++i) {
        const Interval x = gen.interval();
        const Interval y = gen.interval();
        const Rational px = exact(gen.member(x));
        const Rational py = exact(gen.member(y));
        switch (i % 5) {
        case 0:
            expect(contains_exact(x + y, px + py));
            break;
        case 1:
            expect(contains_exact(x - y, px - py));
            break;
        case 2:
            expect(contains_exact(x * y, px * py));
            break;
        case 3:
            expect(contains_exact(sqr(x), px * px));
            break;
        default:
            if (!y.contains_zero()) {
                expect(contains_exact(x / y, px / py));
            } else {
                expect(contains_exact(x * x, px * px));
            }
        }
    }
    // Matrix-vector products.
    for (int i = 0; i < 30000; ++i) {
        IMatrix m(3, 3);
        std::array<std::array<Rational, 3>, 3> pm;
        for (std::size_t r = 0; r < 3; ++r) {
            for (std::size_t k = 0; k < 3; ++k) {
                m(r, k) = gen.interval(2.0);
                pm[r][k] = exact(gen.member(m(r, k)));
            }
        }
        const Box v = random_box(gen, 2.0);
        const auto p = gen.point(v);
        const Box mv = m * v;
        const std::size_t r = static_cast<std::size_t>(i % 3);
        Rational sum = 0;
        for (std::size_t k = 0; k < 3; ++k) {
            sum += pm[r][k] * exact(p[k]);
        }
        expect(contains_exact(mv[r], sum));
    }
    // Iterates of H, both enclosure forms.
    for (int i = 0; i < 30000; ++i) {
        const std::size_t k = 1 + static_cast<std::size_t>(i % 4);
        Box x(3);
        for (std::size_t d = 0; d < 3; ++d) {
            const double centre = gen.uniform(-1.5, 1.5);
            const double radius = std::pow(10.0, -static_cast<double>(gen.integer(2, 8)));
            x[d] = Interval(centre - radius, centre + radius);
        }
        const auto p = gen.point(x);
        RationalPoint q{exact(p[0]), exact(p[1]), exact(p[2])};
        for (std::size_t s = 0; s < k; ++s) {
            q = henon_exact(q);
        }
        const IteratedMap f(henon, k);
        const Box image = f.enclose(x, i % 2 == 0 ? EnclosureForm::Naive : EnclosureForm::MeanValue);
        const std::size_t coord = static_cast<std::size_t>(gen.integer(0, 2));
        expect(contains_exact(image[coord], q[coord]));
    }
    c.require(checks == 100000, "ran " + std::to_string(checks) + " checks");
    c.require(violations == 0, std::to_string(violations) + " violations");

    std::size_t mono_failures = 0;
    for (int i = 0; i < 10000; ++i) {
        const Interval x = gen.interval();
        const Interval y = gen.interval();
        const Interval xs = gen.inner(x);
        const Interval ys = gen.inner(y);
        bool ok = (xs + ys).subset_of(x + y) && (xs - ys).subset_of(x - y) && (xs * ys).subset_of(x * y)
                  && sqr(xs).subset_of(sqr(x));
        if (!y.contains_zero()) {
            ok = ok && (xs / ys).subset_of(x / y);
        }
        Box bx(3);
        for (std::size_t d = 0; d < 3; ++d) {
            bx[d] = Interval(gen.uniform(-1.5, 0.0), gen.uniform(0.0, 1.5));
        }
        const Box bs = gen.box(bx);
        const IteratedMap f(henon, 1 + static_cast<std::size_t>(i % 4));
        ok = ok && f.eval(bs).subset_of(f.eval(bx));
        mono_failures += ok ? 0 : 1;
    }
    c.require(mono_failures == 0, std::to_string(mono_failures) + " monotonicity failures");
    return c;
}

Rational exact_minor(int k, const std::array<std::array<Rational, 3>, 3>& e)
{
    if (k == 1) {
        return e[0][0];
    }
    if (k == 2) {
        return e[0][0] * e[1][1] - e[0][1] * e[1][0];
    }
    return e[0][0] * (e[1][1] * e[2][2] - e[1][2] * e[2][1]) - e[0][1] * (e[1][0] * e[2][2] - e[1][2] * e[2][0])
           + e[0][2] * (e[1][0] * e[2][1] - e[1][1] * e[2][0]);
}

// 4. Sylvester verdicts against eigenvalues, determinants against integers.
Check oracle_equivalence()
{
    Check c;
    Generator gen(777);
    std::size_t false_positive = 0;
    std::size_t unexplained_negative = 0;
    std::size_t pd_seen = 0;
    for (int i = 0; i < 1000; ++i) {
        Eigen::Matrix3d b;
        for (int r = 0; r < 3; ++r) {
            for (int k = 0; k < 3; ++k) {
                b(r, k) = gen.uniform(-1, 1);
            }
        }
        Eigen::Matrix3d m = b.transpose() * b;
        m.diagonal().array() += gen.uniform(-0.6, 0.4);
        if (i % 10 == 0) {
            // Singular or nearly so.
            m -= (min_eigenvalue(m) + gen.uniform(-1e-12, 1e-12)) * Eigen::Matrix3d::Identity();
        }
        for (int r = 0; r < 3; ++r) {
            for (int k = 0; k < r; ++k) {
                m(r, k) = m(k, r);
            }
        }
        IMatrix im(3, 3);
        std::array<std::array<Rational, 3>, 3> e;
        for (int r = 0; r < 3; ++r) {
            for (int k = 0; k < 3; ++k) {
                im(r, k) = Interval(m(r, k));
                e[r][k] = exact(m(r, k));
            }
        }
        const bool interval_pd = is_positive_definite(im);
        const bool eigen_pd = min_eigenvalue(m) > 0;
        pd_seen += eigen_pd ? 1 : 0;
        bool exact_pd = true;
        bool near_zero = false;
        for (int k = 1; k <= 3; ++k) {
            const Rational minor = exact_minor(k, e);
            exact_pd = exact_pd && minor > 0;
            near_zero = near_zero || abs(minor) <= Rational(1, 10000000000LL);
        }
        if (interval_pd && (!eigen_pd || !exact_pd)) {
            ++false_positive;
        }
        if (!interval_pd && eigen_pd && !near_zero) {
            ++unexplained_negative;
        }
    }
    c.require(false_positive == 0, std::to_string(false_positive) + " false positives");
    c.require(unexplained_negative == 0, std::to_string(unexplained_negative) + " unexplained false negatives");
    c.require(pd_seen > 100 && pd_seen < 900, "unbalanced sample");

    std::size_t det_misses = 0;
    for (int i = 0; i < 1000; ++i) {
        std::array<std::array<long long, 3>, 3> a;
        IMatrix m(3, 3);
        for (std::size_t r = 0; r < 3; ++r) {
            for (std::size_t k = 0; k < 3; ++k) {
                a[r][k] = gen.integer(-1000000, 1000000);
                m(r, k) = Interval(static_cast<double>(a[r][k]));
            }
        }
        det_misses += contains_exact(det(m), Rational(det_exact(a))) ? 0 : 1;
    }
    c.require(det_misses == 0, std::to_string(det_misses) + " determinants not enclosed");
    return c;
}

const fs::path kIdentityReport = kWork / "identity.json";

// 5. Identity map and translated target both fail with witnesses, exit 1.
Check negative_controls()
{
    Check c;
    const CliRun id = certify("verify-symbolic --map identity --report " + path_arg(kIdentityReport));
    c.require(id.code == 1, "identity exit code " + std::to_string(id.code));
    if (id.code == 1) {
        const ProofReport r = read_report(kIdentityReport);
        const auto& aa = r.coverings.at(0);
        c.require(aa.source == "a" && aa.target == "a" && !aa.passed, "identity a=>a passed");
        c.require(!aa.condition_i.witnesses.empty() || !aa.condition_ii.witnesses.empty(), "identity: no witnesses");
    }

    const fs::path hsets = kWork / "translated_hsets.json";
    HSetDefinition moved = horseshoe_definition_a();
    moved.center[1] = "1.5225";
    {
        nlohmann::json j;
        j["a"] = horseshoe_definition_a();
        j["b"] = moved;
        std::ofstream(hsets) << j.dump(2);
    }
    const fs::path report = kWork / "translated.json";
    const CliRun tr = certify("verify-symbolic --hsets " + path_arg(hsets) + " --report " + path_arg(report));
    c.require(tr.code == 1, "translated exit code " + std::to_string(tr.code));
    if (tr.code == 1) {
        const ProofReport r = read_report(report);
        const auto& ab = r.coverings.at(1);
        c.require(ab.source == "a" && ab.target == "b" && !ab.passed, "a => translated a passed");
        c.require(!ab.condition_i.witnesses.empty() || !ab.condition_ii.witnesses.empty(),
                  "translated: no witnesses");
    }
    return c;
}

// 6. H maps a width-1e-8 box around the fixed point onto a set meeting it.
Check fixed_point_sanity()
{
    Check c;
    const BigFloat xs = henon_fixed_point();
    const double centre = static_cast<double>(xs);
    const Interval xi(centre - 5e-9, centre + 5e-9);
    c.require(BigFloat(xi.lo()) < xs && xs < BigFloat(xi.hi()), "box misses the fixed point");
    c.require(xi.width() <= 1.0000001e-8 && xi.width() >= 0.9999999e-8, "box width");
    const Box box{xi, xi, xi};
    const Box image = HenonMap().image(box);
    c.require(intersect(image, box).has_value(), "image is disjoint from the box");
    return c;
}

// 7. periodic-orbits succeeds only on a passing report.
Check consequence_gating()
{
    Check c;
    for (const std::string word : {"a", "ab", "abba"}) {
        const CliRun ok = certify("periodic-orbits --report " + path_arg(kFullReport) + " --word " + word);
        c.require(ok.code == 0 && ok.out.find("consequence:") != std::string::npos,
                  "passing report refused for " + word);
        const CliRun bad = certify("periodic-orbits --report " + path_arg(kIdentityReport) + " --word " + word);
        c.require(bad.code == 1 && bad.out.find("consequence:") == std::string::npos,
                  "failing report accepted for " + word);
        const CliRun none
            = certify("periodic-orbits --report " + path_arg(kWork / "absent.json") + " --word " + word);
        c.require(none.code == 1 && none.out.find("consequence:") == std::string::npos,
                  "absent report accepted for " + word);
    }
    return c;
}

std::string strip_timing(const std::string& text)
{
    static const std::regex timing("\"(wall_seconds|total_runtime_seconds)\": [-+0-9.eE]+");
    return std::regex_replace(text, timing, "\"$1\": 0");
}

// 8. Two identical verify-all runs give identical reports apart from timing.
Check determinism()
{
    Check c;
    const fs::path first = kWork / "det1.json";
    const fs::path second = kWork / "det2.json";
    c.require(certify("verify-all --report " + path_arg(first)).code == 0, "first run failed");
    c.require(certify("verify-all --report " + path_arg(second)).code == 0, "second run failed");
    const std::string a = read_text(first);
    const std::string b = read_text(second);
    c.require(!a.empty() && !b.empty(), "missing report");
    c.require(strip_timing(a) == strip_timing(b), "reports differ beyond timing fields");
    return c;
}

} // namespace

int main()
{
    fs::remove_all(kWork);
    fs::create_directories(kWork);
    bool all = true;
    report_line("AC1", "coverings a=>a, a=>b, b=>a, b=>b at body 20^3 / faces 10^2", coverings_at_default_grids(), all);
    report_line("AC2", "cone condition at 25^3 on four maps; 1^3 fails", hyperbolicity_at_default_grid(), all);
    report_line("AC3", "10^5 point-in-image checks, 10^4 monotonicity cases", enclosure_suite(), all);
    report_line("AC4", "Sylvester vs eigenvalues and integer determinants, 10^3 each", oracle_equivalence(), all);
    report_line("AC5", "identity and translated-target controls fail with exit 1", negative_controls(), all);
    report_line("AC6", "width-1e-8 fixed-point box meets its image", fixed_point_sanity(), all);
    report_line("AC7", "periodic-orbits gated on a passing report", consequence_gating(), all);
    report_line("AC8", "verify-all reports identical modulo timing", determinism(), all);
    fs::remove_all(kWork);
    return all ? 0 : 1;
}
