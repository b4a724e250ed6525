#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "towel/report.hpp"

namespace towel {
namespace {

const ProofReport& full_report()
{
    static const ProofReport report = run_proof(ProofOptions{}, ProofScope::All);
    return report;
}

ProofReport without_edge(ProofReport r, const std::string& source, const std::string& target)
{
    for (auto& c : r.coverings) {
        if (c.source == source && c.target == target) {
            c.passed = false;
            c.condition_i.failed = 1;
        }
    }
    r.symbolic_verdict = false;
    r.verdict = false;
    return r;
}

TEST(ProofScope, Names)
{
    EXPECT_EQ(to_string(ProofScope::Symbolic), "symbolic");
    EXPECT_EQ(parse_proof_scope("hyperbolicity"), ProofScope::Hyperbolicity);
    EXPECT_EQ(parse_proof_scope("all"), ProofScope::All);
    EXPECT_THROW(parse_proof_scope("everything"), ParseError);
}

TEST(RunProof, FullScopePasses)
{
    const ProofReport& r = full_report();
    EXPECT_TRUE(r.verdict);
    EXPECT_EQ(r.symbolic_verdict, true);
    EXPECT_EQ(r.hyperbolicity_verdict, true);
    ASSERT_EQ(r.coverings.size(), 4u);
    EXPECT_EQ(r.coverings[0].source + r.coverings[0].target, "aa");
    EXPECT_EQ(r.coverings[1].source + r.coverings[1].target, "ab");
    EXPECT_EQ(r.coverings[2].source + r.coverings[2].target, "ba");
    EXPECT_EQ(r.coverings[3].source + r.coverings[3].target, "bb");
    ASSERT_TRUE(r.hyperbolicity.has_value());
    EXPECT_EQ(r.hyperbolicity->maps.size(), 4u);
    EXPECT_FALSE(r.conclusions.empty());
    EXPECT_EQ(r.hsets.size(), 2u);
}

TEST(RunProof, ScopeLimitsFragments)
{
    ProofOptions opt;
    opt.hyperbolicity.grid = {1, 1, 1};
    const ProofReport sym = run_proof(opt, ProofScope::Symbolic);
    EXPECT_TRUE(sym.verdict);
    EXPECT_FALSE(sym.hyperbolicity.has_value());
    EXPECT_FALSE(sym.hyperbolicity_verdict.has_value());

    const ProofReport hyp = run_proof(opt, ProofScope::Hyperbolicity);
    EXPECT_FALSE(hyp.verdict);
    EXPECT_TRUE(hyp.coverings.empty());
    EXPECT_EQ(hyp.hyperbolicity_verdict, false);
    EXPECT_TRUE(hyp.conclusions.empty());
}

TEST(RunProof, MissingHSetRejected)
{
    ProofOptions opt;
    opt.hsets.erase("b");
    EXPECT_THROW(run_proof(opt, ProofScope::Symbolic), ArgumentError);
}

TEST(CoveringGraph, EdgesFollowPassedCertificates)
{
    const CoveringGraph g(full_report());
    EXPECT_TRUE(g.has_edge("a", "b"));
    EXPECT_TRUE(g.is_horseshoe("a", "b"));
    const CoveringGraph broken(without_edge(full_report(), "b", "a"));
    EXPECT_FALSE(broken.has_edge("b", "a"));
    EXPECT_TRUE(broken.has_edge("a", "a"));
    EXPECT_FALSE(broken.is_horseshoe("a", "b"));
}

TEST(PeriodicOrbit, StatementForAbba)
{
    const std::string s = periodic_orbit_statement(full_report(), "abba");
    EXPECT_NE(s.find("covering chain: a => b => b => a => a"), std::string::npos);
    EXPECT_NE(s.find("H^16(x) = x"), std::string::npos);
    EXPECT_NE(s.find("H^4(x) in int|b|"), std::string::npos);
    EXPECT_NE(s.find("H^12(x) in int|a|"), std::string::npos);
}

TEST(PeriodicOrbit, FixedPointWord)
{
    const std::string s = periodic_orbit_statement(full_report(), "a");
    EXPECT_NE(s.find("there exists x in int|a| with H^4(x) = x."), std::string::npos);
}

TEST(PeriodicOrbit, Refusals)
{
    EXPECT_THROW(periodic_orbit_statement(full_report(), ""), ArgumentError);
    EXPECT_THROW(periodic_orbit_statement(full_report(), "abc"), ArgumentError);
    EXPECT_THROW(periodic_orbit_statement(without_edge(full_report(), "a", "b"), "ab"), ConsequenceRefused);
    ProofReport hyp_only = full_report();
    hyp_only.coverings.clear();
    hyp_only.symbolic_verdict.reset();
    EXPECT_THROW(periodic_orbit_statement(hyp_only, "a"), ConsequenceRefused);
}

TEST(ReportJson, RoundTrip)
{
    const ProofReport& r = full_report();
    const std::string text = serialize_report(r);
    const ProofReport back = parse_report(text);
    EXPECT_EQ(back, r);
    EXPECT_EQ(serialize_report(back), text);
}

TEST(ReportJson, IntervalsAreEndpointPairs)
{
    nlohmann::json j = Interval(-0.5, 2.0);
    EXPECT_EQ(j, nlohmann::json::parse("[-0.5, 2.0]"));
    EXPECT_EQ(j.get<Interval>(), Interval(-0.5, 2.0));
    EXPECT_THROW(nlohmann::json::parse("[2.0, -0.5]").get<Interval>(), ArgumentError);
}

TEST(ReportJson, MalformedRejected)
{
    EXPECT_THROW(parse_report("{"), ParseError);
    EXPECT_THROW(parse_report("{\"version\": \"1.0.0\"}"), ParseError);
}

TEST(ReportJson, FileRoundTrip)
{
    const auto path = std::filesystem::temp_directory_path() / "towel_report_roundtrip.json";
    write_report(full_report(), path);
    EXPECT_EQ(read_report(path), full_report());
    std::filesystem::remove(path);
    EXPECT_THROW(read_report(path), ParseError);
}

} // namespace
} // namespace towel
