#include <circforce/graph_io.hpp>
#include <circforce/verify.hpp>

#include <gtest/gtest.h>

namespace circforce {
namespace {

VerificationReport run(const char* spec) { return verify(parse_circulant(spec)); }

int count_verdict(const VerificationReport& r, Verdict v)
{
    int n = 0;
    for (const auto& p : r.predictions)
        n += p.verdict == v;
    for (const auto& m : r.matrices)
        n += m.verdict == v;
    for (const auto& c : r.constructions)
        n += c.verdict == v;
    return n;
}

TEST(Verify, NineOneThreeIsFullyCertified)
{
    const VerificationReport r = run("C9(1,3)");
    ASSERT_TRUE(r.complete);
    EXPECT_EQ(r.z_search, 5);
    EXPECT_TRUE(r.witness_replayed);
    EXPECT_FALSE(r.contradicted());
    bool saw_c9 = false;
    for (const auto& m : r.matrices)
        if (m.name == "c9") {
            saw_c9 = true;
            EXPECT_EQ(m.nullity, 5);
            EXPECT_TRUE(m.symmetric);
            EXPECT_TRUE(m.pattern_matches);
            EXPECT_EQ(m.verdict, Verdict::Confirmed);
        }
    EXPECT_TRUE(saw_c9);
    EXPECT_EQ(count_verdict(r, Verdict::Contradicted), 0);
}

TEST(Verify, TorusCompleteGetsMatrixAndConstruction)
{
    const VerificationReport r = run("C12(1,4)");
    EXPECT_EQ(r.z_search, 6);
    ASSERT_FALSE(r.matrices.empty());
    EXPECT_EQ(r.matrices.front().nullity, 6);
    EXPECT_TRUE(r.matrices.front().pattern_matches);
    ASSERT_FALSE(r.constructions.empty());
    for (const auto& c : r.constructions) {
        EXPECT_TRUE(c.forcing) << c.name;
        EXPECT_GE(c.set.size(), *r.z_search);
    }
    EXPECT_FALSE(r.contradicted());
}

TEST(Verify, MultiplierRewritesStillGetCertificates)
{
    // C18(5,6) is C18(1,6) under i -> 11 i.
    const VerificationReport r = run("C18(5,6)");
    EXPECT_EQ(r.z_search, 6);
    bool pattern_ok = false;
    for (const auto& m : r.matrices)
        pattern_ok |= m.pattern_matches && m.nullity == 6;
    EXPECT_TRUE(pattern_ok);
    EXPECT_FALSE(r.contradicted());
}

TEST(Verify, DisconnectedSpecUsesComponents)
{
    const VerificationReport r = run("C12(3,6)");
    EXPECT_EQ(r.z_search, 9);
    EXPECT_EQ(r.prediction_intersection, (Interval{9, 9}));
    EXPECT_FALSE(r.contradicted());
}

TEST(Verify, CeilingMakesTheReportIncomplete)
{
    VerifyOptions options;
    options.ceiling = 8;
    const VerificationReport r = verify(parse_circulant("C12(1,4)"), options);
    EXPECT_FALSE(r.complete);
    EXPECT_TRUE(r.ceiling_exceeded);
    EXPECT_FALSE(r.z_search.has_value());
    EXPECT_FALSE(r.contradicted());
}

TEST(Verify, ContradictionIsDetected)
{
    VerificationReport r = run("C8(1,2)");
    ASSERT_FALSE(r.contradicted());
    r.predictions.front().verdict = Verdict::Contradicted;
    EXPECT_TRUE(r.contradicted());
}

TEST(Sweep, SmallSweepIsClean)
{
    SweepOptions options;
    options.max_n = 10;
    options.threads = 2;
    const SweepSummary s = sweep(options);
    EXPECT_TRUE(s.ok());
    EXPECT_EQ(s.reports.size(), connected_circulants(10).size());
    for (std::size_t i = 0; i < s.reports.size(); ++i)
        EXPECT_EQ(s.reports[i].spec, connected_circulants(10)[i]);
}

TEST(Sweep, ConnectedCirculantsAreConnectedAndOrdered)
{
    const auto specs = connected_circulants(9);
    for (const auto& s : specs)
        EXPECT_TRUE(is_connected(build_circulant(s)));
    for (std::size_t i = 1; i < specs.size(); ++i)
        EXPECT_LE(specs[i - 1].order(), specs[i].order());
    EXPECT_EQ(specs.front(), CirculantSpec(2, {1}));
}

} // namespace
} // namespace circforce
