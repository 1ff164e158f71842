#include <circforce/families.hpp>
#include <circforce/graph_io.hpp>
#include <circforce/search.hpp>
#include <circforce/verify.hpp>

#include <gtest/gtest.h>

#include <algorithm>

namespace circforce {
namespace {

std::vector<Prediction> of(const char* spec) { return predict(parse_circulant(spec)); }

const Prediction* find(const std::vector<Prediction>& ps, Family f)
{
    const auto it = std::find_if(ps.begin(), ps.end(), [&](const Prediction& p) { return p.family == f; });
    return it == ps.end() ? nullptr : &*it;
}

Interval combined(const char* spec)
{
    const auto i = intersect(of(spec));
    EXPECT_TRUE(i.has_value()) << spec;
    return i.value_or(Interval{});
}

TEST(Families, SingleFamilyValues)
{
    const auto c8 = of("C8(1,2)");
    ASSERT_NE(find(c8, Family::Consecutive), nullptr);
    EXPECT_EQ(find(c8, Family::Consecutive)->z, (Interval{4, 4}));
    EXPECT_EQ(find(c8, Family::Consecutive)->m_status, MStatus::ProvedEqualToZ);

    const auto c14 = of("C14(3,5,7)");
    ASSERT_NE(find(c14, Family::BipartiteOddBand), nullptr);
    EXPECT_EQ(find(c14, Family::BipartiteOddBand)->parameter("l"), 2);
    EXPECT_EQ(combined("C14(3,5,7)"), (Interval{8, 8}));

    EXPECT_EQ(combined("C12(3,6)"), (Interval{9, 9}));
    EXPECT_NE(find(of("C12(3,6)"), Family::Cubic), nullptr);
    EXPECT_EQ(combined("C10(2,5)"), (Interval{4, 4}));
    EXPECT_EQ(combined("C9(1,3)"), (Interval{5, 5}));
    EXPECT_EQ(combined("C4(1,2)"), (Interval{3, 3}));
    EXPECT_EQ(combined("C5(1)"), (Interval{2, 2}));
    EXPECT_EQ(combined("C12(1,4)"), (Interval{6, 6}));
    EXPECT_EQ(combined("C15(1,3)"), (Interval{6, 6}));
}

TEST(Families, TorusCycleIntervalWithUnknownM)
{
    const auto c16 = of("C16(1,4)");
    const Prediction* p = find(c16, Family::TorusCycle);
    ASSERT_NE(p, nullptr);
    EXPECT_EQ(p->z.lower, 6);
    EXPECT_LE(p->z.upper, 8);
    EXPECT_EQ(p->m_status, MStatus::Unknown);
}

TEST(Families, OverlappingFamiliesAgree)
{
    const auto c12 = of("C12(1,3,5)");
    const Prediction* even = find(c12, Family::BipartiteEvenBand);
    const Prediction* initial = find(c12, Family::BipartiteInitialOdd);
    ASSERT_NE(even, nullptr);
    ASSERT_NE(initial, nullptr);
    EXPECT_EQ(even->parameter("l"), 2);
    EXPECT_EQ(initial->parameter("l"), 3);
    EXPECT_EQ(even->z, (Interval{10, 10}));
    EXPECT_EQ(initial->z, even->z);
}

TEST(Families, FallbacksAreAlwaysLast)
{
    for (const auto& spec : connected_circulants(12)) {
        if (spec.order() < 3)
            continue; // K_2 has no cycle, hence no girth bound
        const auto ps = predict(spec);
        ASSERT_GE(ps.size(), 2u);
        EXPECT_EQ(ps[ps.size() - 2].family, Family::RegularDegree);
        EXPECT_EQ(ps.back().family, Family::GirthDegree);
    }
}

TEST(Families, DisconnectedSpecsScaleTheirComponent)
{
    for (int n = 4; n <= 24; ++n)
        for (int g = 2; g <= n / 2; ++g) {
            if (n % g != 0)
                continue;
            for (const auto& reduced : connected_circulants(n / g)) {
                if (reduced.order() != n / g)
                    continue;
                std::vector<int> s;
                for (int x : reduced.connections())
                    s.push_back(g * x);
                const CirculantSpec spec(n, s);
                const auto whole = intersect(predict(spec));
                const auto piece = intersect(predict(reduced));
                ASSERT_TRUE(whole && piece) << spec.to_string();
                EXPECT_LE(whole->lower, g * piece->upper) << spec.to_string();
                EXPECT_GE(whole->upper, g * piece->lower) << spec.to_string();
                if (piece->exact()) {
                    EXPECT_TRUE(whole->exact()) << spec.to_string();
                    EXPECT_EQ(whole->lower, g * piece->lower) << spec.to_string();
                }
            }
        }
}

TEST(Families, InvariantUnderMultiplierRewrites)
{
    for (const auto& spec : connected_circulants(14))
        for (int k : multiplier_units(spec.order()))
            EXPECT_EQ(intersect(predict(multiply(spec, k))), intersect(predict(spec))) << spec.to_string() << " k=" << k;
}

TEST(Families, PredictionsContainTheSearchValue)
{
    SearchOptions options;
    options.vertex_transitive = true;
    for (const auto& spec : connected_circulants(12)) {
        const int z = zf_exact(build_circulant(spec), options).z;
        for (const auto& p : predict(spec))
            EXPECT_TRUE(p.z.contains(z)) << spec.to_string() << " " << to_string(p.family);
    }
}

TEST(Families, IntersectDetectsInconsistency)
{
    Prediction a, b;
    a.z = {2, 4};
    b.z = {5, 6};
    EXPECT_FALSE(intersect({a, b}).has_value());
    b.z = {4, 9};
    EXPECT_EQ(intersect({a, b}), (Interval{4, 4}));
}

} // namespace
} // namespace circforce
