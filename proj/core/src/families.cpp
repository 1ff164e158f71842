#include <circforce/biadjacency.hpp>
#include <circforce/bounds.hpp>
#include <circforce/families.hpp>

#include <algorithm>
#include <numeric>
#include <tuple>

namespace circforce {

namespace {

using Params = std::vector<std::pair<std::string, long long>>;

Prediction make_prediction(Family f, Interval z, MStatus status, std::string citation, Params params)
{
    Prediction p;
    p.family = f;
    p.z = z;
    p.m_status = status;
    p.citation = std::move(citation);
    p.parameters = std::move(params);
    return p;
}

Prediction exact(Family f, int z, bool m_equal, std::string citation, Params params)
{
    return make_prediction(f, {z, z}, m_equal ? MStatus::ProvedEqualToZ : MStatus::Unknown, std::move(citation),
                           std::move(params));
}

bool is_range(const std::vector<int>& s, int first, int step)
{
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i] != first + static_cast<int>(i) * step)
            return false;
    return true;
}

// Families whose statements are syntactic in the connection set. `spec` is one rewrite;
// every match is appended to `out`.
void match_syntactic(const CirculantSpec& spec, std::vector<Prediction>& out)
{
    const int n = spec.order();
    const auto& s = spec.connections();
    const int size = spec.size();
    const int half = n / 2;

    if (size == 1 && n >= 3 && std::gcd(n, s[0]) == 1)
        out.push_back(exact(Family::Cycle, 2, true, "cycle", {{"n", n}, {"j", s[0]}}));

    if (n >= 5 && size == half - 1) {
        // {1..⌊n/2⌋} minus exactly one element j.
        int missing = 0;
        for (int v = 1, i = 0; v <= half; ++v) {
            if (i < size && s[static_cast<std::size_t>(i)] == v)
                ++i;
            else if (missing == 0)
                missing = v;
            else
                missing = -1;
        }
        if (missing > 0 && std::gcd(n, missing) == 1)
            out.push_back(exact(Family::CycleComplement, n - 3, true, "cycle-complement", {{"n", n}, {"j", missing}}));
    }

    if (size == half && is_range(s, 1, 1))
        out.push_back(exact(Family::Complete, n - 1, true, "complete", {{"n", n}}));

    if (is_range(s, 1, 1) && 2 * size < n)
        out.push_back(exact(Family::Consecutive, 2 * size, true, "consecutive", {{"n", n}, {"d", size}}));

    if (s[0] >= 2 && is_range(s, s[0], s[0])) {
        const int step = s[0], t = size;
        if (1 < t * step && 2 * t * step < n) {
            if (n % step == 0)
                out.push_back(exact(Family::ConsecutiveMultiple, 2 * step * t, true, "consecutive-multiple/divisor",
                                    {{"n", n}, {"s", step}, {"t", t}}));
            else if (std::gcd(n, step) == 1)
                out.push_back(exact(Family::ConsecutiveMultiple, 2 * t, true, "consecutive-multiple/unit",
                                    {{"n", n}, {"s", step}, {"t", t}}));
        }
    }

    if (n % 2 == 0) {
        const int h = n / 2;
        const int l = size - 1;
        if (h % 2 == 1 && l >= 1 && h >= 2 * l + 2 && is_range(s, h - 2 * l, 2))
            out.push_back(exact(Family::BipartiteOddBand, 4 * l, true, "bipartite-odd-band", {{"n", h}, {"l", l}}));
        if (h % 2 == 0 && l >= 1 && h >= 2 * l + 2 && is_range(s, h - 2 * l - 1, 2))
            out.push_back(exact(Family::BipartiteEvenBand, 4 * l + 2, true, "bipartite-even-band", {{"n", h}, {"l", l}}));
        const int lo = size;
        if (h > 1 && is_range(s, 1, 2)) {
            if (2 * lo - 1 <= h - 1)
                out.push_back(exact(Family::BipartiteInitialOdd, 4 * lo - 2, true, "bipartite-initial-odd",
                                    {{"n", h}, {"l", lo}}));
            else if (2 * lo - 1 == h)
                out.push_back(exact(Family::BipartiteComplete, 4 * lo - 4, true, "bipartite-complete",
                                    {{"n", h}, {"l", lo}}));
        }
    }

    // C_{n'm}(1, m, 2m, ..., bm) ≅ K_{n'} ⊠ C_m.
    if (size >= 2 && s[0] == 1) {
        const int m = s[1];
        if (m >= 2 && n % m == 0) {
            const int np = n / m;
            const int b = np / 2;
            std::vector<int> tail(s.begin() + 1, s.end());
            if (np >= 3 && static_cast<int>(tail.size()) == b && is_range(tail, m, m)) {
                const int z = m == 2 ? np + 1 : m == 3 ? 2 * np - 1 : 2 * np;
                const bool m_equal = m == 4 || m == 6;
                const std::string c = m == 2   ? "torus-complete/m=2"
                                      : m == 3 ? "torus-complete/m=3"
                                      : m_equal ? "torus-complete/m=" + std::to_string(m) + "+max-nullity"
                                                : "torus-complete/m>=4";
                out.push_back(exact(Family::TorusComplete, z, m_equal, c, {{"n", np}, {"m", m}, {"b", b}}));
            }
        }
    }

    if (size == 2 && s[0] == 1) {
        const int q = s[1];
        if (q >= 3 && n % q == 0 && n / q >= 3) {
            const int u = n / q;
            const int lower = 3 * q == n ? 4 : 6;
            const int upper = u == q ? 2 * q - 1 : 2 * std::min(u, q);
            out.push_back(make_prediction(Family::TorusCycle, {lower, upper}, MStatus::Unknown, "torus-cycle",
                                          {{"n", u}, {"m", q}, {"t", q}}));
        }
        if (q == 3 && n % 3 == 0 && n / 3 >= 3) {
            const int m = n / 3;
            out.push_back(exact(Family::TorusCycleThree, m > 3 ? 6 : 5, m == 3, "torus-cycle-three", {{"m", m}}));
        }
        if (n == 9 && q == 3)
            out.push_back(exact(Family::NineOneThree, 5, true, "nine-one-three", {}));
    }

    // Cubic: C_{2m}(a, m), 1 <= a < m.
    if (size == 2 && n % 2 == 0 && s[1] == n / 2) {
        const int m = n / 2, a = s[0];
        const int t = std::gcd(a, n);
        const int q = n / t;
        int z;
        std::string c;
        if (q % 2 == 0) {
            z = m == 2 * t ? 3 * t : 4 * t;
            c = m == 2 * t ? "cubic/even,m=2t" : "cubic/even,m>=3t";
        }
        else {
            z = 2 * m == 3 * t ? m : 2 * t;
            c = 2 * m == 3 * t ? "cubic/odd,2m=3t" : "cubic/odd";
        }
        out.push_back(exact(Family::Cubic, z, true, c, {{"m", m}, {"a", a}, {"t", t}}));
        if (a == 1)
            out.push_back(exact(Family::CubicOneM, m == 2 ? 3 : 4, true, "cubic-one-m", {{"m", m}}));
        if (a == 2 && m >= 3) {
            const int z2 = m % 2 == 1 ? std::min(m, 4) : m == 4 ? 6 : 8;
            out.push_back(exact(Family::CubicTwoM, z2, true, "cubic-two-m", {{"m", m}}));
        }
    }
}

void match_sequential(const CirculantSpec& spec, std::vector<Prediction>& out)
{
    if (spec.order() % 2 != 0 || !is_connected(spec) || !is_bipartite(spec))
        return;
    const int h = spec.order() / 2;
    const auto exponents = biadjacency_exponents(spec);
    // K_2 (t = 0) is excluded: its zero forcing number is 1, not 2t.
    if (const auto form = sequential_normalize(exponents, h); form && form->t >= 1)
        out.push_back(exact(Family::BipartiteSequential, 2 * form->t, true, "bipartite-sequential",
                            {{"n", h}, {"a", form->a}, {"b", form->b}, {"t", form->t}}));
}

Prediction scaled(Prediction p, int copies)
{
    p.z.lower *= copies;
    p.z.upper *= copies;
    p.m_lower *= copies;
    p.copies = copies;
    return p;
}

void match_rewrites(const CirculantSpec& spec, int copies, std::vector<Prediction>& out)
{
    for (int k : multiplier_units(spec.order())) {
        const CirculantSpec rewrite = multiply(spec, k);
        std::vector<Prediction> found;
        match_syntactic(rewrite, found);
        // Sequential normal form is already invariant under multipliers.
        if (k == 1)
            match_sequential(rewrite, found);
        for (auto& p : found) {
            p.multiplier = k;
            p.matched = rewrite;
            out.push_back(scaled(std::move(p), copies));
        }
    }
}

} // namespace

const char* to_string(Family f)
{
    switch (f) {
    case Family::Cycle:
        return "cycle";
    case Family::CycleComplement:
        return "cycle-complement";
    case Family::Complete:
        return "complete";
    case Family::Consecutive:
        return "consecutive";
    case Family::ConsecutiveMultiple:
        return "consecutive-multiple";
    case Family::BipartiteOddBand:
        return "bipartite-odd-band";
    case Family::BipartiteEvenBand:
        return "bipartite-even-band";
    case Family::BipartiteInitialOdd:
        return "bipartite-initial-odd";
    case Family::BipartiteComplete:
        return "bipartite-complete";
    case Family::BipartiteSequential:
        return "bipartite-sequential";
    case Family::TorusComplete:
        return "torus-complete";
    case Family::TorusCycle:
        return "torus-cycle";
    case Family::TorusCycleThree:
        return "torus-cycle-three";
    case Family::NineOneThree:
        return "nine-one-three";
    case Family::Cubic:
        return "cubic";
    case Family::CubicOneM:
        return "cubic-one-m";
    case Family::CubicTwoM:
        return "cubic-two-m";
    case Family::RegularDegree:
        return "regular-degree";
    case Family::GirthDegree:
        return "girth-degree";
    }
    return "?";
}

const char* to_string(MStatus s)
{
    switch (s) {
    case MStatus::ProvedEqualToZ:
        return "proved-equal";
    case MStatus::LowerBound:
        return "lower-bound";
    case MStatus::Unknown:
        return "unknown";
    }
    return "?";
}

std::optional<long long> Prediction::parameter(const std::string& name) const
{
    for (const auto& [key, value] : parameters)
        if (key == name)
            return value;
    return std::nullopt;
}

std::vector<Prediction> predict(const CirculantSpec& spec)
{
    std::vector<Prediction> all;
    match_rewrites(spec, 1, all);
    const auto [copies, reduced] = decompose(spec);
    if (copies > 1)
        match_rewrites(reduced, copies, all);

    std::vector<Prediction> out;
    for (auto& p : all) {
        const bool duplicate = std::any_of(out.begin(), out.end(), [&](const Prediction& q) {
            return q.family == p.family && q.parameters == p.parameters && q.copies == p.copies && q.z == p.z;
        });
        if (!duplicate)
            out.push_back(std::move(p));
    }
    std::stable_sort(out.begin(), out.end(), [](const Prediction& a, const Prediction& b) {
        return std::tie(a.family, a.copies, a.multiplier) < std::tie(b.family, b.copies, b.multiplier);
    });

    const int n = spec.order();
    Prediction regular = make_prediction(Family::RegularDegree, {copies * reduced.degree(), n}, MStatus::Unknown,
                                         "regular-degree", {{"degree", reduced.degree()}});
    regular.copies = copies;
    regular.matched = reduced;
    out.push_back(std::move(regular));

    if (reduced.order() <= kMaxOrder) {
        const Graph h = build_circulant(reduced);
        if (const auto bound = girth_degree_bound(h)) {
            Prediction p = make_prediction(Family::GirthDegree, {copies * *bound, n}, MStatus::Unknown, "girth-degree",
                                           {{"girth", *girth(h)}, {"delta", h.min_degree()}});
            p.copies = copies;
            p.matched = reduced;
            out.push_back(std::move(p));
        }
    }
    return out;
}

std::optional<Interval> intersect(const std::vector<Prediction>& predictions)
{
    if (predictions.empty())
        return std::nullopt;
    Interval out = predictions.front().z;
    for (const auto& p : predictions) {
        out.lower = std::max(out.lower, p.z.lower);
        out.upper = std::min(out.upper, p.z.upper);
    }
    if (out.lower > out.upper)
        return std::nullopt;
    return out;
}

} // namespace circforce
