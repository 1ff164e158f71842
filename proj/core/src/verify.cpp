#include <circforce/constructions.hpp>
#include <circforce/errors.hpp>
#include <circforce/search.hpp>
#include <circforce/verify.hpp>
#include <circforce/witness_matrices.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <thread>

namespace circforce {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

int certified_rank(const QuadMatrix& m)
{
    RationalMatrix r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            if (!m(i, j).is_rational())
                return rank(m);
            r(i, j) = m(i, j).rational_part();
        }
    return rank(r);
}

// Base spec of a prediction: the spec itself, or its reduced component when copies > 1.
// A family matched on the rewrite base * k; base vertex i is rewrite vertex k i.
int rewrite_vertex(const Prediction& p, int base_order, int i)
{
    return static_cast<int>((static_cast<long long>(p.multiplier) * i) % base_order);
}

QuadMatrix pull_back(const QuadMatrix& on_rewrite, const Prediction& p, const CirculantSpec& spec)
{
    const int n = spec.order();
    const int copies = p.copies;
    const int base = n / copies;
    QuadMatrix out(n, n);
    for (int v = 0; v < n; ++v)
        for (int w = 0; w < n; ++w)
            if (v % copies == w % copies)
                out(v, w) = on_rewrite(rewrite_vertex(p, base, v / copies), rewrite_vertex(p, base, w / copies));
    return out;
}

VertexMask pull_back(const FillState& on_rewrite, const Prediction& p, const CirculantSpec& spec)
{
    const int n = spec.order();
    const int base = n / p.copies;
    VertexMask out = 0;
    for (int v = 0; v < n; ++v)
        if (on_rewrite.has(rewrite_vertex(p, base, v / p.copies)))
            out |= bit(v);
    return out;
}

bool has_name(const auto& items, const std::string& name)
{
    return std::any_of(items.begin(), items.end(), [&](const auto& x) { return x.name == name; });
}

} // namespace

const char* to_string(Verdict v)
{
    switch (v) {
    case Verdict::Confirmed:
        return "confirmed";
    case Verdict::BoundConsistent:
        return "bound-consistent";
    case Verdict::Unchecked:
        return "unchecked";
    case Verdict::Contradicted:
        return "CONTRADICTED";
    }
    return "?";
}

std::vector<MatrixCertificate> witness_matrices_for(const CirculantSpec& spec,
                                                    const std::vector<Prediction>& predictions)
{
    std::vector<MatrixCertificate> out;
    if (spec.order() > kMaxOrder)
        return out;
    const Graph g = build_circulant(spec);
    for (const auto& p : predictions) {
        QuadMatrix block;
        std::vector<int> labels;
        std::string name;
        if (p.family == Family::TorusComplete && (p.parameter("m") == 4 || p.parameter("m") == 6)) {
            const int n = static_cast<int>(*p.parameter("n"));
            const int m = static_cast<int>(*p.parameter("m"));
            block = m == 4 ? witness_k4(n) : witness_k6(n);
            labels = block_to_circulant_labels(n, m);
            name = (m == 4 ? "k4:" : "k6:") + std::to_string(n);
        }
        else if (p.family == Family::NineOneThree) {
            block = lift(witness_c913());
            labels = block_to_circulant_labels(3, 3);
            name = "c9";
        }
        else
            continue;
        if (p.copies > 1)
            name += " x" + std::to_string(p.copies);
        if (has_name(out, name))
            continue;

        MatrixCertificate c;
        c.name = name;
        c.family = p.family;
        c.matrix = pull_back(permuted(block, labels), p, spec);
        c.rank = certified_rank(c.matrix);
        c.nullity = c.matrix.cols() - c.rank;
        c.symmetric = c.matrix.is_symmetric();
        c.pattern_matches = c.symmetric && pattern_graph(c.matrix) == g;
        c.equality_claimed = p.m_status == MStatus::ProvedEqualToZ;
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<ConstructionCheck> constructions_for(const CirculantSpec& spec,
                                                 const std::vector<Prediction>& predictions)
{
    std::vector<ConstructionCheck> out;
    if (spec.order() > kMaxOrder)
        return out;
    const Graph g = build_circulant(spec);
    for (const auto& p : predictions) {
        Construction kind;
        ConstructionParams params;
        if (p.family == Family::TorusComplete) {
            params.n = static_cast<int>(*p.parameter("n"));
            params.m = static_cast<int>(*p.parameter("m"));
            kind = params.m == 2   ? Construction::NeighborhoodMinusOne
                   : params.m == 3 ? Construction::MobiusThree
                                   : Construction::TwoColumns;
        }
        else if (p.family == Family::TorusCycle) {
            params.n = static_cast<int>(*p.parameter("n"));
            params.m = static_cast<int>(*p.parameter("m"));
            kind = Construction::CycleTorus;
        }
        else
            continue;
        std::string name = std::string(to_string(kind)) + ":" + std::to_string(params.n) + "," + std::to_string(params.m);
        if (p.copies > 1)
            name += " x" + std::to_string(p.copies);
        if (has_name(out, name))
            continue;

        ConstructionCheck c;
        c.name = name;
        c.set = FillState::of(g, pull_back(witness_set(kind, params), p, spec));
        c.forcing = closure(g, c.set).is_full();
        out.push_back(std::move(c));
    }
    return out;
}

bool VerificationReport::contradicted() const
{
    if (!prediction_intersection)
        return true;
    if (z_search && !witness_replayed)
        return true;
    if (z_search && lower_bounds && lower_bounds->value > *z_search)
        return true;
    const auto bad = [](const auto& x) { return x.verdict == Verdict::Contradicted; };
    return std::any_of(predictions.begin(), predictions.end(), bad) || std::any_of(matrices.begin(), matrices.end(), bad)
           || std::any_of(constructions.begin(), constructions.end(), bad);
}

VerificationReport verify(const CirculantSpec& spec, const VerifyOptions& options)
{
    const auto start = Clock::now();
    VerificationReport r(spec);
    const auto predictions = predict(spec);
    r.prediction_intersection = intersect(predictions);
    for (const auto& p : predictions)
        r.predictions.push_back({p, Verdict::Unchecked, "none"});

    if (spec.order() > kMaxOrder) {
        r.complete = false;
        r.incomplete_reason = "order exceeds " + std::to_string(kMaxOrder) + " vertices";
        r.ceiling_exceeded = true;
        r.total_seconds = seconds_since(start);
        return r;
    }

    const Graph g = build_circulant(spec);
    r.lower_bounds = zf_lower_bounds(g);

    SearchOptions search;
    search.ceiling = options.ceiling;
    search.hints = SearchBounds{1, g.order()};
    search.vertex_transitive = true;
    search.fort_pruning = options.fort_pruning;
    search.threads = options.threads;
    if (options.budget_seconds)
        search.deadline = start + std::chrono::duration_cast<Clock::duration>(
                                      std::chrono::duration<double>(*options.budget_seconds));
    const auto search_start = Clock::now();
    try {
        const ZfResult z = zf_exact(g, search);
        r.z_search = z.z;
        r.witness = z.witness;
        const auto certificate = is_forcing_set(g, z.witness);
        r.witness_replayed = certificate && replay(g, *certificate) && z.witness.size() == z.z;
    }
    catch (const SearchCeilingExceeded& e) {
        r.complete = false;
        r.ceiling_exceeded = true;
        r.incomplete_reason = e.what();
    }
    catch (const BudgetExhausted& e) {
        r.complete = false;
        r.incomplete_reason = e.what();
    }
    r.search_seconds = seconds_since(search_start);

    r.matrices = witness_matrices_for(spec, predictions);
    r.constructions = constructions_for(spec, predictions);

    for (auto& m : r.matrices) {
        if (!m.symmetric || !m.pattern_matches)
            m.verdict = Verdict::Contradicted;
        else if (r.z_search)
            m.verdict = m.nullity > *r.z_search || (m.equality_claimed && m.nullity != *r.z_search)
                            ? Verdict::Contradicted
                            : Verdict::Confirmed;
        else
            m.verdict = Verdict::BoundConsistent;
    }
    for (auto& c : r.constructions) {
        if (!c.forcing || (r.z_search && c.set.size() < *r.z_search))
            c.verdict = Verdict::Contradicted;
        else
            c.verdict = r.z_search ? Verdict::Confirmed : Verdict::BoundConsistent;
    }

    for (auto& check : r.predictions) {
        const Interval z = check.prediction.z;
        // M <= Z: a certified nullity is a lower bound on Z; a forcing set an upper bound.
        bool inconsistent = false;
        for (const auto& m : r.matrices)
            if (m.verdict != Verdict::Contradicted && m.nullity > z.upper)
                inconsistent = true;
        for (const auto& c : r.constructions)
            if (c.forcing && c.set.size() < z.lower)
                inconsistent = true;
        if (r.z_search) {
            check.method = "search";
            check.verdict = !z.contains(*r.z_search) || inconsistent ? Verdict::Contradicted
                            : z.exact()                              ? Verdict::Confirmed
                                                                     : Verdict::BoundConsistent;
        }
        else {
            check.method = "certificates";
            check.verdict = inconsistent ? Verdict::Contradicted : Verdict::Unchecked;
        }
    }
    r.total_seconds = seconds_since(start);
    return r;
}

std::vector<CirculantSpec> connected_circulants(int max_n)
{
    std::vector<CirculantSpec> out;
    for (int n = 2; n <= max_n; ++n) {
        const int half = n / 2;
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << half); ++mask) {
            std::vector<int> connections;
            for (int s = 1; s <= half; ++s)
                if ((mask >> (s - 1)) & 1U)
                    connections.push_back(s);
            CirculantSpec spec(n, std::move(connections));
            if (is_connected(spec))
                out.push_back(std::move(spec));
        }
    }
    return out;
}

SweepSummary sweep(const SweepOptions& options)
{
    const auto specs = connected_circulants(options.max_n);
    std::vector<std::optional<VerificationReport>> reports(specs.size());
    const unsigned threads =
        options.threads == 0 ? std::max(1U, std::thread::hardware_concurrency()) : options.threads;

    std::atomic<std::size_t> next{0};
    std::mutex lock;
    std::exception_ptr failure;
    const auto work = [&] {
        try {
            for (std::size_t i = next++; i < specs.size(); i = next++)
                reports[i] = verify(specs[i], options.verify);
        }
        catch (...) {
            std::lock_guard guard(lock);
            if (!failure)
                failure = std::current_exception();
            next = specs.size();
        }
    };
    if (threads <= 1)
        work();
    else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back(work);
        for (auto& t : pool)
            t.join();
    }
    if (failure)
        std::rethrow_exception(failure);

    SweepSummary summary;
    for (auto& r : reports)
        summary.reports.push_back(std::move(*r));
    for (const auto& r : summary.reports) {
        if (!r.complete)
            ++summary.incomplete;
        if (r.contradicted())
            ++summary.contradictions;
        for (const auto& check : r.predictions) {
            if (check.verdict == Verdict::Confirmed)
                ++summary.confirmed;
            else if (check.verdict == Verdict::BoundConsistent)
                ++summary.bound_consistent;
        }
    }
    return summary;
}

} // namespace circforce
