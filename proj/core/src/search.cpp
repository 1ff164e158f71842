#include <circforce/bounds.hpp>
#include <circforce/errors.hpp>
#include <circforce/search.hpp>

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace circforce {

namespace {

constexpr std::uint64_t kDeadlineStride = 1024;
constexpr std::size_t kMaxForts = 256;

struct SizeSearch {
    const Graph& g;
    int k;
    bool vertex_transitive;
    bool fort_pruning;
    std::optional<std::chrono::steady_clock::time_point> deadline;

    int free_bits() const { return vertex_transitive ? g.order() - 1 : g.order(); }
    int free_size() const { return vertex_transitive ? k - 1 : k; }
    VertexMask base() const { return vertex_transitive ? bit(0) : 0; }
    int shift() const { return vertex_transitive ? 1 : 0; }
};

struct Worker {
    std::vector<VertexMask> forts;
    std::uint64_t candidates = 0;
    std::uint64_t pruned = 0;

    void add_counts_to(ZfResult& out) const
    {
        out.candidates += candidates;
        out.pruned += pruned;
    }

    bool hits_every_fort(VertexMask mask) const
    {
        return std::all_of(forts.begin(), forts.end(), [mask](VertexMask f) { return (f & mask) != 0; });
    }

    // Returns true when the candidate forces.
    bool test(const SizeSearch& s, VertexMask mask)
    {
        if (++candidates % kDeadlineStride == 0 && s.deadline && std::chrono::steady_clock::now() > *s.deadline)
            throw BudgetExhausted("search budget exhausted at size " + std::to_string(s.k));
        if (s.fort_pruning && !hits_every_fort(mask)) {
            ++pruned;
            return false;
        }
        const VertexMask closed = close_mask(s.g, mask);
        if (closed == s.g.vertices())
            return true;
        if (s.fort_pruning && forts.size() < kMaxForts)
            forts.push_back(s.g.vertices() & ~closed);
        return false;
    }

    // Least forcing mask among candidates whose highest free bit is `top`.
    std::optional<VertexMask> bucket(const SizeSearch& s, int top)
    {
        const int rest = s.free_size() - 1;
        const VertexMask head = s.base() | (bit(top) << s.shift());
        if (rest == 0)
            return test(s, head) ? std::optional<VertexMask>(head) : std::nullopt;
        const VertexMask limit = bit(top);
        // Gosper's hack walks the rest-subsets of [0, top) in increasing order.
        for (VertexMask x = bit(rest) - 1; x < limit;) {
            const VertexMask mask = head | (x << s.shift());
            if (test(s, mask))
                return mask;
            const VertexMask c = x & (~x + 1);
            const VertexMask r = x + c;
            x = (((r ^ x) >> 2) / c) | r;
        }
        return std::nullopt;
    }
};

std::optional<VertexMask> search_size(const SizeSearch& s, unsigned threads, ZfResult& counts,
                                      std::vector<VertexMask>& forts)
{
    if (s.free_size() < 0 || s.free_size() > s.free_bits())
        return std::nullopt;
    if (s.free_size() == 0) {
        Worker w{forts, 0};
        const bool ok = w.test(s, s.base());
        w.add_counts_to(counts);
        forts = std::move(w.forts);
        return ok ? std::optional<VertexMask>(s.base()) : std::nullopt;
    }

    const int first = s.free_size() - 1;
    const int last = s.free_bits() - 1;
    if (threads <= 1) {
        Worker w{std::move(forts), 0};
        std::optional<VertexMask> found;
        for (int top = first; top <= last && !found; ++top)
            found = w.bucket(s, top);
        w.add_counts_to(counts);
        forts = std::move(w.forts);
        return found;
    }

    // Buckets by highest free bit are contiguous ranges of the enumeration order, so the
    // least forcing mask overall lies in the lowest bucket that has one.
    std::atomic<int> next{first};
    std::atomic<int> best_top{last + 1};
    std::vector<std::optional<VertexMask>> found(static_cast<std::size_t>(last + 1));
    std::mutex lock;
    std::exception_ptr failure;
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            Worker w{forts, 0};
            try {
                for (int top = next++; top <= last && top < best_top.load(); top = next++)
                    if (auto mask = w.bucket(s, top)) {
                        found[static_cast<std::size_t>(top)] = mask;
                        int current = best_top.load();
                        while (top < current && !best_top.compare_exchange_weak(current, top)) {
                        }
                    }
            }
            catch (...) {
                std::lock_guard guard(lock);
                if (!failure)
                    failure = std::current_exception();
                best_top = -1;
            }
            std::lock_guard guard(lock);
            w.add_counts_to(counts);
        });
    for (auto& t : pool)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
    for (int top = first; top <= last; ++top)
        if (found[static_cast<std::size_t>(top)])
            return found[static_cast<std::size_t>(top)];
    return std::nullopt;
}

ZfResult solve_connected(const Graph& g, int lower, int upper, const SearchOptions& options)
{
    ZfResult out;
    out.witness = {0, g.order()};
    if (g.order() == 0)
        return out;
    std::vector<VertexMask> forts;
    const unsigned threads = options.threads == 0 ? std::max(1U, std::thread::hardware_concurrency()) : options.threads;
    for (int k = std::max(lower, 1); k <= std::min(upper, g.order()); ++k) {
        const SizeSearch s{g, k, options.vertex_transitive, options.fort_pruning, options.deadline};
        if (auto mask = search_size(s, threads, out, forts)) {
            out.z = k;
            out.witness = {*mask, g.order()};
            return out;
        }
    }
    throw std::logic_error("no zero forcing set of size at most " + std::to_string(upper)
                           + "; the upper hint is below Z");
}

} // namespace

ZfResult zf_exact(const Graph& g, const SearchOptions& options)
{
    const auto parts = components(g);
    for (VertexMask part : parts)
        if (count(part) > options.ceiling)
            throw SearchCeilingExceeded(count(part), options.ceiling);

    if (parts.size() == 1) {
        const int lower = options.hints ? options.hints->lower : zf_lower_bounds(g).value;
        const int upper = options.hints ? options.hints->upper : g.order();
        return solve_connected(g, lower, upper, options);
    }

    ZfResult out;
    out.witness = {0, g.order()};
    for (VertexMask part : parts) {
        const Graph h = g.induced(part);
        const int lower = options.hints ? 1 : zf_lower_bounds(h).value;
        const ZfResult piece = solve_connected(h, lower, h.order(), options);
        out.z += piece.z;
        out.candidates += piece.candidates;
        out.pruned += piece.pruned;
        std::vector<int> position;
        for_each_vertex(part, [&](int v) { position.push_back(v); });
        for_each_vertex(piece.witness.filled,
                        [&](int v) { out.witness.filled |= bit(position[static_cast<std::size_t>(v)]); });
    }
    if (options.hints && out.z > options.hints->upper)
        throw std::logic_error("zero forcing number " + std::to_string(out.z) + " exceeds the upper hint "
                               + std::to_string(options.hints->upper));
    return out;
}

} // namespace circforce
