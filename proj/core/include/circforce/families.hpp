#pragma once

#include <circforce/circulant.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace circforce {

/// Closed-form results on Z (and M) for circulant families.
enum class Family {
    Cycle,               // C_n(j), gcd(n, j) = 1: Z = M = 2
    CycleComplement,     // {1..⌊n/2⌋} \ {j}, gcd(n, j) = 1, n >= 5: Z = M = n - 3
    Complete,            // {1..⌊n/2⌋}: Z = M = n - 1
    Consecutive,         // {1..d}, 2d < n: Z = M = 2d
    ConsecutiveMultiple, // {s, 2s, ..., ts}, 1 < ts < n/2, s | n or gcd(n, s) = 1
    BipartiteOddBand,    // C_{2n}(n-2l, ..., n-2, n), n odd, n >= 2l+2: Z = M = 4l
    BipartiteEvenBand,   // C_{2n}(n-2l-1, ..., n-1), n even, n >= 2l+2: Z = M = 4l+2
    BipartiteInitialOdd, // C_{2n}(1, 3, ..., 2l-1), 2l-1 <= n-1: Z = M = 4l-2
    BipartiteComplete,   // C_{2n}(1, 3, ..., n) = K_{n,n}, n = 2l-1 > 1: Z = M = 4l-4
    BipartiteSequential, // biadjacency normalizes to P^0 + ... + P^t: Z = M = 2t
    TorusComplete,       // C_{nm}(1, m, ..., ⌊n/2⌋m) ≅ K_n ⊠ C_m, n >= 3
    TorusCycle,          // C_{nm}(1, t), t ∈ {n, m}, n, m >= 3: interval from girth and constructions
    TorusCycleThree,     // C_{3m}(1, 3), m >= 3: Z = 6 (m > 3) or 5 (m = 3)
    NineOneThree,        // C_9(1, 3): Z = M = 5 via an explicit rank-4 matrix
    Cubic,               // C_{2m}(a, m), 1 <= a < m
    CubicOneM,           // C_{2m}(1, m), m >= 2
    CubicTwoM,           // C_{2m}(2, m), m >= 3
    RegularDegree,       // Z >= degree
    GirthDegree,         // Z >= (g - 3)(δ - 2) + δ
};

const char* to_string(Family f);

/// Closed integer interval; exact when lower == upper.
struct Interval {
    int lower = 0;
    int upper = 0;

    bool exact() const { return lower == upper; }
    bool contains(int z) const { return lower <= z && z <= upper; }
    bool operator==(const Interval&) const = default;
};

enum class MStatus {
    ProvedEqualToZ,
    LowerBound,
    Unknown,
};

const char* to_string(MStatus s);

/// One closed-form claim about a circulant.
struct Prediction {
    Family family = Family::RegularDegree;
    Interval z;
    MStatus m_status = MStatus::Unknown;
    /// Meaningful when m_status == LowerBound.
    int m_lower = 0;
    std::string citation;
    /// Bindings of the matched pattern, in match order (n, m, l, t, ...).
    std::vector<std::pair<std::string, long long>> parameters;
    /// Unit k such that the family matched the rewrite C_n(kS); 1 when matched directly.
    int multiplier = 1;
    /// Number of isomorphic components the value was scaled by.
    int copies = 1;
    /// The spec the family matched, before scaling by copies.
    std::optional<CirculantSpec> matched;

    std::optional<long long> parameter(const std::string& name) const;
};

/// Every family that matches the spec, any multiplier rewrite of it, or (for disconnected specs)
/// its reduced connected piece, followed by the fallback degree and girth bounds. Exact duplicates
/// (same family, parameters and scaling) keep only the smallest multiplier.
std::vector<Prediction> predict(const CirculantSpec& spec);

/// Intersection of all prediction intervals; nullopt when they are mutually inconsistent.
std::optional<Interval> intersect(const std::vector<Prediction>& predictions);

} // namespace circforce
