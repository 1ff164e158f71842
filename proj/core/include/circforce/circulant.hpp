#pragma once

#include <circforce/graph.hpp>

#include <optional>
#include <string>
#include <vector>

namespace circforce {

/// The circulant C_n(s_1, ..., s_t): vertices are residues mod n and i ~ j iff
/// i - j is congruent to ±s for some s in the connection set.
class CirculantSpec {
public:
    /// Throws std::invalid_argument unless the connection set is nonempty, strictly
    /// increasing, and every element lies in [1, n/2].
    CirculantSpec(int order, std::vector<int> connection_set);

    /// Sorts and validates an arbitrary list; duplicates are still rejected.
    static CirculantSpec normalized(int order, std::vector<int> elements);

    int order() const noexcept { return order_; }
    const std::vector<int>& connections() const noexcept { return connections_; }
    int size() const noexcept { return static_cast<int>(connections_.size()); }
    int largest() const noexcept { return connections_.back(); }

    /// 2t - 1 when 2 s_t = n, else 2t.
    int degree() const noexcept;

    /// "C12(1,6)"
    std::string to_string() const;

    bool operator==(const CirculantSpec&) const = default;

private:
    int order_;
    std::vector<int> connections_;
};

/// Realizes the spec; throws std::invalid_argument when order() > kMaxOrder.
Graph build_circulant(const CirculantSpec& spec);

/// C_n(S) is g disjoint copies of `reduced`, where g = gcd(n, S).
struct ComponentDecomposition {
    int copies;
    CirculantSpec reduced;
};

ComponentDecomposition decompose(const CirculantSpec& spec);

bool is_connected(const CirculantSpec& spec);

/// Canonical rewrite of {±k s : s in S} into [1, n/2]; k must be a unit mod n.
CirculantSpec multiply(const CirculantSpec& spec, int k);

/// Smallest unit k mod n with multiply(a, k) == b. The multiplier map i -> k i is then an
/// isomorphism from a to b. A nullopt result does not prove the graphs non-isomorphic:
/// only multiplier isomorphisms are searched.
std::optional<int> multiplier_isomorphic(const CirculantSpec& a, const CirculantSpec& b);

/// Units k in [1, n/2] (k and n - k give the same rewrite); {1} for n <= 2.
std::vector<int> multiplier_units(int n);

/// Bipartiteness of the connected piece: n/g even and every s/g odd.
bool is_bipartite(const CirculantSpec& spec);

} // namespace circforce
