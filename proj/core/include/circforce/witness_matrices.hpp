#pragma once

#include <circforce/matrix.hpp>

#include <vector>

namespace circforce {

// Symmetric matrices whose nullity certifies lower bounds on the maximum nullity of
// torus-type circulants. All are laid out in blocks: block c holds copy c of the
// underlying graph, so vertex (copy c, row r) is row c * n + r.

/// 4n x 4n block matrix
///   [ A   I   O   Pᵀ ]
///   [ I   B   I   O  ]
///   [ O   I  -PA  I  ]
///   [ P   O   I  -PB ]
/// with A the orthogonal circulant Hankel matrix and B = A - PA. Pattern K_n ⊠ C_4,
/// nullity 2n. Requires n >= 3.
QuadMatrix witness_k4(int n);

/// Invertible E with E K zero in its first and last block rows (K = witness_k4(n)).
QuadMatrix elimination_k4(int n);

/// 6n x 6n tridiagonal-plus-corners block matrix with diagonal A, A, A, PA, PA, PA,
/// identity off-diagonal blocks and corner blocks Pᵀ / P. Pattern K_n ⊠ C_6, nullity 2n.
QuadMatrix witness_k6(int n);

/// Invertible E with E K zero in its first and last block rows (K = witness_k6(n)).
QuadMatrix elimination_k6(int n);

/// The 9 x 9 rational matrix with pattern C_3 ⊠ C_3 ≅ C_9(1,3) and rank 4.
RationalMatrix witness_c913();

/// The block matrices above twist their corner blocks as (copy m-1, row r) ~ (copy 0, row r-1),
/// while torus_product twists r -> r+1. Reflecting rows r -> -r (mod n) in every copy maps one
/// onto the other; the result is indexed by block position c * n + r.
std::vector<int> block_to_torus_labels(int n, int copies);

/// block_to_torus_labels followed by torus_to_circulant_labels: block layout -> C_{nm}(1, m, ...).
std::vector<int> block_to_circulant_labels(int n, int copies);

} // namespace circforce
