#pragma once

#include <circforce/matrix.hpp>

#include <span>

namespace circforce {

/// Permutation matrix of the n-cycle: entry (i, j) is 1 iff j = i - 1 (mod n), so P e_j = e_{j+1}
/// and P^n = I.
RationalMatrix shift_matrix(int n);

/// P^e for any integer e (reduced mod n).
RationalMatrix shift_power(int n, int e);

/// Row k is the first row cyclically shifted left k places: H(i, j) = row[(i + j) mod n].
RationalMatrix circulant_hankel(std::span<const Rational> first_row);

struct HankelMatrix {
    RationalMatrix matrix;
    /// H² = λ I.
    Rational lambda;
};

/// Circulant Hankel matrix with first row (1, 2, 4, ..., 2^{n-2}, w), w = -(2/3)(2^{n-2} - 1).
/// Its rows are pairwise orthogonal and λ = w² + Σ_{i<n-1} 4^i. Requires n >= 3.
HankelMatrix hankel(int n);

struct OrthogonalHankel {
    QuadMatrix matrix;
    QuadFieldPtr field;
};

/// A = H / √λ over Q(√λ); A Aᵀ = I. Entries are built as (h/λ)√λ. λ happens to be
/// ((2^n - 1)/3)², so the field is degenerate and entries fold to rationals.
OrthogonalHankel orthogonal_hankel(int n);

} // namespace circforce
