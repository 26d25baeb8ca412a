#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "braidrep/braid.hpp"
#include "braidrep/burau.hpp"
#include "braidrep/ring.hpp"

namespace braidrep {

/// The coefficient ψ^∧(w)^j_k of the exterior-power representation,
/// computed as det of the (k-rows, j-cols) minor of burau(w), so that
/// singleton entries reproduce burau(w) with j as the column index and k
/// as the row index. |j| = |k| required; the empty pair gives 1.
LaurentPoly wedge_entry_minor(const BraidWord& w, const MultiIndex& j,
                              const MultiIndex& k);

/// The 2^n × 2^n matrix of ψ^∧ on the exterior algebra. Rows and columns
/// are indexed by subsets of {1..n} in size-then-lexicographic order, and
/// the entry at (row J, col K) is det of the (J-rows, K-cols) minor of
/// burau(w), so the singleton block is burau(w) itself and the matrix is
/// multiplicative.
struct WedgeMatrix {
    int n;
    std::vector<MultiIndex> basis;
    RingMatrix mat;

    const LaurentPoly& entry(const MultiIndex& row, const MultiIndex& col) const;
};

inline constexpr int wedge_default_bound = 10;

/// Assembled from minors. For n <= 6 the generator-composition route is
/// also computed and exact agreement is enforced.
WedgeMatrix wedge_rep(const BraidWord& w, int max_n = wedge_default_bound);

/// The generator-composition route on its own: per-letter wedge matrices
/// multiplied in word order.
WedgeMatrix wedge_rep_composed(const BraidWord& w, int max_n = wedge_default_bound);

/// q^{−exp(w)} · Σ_{j⊆{1..n}} (−1)^{|j|} ψ^∧(w)^j_j. Always zero.
LaurentPoly super_trace(const BraidWord& w);

/// The state sum q^{n−1−exp(w)} · Σ_{j⊆{2..n}} (−1)^{|j|} ψ^∧(w)^j_j,
/// exact and not unit-normalized. A second route,
/// q^{n−1−exp} · det(I − burau(w) on rows/cols {2..n}), is always computed
/// and must agree exactly.
LaurentPoly qhat(const BraidWord& w);

struct MarkovFailure {
    std::string move;
    LaurentPoly before;
    LaurentPoly after;
};

struct MarkovReport {
    int trials = 0;
    std::vector<MarkovFailure> failures;
};

/// Applies `trials` random Markov moves to w (conjugation by a random
/// letter, or stabilization w ↦ w·σ_n^{±1} into B_{n+1}) and checks that
/// qhat is unchanged up to unit. Deterministic for a fixed seed.
MarkovReport qhat_markov_check(const BraidWord& w, int trials, std::uint64_t seed);

}  // namespace braidrep
