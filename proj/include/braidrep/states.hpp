#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "braidrep/braid.hpp"
#include "braidrep/ring.hpp"

namespace braidrep {

inline constexpr std::uint64_t default_state_budget = 10'000'000;

/// One signed intersection point with its sheet: contributes
/// sign · t^{sheet}.
struct FormalMonomial {
    int sign;   // ±1
    int sheet;  // exponent of t

    bool operator==(const FormalMonomial& rhs) const {
        return sign == rhs.sign && sheet == rhs.sheet;
    }
};

/// A Burau matrix entry kept as an ordered, cancellation-free list of
/// monomials. Summing the list recovers the polynomial entry.
struct FormalEntry {
    std::vector<FormalMonomial> monomials;

    /// The collapsed value over {q} (t = q^2).
    LaurentPoly collapse() const;
};

/// The n×n matrix of formal entries for a braid word, composed without
/// like-term merging so every composite path keeps its own monomial.
class FormalMatrix {
public:
    FormalMatrix(int n);

    int n() const { return n_; }
    const FormalEntry& entry(int row, int col) const;  // 1-based
    FormalEntry& entry(int row, int col);

    std::uint64_t total_monomials() const;

private:
    int n_;
    std::vector<FormalEntry> entries_;
};

FormalMatrix formal_burau(const BraidWord& w,
                          std::uint64_t budget = default_state_budget);

/// One slot of a decorated generator: either the anchor of its diagonal
/// index (sign −1, gradings (0,1)) or a chosen formal monomial.
struct StateFactor {
    bool anchor;
    int anchor_index;  // j_s when anchor
    FormalMonomial mono;  // when not an anchor
};

/// A decategorified Floer generator: a matching σ of the slots of j onto
/// k plus one factor per slot, with the gradings
///   a1 = Σ sheets of monomial factors,
///   a2 = number of anchors,
///   msign = sign(σ) · Π factor signs (anchors count −1).
struct DecoratedGenerator {
    MultiIndex j;
    MultiIndex k;
    std::vector<int> sigma;  // slot s (0-based) pairs j_s with k_{sigma[s]}, 1-based images
    std::vector<StateFactor> factors;
    long long a1 = 0;
    int a2 = 0;
    int msign = 1;
};

/// All decorated generators for the (j, k) pair: for each σ, each slot
/// independently picks a formal monomial of entry (j_s, k_{σ(s)}), or the
/// anchor when j_s = k_{σ(s)}. Deterministic order.
std::vector<DecoratedGenerator> enumerate_states(
    const BraidWord& w, const MultiIndex& j, const MultiIndex& k,
    std::uint64_t budget = default_state_budget);

/// Σ over states of msign · t^{a1} · λ^{a2}, over {q, λ}. Evaluated in
/// per-permutation factored form, which equals the state sum exactly, so
/// large words stay within budget. Must equal hfb_poincare_minor.
LaurentPoly hfb_poincare_from_states(const BraidWord& w, const MultiIndex& j,
                                     const MultiIndex& k,
                                     std::uint64_t budget = default_state_budget);

/// The anchor-stripping bijection between decorated generators over the
/// ({2..n}, {2..n}) pair and the Γ-terms of the diagonal state sum.
/// Verifies the weight relation
///   (−1)^{1−n} · q^{n−1−exp} · weight(x) = weight(f(x))
/// for every pair and throws internal_error on any violation.
std::vector<std::pair<DecoratedGenerator, DecoratedGenerator>>
cfk_weight_bijection(const BraidWord& w,
                     std::uint64_t budget = default_state_budget);

struct CfkBijectionReport {
    std::uint64_t pairs = 0;
    std::uint64_t violations = 0;
    bool counts_match = false;
};

/// Streaming version of the bijection check: verifies every pair and the
/// cardinality identity without materializing the states.
CfkBijectionReport cfk_bijection_check(const BraidWord& w,
                                       std::uint64_t budget = default_state_budget);

/// The decategorified tangle invariant for the (j*, k) idempotent summand:
/// zero unless |complement(j*)| = |k|, and otherwise
/// (−1)^{|j*|} · ψ^∧(w)^{complement(j*)}_k. Also evaluated by direct state
/// enumeration over the formal matrix; the routes must agree exactly.
LaurentPoly tangle_delta(const BraidWord& w, const MultiIndex& jstar,
                         const MultiIndex& k,
                         std::uint64_t budget = default_state_budget);

}  // namespace braidrep
