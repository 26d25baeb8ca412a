#include "braidrep/quantum.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

namespace braidrep {

LaurentPoly wedge_entry_minor(const BraidWord& w, const MultiIndex& j,
                              const MultiIndex& k) {
    if (j.size() != k.size())
        throw validation_error("wedge multi-indices differ in size");
    if (j.ambient() != w.n || k.ambient() != w.n)
        throw validation_error("multi-index ambient size does not match strand count");
    if (j.size() == 0) return LaurentPoly::constant(q_ring(), 1);
    return burau(w).submatrix(k, j).det();
}

const LaurentPoly& WedgeMatrix::entry(const MultiIndex& row,
                                      const MultiIndex& col) const {
    auto find = [&](const MultiIndex& m) -> std::size_t {
        auto it = std::lower_bound(basis.begin(), basis.end(), m);
        if (it == basis.end() || *it != m)
            throw validation_error("multi-index is not a basis element");
        return static_cast<std::size_t>(it - basis.begin());
    };
    return mat.at(find(row), find(col));
}

// All minors det(M[rows J][cols K]) of a fixed square matrix, by one
// dynamic program per row subset.
static WedgeMatrix compound_matrix(const RingMatrix& m, int n) {
    WedgeMatrix out{n, all_subsets(n),
                    RingMatrix(m.vars_ptr(), std::size_t(1) << n, std::size_t(1) << n)};
    std::map<MultiIndex, std::size_t> pos;
    for (std::size_t i = 0; i < out.basis.size(); ++i) pos.emplace(out.basis[i], i);

    for (std::size_t jr = 0; jr < out.basis.size(); ++jr) {
        const MultiIndex& rows = out.basis[jr];
        const int size = rows.size();
        // dp over column subsets of the rows-minor, one row at a time
        std::map<std::vector<int>, LaurentPoly> dp;
        dp.emplace(std::vector<int>{}, LaurentPoly::constant(m.vars_ptr(), 1));
        for (int s = 0; s < size; ++s) {
            const std::size_t r = static_cast<std::size_t>(rows.at(s) - 1);
            std::map<std::vector<int>, LaurentPoly> next;
            for (const auto& [colset, val] : dp) {
                if (val.is_zero()) continue;
                for (int c = 1; c <= n; ++c) {
                    auto it = std::lower_bound(colset.begin(), colset.end(), c);
                    if (it != colset.end() && *it == c) continue;
                    const LaurentPoly& entry = m.at(r, static_cast<std::size_t>(c - 1));
                    if (entry.is_zero()) continue;
                    int above = static_cast<int>(colset.end() - it);
                    std::vector<int> grown(colset.begin(), it);
                    grown.push_back(c);
                    grown.insert(grown.end(), it, colset.end());
                    LaurentPoly contrib = val * entry;
                    if (above % 2 != 0) contrib = -contrib;
                    auto [slot, inserted] = next.emplace(std::move(grown), contrib);
                    if (!inserted) slot->second += contrib;
                }
            }
            dp = std::move(next);
        }
        for (const auto& [colset, val] : dp) {
            if (val.is_zero()) continue;
            std::size_t jc = pos.at(MultiIndex(n, colset));
            out.mat.at(jr, jc) = val;
        }
    }
    return out;
}

static void check_wedge_bound(const BraidWord& w, int max_n) {
    if (w.n > max_n)
        throw validation_error("wedge bound exceeded: n = " + std::to_string(w.n) +
                               " > " + std::to_string(max_n));
}

WedgeMatrix wedge_rep_composed(const BraidWord& w, int max_n) {
    check_wedge_bound(w, max_n);
    WedgeMatrix acc = compound_matrix(
        RingMatrix::identity(q_ring(), static_cast<std::size_t>(w.n)), w.n);
    for (int letter : w.letters) {
        int idx = letter < 0 ? -letter : letter;
        WedgeMatrix gen =
            compound_matrix(burau_generator(w.n, idx, letter < 0 ? -1 : 1), w.n);
        acc.mat = acc.mat * gen.mat;
    }
    return acc;
}

WedgeMatrix wedge_rep(const BraidWord& w, int max_n) {
    check_wedge_bound(w, max_n);
    WedgeMatrix out = compound_matrix(burau(w), w.n);
    if (w.n <= 6) {
        WedgeMatrix composed = wedge_rep_composed(w, max_n);
        if (out.mat != composed.mat)
            throw internal_error("wedge route disagreement: minors vs composition");
    }
    return out;
}

// Σ over subsets of `indices` of (−1)^{|J|} · det(principal minor on J).
static LaurentPoly alternating_principal_sum(const RingMatrix& m,
                                             const std::vector<int>& indices,
                                             int n) {
    LaurentPoly sum = LaurentPoly::constant(m.vars_ptr(), 1);  // empty subset
    const std::size_t count = indices.size();
    for (std::size_t mask = 1; mask < (std::size_t(1) << count); ++mask) {
        std::vector<int> elems;
        for (std::size_t b = 0; b < count; ++b)
            if (mask & (std::size_t(1) << b)) elems.push_back(indices[b]);
        MultiIndex sub(n, elems);
        LaurentPoly minor = m.submatrix(sub, sub).det();
        if (elems.size() % 2 != 0) minor = -minor;
        sum += minor;
    }
    return sum;
}

LaurentPoly super_trace(const BraidWord& w) {
    RingMatrix m = burau(w);
    std::vector<int> indices;
    for (int i = 1; i <= w.n; ++i) indices.push_back(i);
    LaurentPoly sum = alternating_principal_sum(m, indices, w.n);
    return LaurentPoly::var_power(q_ring(), 0, -braid_exponent(w)) * sum;
}

LaurentPoly qhat(const BraidWord& w) {
    RingMatrix m = burau(w);
    std::vector<int> tail;
    for (int i = 2; i <= w.n; ++i) tail.push_back(i);
    const LaurentPoly prefactor =
        LaurentPoly::var_power(q_ring(), 0, w.n - 1 - braid_exponent(w));

    LaurentPoly state_sum = alternating_principal_sum(m, tail, w.n);

    LaurentPoly det_route = LaurentPoly::constant(q_ring(), 1);
    if (w.n >= 2) {
        MultiIndex sub = MultiIndex::range(2, w.n, w.n);
        RingMatrix principal = m.submatrix(sub, sub);
        det_route =
            (RingMatrix::identity(q_ring(), principal.rows()) - principal).det();
    }
    if (state_sum != det_route)
        throw internal_error("qhat route disagreement: subset sum vs determinant");
    return prefactor * state_sum;
}

MarkovReport qhat_markov_check(const BraidWord& w, int trials, std::uint64_t seed) {
    MarkovReport report;
    report.trials = trials;
    std::mt19937_64 rng(seed);
    const LaurentPoly before = qhat(w);
    for (int t = 0; t < trials; ++t) {
        const bool can_conjugate = w.n >= 2;
        const bool stabilize = !can_conjugate || (rng() & 1u);
        BraidWord moved = w;
        std::ostringstream move;
        if (stabilize) {
            int sign = (rng() & 1u) ? 1 : -1;
            std::vector<int> letters = w.letters;
            letters.push_back(sign * w.n);
            moved = BraidWord(w.n + 1, std::move(letters));
            move << "stabilization by " << (sign > 0 ? "" : "-") << w.n;
        } else {
            int idx = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(w.n - 1));
            int g = (rng() & 1u) ? idx : -idx;
            std::vector<int> letters;
            letters.push_back(g);
            letters.insert(letters.end(), w.letters.begin(), w.letters.end());
            letters.push_back(-g);
            moved = BraidWord(w.n, std::move(letters));
            move << "conjugation by " << g;
        }
        LaurentPoly after = qhat(moved);
        if (!before.equal_up_to_unit(after))
            report.failures.push_back(MarkovFailure{move.str(), before, after});
    }
    return report;
}

}  // namespace braidrep
