#include "braidrep/states.hpp"

#include <algorithm>
#include <numeric>

#include "braidrep/burau.hpp"
#include "braidrep/quantum.hpp"

namespace braidrep {

LaurentPoly FormalEntry::collapse() const {
    LaurentPoly out(q_ring());
    for (const FormalMonomial& m : monomials)
        out += LaurentPoly::monomial(q_ring(), {2 * m.sheet}, m.sign);
    return out;
}

FormalMatrix::FormalMatrix(int n) : n_(n) {
    if (n_ < 1) throw validation_error("strand count must be >= 1");
    entries_.resize(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_));
}

const FormalEntry& FormalMatrix::entry(int row, int col) const {
    if (row < 1 || row > n_ || col < 1 || col > n_)
        throw validation_error("formal matrix index out of range");
    return entries_[static_cast<std::size_t>(row - 1) * static_cast<std::size_t>(n_) +
                    static_cast<std::size_t>(col - 1)];
}

FormalEntry& FormalMatrix::entry(int row, int col) {
    return const_cast<FormalEntry&>(
        static_cast<const FormalMatrix&>(*this).entry(row, col));
}

std::uint64_t FormalMatrix::total_monomials() const {
    std::uint64_t total = 0;
    for (const FormalEntry& e : entries_) total += e.monomials.size();
    return total;
}

static FormalMatrix formal_identity(int n) {
    FormalMatrix m(n);
    for (int i = 1; i <= n; ++i) m.entry(i, i).monomials.push_back({+1, 0});
    return m;
}

// Generator entries: 1−t is [(+1,0),(−1,1)], t is [(+1,1)], 1 is [(+1,0)];
// for negative letters 1−t^{-1} is [(+1,0),(−1,−1)] and t^{-1} is [(+1,−1)].
static FormalMatrix formal_generator(int n, int letter) {
    int i = letter < 0 ? -letter : letter;
    if (letter == 0 || i < 1 || i > n - 1)
        throw validation_error("letter " + std::to_string(letter) +
                               " out of range for " + std::to_string(n) + " strands");
    FormalMatrix m(n);
    for (int d = 1; d <= n; ++d)
        if (d != i && d != i + 1) m.entry(d, d).monomials.push_back({+1, 0});
    if (letter > 0) {
        m.entry(i, i).monomials = {{+1, 0}, {-1, 1}};
        m.entry(i, i + 1).monomials = {{+1, 0}};
        m.entry(i + 1, i).monomials = {{+1, 1}};
    } else {
        m.entry(i, i + 1).monomials = {{+1, -1}};
        m.entry(i + 1, i).monomials = {{+1, 0}};
        m.entry(i + 1, i + 1).monomials = {{+1, 0}, {-1, -1}};
    }
    return m;
}

// Concatenation product, no like-term merging. Within an output entry the
// left factor's list runs in the outer loop.
static FormalMatrix formal_mul(const FormalMatrix& a, const FormalMatrix& b,
                               std::uint64_t budget) {
    const int n = a.n();
    FormalMatrix out(n);
    std::uint64_t total = 0;
    for (int r = 1; r <= n; ++r) {
        for (int c = 1; c <= n; ++c) {
            auto& dest = out.entry(r, c).monomials;
            for (int mid = 1; mid <= n; ++mid) {
                const auto& left = a.entry(r, mid).monomials;
                const auto& right = b.entry(mid, c).monomials;
                for (const FormalMonomial& x : left)
                    for (const FormalMonomial& y : right)
                        dest.push_back({x.sign * y.sign, x.sheet + y.sheet});
            }
            total += dest.size();
            if (total > budget)
                throw budget_error("formal monomial budget exceeded (" +
                                   std::to_string(budget) + ")");
        }
    }
    return out;
}

FormalMatrix formal_burau(const BraidWord& w, std::uint64_t budget) {
    FormalMatrix m = formal_identity(w.n);
    for (int letter : w.letters)
        m = formal_mul(m, formal_generator(w.n, letter), budget);
    return m;
}

// ---------------------------------------------------------------------------
// Decorated generators

namespace {

struct SlotChoices {
    // Per slot: the formal entry feeding it, plus whether the anchor is legal.
    const FormalEntry* entry;
    bool anchor_allowed;
    int anchor_index;
    std::size_t options() const {
        return entry->monomials.size() + (anchor_allowed ? 1 : 0);
    }
};

void check_pair(const BraidWord& w, const MultiIndex& j, const MultiIndex& k) {
    if (j.size() != k.size())
        throw validation_error("multi-indices differ in size");
    if (j.size() < 1)
        throw validation_error("state enumeration needs at least one slot");
    if (j.ambient() != w.n || k.ambient() != w.n)
        throw validation_error("multi-index ambient size does not match strand count");
}

int perm_parity(const std::vector<int>& images) {
    std::vector<bool> seen(images.size(), false);
    int transpositions = 0;
    for (std::size_t i = 0; i < images.size(); ++i) {
        if (seen[i]) continue;
        std::size_t jpos = i;
        int len = 0;
        while (!seen[jpos]) {
            seen[jpos] = true;
            jpos = static_cast<std::size_t>(images[jpos] - 1);
            ++len;
        }
        transpositions += len - 1;
    }
    return transpositions % 2;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b, std::uint64_t cap) {
    if (a == 0 || b == 0) return 0;
    if (a > cap / b) return cap + 1;
    return a * b;
}

// Enumerates every (σ, slot choices) pair for the (j, k) slots of the
// formal matrix, in deterministic order: σ in lexicographic order of its
// one-line images, then odometer over slots (monomials in entry order,
// anchor last). The callback receives the σ images and per-slot choice
// indices; an index equal to the monomial count means the anchor.
template <typename Callback>
void for_each_state(const FormalMatrix& fm, const MultiIndex& j,
                    const MultiIndex& k, std::uint64_t budget, Callback&& cb) {
    const int m = j.size();
    std::vector<int> sigma(static_cast<std::size_t>(m));
    std::iota(sigma.begin(), sigma.end(), 1);

    // Budget: total state count across all permutations.
    std::uint64_t predicted = 0;
    {
        std::vector<int> s = sigma;
        do {
            std::uint64_t per = 1;
            for (int slot = 0; slot < m; ++slot) {
                int row = j.at(slot);
                int col = k.at(s[static_cast<std::size_t>(slot)] - 1);
                std::uint64_t options = fm.entry(row, col).monomials.size() +
                                        (row == col ? 1u : 0u);
                per = saturating_mul(per, options, budget);
                if (per > budget) break;
            }
            predicted = predicted > budget ? predicted : predicted + per;
            if (predicted > budget)
                throw budget_error("state budget exceeded (" +
                                   std::to_string(budget) + ")");
        } while (std::next_permutation(s.begin(), s.end()));
    }

    do {
        std::vector<SlotChoices> slots(static_cast<std::size_t>(m));
        bool empty = false;
        for (int slot = 0; slot < m; ++slot) {
            int row = j.at(slot);
            int col = k.at(sigma[static_cast<std::size_t>(slot)] - 1);
            slots[static_cast<std::size_t>(slot)] =
                SlotChoices{&fm.entry(row, col), row == col, row};
            if (slots[static_cast<std::size_t>(slot)].options() == 0) empty = true;
        }
        if (empty) continue;
        std::vector<std::size_t> choice(static_cast<std::size_t>(m), 0);
        while (true) {
            cb(sigma, slots, choice);
            int slot = m - 1;
            while (slot >= 0) {
                auto s = static_cast<std::size_t>(slot);
                if (++choice[s] < slots[s].options()) break;
                choice[s] = 0;
                --slot;
            }
            if (slot < 0) break;
        }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
}

DecoratedGenerator build_state(const MultiIndex& j, const MultiIndex& k,
                               const std::vector<int>& sigma,
                               const std::vector<SlotChoices>& slots,
                               const std::vector<std::size_t>& choice) {
    DecoratedGenerator g{j, k, sigma, {}, 0, 0, 1};
    int sign = perm_parity(sigma) == 0 ? 1 : -1;
    for (std::size_t s = 0; s < slots.size(); ++s) {
        if (choice[s] == slots[s].entry->monomials.size()) {
            g.factors.push_back(StateFactor{true, slots[s].anchor_index, {0, 0}});
            g.a2 += 1;
            sign = -sign;
        } else {
            const FormalMonomial& mono = slots[s].entry->monomials[choice[s]];
            g.factors.push_back(StateFactor{false, 0, mono});
            g.a1 += mono.sheet;
            sign *= mono.sign;
        }
    }
    g.msign = sign;
    return g;
}

}  // namespace

std::vector<DecoratedGenerator> enumerate_states(const BraidWord& w,
                                                 const MultiIndex& j,
                                                 const MultiIndex& k,
                                                 std::uint64_t budget) {
    check_pair(w, j, k);
    FormalMatrix fm = formal_burau(w, budget);
    std::vector<DecoratedGenerator> out;
    for_each_state(fm, j, k, budget,
                   [&](const std::vector<int>& sigma,
                       const std::vector<SlotChoices>& slots,
                       const std::vector<std::size_t>& choice) {
                       out.push_back(build_state(j, k, sigma, slots, choice));
                   });
    return out;
}

LaurentPoly hfb_poincare_from_states(const BraidWord& w, const MultiIndex& j,
                                     const MultiIndex& k, std::uint64_t budget) {
    check_pair(w, j, k);
    FormalMatrix fm = formal_burau(w, budget);
    auto vars = q_lambda_ring();
    const LaurentPoly lambda = LaurentPoly::var_power(vars, 1, 1);
    const int m = j.size();

    // Collapsed slot polynomials, one per (row, col) actually used.
    std::map<std::pair<int, int>, LaurentPoly> cache;
    auto slot_poly = [&](int row, int col) -> const LaurentPoly& {
        auto key = std::make_pair(row, col);
        auto it = cache.find(key);
        if (it == cache.end()) {
            LaurentPoly p = fm.entry(row, col).collapse().extended(vars);
            if (row == col) p -= lambda;
            it = cache.emplace(key, std::move(p)).first;
        }
        return it->second;
    };

    // Σ over states of msign t^{a1} λ^{a2}, grouped by permutation: the
    // slot choices are independent, so the inner sum factors.
    LaurentPoly total(vars);
    std::vector<int> sigma(static_cast<std::size_t>(m));
    std::iota(sigma.begin(), sigma.end(), 1);
    do {
        LaurentPoly prod = LaurentPoly::constant(vars, 1);
        for (int slot = 0; slot < m && !prod.is_zero(); ++slot)
            prod *= slot_poly(j.at(slot), k.at(sigma[static_cast<std::size_t>(slot)] - 1));
        if (perm_parity(sigma) != 0) prod = -prod;
        total += prod;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return total;
}

// ---------------------------------------------------------------------------
// The anchor-stripping bijection

namespace {

struct WeightCheckContext {
    int n;
    int exponent;
};

DecoratedGenerator gamma_term_of(const DecoratedGenerator& x) {
    // Keep the non-anchor slots; anchors sit at fixed points of σ, so the
    // kept k-values form the same subset as the kept j-values.
    std::vector<int> kept_j;
    std::vector<int> kept_slots;
    for (std::size_t s = 0; s < x.factors.size(); ++s) {
        if (!x.factors[s].anchor) {
            kept_j.push_back(x.j.at(static_cast<int>(s)));
            kept_slots.push_back(static_cast<int>(s));
        }
    }
    MultiIndex jg(x.j.ambient(), kept_j);
    std::vector<int> sigma;
    std::vector<StateFactor> factors;
    long long a1 = 0;
    int sign = 1;
    for (int s : kept_slots) {
        int paired = x.k.at(x.sigma[static_cast<std::size_t>(s)] - 1);
        auto it = std::lower_bound(kept_j.begin(), kept_j.end(), paired);
        if (it == kept_j.end() || *it != paired)
            throw internal_error("anchor stripping produced a non-matching slot");
        sigma.push_back(static_cast<int>(it - kept_j.begin()) + 1);
        factors.push_back(x.factors[static_cast<std::size_t>(s)]);
        a1 += x.factors[static_cast<std::size_t>(s)].mono.sheet;
        sign *= x.factors[static_cast<std::size_t>(s)].mono.sign;
    }
    if (perm_parity(sigma) != 0) sign = -sign;
    return DecoratedGenerator{jg, jg, std::move(sigma), std::move(factors),
                              a1, 0, sign};
}

// (−1)^{1−n} q^{n−1−exp} msign(x) q^{2 a1(x)}  vs
// (−1)^{|jΓ|} msign(g) q^{n−1−exp} q^{2 a1(g)}, as signed monomials.
bool weight_relation_holds(const WeightCheckContext& ctx,
                           const DecoratedGenerator& x,
                           const DecoratedGenerator& g) {
    int lhs_sign = ((ctx.n - 1) % 2 != 0 ? -1 : 1) * x.msign;
    long long lhs_exp = (ctx.n - 1 - ctx.exponent) + 2 * x.a1;
    int rhs_sign = (g.j.size() % 2 != 0 ? -1 : 1) * g.msign;
    long long rhs_exp = (ctx.n - 1 - ctx.exponent) + 2 * g.a1;
    return lhs_sign == rhs_sign && lhs_exp == rhs_exp;
}

// Number of Γ-terms: Σ over jΓ ⊆ {2..n} and σ' of the product of entry
// monomial counts. Saturates at cap+1.
std::uint64_t gamma_term_count(const FormalMatrix& fm, int n, std::uint64_t cap) {
    std::uint64_t total = 0;
    const int tail = n - 1;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << tail); ++mask) {
        std::vector<int> elems;
        for (int b = 0; b < tail; ++b)
            if (mask & (std::uint64_t(1) << b)) elems.push_back(b + 2);
        const int m = static_cast<int>(elems.size());
        std::vector<int> sigma(static_cast<std::size_t>(m));
        std::iota(sigma.begin(), sigma.end(), 1);
        do {
            std::uint64_t per = 1;
            for (int s = 0; s < m && per <= cap; ++s)
                per = saturating_mul(
                    per,
                    fm.entry(elems[static_cast<std::size_t>(s)],
                             elems[static_cast<std::size_t>(sigma[static_cast<std::size_t>(s)] - 1)])
                        .monomials.size(),
                    cap);
            total = total > cap ? total : total + per;
            if (total > cap) return cap + 1;
        } while (std::next_permutation(sigma.begin(), sigma.end()));
    }
    return total;
}

template <typename PairCallback>
CfkBijectionReport run_cfk_bijection(const BraidWord& w, std::uint64_t budget,
                                     PairCallback&& on_pair) {
    if (w.n < 2)
        throw validation_error("the anchor-stripping bijection needs n >= 2");
    const MultiIndex tail = MultiIndex::range(2, w.n, w.n);
    FormalMatrix fm = formal_burau(w, budget);
    WeightCheckContext ctx{w.n, braid_exponent(w)};
    CfkBijectionReport report;
    for_each_state(fm, tail, tail, budget,
                   [&](const std::vector<int>& sigma,
                       const std::vector<SlotChoices>& slots,
                       const std::vector<std::size_t>& choice) {
                       DecoratedGenerator x = build_state(tail, tail, sigma, slots, choice);
                       DecoratedGenerator g = gamma_term_of(x);
                       report.pairs += 1;
                       if (!weight_relation_holds(ctx, x, g)) {
                           report.violations += 1;
                           on_pair(std::move(x), std::move(g), false);
                       } else {
                           on_pair(std::move(x), std::move(g), true);
                       }
                   });
    report.counts_match = gamma_term_count(fm, w.n, budget) == report.pairs;
    return report;
}

}  // namespace

std::vector<std::pair<DecoratedGenerator, DecoratedGenerator>>
cfk_weight_bijection(const BraidWord& w, std::uint64_t budget) {
    std::vector<std::pair<DecoratedGenerator, DecoratedGenerator>> pairs;
    std::string violation;
    CfkBijectionReport report = run_cfk_bijection(
        w, budget,
        [&](DecoratedGenerator x, DecoratedGenerator g, bool ok) {
            if (!ok && violation.empty())
                violation = "state with sigma " + std::to_string(x.sigma.front());
            pairs.emplace_back(std::move(x), std::move(g));
        });
    if (report.violations > 0)
        throw internal_error("weight bijection violation at " + violation);
    if (!report.counts_match)
        throw internal_error("weight bijection cardinality mismatch");
    return pairs;
}

CfkBijectionReport cfk_bijection_check(const BraidWord& w, std::uint64_t budget) {
    return run_cfk_bijection(
        w, budget, [](DecoratedGenerator&&, DecoratedGenerator&&, bool) {});
}

// ---------------------------------------------------------------------------
// Decategorified tangle invariant

LaurentPoly tangle_delta(const BraidWord& w, const MultiIndex& jstar,
                         const MultiIndex& k, std::uint64_t budget) {
    if (jstar.ambient() != w.n || k.ambient() != w.n)
        throw validation_error("multi-index ambient size does not match strand count");
    MultiIndex j = jstar.complement();
    if (j.size() != k.size()) return LaurentPoly(q_ring());

    LaurentPoly minor_route = wedge_entry_minor(w, j, k);
    if (jstar.size() % 2 != 0) minor_route = -minor_route;

    // State route: the idempotent summand's generators are the j* anchors
    // (one −1 sign each) together with a Γ-style matching of j onto k,
    // expanded over the formal matrix.
    FormalMatrix fm = formal_burau(w, budget);
    LaurentPoly state_route(q_ring());
    const int m = j.size();
    std::vector<int> sigma(static_cast<std::size_t>(m));
    std::iota(sigma.begin(), sigma.end(), 1);
    if (m == 0) {
        state_route = LaurentPoly::constant(q_ring(), 1);
    } else {
        do {
            LaurentPoly prod = LaurentPoly::constant(q_ring(), 1);
            for (int s = 0; s < m && !prod.is_zero(); ++s)
                prod *= fm.entry(k.at(s), j.at(sigma[static_cast<std::size_t>(s)] - 1))
                            .collapse();
            if (perm_parity(sigma) != 0) prod = -prod;
            state_route += prod;
        } while (std::next_permutation(sigma.begin(), sigma.end()));
    }
    if (jstar.size() % 2 != 0) state_route = -state_route;

    if (minor_route != state_route)
        throw internal_error("tangle invariant route disagreement");
    return minor_route;
}

}  // namespace braidrep
