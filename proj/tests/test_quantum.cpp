#include <doctest.h>

#include <random>

#include "braidrep/quantum.hpp"
#include "test_util.hpp"

using namespace braidrep;
using namespace testutil;

TEST_CASE("wedge entries of small words") {
    CHECK(wedge_entry_minor(BraidWord(2, {1}), MultiIndex::empty(2),
                            MultiIndex::empty(2)) ==
          LaurentPoly::constant(q_ring(), 1));
    CHECK(wedge_entry_minor(BraidWord(2, {1}), MultiIndex::full(2),
                            MultiIndex::full(2)) == qt({{1, -1}}));
    MultiIndex two(2, {2});
    CHECK(wedge_entry_minor(BraidWord(2, {1, 1, 1}), two, two) ==
          qt({{1, 1}, {2, -1}}));
    CHECK_THROWS_AS(wedge_entry_minor(BraidWord(2, {1}), two, MultiIndex::full(2)),
                    validation_error);
}

TEST_CASE("wedge entries reproduce burau with j as the column index") {
    std::mt19937_64 rng(113);
    for (int i = 0; i < 10; ++i) {
        int n = rand_int(rng, 2, 4);
        BraidWord w = random_word(rng, n, 8);
        RingMatrix b = burau(w);
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k)
                CHECK(wedge_entry_minor(w, MultiIndex(n, {j}), MultiIndex(n, {k})) ==
                      b.at(static_cast<std::size_t>(k - 1),
                           static_cast<std::size_t>(j - 1)));
    }
}

TEST_CASE("wedge matrix of a generator") {
    WedgeMatrix wm = wedge_rep(BraidWord(2, {1}));
    CHECK(wm.basis.size() == 4);
    CHECK(wm.entry(MultiIndex::empty(2), MultiIndex::empty(2)) ==
          LaurentPoly::constant(q_ring(), 1));
    MultiIndex one(2, {1}), two(2, {2});
    CHECK(wm.entry(one, one) == qt({{0, 1}, {1, -1}}));
    CHECK(wm.entry(one, two) == qt({{0, 1}}));
    CHECK(wm.entry(two, one) == qt({{1, 1}}));
    CHECK(wm.entry(two, two).is_zero());
    CHECK(wm.entry(MultiIndex::full(2), MultiIndex::full(2)) == qt({{1, -1}}));
    // Off-diagonal blocks between different degrees vanish.
    CHECK(wm.entry(MultiIndex::empty(2), one).is_zero());
    CHECK(wm.entry(MultiIndex::full(2), two).is_zero());
}

TEST_CASE("wedge of the identity is the identity; functoriality instance") {
    WedgeMatrix id = wedge_rep(BraidWord(2, {}));
    CHECK(id.mat == RingMatrix::identity(q_ring(), 4));

    WedgeMatrix gen = wedge_rep(BraidWord(2, {1}));
    WedgeMatrix sq = wedge_rep(BraidWord(2, {1, 1}));
    CHECK(sq.mat == gen.mat * gen.mat);
}

TEST_CASE("degree preservation and route equivalence on random words") {
    std::mt19937_64 rng(127);
    for (int i = 0; i < 12; ++i) {
        int n = rand_int(rng, 2, 4);
        BraidWord w = random_word(rng, n, 8);
        WedgeMatrix minors = wedge_rep(w);
        WedgeMatrix composed = wedge_rep_composed(w);
        CHECK(minors.mat == composed.mat);
        for (std::size_t r = 0; r < minors.basis.size(); ++r)
            for (std::size_t c = 0; c < minors.basis.size(); ++c)
                if (minors.basis[r].size() != minors.basis[c].size())
                    CHECK(minors.mat.at(r, c).is_zero());
    }
}

TEST_CASE("wedge bound is enforced") {
    CHECK_THROWS_AS(wedge_rep(BraidWord(4, {1}), 3), validation_error);
}

TEST_CASE("wedge routes agree at n = 5 and n = 6") {
    std::mt19937_64 rng(191);
    // wedge_rep cross-checks the composition route internally up to n = 6.
    for (int n : {5, 6}) {
        BraidWord w = random_word(rng, n, 6);
        WedgeMatrix wm = wedge_rep(w);
        CHECK(wm.basis.size() == (std::size_t(1) << n));
    }
}

TEST_CASE("super trace vanishes and matches det(I - burau)") {
    std::mt19937_64 rng(131);
    CHECK(super_trace(BraidWord(2, {})).is_zero());
    CHECK(super_trace(BraidWord(2, {1, 1, 1})).is_zero());
    for (int i = 0; i < 20; ++i) {
        int n = rand_int(rng, 2, 4);
        BraidWord w = random_word(rng, n, 10);
        CHECK(super_trace(w).is_zero());

        // The exterior-trace identity, with both sides built separately.
        WedgeMatrix wm = wedge_rep(w);
        LaurentPoly alternating(q_ring());
        for (std::size_t b = 0; b < wm.basis.size(); ++b) {
            LaurentPoly term = wm.mat.at(b, b);
            if (wm.basis[b].size() % 2 != 0) term = -term;
            alternating += term;
        }
        RingMatrix id = RingMatrix::identity(q_ring(), static_cast<std::size_t>(n));
        CHECK(alternating == (id - burau(w)).det());
        CHECK(alternating.is_zero());
    }
}

TEST_CASE("qhat: unknot, trefoil, Hopf link, unlinks") {
    CHECK(qhat(BraidWord(1, {})) == LaurentPoly::constant(q_ring(), 1));

    LaurentPoly trefoil = qhat(BraidWord(2, {1, 1, 1}));
    // q^{1-3} (1 - t + t^2) = t^{-1} - 1 + t
    CHECK(trefoil == qt({{-1, 1}, {0, -1}, {1, 1}}));
    CHECK(trefoil.equal_up_to_unit(qt({{2, 1}, {1, -1}, {0, 1}})));

    LaurentPoly hopf = qhat(BraidWord(2, {1, 1}));
    CHECK(hopf ==
          LaurentPoly::monomial(q_ring(), {-1}, 1) + LaurentPoly::monomial(q_ring(), {1}, -1));
    CHECK(hopf.equal_up_to_unit(qt({{1, 1}, {0, -1}})));

    CHECK(qhat(BraidWord(2, {})).is_zero());
    CHECK(qhat(BraidWord(3, {})).is_zero());
}

TEST_CASE("qhat agrees with the Alexander minor route up to unit") {
    std::mt19937_64 rng(137);
    for (int i = 0; i < 40; ++i) {
        int n = rand_int(rng, 2, 5);
        BraidWord w = random_word(rng, n, 12);
        CHECK(qhat(w).canonical_unit_form() == alexander_via_minor(w));
    }
}

TEST_CASE("markov moves leave qhat unchanged up to unit") {
    // A concrete stabilization instance.
    CHECK(qhat(BraidWord(2, {1, 1, 1}))
              .equal_up_to_unit(qhat(BraidWord(3, {1, 1, 1, 2}))));

    MarkovReport report = qhat_markov_check(BraidWord(2, {1, 1, 1}), 50, 12345);
    CHECK(report.trials == 50);
    CHECK(report.failures.empty());

    MarkovReport fig8 = qhat_markov_check(BraidWord(3, {1, -2, 1, -2}), 50, 999);
    CHECK(fig8.failures.empty());

    MarkovReport unknot = qhat_markov_check(BraidWord(1, {}), 10, 1);
    CHECK(unknot.failures.empty());
}

TEST_CASE("markov check is deterministic for a fixed seed") {
    auto a = qhat_markov_check(BraidWord(3, {1, 2, 1}), 25, 42);
    auto b = qhat_markov_check(BraidWord(3, {1, 2, 1}), 25, 42);
    CHECK(a.trials == b.trials);
    CHECK(a.failures.size() == b.failures.size());
}
