#include <doctest.h>

#include <random>

#include "braidrep/ring.hpp"
#include "test_util.hpp"

using namespace braidrep;
using namespace testutil;

TEST_CASE("addition: inverses, identity, like-term merge") {
    auto q = q_ring();
    LaurentPoly a = LaurentPoly::constant(q, 1) - LaurentPoly::var_power(q, 0, 2);
    CHECK((a + (-a)).is_zero());

    LaurentPoly b = LaurentPoly::constant(q, 1) + LaurentPoly::var_power(q, 0, 1);
    CHECK(b + LaurentPoly(q) == b);

    LaurentPoly qinv = LaurentPoly::var_power(q, 0, -1);
    CHECK(qinv + qinv == LaurentPoly::monomial(q, {-1}, 2));
}

TEST_CASE("addition rejects mismatched rings") {
    LaurentPoly a(q_ring());
    LaurentPoly b(t_ring());
    CHECK_THROWS_AS(a + b, validation_error);
}

TEST_CASE("multiplication: difference of squares, identity, hand expansion") {
    auto q = q_ring();
    LaurentPoly one = LaurentPoly::constant(q, 1);
    LaurentPoly q2 = LaurentPoly::var_power(q, 0, 2);
    CHECK((one - q2) * (one + q2) == one - LaurentPoly::var_power(q, 0, 4));

    std::mt19937_64 rng(11);
    for (int i = 0; i < 20; ++i) {
        LaurentPoly p = random_poly(rng, q);
        CHECK(p * one == p);
    }

    LaurentPoly s = LaurentPoly::var_power(q, 0, -1) + LaurentPoly::var_power(q, 0, 1);
    LaurentPoly expect = LaurentPoly::monomial(q, {-2}, 1) +
                         LaurentPoly::constant(q, 2) + LaurentPoly::monomial(q, {2}, 1);
    CHECK(s * s == expect);
}

TEST_CASE("substitution: evaluation, monomial substitution, roots") {
    auto t = t_ring();
    LaurentPoly p = tpoly({{0, 1}, {1, -1}, {2, 1}});  // 1 - t + t^2
    std::map<std::string, LaurentPoly> at_one{{"t", LaurentPoly::constant(t, 1)}};
    CHECK(p.substitute(at_one, t) == LaurentPoly::constant(t, 1));

    LaurentPoly tinv = tpoly({{-1, 1}});
    std::map<std::string, LaurentPoly> to_q2{
        {"t", LaurentPoly::var_power(q_ring(), 0, 2)}};
    CHECK(tinv.substitute(to_q2, q_ring()) == LaurentPoly::var_power(q_ring(), 0, -2));

    CHECK(tpoly({{0, 1}, {1, -1}}).substitute(at_one, t).is_zero());
}

TEST_CASE("substitution of a non-unit into a negative exponent fails") {
    auto t = t_ring();
    LaurentPoly tinv = tpoly({{-1, 1}});
    std::map<std::string, LaurentPoly> bad{
        {"t", LaurentPoly::constant(t, 1) + LaurentPoly::var_power(t, 0, 1)}};
    CHECK_THROWS_AS(tinv.substitute(bad, t), validation_error);
    // Non-negative exponents take arbitrary values.
    LaurentPoly sq = tpoly({{2, 1}});
    CHECK(sq.substitute(bad, t) == tpoly({{0, 1}, {1, 2}, {2, 1}}));
}

TEST_CASE("canonical unit form: hand normalizations") {
    CHECK(tpoly({{2, -1}, {1, 1}, {0, -1}}).canonical_unit_form() ==
          tpoly({{2, 1}, {1, -1}, {0, 1}}));
    CHECK(tpoly({{3, 1}, {4, -1}}).canonical_unit_form() == tpoly({{0, 1}, {1, -1}}));
    CHECK(LaurentPoly(t_ring()).canonical_unit_form().is_zero());
}

TEST_CASE("canonical unit form is idempotent and unit-invariant") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 100; ++i) {
        LaurentPoly p = random_poly(rng, t_ring());
        LaurentPoly c = p.canonical_unit_form();
        CHECK(c.canonical_unit_form() == c);
        for (int k = -5; k <= 5; ++k) {
            for (int sign : {1, -1}) {
                LaurentPoly unit = LaurentPoly::monomial(t_ring(), {k}, sign);
                CHECK((p * unit).canonical_unit_form() == c);
            }
        }
    }
}

TEST_CASE("equality up to unit") {
    CHECK(tpoly({{1, 1}, {0, -1}}).equal_up_to_unit(tpoly({{0, 1}, {1, -1}})));
    CHECK(tpoly({{2, 1}, {1, -1}, {0, 1}})
              .equal_up_to_unit(tpoly({{-1, 1}, {0, -1}, {1, 1}})));
    CHECK_FALSE(tpoly({{1, 1}, {0, -1}}).equal_up_to_unit(tpoly({{1, 1}, {0, 1}})));
}

TEST_CASE("ring axioms on random polynomials") {
    auto vars = make_varset({"x", "y"});
    std::mt19937_64 rng(37);
    for (int i = 0; i < 60; ++i) {
        LaurentPoly a = random_poly(rng, vars);
        LaurentPoly b = random_poly(rng, vars);
        LaurentPoly c = random_poly(rng, vars);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("substitution commutes with sum and product") {
    auto vars = make_varset({"x", "y"});
    std::mt19937_64 rng(41);
    for (int i = 0; i < 40; ++i) {
        LaurentPoly a = random_poly(rng, vars);
        LaurentPoly b = random_poly(rng, vars);
        // A unit assignment keeps negative exponents substitutable.
        std::map<std::string, LaurentPoly> assign{
            {"x", LaurentPoly::monomial(vars, {rand_int(rng, -2, 2),
                                               rand_int(rng, -2, 2)},
                                        rng() & 1u ? 1 : -1)}};
        CHECK((a + b).substitute(assign, vars) ==
              a.substitute(assign, vars) + b.substitute(assign, vars));
        CHECK((a * b).substitute(assign, vars) ==
              a.substitute(assign, vars) * b.substitute(assign, vars));
    }
}

TEST_CASE("matrix product: identity, hand square, hand inverse") {
    auto t = t_ring();
    RingMatrix gen(t, 2, 2);
    gen.at(0, 0) = tpoly({{0, 1}, {1, -1}});
    gen.at(0, 1) = tpoly({{0, 1}});
    gen.at(1, 0) = tpoly({{1, 1}});

    CHECK(RingMatrix::identity(t, 2) * gen == gen);

    RingMatrix sq = gen * gen;
    CHECK(sq.at(0, 0) == tpoly({{0, 1}, {1, -1}, {2, 1}}));
    CHECK(sq.at(0, 1) == tpoly({{0, 1}, {1, -1}}));
    CHECK(sq.at(1, 0) == tpoly({{1, 1}, {2, -1}}));
    CHECK(sq.at(1, 1) == tpoly({{1, 1}}));

    RingMatrix inv(t, 2, 2);
    inv.at(0, 1) = tpoly({{-1, 1}});
    inv.at(1, 0) = tpoly({{0, 1}});
    inv.at(1, 1) = tpoly({{0, 1}, {-1, -1}});
    CHECK(gen * inv == RingMatrix::identity(t, 2));

    RingMatrix wide(t, 2, 3);
    CHECK_THROWS_AS(wide * gen, validation_error);
}

TEST_CASE("determinant: hand values") {
    auto t = t_ring();
    RingMatrix gen(t, 2, 2);
    gen.at(0, 0) = tpoly({{0, 1}, {1, -1}});
    gen.at(0, 1) = tpoly({{0, 1}});
    gen.at(1, 0) = tpoly({{1, 1}});
    CHECK(gen.det() == tpoly({{1, -1}}));

    CHECK(RingMatrix::identity(t, 3).det() == LaurentPoly::constant(t, 1));

    // I - (the hand cube of the 2x2 block) is singular.
    RingMatrix cube(t, 2, 2);
    cube.at(0, 0) = tpoly({{0, 1}, {1, -1}, {2, 1}, {3, -1}});
    cube.at(0, 1) = tpoly({{0, 1}, {1, -1}, {2, 1}});
    cube.at(1, 0) = tpoly({{1, 1}, {2, -1}, {3, 1}});
    cube.at(1, 1) = tpoly({{1, 1}, {2, -1}});
    CHECK((RingMatrix::identity(t, 2) - cube).det().is_zero());

    RingMatrix wide(t, 2, 3);
    CHECK_THROWS_AS(wide.det(), validation_error);
}

TEST_CASE("determinant agrees with the permutation-expansion oracle") {
    std::mt19937_64 rng(53);
    auto vars = make_varset({"x"});
    for (std::size_t n = 1; n <= 4; ++n) {
        for (int i = 0; i < 25; ++i) {
            RingMatrix m = random_matrix(rng, vars, n);
            CHECK(m.det() == det_by_permutation_sum(m));
        }
    }
}

TEST_CASE("det is multiplicative") {
    std::mt19937_64 rng(59);
    auto vars = make_varset({"x"});
    for (std::size_t n = 2; n <= 3; ++n) {
        for (int i = 0; i < 20; ++i) {
            RingMatrix a = random_matrix(rng, vars, n);
            RingMatrix b = random_matrix(rng, vars, n);
            CHECK((a * b).det() == a.det() * b.det());
        }
    }
}

TEST_CASE("submatrix picks rows and columns in index order") {
    auto t = t_ring();
    RingMatrix id3 = RingMatrix::identity(t, 3);
    CHECK(id3.submatrix(MultiIndex(3, {1, 2}), MultiIndex(3, {1, 2})) ==
          RingMatrix::identity(t, 2));

    // Entry (2,2) of the hand cube.
    RingMatrix cube(t, 2, 2);
    cube.at(1, 1) = tpoly({{1, 1}, {2, -1}});
    RingMatrix single = cube.submatrix(MultiIndex(2, {2}), MultiIndex(2, {2}));
    CHECK(single.rows() == 1);
    CHECK(single.at(0, 0) == tpoly({{1, 1}, {2, -1}}));

    RingMatrix any(t, 2, 2);
    any.at(0, 1) = tpoly({{3, 7}});
    CHECK(any.submatrix(MultiIndex(2, {1, 2}), MultiIndex(2, {1, 2})) == any);

    CHECK_THROWS_AS(MultiIndex(3, {2, 1}), validation_error);
    CHECK_THROWS_AS(MultiIndex(3, {0}), validation_error);
    CHECK_THROWS_AS(MultiIndex(3, {4}), validation_error);
}

TEST_CASE("multi-index complement and subset enumeration") {
    MultiIndex m(5, {2, 4});
    CHECK(m.complement() == MultiIndex(5, {1, 3, 5}));
    CHECK(MultiIndex::empty(3).complement() == MultiIndex::full(3));

    auto subsets = all_subsets(3);
    CHECK(subsets.size() == 8);
    CHECK(subsets[0] == MultiIndex::empty(3));
    CHECK(subsets[1] == MultiIndex(3, {1}));
    CHECK(subsets[3] == MultiIndex(3, {3}));
    CHECK(subsets.back() == MultiIndex::full(3));
}

TEST_CASE("canonical form honours the distinguished variable") {
    auto vars = make_varset({"q", lambda_name});
    LaurentPoly p = LaurentPoly::monomial(vars, {0, 1}, 1) -
                    LaurentPoly::monomial(vars, {1, 0}, 1);  // λ - q
    // With q most significant the minimal vector is (0,1); with λ most
    // significant it's (1,0). Both normalizations flip signs accordingly.
    CHECK(p.canonical_unit_form(0) ==
          LaurentPoly::monomial(vars, {0, 0}, 1) -
              LaurentPoly::monomial(vars, {1, -1}, 1));
    CHECK(p.canonical_unit_form(1) ==
          LaurentPoly::monomial(vars, {-1, 1}, -1) +
              LaurentPoly::monomial(vars, {0, 0}, 1));
}
