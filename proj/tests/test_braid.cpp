#include <doctest.h>

#include <random>

#include "braidrep/braid.hpp"
#include "test_util.hpp"

using namespace braidrep;
using namespace testutil;

TEST_CASE("parser: plain words, mixed separators, empty word") {
    BraidWord a = parse_braid("2: 1 1 1");
    CHECK(a.n == 2);
    CHECK(a.letters == std::vector<int>{1, 1, 1});

    BraidWord b = parse_braid("3: 1,-2,1,-2");
    CHECK(b.n == 3);
    CHECK(b.letters == std::vector<int>{1, -2, 1, -2});

    BraidWord c = parse_braid("2:");
    CHECK(c.n == 2);
    CHECK(c.letters.empty());

    BraidWord d = parse_braid("  4 :  3 , -1   2 ");
    CHECK(d.n == 4);
    CHECK(d.letters == std::vector<int>{3, -1, 2});
}

TEST_CASE("parser: malformed syntax reports a byte offset") {
    CHECK_THROWS_AS(parse_braid("x: 1"), parse_error);
    CHECK_THROWS_AS(parse_braid("3 1 2"), parse_error);
    try {
        parse_braid("3: 1 x");
        CHECK(false);
    } catch (const parse_error& e) {
        CHECK(e.offset() == 5);
    }
}

TEST_CASE("parser: out-of-range letters name the letter") {
    CHECK_THROWS_WITH_AS(parse_braid("2: 2"), doctest::Contains("letter 2"),
                         validation_error);
    CHECK_THROWS_AS(parse_braid("3: 0"), validation_error);
    CHECK_THROWS_AS(parse_braid("1: 1"), validation_error);
    CHECK_THROWS_AS(parse_braid("0:"), validation_error);
}

TEST_CASE("inversion reverses and flips") {
    BraidWord w(3, {1, 2});
    CHECK(braid_invert(w).letters == std::vector<int>{-2, -1});
    CHECK(braid_invert(BraidWord(3, {})).letters.empty());
    CHECK(braid_invert(BraidWord(2, {-1})).letters == std::vector<int>{1});
}

TEST_CASE("reflection maps letter index i to n-i") {
    CHECK(braid_reflect(BraidWord(3, {1})).letters == std::vector<int>{2});
    CHECK(braid_reflect(BraidWord(2, {1, 1})).letters == std::vector<int>{1, 1});
    CHECK(braid_reflect(BraidWord(4, {1, -3})).letters == std::vector<int>{3, -1});
}

TEST_CASE("exponent counts signs") {
    CHECK(braid_exponent(BraidWord(2, {1, 1, 1})) == 3);
    CHECK(braid_exponent(BraidWord(3, {1, -2, 1, -2})) == 0);
    CHECK(braid_exponent(BraidWord(5, {})) == 0);
}

TEST_CASE("permutation of a word") {
    CHECK(braid_permutation(BraidWord(2, {1})).images() == std::vector<int>{2, 1});
    CHECK(braid_permutation(BraidWord(2, {1, 1})).is_identity());
    // Two adjacent transpositions compose to the 3-cycle 1->2->3->1.
    CHECK(braid_permutation(BraidWord(3, {1, 2})).images() ==
          std::vector<int>{2, 3, 1});
}

TEST_CASE("purity") {
    CHECK(is_pure(BraidWord(2, {1, 1})));
    CHECK_FALSE(is_pure(BraidWord(2, {1})));
    CHECK_FALSE(is_pure(BraidWord(3, {1, -2, 1, -2})));
}

TEST_CASE("braid_permutation is a homomorphism") {
    std::mt19937_64 rng(61);
    for (int i = 0; i < 50; ++i) {
        int n = rand_int(rng, 2, 5);
        BraidWord u = random_word(rng, n, 8);
        BraidWord v = random_word(rng, n, 8);
        CHECK(braid_permutation(braid_concat(u, v)) ==
              Permutation::compose(braid_permutation(u), braid_permutation(v)));
    }
}

TEST_CASE("exponent under inversion and reflection; involutions") {
    std::mt19937_64 rng(67);
    for (int i = 0; i < 50; ++i) {
        int n = rand_int(rng, 2, 5);
        BraidWord w = random_word(rng, n, 10);
        CHECK(braid_exponent(braid_invert(w)) == -braid_exponent(w));
        CHECK(braid_exponent(braid_reflect(w)) == braid_exponent(w));
        CHECK(braid_invert(braid_invert(w)).letters == w.letters);
        CHECK(braid_reflect(braid_reflect(w)).letters == w.letters);
    }
}

TEST_CASE("permutation parity and inverse") {
    Permutation p({2, 3, 1});
    CHECK(p.parity() == 0);
    CHECK(p.inverse().images() == std::vector<int>{3, 1, 2});
    CHECK(Permutation({2, 1}).parity() == 1);
    CHECK(Permutation::compose(p, p.inverse()).is_identity());
    CHECK_THROWS_AS(Permutation({1, 1}), validation_error);
}
