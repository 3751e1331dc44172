#include <random>

#include "braidforge/normal_form.hpp"
#include "braidforge/word.hpp"
#include "doctest.h"

using namespace braidforge;

namespace {

BraidWord w(int n, std::initializer_list<int> ls) { return BraidWord(n, ls); }

BraidWord random_word(std::mt19937& rng, int n, int len) {
    std::uniform_int_distribution<int> gen(1, n - 1);
    std::uniform_int_distribution<int> sign(0, 1);
    BraidWord r(n);
    for (int i = 0; i < len; ++i) r.push(sign(rng) ? gen(rng) : -gen(rng));
    return r;
}

}  // namespace

TEST_CASE("compose freely reduces") {
    CHECK(compose(w(2, {1}), w(2, {-1})).empty());
    CHECK(compose(w(3, {1}), w(3, {2})).letters() == std::vector<int>{1, 2});
    CHECK(compose(w(3, {1, 2}), w(3, {-2, -1})).empty());
    CHECK_THROWS_AS(compose(w(2, {1}), w(3, {1})), braid_error);
}

TEST_CASE("conjugate convention is w^-1 x w") {
    CHECK(conjugate(w(3, {1}), BraidWord(3)).letters() == std::vector<int>{1});
    CHECK(conjugate(w(3, {1}), w(3, {1})).letters() == std::vector<int>{1});
    CHECK(conjugate(w(3, {1}), w(3, {2})).letters() == std::vector<int>{-2, 1, 2});
}

TEST_CASE("degree") {
    CHECK(full_twist(48).degree() == 2256);
    CHECK(BraidWord(4).degree() == 0);
    CHECK(w(3, {-1, 2}).degree() == 0);

    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        BraidWord a = random_word(rng, 5, 12), b = random_word(rng, 5, 12);
        CHECK(compose(a, b).degree() == a.degree() + b.degree());
        CHECK(conjugate(a, b).degree() == a.degree());
    }
}

TEST_CASE("full twist basics") {
    CHECK(full_twist(2).letters() == std::vector<int>{1, 1});
    BraidWord ft3 = full_twist(3);
    CHECK(ft3.degree() == 6);
    CHECK(ft3.permutation().is_identity());
    CHECK(full_twist(48).permutation().is_identity());
    CHECK_THROWS_AS(full_twist(1), braid_error);
}

TEST_CASE("permutation map is a homomorphism onto transpositions") {
    CHECK(w(3, {1}).permutation() == Perm::transposition(3, 0));
    CHECK(w(3, {1, 1}).permutation().is_identity());

    std::mt19937 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        BraidWord a = random_word(rng, 6, 10), b = random_word(rng, 6, 10);
        CHECK(compose(a, b).permutation() == a.permutation() * b.permutation());
    }
}

TEST_CASE("normal form: Artin relations") {
    CHECK(NormalForm(w(3, {1, 2, 1})) == NormalForm(w(3, {2, 1, 2})));
    CHECK(NormalForm(w(4, {1, 3})) == NormalForm(w(4, {3, 1})));
    CHECK(NormalForm(w(3, {1, 2, 1})).infimum() == 1);
    CHECK(NormalForm(w(3, {1, 2, 1})).canonical_length() == 0);
}

TEST_CASE("(s1 s2)^3 is the full twist of B_3") {
    BraidWord p = power(w(3, {1, 2}), 3);
    NormalForm nf(p);
    CHECK(nf.infimum() == 2);
    CHECK(nf.canonical_length() == 0);
    CHECK(nf == NormalForm(full_twist(3)));
}

TEST_CASE("normal form invariants on random words") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 120; ++trial) {
        int n = 3 + static_cast<int>(rng() % 4);
        BraidWord a = random_word(rng, n, 18);

        // round-trip through to_word
        NormalForm nf(a);
        CHECK(NormalForm(nf.to_word()) == nf);
        CHECK(nf.degree() == a.degree());

        // insert a random relator: <H_i, H_{i+1}> = 1 or [H_i, H_j] = 1
        BraidWord b = a;
        if (n > 3 && (rng() % 2)) {
            int i = 1 + static_cast<int>(rng() % (n - 3));
            int j = i + 2 + static_cast<int>(rng() % (n - 2 - i));
            b.push_word(w(n, {i, j, -i, -j}));
        } else {
            int i = 1 + static_cast<int>(rng() % (n - 2));
            b.push_word(w(n, {i, i + 1, i, -(i + 1), -i, -(i + 1)}));
        }
        CHECK(NormalForm(b) == nf);

        // free reduction does not change the normal form
        BraidWord c = a;
        int k = 1 + static_cast<int>(rng() % (n - 1));
        c.push(k);
        c.push(-k);
        CHECK(NormalForm(c) == nf);
    }
}

TEST_CASE("canonical factors are left-weighted, never Delta or identity") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 3 + static_cast<int>(rng() % 4);
        NormalForm nf(random_word(rng, n, 25));
        const auto& fs = nf.factors();
        for (size_t i = 0; i < fs.size(); ++i) {
            CHECK(!fs[i].is_identity());
            CHECK(!fs[i].is_longest());
            if (i + 1 < fs.size()) {
                uint64_t uncovered = fs[i + 1].starting_set() & ~fs[i].finishing_set();
                CHECK(uncovered == 0);
            }
        }
    }
}

TEST_CASE("full twist is central") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + static_cast<int>(rng() % 4);
        BraidWord a = random_word(rng, n, 15);
        BraidWord ft = full_twist(n);
        CHECK(NormalForm(compose(ft, a)) == NormalForm(compose(a, ft)));
    }
}

TEST_CASE("equality oracle distinguishes inequivalent words") {
    CHECK_FALSE(braid_equal(w(3, {1}), w(3, {2})));
    CHECK_FALSE(braid_equal(w(3, {1, 2}), w(3, {2, 1})));
    // s1 s2 s1 s2^-1 = s1 (s1^-1 s2 s1) = s2 s1
    CHECK(braid_equal(w(3, {1, 2, 1, -2}), w(3, {2, 1})));
}
