#include <random>

#include "braidforge/disk.hpp"
#include "braidforge/factorization.hpp"
#include "braidforge/normal_form.hpp"
#include "doctest.h"

using namespace braidforge;

namespace {

PathSpec below(int a, int b) { return PathSpec{lab(a), lab(b), Side::below, {}}; }
PathSpec above(int a, int b) { return PathSpec{lab(a), lab(b), Side::above, {}}; }

// f_{a,b}: net signed crossings of the strands starting at positions a, b.
long long pair_linking(const BraidWord& w, int a, int b) {
    return forget_strands(w, std::vector<int>{a, b}).degree();
}

}  // namespace

TEST_CASE("adjacent half-twist compiles to sigma_a") {
    auto K = PunctureSet::base(2);
    CHECK(compile_path(below(1, 2), K).word.letters() == std::vector<int>{1});
    auto K8 = PunctureSet::base(8);
    CHECK(compile_path(below(4, 5), K8).word.letters() == std::vector<int>{4});
    // reversed path gives the same word
    CHECK(compile_path(below(5, 4), K8).word.letters() == std::vector<int>{4});
}

TEST_CASE("below-path word follows the fixed convention") {
    auto K = PunctureSet::base(5);
    CHECK(compile_path(below(1, 4), K).word.letters() ==
          std::vector<int>{-3, -2, 1, 2, 3});
    CHECK(compile_path(above(1, 4), K).word.letters() ==
          std::vector<int>{3, 2, 1, -2, -3});
}

TEST_CASE("half-twist contract: degree 1, endpoint transposition, positive square") {
    std::mt19937 rng(3);
    for (int n = 3; n <= 8; ++n) {
        auto K = PunctureSet::base(n);
        for (int a = 1; a <= n; ++a)
            for (int b = a + 1; b <= n && b - a <= 5; ++b) {
                for (auto side : {Side::below, Side::above}) {
                    PathSpec p{lab(a), lab(b), side, {}};
                    HalfTwist h = compile_path(p, K);
                    CHECK(h.word.degree() == 1);
                    Perm perm = h.word.permutation();
                    CHECK(perm[a - 1] == b - 1);
                    CHECK(perm[b - 1] == a - 1);
                    // the endpoints twist counterclockwise: +1 per half-twist
                    CHECK(pair_linking(h.word, a, b) == 1);
                    BraidWord sq = power(h.word, 2);
                    CHECK(sq.degree() == 2);
                    CHECK(sq.permutation().is_identity());
                    CHECK(pair_linking(sq, a, b) == 2);
                }
            }
    }
}

TEST_CASE("above and below paths differ but share the endpoint transposition") {
    auto K = PunctureSet::base(3);
    HalfTwist hb = compile_path(below(1, 3), K);
    HalfTwist ha = compile_path(above(1, 3), K);
    CHECK_FALSE(braid_equal(hb.word, ha.word));
    CHECK(hb.word.permutation() == ha.word.permutation());
    CHECK(hb.word.permutation() == Perm(3) * Perm::transposition(3, 0) * Perm::transposition(3, 1) *
                                       Perm::transposition(3, 0));
}

TEST_CASE("disjoint paths commute, consecutive paths satisfy the braid relation") {
    auto K = PunctureSet::base(6);
    std::mt19937 rng(17);
    // disjoint, non-interleaved
    for (auto [a, b, c, d] : {std::tuple{1, 2, 3, 5}, {1, 3, 4, 6}, {2, 3, 5, 6}}) {
        HalfTwist h1 = compile_path(below(a, b), K);
        HalfTwist h2 = compile_path(below(c, d), K);
        CHECK(braid_equal(compose(h1.word, h2.word), compose(h2.word, h1.word)));
    }
    // consecutive with one shared endpoint and compatible sides
    for (auto [a, b, c] : {std::tuple{1, 2, 4}, {2, 3, 5}, {1, 4, 6}}) {
        BraidWord x = compile_path(below(a, b), K).word;
        BraidWord y = compile_path(below(b, c), K).word;
        CHECK(braid_equal(compose(compose(x, y), x), compose(compose(y, x), y)));
    }
}

TEST_CASE("detours change the braid") {
    auto K = PunctureSet::base(4);
    PathSpec plain = below(1, 4);
    PathSpec detoured = below(1, 4);
    detoured.detours.push_back(Detour{lab(2), lab(2), Side::above});
    HalfTwist hp = compile_path(plain, K);
    HalfTwist hd = compile_path(detoured, K);
    CHECK_FALSE(braid_equal(hp.word, hd.word));
    CHECK(hd.word.degree() == 1);
    CHECK(hd.word.permutation() == hp.word.permutation());
    // a below-path with an all-covering above detour equals the above-path
    PathSpec covered = below(1, 4);
    covered.detours.push_back(Detour{lab(2), lab(3), Side::above});
    CHECK(braid_equal(compile_path(covered, K).word, compile_path(above(1, 4), K).word));
}

TEST_CASE("nested detours resolve innermost-first") {
    auto K = PunctureSet::base(6);
    PathSpec p = below(1, 6);
    p.detours.push_back(Detour{lab(3), lab(3), Side::below});  // inner, wins on 3
    p.detours.push_back(Detour{lab(2), lab(4), Side::above});  // outer
    auto sched = side_schedule(p, K);
    REQUIRE(sched.size() == 4);
    CHECK(sched[0] == std::pair{2, Side::above});
    CHECK(sched[1] == std::pair{3, Side::below});
    CHECK(sched[2] == std::pair{4, Side::above});
    CHECK(sched[3] == std::pair{5, Side::below});
}

TEST_CASE("invalid paths are rejected") {
    auto K = PunctureSet::base(4);
    CHECK_THROWS_AS(compile_path(PathSpec{lab(1), lab(1), Side::below, {}}, K), braid_error);
    CHECK_THROWS_AS(compile_path(PathSpec{lab(1), lab(7), Side::below, {}}, K), braid_error);
    PathSpec bad = below(2, 3);
    bad.detours.push_back(Detour{lab(1), lab(1), Side::above});
    CHECK_THROWS_AS(compile_path(bad, K), braid_error);
}

TEST_CASE("doubling") {
    auto K2 = double_set(PunctureSet::base(2));
    CHECK(K2.count() == 4);
    CHECK(K2.position(lab(1)) == 1);
    CHECK(K2.position(lab(1, true)) == 2);
    CHECK(K2.position(lab(2)) == 3);
    CHECK(K2.position(lab(2, true)) == 4);
    CHECK_THROWS_AS(double_set(K2), braid_error);

    auto K24 = double_set(PunctureSet::base(24));
    CHECK(K24.count() == 48);
    for (int i = 1; i <= 24; ++i) {
        CHECK(K24.position(lab(i)) == 2 * i - 1);
        CHECK(K24.position(lab(i, true)) == 2 * i);
    }
}

TEST_CASE("lifting a base path to the doubled set") {
    auto K = PunctureSet::base(3);
    auto K2 = double_set(K);

    PathSpec p = below(1, 2);
    PathSpec q = lift_path(p);
    HalfTwist h = compile_path(q, K2);
    // now a non-adjacent path skipping 1'
    CHECK(h.word.degree() == 1);
    CHECK(h.word.permutation()[0] == 2);

    PathSpec d = below(1, 3);
    d.detours.push_back(Detour{lab(2), lab(2), Side::above});
    PathSpec dl = lift_path(d);
    REQUIRE(dl.detours.size() == 1);
    CHECK(dl.detours[0].lo == lab(2));
    CHECK(dl.detours[0].hi == lab(2, true));

    PathSpec e = below(1, 2);
    CHECK(lift_path(e).detours.empty());
}

TEST_CASE("geometric oracle: permutation and crossings of drawn paths") {
    // brute force over all paths of span <= 5 in n <= 8: the compiled word
    // must transpose exactly the endpoints and link every spectator pair 0
    for (int n = 3; n <= 8; ++n) {
        auto K = PunctureSet::base(n);
        for (int a = 1; a < n; ++a)
            for (int b = a + 2; b <= std::min(n, a + 5); ++b) {
                HalfTwist h = compile_path(below(a, b), K);
                BraidWord sq = power(h.word, 2);
                for (int u = 1; u < b - a; ++u) {
                    int q = a + u;
                    // each endpoint strand passes a spectator once, on the
                    // same side, travelling in opposite directions
                    CHECK(pair_linking(h.word, a, q) == 1);
                    CHECK(pair_linking(h.word, q, b) == -1);
                    // the square returns both strands home: spectators unlink
                    CHECK(pair_linking(sq, a, q) == 0);
                    CHECK(pair_linking(sq, q, b) == 0);
                    for (int v = u + 1; v < b - a; ++v)
                        CHECK(pair_linking(h.word, q, a + v) == 0);
                }
            }
    }
}
