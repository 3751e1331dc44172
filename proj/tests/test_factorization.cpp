#include <random>

#include "braidforge/factorization.hpp"
#include "braidforge/normal_form.hpp"
#include "doctest.h"

using namespace braidforge;

namespace {

Factor twist_factor(int a, int b, int exponent, Side side = Side::below) {
    Factor f;
    f.path = PathSpec{lab(a), lab(b), side, {}};
    f.exponent = exponent;
    return f;
}

Factorization conic_bmf() {
    // smooth conic: two branch points
    Factorization f;
    f.ambient = PunctureSet::base(2);
    f.factors = {twist_factor(1, 2, 1), twist_factor(1, 2, 1)};
    return f;
}

Factorization random_factorization(std::mt19937& rng, int n, int count) {
    Factorization f;
    f.ambient = PunctureSet::base(n);
    std::uniform_int_distribution<int> pick(1, n);
    std::uniform_int_distribution<int> exp(1, 3);
    for (int i = 0; i < count; ++i) {
        int a = pick(rng), b = pick(rng);
        while (b == a) b = pick(rng);
        if (a > b) std::swap(a, b);
        Factor fac = twist_factor(a, b, exp(rng), (rng() % 2) ? Side::below : Side::above);
        if (rng() % 3 == 0) {
            int c = pick(rng), d = pick(rng);
            while (d == c) d = pick(rng);
            if (c > d) std::swap(c, d);
            fac.conjugator = compile_path(PathSpec{lab(c), lab(d), Side::below, {}},
                                          f.ambient).word;
        }
        f.factors.push_back(fac);
    }
    return f;
}

std::vector<long long> sorted_factor_degrees(const Factorization& f) {
    std::vector<long long> ds;
    for (const auto& fac : f.factors) ds.push_back(fac.degree());
    std::sort(ds.begin(), ds.end());
    return ds;
}

}  // namespace

TEST_CASE("product of the empty factorization is the identity") {
    Factorization f;
    f.ambient = PunctureSet::base(3);
    CHECK(f.product().empty());
    CHECK(f.total_degree() == 0);
}

TEST_CASE("conic BMF: (s1, s1) multiplies to the full twist of B_2") {
    auto rep = verify_bmf(conic_bmf());
    CHECK(rep.degree_ok);
    CHECK(rep.permutation_ok);
    CHECK(rep.delta_squared == CheckStatus::pass);
}

TEST_CASE("(s1 s2)^3 as a single sub-full-twist factor in B_3") {
    Factorization f;
    f.ambient = PunctureSet::base(3);
    Factor d2;
    d2.kind = Factor::Kind::sub_full_twist;
    d2.twist_support = {lab(1), lab(2), lab(3)};
    d2.exponent = 1;
    f.factors = {d2};
    CHECK(f.total_degree() == 6);
    auto rep = verify_bmf(f);
    CHECK(rep.degree_ok);
    CHECK(rep.permutation_ok);
    CHECK(rep.delta_squared == CheckStatus::pass);
}

TEST_CASE("sub_full_twist on a scattered support is a pure degree-m(m-1) braid") {
    auto K = PunctureSet::base(6);
    BraidWord w = sub_full_twist_word({lab(1), lab(3), lab(6)}, K);
    CHECK(w.degree() == 6);
    CHECK(w.permutation().is_identity());
}

TEST_CASE("hurwitz move definition and inverse") {
    Factorization f;
    f.ambient = PunctureSet::base(3);
    f.factors = {twist_factor(1, 2, 1), twist_factor(2, 3, 1)};

    Factorization g = hurwitz_move(f, 1, Direction::forward);
    // (s1, s2) -> (s1 s2 s1^-1, s1)
    CHECK(braid_equal(g.factors[0].realized(g.ambient), BraidWord(3, {1, 2, -1})));
    CHECK(braid_equal(g.factors[1].realized(g.ambient), BraidWord(3, {1})));

    Factorization back = hurwitz_move(g, 1, Direction::inverse);
    for (size_t i = 0; i < f.factors.size(); ++i)
        CHECK(back.factors[i].realized(back.ambient).letters() ==
              f.factors[i].realized(f.ambient).letters());

    CHECK_THROWS_AS(hurwitz_move(f, 2, Direction::forward), braid_error);
}

TEST_CASE("hurwitz moves preserve product, degree and factor-degree multiset") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 3 + static_cast<int>(rng() % 4);
        int count = 2 + static_cast<int>(rng() % 5);
        Factorization f = random_factorization(rng, n, count);
        int k = 1 + static_cast<int>(rng() % (count - 1));
        Direction dir = (rng() % 2) ? Direction::forward : Direction::inverse;
        Factorization g = hurwitz_move(f, k, dir);

        CHECK(braid_equal(f.product(), g.product()));
        CHECK(f.total_degree() == g.total_degree());
        CHECK(sorted_factor_degrees(f) == sorted_factor_degrees(g));
        CHECK(f.product_permutation() == g.product_permutation());

        // R_k then R_k^-1 is the identity on realized factors
        Factorization gg = hurwitz_move(
            g, k, dir == Direction::forward ? Direction::inverse : Direction::forward);
        for (size_t i = 0; i < f.factors.size(); ++i)
            CHECK(braid_equal(gg.factors[i].realized(f.ambient),
                              f.factors[i].realized(f.ambient)));
    }
}

TEST_CASE("degree audit itemizes by group label") {
    Factorization f;
    f.ambient = PunctureSet::base(3);
    Factor a = twist_factor(1, 2, 2);
    a.group = "nodes";
    Factor b = twist_factor(2, 3, 3);
    b.group = "cusps";
    Factor c = twist_factor(1, 3, 2);
    c.group = "nodes";
    f.factors = {a, b, c};
    auto rep = degree_audit(f);
    REQUIRE(rep.rows.size() == 2);
    CHECK(rep.rows[0].group == "nodes");
    CHECK(rep.rows[0].factor_count == 2);
    CHECK(rep.rows[0].degree == 4);
    CHECK(rep.rows[1].degree == 3);
    CHECK(rep.total == 7);
}

TEST_CASE("forgetting nothing is the identity map") {
    std::mt19937 rng(9);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 3 + static_cast<int>(rng() % 4);
        Factorization f = random_factorization(rng, n, 3);
        BraidWord w = f.product();
        std::vector<int> all;
        for (int i = 1; i <= n; ++i) all.push_back(i);
        CHECK(braid_equal(forget_strands(w, all), w));
    }
    CHECK_THROWS_AS(forget_strands(BraidWord(3, {1}), std::vector<int>{}), braid_error);
}

TEST_CASE("forget_strands is multiplicative") {
    std::mt19937 rng(13);
    std::uniform_int_distribution<int> gen(1, 7);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 8;
        BraidWord a(n), b(n);
        for (int i = 0; i < 12; ++i) a.push((rng() % 2 ? 1 : -1) * gen(rng));
        for (int i = 0; i < 12; ++i) b.push((rng() % 2 ? 1 : -1) * gen(rng));
        std::vector<int> keep;
        for (int i = 1; i <= n; ++i)
            if (rng() % 2) keep.push_back(i);
        if (keep.size() < 2) keep = {1, 2, 5};

        // the second part is scanned with the strand positions the first part
        // produced, so its keep set is the image under a's permutation
        BraidWord ab = compose(a, b);
        BraidWord fa = forget_strands(a, keep);
        Perm pa = a.permutation();
        std::vector<int> keep_after;
        for (int p : keep) keep_after.push_back(pa[p - 1] + 1);
        std::sort(keep_after.begin(), keep_after.end());
        BraidWord fb = forget_strands(b, keep_after);
        CHECK(braid_equal(forget_strands(ab, keep), compose(fa, fb)));
    }
}

TEST_CASE("pure-braid pair linkings sum to the degree") {
    std::mt19937 rng(17);
    int checked = 0;
    for (int trial = 0; trial < 80 && checked < 30; ++trial) {
        int n = 4 + static_cast<int>(rng() % 3);
        BraidWord w(n);
        std::uniform_int_distribution<int> gen(1, n - 1);
        for (int i = 0; i < 10; ++i) w.push((rng() % 2 ? 1 : -1) * gen(rng));
        w = compose(w, w);
        if (!w.permutation().is_identity()) continue;
        ++checked;
        long long sum = 0;
        for (int a = 1; a <= n; ++a)
            for (int b = a + 1; b <= n; ++b)
                sum += forget_strands(w, std::vector<int>{a, b}).degree();
        CHECK(sum == w.degree());
    }
    CHECK(checked > 0);
}

TEST_CASE("orbit search: fixed factorization has orbit 1") {
    Factorization f;
    f.ambient = PunctureSet::base(2);
    for (int i = 0; i < 6; ++i) f.factors.push_back(twist_factor(1, 2, 1));
    auto r = orbit_search(f, 1000);
    CHECK(r.states_visited == 1);
    CHECK_FALSE(r.budget_exhausted);
}

TEST_CASE("equivalent: single move certificate") {
    Factorization f;
    f.ambient = PunctureSet::base(3);
    f.factors = {twist_factor(1, 2, 1), twist_factor(2, 3, 1)};
    Factorization g = hurwitz_move(f, 1, Direction::forward);
    auto r = equivalent(f, g, 1000);
    REQUIRE(r.status == EquivalenceResult::Status::equivalent);
    CHECK(r.certificate.size() == 1);

    auto self = equivalent(f, f, 1000);
    REQUIRE(self.status == EquivalenceResult::Status::equivalent);
    CHECK(self.certificate.empty());
}

TEST_CASE("equivalent reports budget exhaustion, never inequivalence") {
    Factorization f;
    f.ambient = PunctureSet::base(3);
    f.factors = {twist_factor(1, 2, 1), twist_factor(2, 3, 1), twist_factor(1, 2, 1)};
    Factorization g = f;
    g.factors[0] = twist_factor(1, 3, 1);  // different product; unreachable
    auto r = equivalent(f, g, 200);
    CHECK(r.status == EquivalenceResult::Status::not_within_budget);
}

TEST_CASE("invariance under the identity braid") {
    Factorization f;
    f.ambient = PunctureSet::base(3);
    f.factors = {twist_factor(1, 2, 2), twist_factor(2, 3, 1)};
    auto r = invariance_check(f, BraidWord(3), 100);
    REQUIRE(r.status == InvarianceResult::Status::invariant);
    CHECK(r.certificate.empty());
}

TEST_CASE("invariance rule II at desk scale: Z^2_{i,jj'} under Z^q_{jj'}") {
    // punctures 1,2,3 standing for i, j, j'
    auto K = PunctureSet::base(3);
    Factorization f;
    f.ambient = K;
    f.factors = {twist_factor(1, 3, 2), twist_factor(1, 2, 2)};  // Z^2_{ij'} Z^2_{ij}
    BraidWord zjj = compile_path(PathSpec{lab(2), lab(3), Side::below, {}}, K).word;
    for (int q = -2; q <= 2; ++q) {
        auto r = invariance_check(f, power(zjj, q), 100000);
        CHECK(r.status == InvarianceResult::Status::invariant);
    }
}

TEST_CASE("invariance rule III at desk scale: Z^(3)_{i,jj'} under Z^q_{jj'}") {
    auto K = PunctureSet::base(3);
    BraidWord zjj = compile_path(PathSpec{lab(2), lab(3), Side::below, {}}, K).word;

    Factorization f;
    f.ambient = K;
    Factor t1 = twist_factor(1, 2, 3);
    t1.conjugator = zjj;
    Factor t2 = twist_factor(1, 2, 3);
    Factor t3 = twist_factor(1, 2, 3);
    t3.conjugator = zjj.inverse();
    f.factors = {t1, t2, t3};

    for (int q : {-1, 1, 2}) {
        auto r = invariance_check(f, power(zjj, q), 100000);
        CHECK(r.status == InvarianceResult::Status::invariant);
    }
}
