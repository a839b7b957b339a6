#include <catch2/catch_amalgamated.hpp>

#include "tuttelab/brylawski.hpp"
#include "tuttelab/families.hpp"
#include "tuttelab/rankfunc.hpp"
#include "tuttelab/rng.hpp"

using namespace tuttelab;

namespace {

RankFunction random_rank_function(SplitMix64& rng, int n) {
    RankFunction S;
    S.n = n;
    S.ranks.resize(size_t{1} << n);
    int rE = static_cast<int>(rng.next_below(n + 1));
    S.ranks[0] = 0;
    S.ranks[S.full_mask()] = rE;
    for (uint32_t A = 1; A < S.full_mask(); ++A)
        S.ranks[A] = static_cast<int>(rng.next_in(-2, std::min(std::popcount(A), rE)));
    return S;
}

BiPoly xm1_pow(int k) { return (BiPoly::x() - BiPoly::constant(1)).pow(k); }
BiPoly ym1_pow(int k) { return (BiPoly::y() - BiPoly::constant(1)).pow(k); }

bool all_ok(const std::vector<RelationRow>& rows) {
    for (const auto& r : rows)
        if (!r.ok) return false;
    return true;
}

}  // namespace

TEST_CASE("detect on fixed polynomials") {
    // (x-1)^k is (0,k)-Brylawski
    for (int k = 1; k <= 5; ++k) {
        auto p = detect_brylawski(xm1_pow(k));
        REQUIRE(p.has_value());
        CHECK(p->n == 0);
        CHECK(p->r == k);
        CHECK(p->c == 1);
    }
    // (y-1)^l is (0,-l)-Brylawski
    for (int l = 1; l <= 5; ++l) {
        auto p = detect_brylawski(ym1_pow(l));
        REQUIRE(p.has_value());
        CHECK(p->n == 0);
        CHECK(p->r == -l);
        CHECK(p->c == 1);
    }
    // x + 2 is not
    CHECK_FALSE(detect_brylawski(BiPoly::x() + BiPoly::constant(2)).has_value());
    // multiples of xy - x - y vanish on the hyperbola: not Brylawski
    BiPoly hyp = BiPoly::monomial(1, 1, 1) - BiPoly::x() - BiPoly::y();
    CHECK_FALSE(detect_brylawski(hyp).has_value());
    CHECK_FALSE(detect_brylawski(hyp * (BiPoly::x() + BiPoly::y())).has_value());
    CHECK_THROWS_AS(detect_brylawski(BiPoly::zero()), Error);
}

TEST_CASE("corank-nullity polynomials are (|E|, r(E), 1)-Brylawski") {
    SplitMix64 rng(910ULL);
    for (int trial = 0; trial < 500; ++trial) {
        int n = 1 + static_cast<int>(rng.next_below(8));
        RankFunction S = random_rank_function(rng, n);
        BiPoly T = corank_nullity(S);
        auto p = detect_brylawski(T);
        REQUIRE(p.has_value());
        CHECK(p->n == n);
        CHECK(p->r == S.rank_E());
        CHECK(p->c == 1);
        // relations hold for all h up to |E| + 2
        CHECK(all_ok(brylawski_relations(T, *p, n + 2)));
    }
}

TEST_CASE("low-order relation consequences") {
    SplitMix64 rng(911ULL);
    int seen_n1 = 0, seen_n2 = 0;
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(rng.next_below(6));
        BiPoly T = corank_nullity(random_rank_function(rng, n));
        if (n > 0) {
            CHECK(T.coeff(0, 0) == 0);  // h = 0
            ++seen_n1;
        }
        if (n > 1) {
            CHECK(T.coeff(1, 0) == T.coeff(0, 1));  // h = 1
            ++seen_n2;
        }
    }
    CHECK(seen_n1 > 0);
    CHECK(seen_n2 > 0);
}

TEST_CASE("five-element example is (5,3)-Brylawski") {
    BiPoly T;
    T.add_term(3, 0, 1);
    T.add_term(2, 0, 2);
    T.add_term(0, 2, 1);
    T.add_term(1, 1, 3);
    auto p = detect_brylawski(T);
    REQUIRE(p.has_value());
    CHECK(p->n == 5);
    CHECK(p->r == 3);
    CHECK(p->c == 1);
    auto rows = brylawski_relations(T, *p, 5);
    REQUIRE(rows.size() == 6);
    CHECK(all_ok(rows));
}

TEST_CASE("relations with parameters outside the matroid range") {
    // r > n: the right side needs falling-factorial binomials
    for (int k = 1; k <= 5; ++k) {
        BiPoly U = xm1_pow(k);
        auto p = detect_brylawski(U);
        REQUIRE(p.has_value());
        CHECK(all_ok(brylawski_relations(U, *p, k + 3)));
    }
    // x (x-1)^3 is (1,4)-Brylawski
    BiPoly U = BiPoly::x() * xm1_pow(3);
    auto p = detect_brylawski(U);
    REQUIRE(p.has_value());
    CHECK(p->n == 1);
    CHECK(p->r == 4);
    CHECK(all_ok(brylawski_relations(U, *p, 7)));

    // r < 0
    for (int l = 1; l <= 4; ++l) {
        BiPoly V = ym1_pow(l) * BiPoly::y();
        auto q = detect_brylawski(V);
        REQUIRE(q.has_value());
        CHECK(q->n == 1);
        CHECK(q->r == -l);
        CHECK(all_ok(brylawski_relations(V, *q, l + 3)));
    }

    BrylawskiParams wrong{2, 1, Int(1)};
    CHECK_THROWS_AS(brylawski_relations(U, wrong, 3), Error);
}

TEST_CASE("detect is additive on products") {
    SplitMix64 rng(912ULL);
    int done = 0;
    while (done < 200) {
        // random Brylawski polynomials: ranked-set polynomials decorated by
        // hyperbola units (x-1)^a (y-1)^b
        int n1 = 1 + static_cast<int>(rng.next_below(5));
        int n2 = 1 + static_cast<int>(rng.next_below(5));
        BiPoly U = corank_nullity(random_rank_function(rng, n1)) *
                   xm1_pow(static_cast<int>(rng.next_below(3))) *
                   ym1_pow(static_cast<int>(rng.next_below(3)));
        BiPoly V = corank_nullity(random_rank_function(rng, n2)) *
                   xm1_pow(static_cast<int>(rng.next_below(3))) *
                   ym1_pow(static_cast<int>(rng.next_below(3)));
        auto pu = detect_brylawski(U), pv = detect_brylawski(V);
        REQUIRE(pu.has_value());
        REQUIRE(pv.has_value());
        auto puv = detect_brylawski(U * V);
        REQUIRE(puv.has_value());
        CHECK(puv->n == pu->n + pv->n);
        CHECK(puv->r == pu->r + pv->r);
        CHECK(puv->c == pu->c * pv->c);
        ++done;
    }
}

TEST_CASE("degree bounds of Brylawski polynomials") {
    SplitMix64 rng(913ULL);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(rng.next_below(7));
        BiPoly U = corank_nullity(random_rank_function(rng, n)) *
                   xm1_pow(static_cast<int>(rng.next_below(3)));
        auto p = detect_brylawski(U);
        REQUIRE(p.has_value());
        CHECK(U.deg_x() >= p->r);
        CHECK(U.deg_y() >= p->n - p->r);
    }
}

TEST_CASE("factor parameter bookkeeping") {
    // monomial split
    auto [px, py] = factor_params(BiPoly::x() * BiPoly::y(), BiPoly::x(), BiPoly::y());
    CHECK(px == BrylawskiParams{1, 1, Int(1)});
    CHECK(py == BrylawskiParams{1, 0, Int(1)});

    // greedoid factorization x * [x + (x-1)^2 y]: splits as (1,1) and (2,2)
    BiPoly second = BiPoly::x() + xm1_pow(2) * BiPoly::y();
    BiPoly T = corank_nullity(greedoid_three());
    auto [p1, p2] = factor_params(T, BiPoly::x(), second);
    CHECK(p1.n == 1);
    CHECK(p1.r == 1);
    CHECK(p2.n == 2);
    CHECK(p2.r == 2);
    CHECK(p1.c * p2.c == 1);

    // two-valued (3,2) polynomial times (y-1): combined (3,1), splits back
    BiPoly tv = two_valued_example(3, 2).poly;
    BiPoly prod = tv * (BiPoly::y() - BiPoly::constant(1));
    auto comb = detect_brylawski(prod);
    REQUIRE(comb.has_value());
    CHECK(comb->n == 3);
    CHECK(comb->r == 1);
    auto [q1, q2] = factor_params(prod, tv, BiPoly::y() - BiPoly::constant(1));
    CHECK(q1.n == 3);
    CHECK(q1.r == 2);
    CHECK(q2.n == 0);
    CHECK(q2.r == -1);

    CHECK_THROWS_AS(factor_params(BiPoly::x(), BiPoly::x(), BiPoly::y()), Error);
    // T = U V but T not Brylawski
    BiPoly nb = BiPoly::x() + BiPoly::constant(2);
    CHECK_THROWS_AS(factor_params(nb * BiPoly::x(), nb, BiPoly::x()), Error);
}
