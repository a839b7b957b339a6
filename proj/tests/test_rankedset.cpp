#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "tuttelab/families.hpp"
#include "tuttelab/json_io.hpp"
#include "tuttelab/rankfunc.hpp"
#include "tuttelab/rng.hpp"

using namespace tuttelab;

namespace {

BiPoly bp(std::initializer_list<std::tuple<int, int, long>> terms) {
    BiPoly P;
    for (auto& [i, j, c] : terms) P.add_term(i, j, c);
    return P;
}

// Valid random rank function: r(empty)=0, r(A) <= min(|A|, r(E)), negatives allowed.
RankFunction random_rank_function(SplitMix64& rng, int n) {
    RankFunction S;
    S.n = n;
    S.ranks.resize(size_t{1} << n);
    int rE = static_cast<int>(rng.next_below(n + 1));
    S.ranks[0] = 0;
    S.ranks[S.full_mask()] = rE;
    for (uint32_t A = 1; A < S.full_mask(); ++A) {
        int hi = std::min(std::popcount(A), rE);
        S.ranks[A] = static_cast<int>(rng.next_in(-2, hi));
    }
    if (n == 0) S.ranks[0] = 0;
    return S;
}

BiPoly tutte_of(const RankFunction& S) { return corank_nullity(S); }

}  // namespace

TEST_CASE("corank-nullity of small fixed examples") {
    // triangle
    Graph C3 = cycle_graph(3);
    CHECK(tutte_of(graphic_rank(C3)) == bp({{2, 0, 1}, {1, 0, 1}, {0, 1, 1}}));
    // single loop
    CHECK(tutte_of(loop_rank()) == BiPoly::y());
    // single coloop
    CHECK(tutte_of(coloop_rank()) == BiPoly::x());
    // greedoid on three elements: x^3 y - 2 x^2 y + x y + x^2 = x [x + (x-1)^2 y]
    BiPoly expect = bp({{3, 1, 1}, {2, 1, -2}, {1, 1, 1}, {2, 0, 1}});
    CHECK(tutte_of(greedoid_three()) == expect);
    BiPoly xm1 = BiPoly::x() - BiPoly::constant(1);
    CHECK(expect == BiPoly::x() * (BiPoly::x() + xm1 * xm1 * BiPoly::y()));
}

TEST_CASE("corank-nullity against subset-enumeration oracle") {
    SplitMix64 rng(101ULL);
    for (int trial = 0; trial < 150; ++trial) {
        int n = 1 + static_cast<int>(rng.next_below(7));
        RankFunction S = random_rank_function(rng, n);
        BiPoly mine = tutte_of(S);
        BiPoly theirs = oracle::tutte_by_subsets(
            n, [&](uint32_t A) { return S.ranks[A]; });
        CHECK(mine == theirs);
    }
}

TEST_CASE("invalid rank tables are rejected") {
    RankFunction S;
    S.n = 2;
    S.ranks = {1, 0, 0, 1};  // r(empty) != 0
    CHECK_THROWS_AS(corank_nullity(S), Error);
    S.ranks = {0, 2, 0, 1};  // r exceeds |A|
    CHECK_THROWS_AS(corank_nullity(S), Error);
    S.ranks = {0, 1, 1, 0};  // r(A) > r(E)
    CHECK_THROWS_AS(corank_nullity(S), Error);
    S.ranks = {0, 0, 0};  // wrong size
    CHECK_THROWS_AS(corank_nullity(S), Error);
    RankFunction big;
    big.n = 25;
    CHECK_THROWS_WITH(corank_nullity(big), Catch::Matchers::ContainsSubstring("cap"));
}

TEST_CASE("dual rank function") {
    // coloop dualizes to loop
    CHECK(dual(coloop_rank()).ranks == loop_rank().ranks);
    CHECK(dual(loop_rank()).ranks == coloop_rank().ranks);

    SplitMix64 rng(202ULL);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 1 + static_cast<int>(rng.next_below(8));
        RankFunction S = random_rank_function(rng, n);
        RankFunction DD = dual(dual(S));
        CHECK(DD.ranks == S.ranks);
    }

    // two-valued family: dual has r*(A) = |A| - r on proper nonempty subsets
    for (auto [n, r] : std::vector<std::pair<int, int>>{{3, 2}, {5, 3}, {6, 4}}) {
        RankFunction S = *two_valued_example(n, r).table;
        RankFunction D = dual(S);
        for (uint32_t A = 1; A < S.full_mask(); ++A)
            CHECK(D.ranks[A] == std::popcount(A) - r);
        CHECK(D.ranks[S.full_mask()] == n - r);
    }
}

TEST_CASE("duality swaps variables") {
    SplitMix64 rng(303ULL);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(rng.next_below(8));
        RankFunction S = random_rank_function(rng, n);
        CHECK(tutte_of(dual(S)) == tutte_of(S).swap_vars());
    }
}

TEST_CASE("direct sums multiply") {
    // coloop + loop
    RankFunction D = direct_sum(coloop_rank(), loop_rank());
    CHECK(tutte_of(D) == BiPoly::x() * BiPoly::y());

    // greedoid decomposition at the polynomial level
    RankFunction G2 = greedoid_three_pair_part();
    CHECK(tutte_of(G2) == bp({{2, 1, 1}, {1, 1, -2}, {0, 1, 1}, {1, 0, 1}}));
    CHECK(tutte_of(direct_sum(G2, coloop_rank())) == tutte_of(greedoid_three()));
    CHECK(tutte_of(G2) * BiPoly::x() == tutte_of(greedoid_three()));

    SplitMix64 rng(404ULL);
    for (int trial = 0; trial < 100; ++trial) {
        int n1 = 1 + static_cast<int>(rng.next_below(5));
        int n2 = 1 + static_cast<int>(rng.next_below(5));
        RankFunction S1 = random_rank_function(rng, n1);
        RankFunction S2 = random_rank_function(rng, n2);
        CHECK(tutte_of(direct_sum(S1, S2)) == tutte_of(S1) * tutte_of(S2));
    }

    RankFunction big1 = random_rank_function(rng, 8);
    RankFunction big2;
    big2.n = 17;
    big2.ranks.assign(size_t{1} << 17, 0);
    CHECK_THROWS_AS(direct_sum(big1, big2), Error);
}

TEST_CASE("graphic rank functions") {
    // C4: rank 3, T = x^3 + x^2 + x + y
    RankFunction S = graphic_rank(cycle_graph(4));
    CHECK(S.rank_E() == 3);
    CHECK(tutte_of(S) == bp({{3, 0, 1}, {2, 0, 1}, {1, 0, 1}, {0, 1, 1}}));

    // two loops on one vertex
    Graph L;
    L.n_vertices = 1;
    L.edges = {{0, 0}, {0, 0}};
    CHECK(tutte_of(graphic_rank(L)) == BiPoly::monomial(1, 0, 2));

    // K4 against both the frozen value and the deletion-contraction oracle
    Graph K4;
    K4.n_vertices = 4;
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) K4.edges.push_back({u, v});
    BiPoly mine = tutte_of(graphic_rank(K4));
    BiPoly frozen = bp({{3, 0, 1}, {2, 0, 3}, {1, 0, 2}, {1, 1, 4},
                        {0, 1, 2}, {0, 2, 3}, {0, 3, 1}});
    CHECK(mine == frozen);
    CHECK(mine == oracle::tutte_deletion_contraction(4, K4.edges));

    // random connected-ish graphs against the oracle
    SplitMix64 rng(505ULL);
    for (int trial = 0; trial < 60; ++trial) {
        int nv = 2 + static_cast<int>(rng.next_below(4));
        int ne = 1 + static_cast<int>(rng.next_below(7));
        Graph G;
        G.n_vertices = nv;
        for (int e = 0; e < ne; ++e)
            G.edges.push_back({static_cast<int>(rng.next_below(nv)),
                               static_cast<int>(rng.next_below(nv))});
        CHECK(tutte_of(graphic_rank(G)) ==
              oracle::tutte_deletion_contraction(nv, G.edges));
    }

    Graph bad;
    bad.n_vertices = 2;
    bad.edges = {{0, 5}};
    CHECK_THROWS_AS(graphic_rank(bad), Error);
}

TEST_CASE("uniform matroids") {
    CHECK(uniform_tutte(1, 2) == bp({{1, 0, 1}, {0, 1, 1}}));
    CHECK(uniform_tutte(2, 3) == bp({{2, 0, 1}, {1, 0, 1}, {0, 1, 1}}));
    CHECK(uniform_tutte(1, 2) == tutte_of(uniform_rank(1, 2)));

    // closed form equals enumeration
    for (int b = 2; b <= 9; ++b)
        for (int a = 1; a < b; ++a)
            CHECK(uniform_tutte(a, b) == tutte_of(uniform_rank(a, b)));

    // coefficient of x equals C(b-2, a-1)
    for (int b = 3; b <= 10; ++b)
        for (int a = 2; a < b; ++a)
            CHECK(uniform_tutte(a, b).coeff(1, 0) == binom(b - 2, a - 1));

    // closed form beyond the table cap stays consistent with duality:
    // U_{a,b} dual is U_{b-a,b}
    CHECK(uniform_tutte(3, 40).swap_vars() == uniform_tutte(37, 40));
    CHECK_THROWS_AS(uniform_tutte(0, 2), Error);
    CHECK_THROWS_AS(uniform_tutte(2, 2), Error);
}

TEST_CASE("thick cycles") {
    CHECK(thick_cycle_tutte(2, 3) ==
          bp({{1, 0, 1}, {0, 1, 1}, {0, 2, 1}, {0, 3, 1}}));
    CHECK(thick_cycle_tutte(1, 2) == BiPoly::monomial(1, 0, 2));
    for (int n = 2; n <= 8; ++n) CHECK(thick_cycle_tutte(n, 1) == cycle_tutte(n));

    // closed form equals the graphic computation
    for (int n = 1; n <= 6; ++n)
        for (int j = 0; j <= 5; ++j) {
            if (n == 1 && j == 0) continue;
            CHECK(thick_cycle_tutte(n, j) ==
                  tutte_of(graphic_rank(thick_cycle_graph(n, j))));
        }

    CHECK_THROWS_AS(thick_cycle_tutte(1, 0), Error);
    CHECK_THROWS_AS(thick_cycle_tutte(0, 3), Error);
}

TEST_CASE("two-valued family") {
    auto ex = two_valued_example(3, 2);
    // (y-1) + (3y^2 - 3y + 1)(x-1)^2
    BiPoly ym1 = BiPoly::y() - BiPoly::constant(1);
    BiPoly xm1 = BiPoly::x() - BiPoly::constant(1);
    BiPoly expect = ym1 + bp({{0, 2, 3}, {0, 1, -3}, {0, 0, 1}}) * xm1 * xm1;
    CHECK(ex.poly == expect);
    CHECK(ex.poly == tutte_of(*ex.table));

    CHECK(two_valued_example(1, 1).poly == BiPoly::x());

    for (auto [n, r] : std::vector<std::pair<int, int>>{
             {2, 1}, {4, 2}, {5, 5}, {7, 3}, {10, 4}}) {
        auto e = two_valued_example(n, r);
        CHECK(e.poly == tutte_of(*e.table));
        CHECK(e.poly.deg_x() == r);
        CHECK(e.poly.deg_y() == n - 1);
    }

    // closed form past the table cap still well-formed
    auto big = two_valued_example(40, 7);
    CHECK_FALSE(big.table.has_value());
    CHECK(big.poly.deg_x() == 7);
    CHECK(big.poly.deg_y() == 39);
    CHECK_THROWS_AS(two_valued_example(3, 4), Error);
}

TEST_CASE("three-valued family") {
    auto ex = three_valued_example(3);
    BiPoly xm1 = BiPoly::x() - BiPoly::constant(1);
    CHECK(ex.poly ==
          xm1.pow(3) + xm1.pow(2) * BiPoly::monomial(3, 0, 1) + BiPoly::constant(1));
    CHECK(ex.poly == tutte_of(*ex.table));

    for (int n = 1; n <= 12; ++n) {
        auto e = three_valued_example(n);
        CHECK(e.poly == tutte_of(*e.table));
        if (n >= 2) CHECK(e.poly.deg_y() == n - 2);
    }

    // specialized at y = 2, written in X = x-1: X^n + (2^n - 2) X^{n-1} + 1
    for (int n = 2; n <= 10; ++n) {
        UniPoly fx = three_valued_example(n).poly.specialize_y(2);
        // change basis to X = x - 1 by shifting x -> x + 1... i.e. evaluate
        // the bivariate identity through BiPoly::shifted
        BiPoly P = three_valued_example(n).poly.shifted(1, 0);  // x -> x+1
        UniPoly inX = P.specialize_y(2);
        UniPoly expect = UniPoly::monomial(1, n) +
                         UniPoly::monomial(pow_int(2, n) - 2, n - 1) +
                         UniPoly::constant(1);
        CHECK(inX == expect);
        CHECK(fx.eval(5) == inX.eval(4));  // same polynomial, shifted argument
    }
}

TEST_CASE("matroid axiom flags") {
    MatroidFlags u = verify_rank_axioms(uniform_rank(2, 4));
    CHECK(u.is_matroid);
    CHECK(u.is_monotone);

    MatroidFlags tv = verify_rank_axioms(*two_valued_example(4, 2).table);
    CHECK_FALSE(tv.is_matroid);

    MatroidFlags g = verify_rank_axioms(greedoid_three());
    CHECK_FALSE(g.is_matroid);
    CHECK(g.is_monotone);

    // graphic rank functions are matroid ranks
    CHECK(verify_rank_axioms(graphic_rank(cycle_graph(5))).is_matroid);
    CHECK(verify_rank_axioms(graphic_rank(thick_cycle_graph(3, 3))).is_matroid);

    RankFunction big;
    big.n = 17;
    big.ranks.assign(size_t{1} << 17, 0);
    CHECK_THROWS_AS(verify_rank_axioms(big), Error);
}

TEST_CASE("degree formulas and monic specializations") {
    SplitMix64 rng(606ULL);
    for (int trial = 0; trial < 120; ++trial) {
        int n = 1 + static_cast<int>(rng.next_below(7));
        RankFunction S = random_rank_function(rng, n);
        BiPoly T = tutte_of(S);
        int min_rank = *std::min_element(S.ranks.begin(), S.ranks.end());
        CHECK(T.deg_x() == S.rank_E() - min_rank);
        RankFunction D = dual(S);
        int min_dual = *std::min_element(D.ranks.begin(), D.ranks.end());
        CHECK(T.deg_y() == D.rank_E() - min_dual);

        // T(1,y) monic in y of degree |E| - r(E); T(x,1) monic in x
        UniPoly ty = T.specialize_x(1);
        CHECK(ty.degree() == n - S.rank_E());
        CHECK(ty.lc() == 1);
        UniPoly tx = T.specialize_y(1);
        CHECK(tx.degree() == S.rank_E());
        CHECK(tx.lc() == 1);
    }
}

TEST_CASE("five-element ranked set") {
    RankFunction S = ranked_set_five();
    CHECK(tutte_of(S) == bp({{3, 0, 1}, {2, 0, 2}, {1, 1, 3}, {0, 2, 1}}));
}

TEST_CASE("offset rank family") {
    // n=4, a=2, b=1: in X,Y coordinates X^3 + XY^2(4X + 6X^2 + 4X^3) + Y
    RankFunction S = offset_rank_example(4, 2, 1);
    BiPoly T = tutte_of(S).shifted(1, 1);  // to X = x-1, Y = y-1 coordinates
    BiPoly expect;
    expect.add_term(3, 0, 1);
    expect.add_term(0, 1, 1);
    for (int i = 1; i < 4; ++i) expect.add_term(1 + i, 2, binom(4, i));
    CHECK(T == expect);
}

TEST_CASE("json round-trips") {
    BiPoly P = cycle_tutte(4);
    Json j = bipoly_to_json(P);
    CHECK(j["terms"][0]["i"] == 3);
    CHECK(j["terms"][0]["j"] == 0);
    CHECK(j["terms"][0]["c"] == "1");
    CHECK(j["terms"][3]["i"] == 0);
    CHECK(j["terms"][3]["j"] == 1);
    CHECK(bipoly_from_json(j) == P);

    RankFunction S = greedoid_three();
    CHECK(rank_function_from_json(rank_function_to_json(S)).ranks == S.ranks);

    Graph G = thick_cycle_graph(3, 2);
    Graph G2 = graph_from_json(graph_to_json(G));
    CHECK(G2.n_vertices == G.n_vertices);
    CHECK(G2.edges == G.edges);

    UniPoly f(std::vector<Int>{Int(3), Int(-17), Int("123456789012345678901234567890")});
    CHECK(unipoly_from_json(unipoly_to_json(f)) == f);

    CHECK_THROWS_AS(bipoly_from_json(Json::parse("{\"terms\":[{\"i\":1}]}")), Error);
    CHECK_THROWS_AS(unipoly_from_json(Json::parse("{\"coeffs\":[\"12x\"]}")), Error);
    CHECK_THROWS_AS(
        rank_function_from_json(Json::parse("{\"n\":1,\"ranks\":[0,5]}")), Error);
}
