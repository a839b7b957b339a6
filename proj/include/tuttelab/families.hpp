#pragma once

#include <bit>
#include <optional>

#include "tuttelab/bipoly.hpp"
#include "tuttelab/error.hpp"
#include "tuttelab/rankfunc.hpp"

namespace tuttelab {

// A family instance: closed-form polynomial, plus the explicit rank table
// whenever the groundset fits under the enumeration cap.
struct FamilyExample {
    std::optional<RankFunction> table;
    BiPoly poly;
};

// Cycle C_n: vertices 0..n-1, edge i -- (i+1 mod n). C_1 is a single loop.
inline Graph cycle_graph(int n) {
    if (n < 1) fail("InvalidParameters", "cycle needs at least one vertex");
    Graph G;
    G.n_vertices = n;
    for (int i = 0; i < n; ++i) G.edges.push_back({i, (i + 1) % n});
    return G;
}

// C_n^j: path 0--1--..--(n-1) plus j parallel edges joining 0 and n-1.
inline Graph thick_cycle_graph(int n, int j) {
    if (n < 1 || j < 0 || (n == 1 && j == 0))
        fail("InvalidParameters", "thick cycle needs n >= 1, j >= 0, not both trivial");
    if (n - 1 + j > kGroundsetCap)
        fail("GroundsetTooLarge", "thick cycle has " + std::to_string(n - 1 + j) + " edges");
    Graph G;
    G.n_vertices = n;
    for (int i = 0; i + 1 < n; ++i) G.edges.push_back({i, i + 1});
    for (int k = 0; k < j; ++k) G.edges.push_back({0, n - 1});
    return G;
}

// T(C_n^j) = x^{n-1} + (y + x + .. + x^{n-2}) (1 + y + .. + y^{j-1}); n = 1 gives y^j.
inline BiPoly thick_cycle_tutte(int n, int j) {
    if (n < 1 || j < 0 || (n == 1 && j == 0))
        fail("InvalidParameters", "thick cycle needs n >= 1, j >= 0, not both trivial");
    if (n == 1) return BiPoly::monomial(1, 0, j);
    BiPoly left = BiPoly::y();
    for (int i = 1; i <= n - 2; ++i) left.add_term(i, 0, 1);
    BiPoly right;
    for (int k = 0; k < j; ++k) right.add_term(0, k, 1);
    return BiPoly::monomial(1, n - 1, 0) + left * right;
}

// T(C_n) = x^{n-1} + .. + x + y for n >= 2; y for the single loop.
inline BiPoly cycle_tutte(int n) { return thick_cycle_tutte(n, 1); }

// Uniform matroid U_{a,b} rank table: r(A) = min(|A|, a).
inline RankFunction uniform_rank(int a, int b) {
    if (!(0 < a && a < b))
        fail("InvalidParameters", "uniform matroid needs 0 < a < b");
    if (b > kGroundsetCap)
        fail("GroundsetTooLarge", "uniform table needs b <= " + std::to_string(kGroundsetCap));
    RankFunction S;
    S.n = b;
    S.ranks.resize(size_t{1} << b);
    for (uint64_t A = 0; A < (uint64_t{1} << b); ++A)
        S.ranks[A] = std::min(std::popcount(static_cast<uint32_t>(A)), a);
    return S;
}

// T_{U_{a,b}} = sum_{i<=a} C(b,i)(x-1)^{a-i} + sum_{j>a} C(b,j)(y-1)^{j-a}.
inline BiPoly uniform_tutte(int a, int b) {
    if (!(0 < a && a < b && b <= 64))
        fail("InvalidParameters", "uniform closed form needs 0 < a < b <= 64");
    BiPoly xm1 = BiPoly::x() - BiPoly::constant(1);
    BiPoly ym1 = BiPoly::y() - BiPoly::constant(1);
    BiPoly T;
    for (int i = 0; i <= a; ++i) T = T + xm1.pow(a - i).scaled(binom(b, i));
    for (int j = a + 1; j <= b; ++j) T = T + ym1.pow(j - a).scaled(binom(b, j));
    return T;
}

// Two-valued rank function: r(E) = r, r(A) = 0 otherwise.
// T = (y-1)^{n-r} + (y^n - (y-1)^n)(x-1)^r.
inline FamilyExample two_valued_example(int n, int r) {
    if (!(1 <= r && r <= n && n <= 64))
        fail("InvalidParameters", "two-valued example needs 1 <= r <= n <= 64");
    BiPoly ym1 = BiPoly::y() - BiPoly::constant(1);
    BiPoly xm1 = BiPoly::x() - BiPoly::constant(1);
    FamilyExample out;
    out.poly = ym1.pow(n - r) +
               (BiPoly::monomial(1, 0, n) - ym1.pow(n)) * xm1.pow(r);
    if (n <= kGroundsetCap) {
        RankFunction S;
        S.n = n;
        S.ranks.assign(size_t{1} << n, 0);
        S.ranks[S.full_mask()] = r;
        out.table = std::move(S);
    }
    return out;
}

// Three-valued rank function: r(empty) = 0, r(A) = 1 on proper nonempty A,
// r(E) = n.  T = (x-1)^n + (x-1)^{n-1} (y^n - 1 - (y-1)^n)/(y-1) + 1.
inline FamilyExample three_valued_example(int n) {
    if (n < 1) fail("InvalidParameters", "three-valued example needs n >= 1");
    if (n > 64) fail("InvalidParameters", "three-valued closed form capped at n = 64");
    UniPoly num = UniPoly::monomial(1, n) - UniPoly::constant(1);
    {
        UniPoly ym1 = UniPoly::x() - UniPoly::constant(1);
        num = num - ring::pow(ym1, n);
    }
    UniPoly quot = num.is_zero()
                       ? UniPoly{}
                       : num.div_exact(UniPoly::x() - UniPoly::constant(1));
    BiPoly xm1 = BiPoly::x() - BiPoly::constant(1);
    FamilyExample out;
    out.poly = xm1.pow(n) + xm1.pow(n - 1) * from_unipoly_in_y(quot) +
               BiPoly::constant(1);
    if (n <= kGroundsetCap) {
        RankFunction S;
        S.n = n;
        S.ranks.assign(size_t{1} << n, 1);
        S.ranks[0] = 0;
        S.ranks[S.full_mask()] = n;
        out.table = std::move(S);
    }
    return out;
}

// Greedoid on {a,b,c} = bits {0,1,2} with feasible sets
// {}, {a}, {b}, {a,c}, {b,c}, {a,b,c}; r(A) = max |F| over feasible F in A.
inline RankFunction greedoid_three() {
    RankFunction S;
    S.n = 3;
    S.ranks = {0, 1, 1, 1, 0, 2, 2, 3};
    return S;
}

// Its two-part decomposition at the polynomial level: a single coloop, and
// the pair {a,b} with ranks 0, 0, 1, 2.
inline RankFunction coloop_rank() {
    RankFunction S;
    S.n = 1;
    S.ranks = {0, 1};
    return S;
}

inline RankFunction loop_rank() {
    RankFunction S;
    S.n = 1;
    S.ranks = {0, 0};
    return S;
}

inline RankFunction greedoid_three_pair_part() {
    RankFunction S;
    S.n = 2;
    S.ranks = {0, 0, 1, 2};
    return S;
}

// Five-element ranked set whose corank-nullity polynomial is
// x^3 + 2x^2 + 3xy + y^2: sizes 0..5 get ranks 0,1,2,*,3,3 where seven
// size-3 subsets have rank 3 and the remaining three have rank 2. The
// polynomial depends only on the rank distribution per size; canonically the
// numerically smallest seven bitmasks take the higher rank.
inline RankFunction ranked_set_five() {
    RankFunction S;
    S.n = 5;
    S.ranks.resize(32);
    std::vector<uint32_t> size3;
    for (uint32_t A = 0; A < 32; ++A) {
        int k = std::popcount(A);
        if (k == 3) size3.push_back(A);
        S.ranks[A] = (k <= 2) ? k : 3;
    }
    S.ranks[size3[7]] = S.ranks[size3[8]] = S.ranks[size3[9]] = 2;
    return S;
}

// Ranked set with r(A) = |A| - a on proper nonempty subsets and r(E) = n - b,
// for a > b > 0: its corank-nullity polynomial in X = x-1, Y = y-1 is
// X^{n-b} + X^{a-b} Y^a sum_{0<i<n} C(n,i) X^i + Y^b.
inline RankFunction offset_rank_example(int n, int a, int b) {
    if (!(a > b && b > 0 && n >= 2 && n >= b))
        fail("InvalidParameters", "offset rank example needs a > b > 0, n >= max(2, b)");
    if (n > kGroundsetCap) fail("GroundsetTooLarge", "offset rank table too large");
    RankFunction S;
    S.n = n;
    S.ranks.resize(size_t{1} << n);
    S.ranks[0] = 0;
    for (uint32_t A = 1; A < S.full_mask(); ++A)
        S.ranks[A] = std::popcount(A) - a;
    S.ranks[S.full_mask()] = n - b;
    return S;
}

}  // namespace tuttelab
