#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <thread>
#include <utility>
#include <vector>

#include "tuttelab/bigint.hpp"
#include "tuttelab/bipoly.hpp"
#include "tuttelab/error.hpp"
#include "tuttelab/rng.hpp"
#include "tuttelab/threads.hpp"

namespace tuttelab {

inline constexpr int kGroundsetCap = 24;

// Rank function on E = {0,..,n-1}, dense table indexed by subset bitmask.
// Must satisfy r(empty) = 0, r(A) <= r(E), r(A) <= |A|; negative values on
// proper subsets are allowed.
struct RankFunction {
    int n = 0;
    std::vector<int> ranks;  // 2^n entries

    uint32_t full_mask() const { return (n == 32) ? ~0u : ((1u << n) - 1); }
    int rank(uint32_t mask) const { return ranks[mask]; }
    int rank_E() const { return ranks[full_mask()]; }
};

struct Graph {
    int n_vertices = 0;
    std::vector<std::pair<int, int>> edges;  // loops and multi-edges allowed
};

// Recomputed axiom flags, never user-asserted.
struct MatroidFlags {
    bool is_matroid = false;
    bool is_monotone = false;
};

inline void validate_rank_function(const RankFunction& S) {
    if (S.n < 0 || S.n > kGroundsetCap)
        fail("GroundsetTooLarge", "groundset size " + std::to_string(S.n) +
                                      " exceeds cap " + std::to_string(kGroundsetCap));
    if (S.ranks.size() != (size_t{1} << S.n))
        fail("InvalidRankFunction", "rank table must have 2^n entries");
    if (S.ranks[0] != 0) fail("InvalidRankFunction", "rank of the empty set must be 0");
    const int rE = S.ranks[S.full_mask()];
    for (uint32_t A = 0; A <= S.full_mask(); ++A) {
        if (S.ranks[A] > rE)
            fail("InvalidRankFunction", "rank exceeds rank of the groundset");
        if (S.ranks[A] > std::popcount(A))
            fail("InvalidRankFunction", "rank exceeds subset size");
        if (A == S.full_mask()) break;  // n = 0 guard
    }
}

// T_S(x,y) = sum over A of (x-1)^{r(E)-r(A)} (y-1)^{|A|-r(A)}.
// Subsets are bucketed by (corank, nullity); each distinct pair is expanded
// once by the binomial theorem. Parallel over mask ranges, merged in chunk
// order, so the result is deterministic.
inline BiPoly corank_nullity(const RankFunction& S) {
    validate_rank_function(S);
    const uint64_t total = uint64_t{1} << S.n;
    const int rE = S.rank_E();

    using CountMap = std::map<std::pair<int, int>, uint64_t>;
    auto count_range = [&](uint64_t lo, uint64_t hi) {
        CountMap m;
        for (uint64_t A = lo; A < hi; ++A) {
            int rA = S.ranks[A];
            int a = rE - rA;
            int b = std::popcount(static_cast<uint32_t>(A)) - rA;
            ++m[{a, b}];
        }
        return m;
    };

    CountMap counts;
    int tc = thread_count();
    if (tc > 1 && total >= (1u << 18)) {
        uint64_t chunk = (total + tc - 1) / tc;
        std::vector<CountMap> parts(tc);
        std::vector<std::thread> pool;
        for (int t = 0; t < tc; ++t) {
            uint64_t lo = std::min<uint64_t>(t * chunk, total);
            uint64_t hi = std::min<uint64_t>(lo + chunk, total);
            pool.emplace_back([&, t, lo, hi] { parts[t] = count_range(lo, hi); });
        }
        for (auto& th : pool) th.join();
        for (auto& part : parts)
            for (auto& [key, c] : part) counts[key] += c;
    } else {
        counts = count_range(0, total);
    }

    // (x-1)^a (y-1)^b = sum_{i,j} C(a,i)(-1)^{a-i} C(b,j)(-1)^{b-j} x^i y^j
    BiPoly T;
    for (auto& [key, cnt] : counts) {
        auto [a, b] = key;
        Int mult = Int(cnt);
        for (int i = 0; i <= a; ++i) {
            Int cx = binom(a, i) * parity_sign(a - i);
            for (int j = 0; j <= b; ++j) {
                Int cy = binom(b, j) * parity_sign(b - j);
                T.add_term(i, j, mult * cx * cy);
            }
        }
    }
    return T;
}

// Dual rank function r*(A) = |A| + r(E \ A) - r(E).
inline RankFunction dual(const RankFunction& S) {
    validate_rank_function(S);
    RankFunction D;
    D.n = S.n;
    D.ranks.resize(S.ranks.size());
    const uint32_t full = S.full_mask();
    const int rE = S.ranks[full];
    for (uint64_t A = 0; A < (uint64_t{1} << S.n); ++A) {
        uint32_t a = static_cast<uint32_t>(A);
        D.ranks[a] = std::popcount(a) + S.ranks[full & ~a] - rE;
    }
    return D;
}

// S1 (+) S2 on the disjoint union, S2's elements relabelled above S1's.
inline RankFunction direct_sum(const RankFunction& S1, const RankFunction& S2) {
    validate_rank_function(S1);
    validate_rank_function(S2);
    if (S1.n + S2.n > kGroundsetCap)
        fail("GroundsetTooLarge", "direct sum of " + std::to_string(S1.n) + "+" +
                                      std::to_string(S2.n) + " elements exceeds cap");
    RankFunction D;
    D.n = S1.n + S2.n;
    D.ranks.resize(size_t{1} << D.n);
    const uint32_t low = S1.full_mask();
    for (uint64_t A = 0; A < (uint64_t{1} << D.n); ++A) {
        uint32_t a = static_cast<uint32_t>(A);
        D.ranks[a] = S1.ranks[a & low] + S2.ranks[a >> S1.n];
    }
    return D;
}

// Graphic rank r(A) = |V| - c(V, A), by union-find over each subset's edges.
inline RankFunction graphic_rank(const Graph& G) {
    if (G.n_vertices < 0) fail("InvalidParameters", "negative vertex count");
    if (G.edges.size() > kGroundsetCap)
        fail("GroundsetTooLarge", "edge count " + std::to_string(G.edges.size()) +
                                      " exceeds cap " + std::to_string(kGroundsetCap));
    for (auto& [u, v] : G.edges)
        if (u < 0 || v < 0 || u >= G.n_vertices || v >= G.n_vertices)
            fail("InvalidParameters", "edge endpoint out of range");

    const int m = static_cast<int>(G.edges.size());
    RankFunction S;
    S.n = m;
    S.ranks.resize(size_t{1} << m);

    auto fill_range = [&](uint64_t lo, uint64_t hi) {
        std::vector<int> parent(G.n_vertices);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (uint64_t A = lo; A < hi; ++A) {
            for (int v = 0; v < G.n_vertices; ++v) parent[v] = v;
            int merges = 0;
            uint32_t rest = static_cast<uint32_t>(A);
            while (rest) {
                int e = std::countr_zero(rest);
                rest &= rest - 1;
                int ru = find(G.edges[e].first), rv = find(G.edges[e].second);
                if (ru != rv) {
                    parent[ru] = rv;
                    ++merges;
                }
            }
            S.ranks[A] = merges;  // |V| - c(V,A)
        }
    };

    const uint64_t total = uint64_t{1} << m;
    int tc = thread_count();
    if (tc > 1 && total >= (1u << 18)) {
        uint64_t chunk = (total + tc - 1) / tc;
        std::vector<std::thread> pool;
        for (int t = 0; t < tc; ++t) {
            uint64_t lo = std::min<uint64_t>(t * chunk, total);
            uint64_t hi = std::min<uint64_t>(lo + chunk, total);
            pool.emplace_back(fill_range, lo, hi);
        }
        for (auto& th : pool) th.join();
    } else {
        fill_range(0, total);
    }
    return S;
}

// Matroid axioms: submodularity plus unit-increase monotonicity. Exhaustive
// pair scan for n <= 12; seeded random pair sampling for 13..16.
inline MatroidFlags verify_rank_axioms(const RankFunction& S) {
    validate_rank_function(S);
    if (S.n > 16)
        fail("GroundsetTooLarge",
             "axiom verification supports at most 16 elements, got " + std::to_string(S.n));

    const uint32_t full = S.full_mask();
    MatroidFlags flags;

    bool monotone = true, unit_increase = true;
    for (uint32_t A = 0;; ++A) {
        for (int e = 0; e < S.n; ++e) {
            if (A & (1u << e)) continue;
            int before = S.ranks[A], after = S.ranks[A | (1u << e)];
            if (after < before) monotone = false;
            if (after > before + 1) unit_increase = false;
        }
        if (A == full) break;
    }
    flags.is_monotone = monotone;

    auto submodular_at = [&](uint32_t A, uint32_t B) {
        return S.ranks[A | B] + S.ranks[A & B] <= S.ranks[A] + S.ranks[B];
    };
    bool submodular = true;
    if (S.n <= 12) {
        for (uint64_t A = 0; A <= full && submodular; ++A)
            for (uint64_t B = A; B <= full; ++B)
                if (!submodular_at(static_cast<uint32_t>(A), static_cast<uint32_t>(B))) {
                    submodular = false;
                    break;
                }
    } else {
        // sampled check, fixed seed for reproducibility
        SplitMix64 rng(0x5eedab1e0ff1ce00ULL);
        for (int k = 0; k < 4'000'000 && submodular; ++k) {
            uint32_t A = static_cast<uint32_t>(rng.next()) & full;
            uint32_t B = static_cast<uint32_t>(rng.next()) & full;
            if (!submodular_at(A, B)) submodular = false;
        }
    }
    flags.is_matroid = submodular && monotone && unit_increase;
    return flags;
}

}  // namespace tuttelab
