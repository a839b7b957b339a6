#pragma once

// Large-sieve experiment on linear combinations of Tutte polynomials.
//
// From two coprime squarefree polynomials T1, T2, monic of the same x-degree
// r >= 2 over Z[y], form the triple F1 = T1, F2 = T1 - T2, F0 = x*F2.  The
// leading x-terms of F2 cancel, so deg_x F2 < r.  Specializing y and reducing
// mod p, the triple is expected to satisfy two hypotheses: (H1) the three
// polynomials are relatively prime as a family and linearly independent over
// F_p, and (H2) gcd(F0 - b0*F2, F1 - b1*F2) has degree <= 1 for every
// (b0, b1) in F_p^2.  check_H1_H2 verifies H1 exactly and H2 by exhaustion
// for small p, by seeded sampling otherwise.
//
// The Monte-Carlo experiment samples integer pairs (n1, n2) in [-N, N]^2,
// forms F = (x + n1)T1 - (x + n2)T2 (the x^{r+1} terms cancel, so deg_x <= r;
// this is the shape F0 + m1*F1 + m2*F2 after the affine reindexing
// m1 = n1 - n2, m2 = n2 of the sample box), and counts how often the
// symmetric-group certificate search fails within budget.  Uncertified is an
// over-count of non-maximal: every FullSymmetric verdict re-verifies, while a
// budget failure proves nothing.  The reported bound value is the shape
// r^2 (1 + 1/log r)^4 (log N)/sqrt(N) at s = 2; its implied constant is
// unknown, so only monotonicity-style comparisons are meaningful.

#include <cstdint>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "tuttelab/bipoly.hpp"
#include "tuttelab/densities.hpp"
#include "tuttelab/error.hpp"
#include "tuttelab/galois.hpp"
#include "tuttelab/json_io.hpp"
#include "tuttelab/modpoly.hpp"
#include "tuttelab/rng.hpp"
#include "tuttelab/threads.hpp"

namespace tuttelab {

struct FTriple {
    BiPoly F0, F1, F2;
    int r = 0;  // common x-degree of T1, T2
};

namespace detail {

inline bool monic_in_x(const BiPoly& T) {
    YPoly lead = T.to_xpoly().lc();
    return lead.degree() == 0 && lead.lc() == 1;
}

}  // namespace detail

inline FTriple build_F_triple(const BiPoly& T1, const BiPoly& T2) {
    if (T1.is_zero() || T2.is_zero()) fail("NotMonicSameDegree", "zero polynomial");
    int r = T1.deg_x();
    if (r < 2 || T2.deg_x() != r)
        fail("NotMonicSameDegree", "x-degrees " + std::to_string(r) + " and " +
                                       std::to_string(T2.deg_x()) + " (need equal, >= 2)");
    if (!detail::monic_in_x(T1) || !detail::monic_in_x(T2))
        fail("NotMonicSameDegree", "leading x-coefficient is not 1");
    if (T1 == T2) fail("NotCoprime", "identical polynomials");
    if (discriminant_x(T1).is_zero() || discriminant_x(T2).is_zero())
        fail("NotSquarefreeOverQy", "repeated factor in x over Q(y)");
    if (resultant_x(T1, T2).is_zero()) fail("NotCoprime", "vanishing resultant in x");
    FTriple t;
    t.r = r;
    t.F1 = T1;
    t.F2 = T1 - T2;
    t.F0 = BiPoly::x() * t.F2;
    if (t.F2.deg_x() >= r) fail("InternalInconsistency", "leading terms failed to cancel");
    return t;
}

struct H1H2Report {
    long t = 0;
    uint64_t p = 0;
    bool degree_preserved = false;
    int pair12_gcd_degree = -1;   // gcd(F1, F2) mod p; the proof's key quantity
    int global_gcd_degree = -1;   // gcd of all three
    bool h1_gcd_ok = false;
    bool h1_linearly_independent = false;
    bool h1_ok = false;
    long h2_samples = 0;
    bool h2_exhaustive = false;
    int h2_max_gcd_degree = -1;
    bool h2_ok = false;
    bool totally_composite_skipped = true;  // guaranteed upstream; never computed here
};

namespace detail {

// rank over F_p of the coefficient matrix of the given polynomials
inline int coefficient_rank(std::vector<ModPoly> rows, uint64_t p) {
    size_t cols = 0;
    for (const auto& f : rows) cols = std::max(cols, f.c.size());
    for (auto& f : rows) f.c.resize(cols, 0);
    int rank = 0;
    size_t lead = 0;
    for (size_t col = 0; col < cols && lead < rows.size(); ++col) {
        size_t pivot = lead;
        while (pivot < rows.size() && rows[pivot].c[col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[pivot], rows[lead]);
        uint64_t inv = inv_mod(rows[lead].c[col], p);
        for (size_t rr = lead + 1; rr < rows.size(); ++rr) {
            if (rows[rr].c[col] == 0) continue;
            uint64_t factor = mulmod_u64(rows[rr].c[col], inv, p);
            for (size_t cc = col; cc < cols; ++cc) {
                uint64_t sub = mulmod_u64(factor, rows[lead].c[cc], p);
                rows[rr].c[cc] = (rows[rr].c[cc] + p - sub) % p;
            }
        }
        ++lead;
        ++rank;
    }
    return rank;
}

inline int gcd_degree(const ModPoly& a, const ModPoly& b) {
    if (a.is_zero() && b.is_zero()) return -1;  // gcd undefined; report as failure
    return mod_gcd(a, b).degree();
}

}  // namespace detail

// Specialize the triple at y = t, reduce mod p, and check both hypotheses.
// H2 is exhaustive over F_p^2 when p^2 <= 256, otherwise 200 sampled pairs
// seeded deterministically from (t, p).
inline H1H2Report check_H1_H2(const FTriple& triple, long t, uint64_t p) {
    if (!is_prime_u64(p)) fail("NotPrime", std::to_string(p) + " is not prime");
    H1H2Report rep;
    rep.t = t;
    rep.p = p;

    const BiPoly* Fs[3] = {&triple.F0, &triple.F1, &triple.F2};
    std::vector<ModPoly> fp;
    rep.degree_preserved = true;
    for (const BiPoly* F : Fs) {
        UniPoly spec = F->specialize_y(Int(t));
        ModPoly reduced = reduce_mod(spec, p);
        // nonzero polynomials must keep their bivariate x-degree through both
        // the specialization and the reduction; zero stays zero
        if (!F->is_zero() && reduced.degree() != F->deg_x()) rep.degree_preserved = false;
        fp.push_back(std::move(reduced));
    }
    if (!rep.degree_preserved)
        fail("DegreeDrop", "specialization at t=" + std::to_string(t) + " mod " +
                               std::to_string(p) + " loses x-degree");

    rep.pair12_gcd_degree = detail::gcd_degree(fp[1], fp[2]);
    if (fp[0].is_zero() && fp[1].is_zero() && fp[2].is_zero()) {
        rep.global_gcd_degree = -1;
    } else {
        ModPoly g = mod_gcd(mod_gcd(fp[0], fp[1]), fp[2]);
        rep.global_gcd_degree = g.degree();
    }
    rep.h1_gcd_ok = rep.global_gcd_degree == 0;
    rep.h1_linearly_independent = detail::coefficient_rank(fp, p) == 3;
    rep.h1_ok = rep.h1_gcd_ok && rep.h1_linearly_independent;

    rep.h2_max_gcd_degree = -1;
    auto probe = [&](uint64_t b0, uint64_t b1) {
        ModPoly g0 = fp[0] - fp[2].scaled(b0);
        ModPoly g1 = fp[1] - fp[2].scaled(b1);
        int d = detail::gcd_degree(g0, g1);
        rep.h2_max_gcd_degree = std::max(rep.h2_max_gcd_degree, d);
        if (d < 0) rep.h2_max_gcd_degree = std::max(rep.h2_max_gcd_degree, triple.r + 1);
        ++rep.h2_samples;
    };
    if (p * p <= 256) {
        rep.h2_exhaustive = true;
        for (uint64_t b0 = 0; b0 < p; ++b0)
            for (uint64_t b1 = 0; b1 < p; ++b1) probe(b0, b1);
    } else {
        SplitMix64 rng = SplitMix64::substream(0x48315F4832ULL ^ p, static_cast<uint64_t>(t));
        for (int i = 0; i < 200; ++i) probe(rng.next_below(p), rng.next_below(p));
    }
    rep.h2_ok = rep.h2_max_gcd_degree <= 1;
    return rep;
}

struct SieveReport {
    long N = 0;
    long trials = 0;
    long uncertified_count = 0;
    Rat uncertified_fraction;
    Rat bound_value;  // shape at s = 2, unknown implied constant
    uint64_t seed = 0;
    long t_budget = 0;
    long p_budget = 0;
    std::map<int, long> degree_counts;  // observed x-degrees of sampled F
};

// One trial: sample the pair, certify, report (x-degree, certified?).
namespace detail {

inline std::pair<int, bool> sieve_trial(const BiPoly& T1, const BiPoly& T2, long N,
                                        uint64_t seed, long index, long t_budget,
                                        long p_budget) {
    SplitMix64 rng = SplitMix64::substream(seed, static_cast<uint64_t>(index));
    Int n1 = rng.next_in(-N, N);
    Int n2 = rng.next_in(-N, N);
    BiPoly F = (BiPoly::x() + BiPoly::constant(n1)) * T1 -
               (BiPoly::x() + BiPoly::constant(n2)) * T2;
    int deg = F.is_zero() ? -1 : F.deg_x();
    bool certified = false;
    try {
        SymmetricGroupCertificate cert = certify_symmetric(F, t_budget, p_budget);
        certified = cert.conclusion == Conclusion::FullSymmetric;
    } catch (const Error&) {
        certified = false;  // degenerate sample; counted as uncertified
    }
    return {deg, certified};
}

}  // namespace detail

// Sample `trials` pairs from [-N,N]^2 with per-trial derived seeds (results
// are independent of thread schedule) and count certification failures.
inline SieveReport monte_carlo_nonmax(const BiPoly& T1, const BiPoly& T2, long N,
                                      long trials, uint64_t seed, long t_budget = 50,
                                      long p_budget = 500) {
    if (N < 1) fail("InvalidParameters", "need N >= 1");
    if (trials < 1 || trials > 1'000'000)
        fail("InvalidParameters", "trials " + std::to_string(trials) + " out of [1, 10^6]");
    if (t_budget < 1 || p_budget < 2) fail("InvalidParameters", "budgets too small");
    FTriple triple = build_F_triple(T1, T2);  // validates every precondition

    SieveReport rep;
    rep.N = N;
    rep.trials = trials;
    rep.seed = seed;
    rep.t_budget = t_budget;
    rep.p_budget = p_budget;

    int workers = std::min<long>(thread_count(), trials);
    std::vector<long> fails(workers, 0);
    std::vector<std::map<int, long>> degrees(workers);
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w]() {
            for (long i = w; i < trials; i += workers) {
                auto [deg, ok] = detail::sieve_trial(T1, T2, N, seed, i, t_budget, p_budget);
                if (!ok) ++fails[w];
                ++degrees[w][deg];
            }
        });
    }
    for (auto& th : pool) th.join();
    for (int w = 0; w < workers; ++w) {
        rep.uncertified_count += fails[w];
        for (auto [d, c] : degrees[w]) rep.degree_counts[d] += c;
    }
    rep.uncertified_fraction = Rat(Int(rep.uncertified_count), Int(trials));
    rep.bound_value = gallagher_bound(triple.r, 2, std::max<long>(N, 2));
    return rep;
}

inline std::string rat_string(const Rat& q) {
    return to_string(numerator(q)) + "/" + to_string(denominator(q));
}

inline Json sieve_report_to_json(const SieveReport& rep) {
    Json j;
    j["N"] = rep.N;
    j["trials"] = rep.trials;
    j["uncertified_count"] = rep.uncertified_count;
    j["uncertified_fraction"] = rat_string(rep.uncertified_fraction);
    j["bound_value"] = rat_string(rep.bound_value);
    j["seed"] = rep.seed;
    j["t_budget"] = rep.t_budget;
    j["p_budget"] = rep.p_budget;
    Json degs = Json::array();
    for (auto [d, c] : rep.degree_counts) degs.push_back(Json::array({d, c}));
    j["degree_counts"] = std::move(degs);
    j["note"] = "uncertified over-counts non-maximal instances; bound has unknown constant";
    return j;
}

inline Json h1h2_report_to_json(const H1H2Report& rep) {
    Json j;
    j["t"] = rep.t;
    j["p"] = rep.p;
    j["degree_preserved"] = rep.degree_preserved;
    j["pair12_gcd_degree"] = rep.pair12_gcd_degree;
    j["global_gcd_degree"] = rep.global_gcd_degree;
    j["h1_gcd_ok"] = rep.h1_gcd_ok;
    j["h1_linearly_independent"] = rep.h1_linearly_independent;
    j["h1_ok"] = rep.h1_ok;
    j["h2_samples"] = rep.h2_samples;
    j["h2_exhaustive"] = rep.h2_exhaustive;
    j["h2_max_gcd_degree"] = rep.h2_max_gcd_degree;
    j["h2_ok"] = rep.h2_ok;
    j["totally_composite"] = "skipped: guaranteed by construction, not recomputed";
    return j;
}

}  // namespace tuttelab
