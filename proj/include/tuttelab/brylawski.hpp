#pragma once

#include <optional>
#include <vector>

#include "tuttelab/bigint.hpp"
#include "tuttelab/bipoly.hpp"
#include "tuttelab/error.hpp"

namespace tuttelab {

// Parameters of an (n,r)-Brylawski polynomial U:
// (y-1)^r U(y/(y-1), y) = c y^n exactly. n is a nonnegative integer; r may
// be negative or exceed n; c is a nonzero integer.
struct BrylawskiParams {
    long n = 0;
    long r = 0;
    Int c = 0;

    bool operator==(const BrylawskiParams& o) const {
        return n == o.n && r == o.r && c == o.c;
    }
};

// Substitute onto the hyperbola (x-1)(y-1) = 1 and test whether the result
// collapses to a single monomial. nullopt means "not Brylawski" (including
// the case xy - x - y | U, where the substitution vanishes identically).
inline std::optional<BrylawskiParams> detect_brylawski(const BiPoly& U) {
    HyperbolaResult h = hyperbola_substitute(U);
    if (h.Q.is_zero()) return std::nullopt;
    int n = h.Q.degree();
    for (int k = 0; k < n; ++k)
        if (h.Q.coeff(k) != 0) return std::nullopt;
    return BrylawskiParams{n, h.rho, h.Q.lc()};
}

struct RelationRow {
    long h = 0;
    Int lhs = 0;
    Int rhs = 0;
    bool ok = false;
};

// Linear relations on the coefficients of an (n,r)-Brylawski polynomial:
// for every h >= 0,
//   sum_{i+j<=h} (-1)^j C(h-i, j) u_{i,j} = c (-1)^{n-r} C(h-r, h-n).
// The left side only ever needs C(a,b) with 0 <= b <= a. The right side
// needs the falling-factorial binomial once r > n (upper index goes
// negative); it reduces to the usual zero convention whenever 0 <= r <= n.
inline std::vector<RelationRow> brylawski_relations(const BiPoly& U,
                                                    const BrylawskiParams& params,
                                                    long h_max) {
    auto detected = detect_brylawski(U);
    if (!detected || !(*detected == params))
        fail("ParamMismatch", "parameters do not match the polynomial");
    std::vector<RelationRow> rows;
    for (long h = 0; h <= h_max; ++h) {
        Int lhs = 0;
        for (const auto& [key, u] : U.t) {
            auto [i, j] = key;
            if (i + j > h) continue;
            lhs += parity_sign(j) * binom(h - i, j) * u;
        }
        Int rhs = params.c * parity_sign(params.n - params.r) *
                  binom(h - params.r, h - params.n);
        rows.push_back({h, lhs, rhs, lhs == rhs});
    }
    return rows;
}

// Brylawski parameters of both factors of T = U V, with the additivity
// bookkeeping of the product lemma checked: if T is (n,r)-Brylawski then U
// is (n-m, r-s)- and V is (m,s)-Brylawski with c_T = c_U c_V and 0 <= m <= n.
// A failure of any of these would falsify the lemma, hence
// InternalInconsistency rather than an input error.
inline std::pair<BrylawskiParams, BrylawskiParams> factor_params(const BiPoly& T,
                                                                 const BiPoly& U,
                                                                 const BiPoly& V) {
    if (!(U * V == T)) fail("NotAFactorization", "T differs from U*V");
    auto pT = detect_brylawski(T);
    if (!pT) fail("NotBrylawski", "T is not a Brylawski polynomial");
    auto pU = detect_brylawski(U);
    auto pV = detect_brylawski(V);
    if (!pU || !pV)
        fail("InternalInconsistency", "factor of a Brylawski polynomial not Brylawski");
    if (pU->n + pV->n != pT->n || pU->r + pV->r != pT->r || pU->c * pV->c != pT->c ||
        pV->n < 0 || pV->n > pT->n)
        fail("InternalInconsistency", "factor parameters do not add up");
    return {*pU, *pV};
}

}  // namespace tuttelab
