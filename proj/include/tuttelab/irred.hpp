#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tuttelab/bipoly.hpp"
#include "tuttelab/brylawski.hpp"
#include "tuttelab/error.hpp"
#include "tuttelab/modpoly.hpp"
#include "tuttelab/newton.hpp"
#include "tuttelab/primes.hpp"
#include "tuttelab/unipoly.hpp"

namespace tuttelab {

enum class Verdict { Irreducible, Reducible, Inconclusive };
enum class Method {
    None,
    UnivariateFactor,
    CriterionA,
    CriterionB,
    NewtonPolygon,
    ModPSpecialization,
};

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Irreducible: return "Irreducible";
        case Verdict::Reducible: return "Reducible";
        default: return "Inconclusive";
    }
}

inline const char* method_name(Method m) {
    switch (m) {
        case Method::UnivariateFactor: return "UnivariateFactor";
        case Method::CriterionA: return "CriterionA";
        case Method::CriterionB: return "CriterionB";
        case Method::NewtonPolygon: return "NewtonPolygon";
        case Method::ModPSpecialization: return "ModPSpecialization";
        default: return "None";
    }
}

struct IrredVerdict {
    Verdict verdict = Verdict::Inconclusive;
    Method method = Method::None;
    std::string notes;
    std::vector<BiPoly> witness;  // exact factor pair for Reducible
    std::optional<long> witness_t;
    std::optional<uint64_t> witness_p;
    std::vector<std::pair<long, long>> polygon_vertices;  // when decided by the polygon
};

// Which one-sided methods the pipeline may try; the sound divisor and content
// scans always run.
struct MethodToggle {
    bool criterion_a = true;
    bool criterion_b = true;
    bool newton = true;
    bool modp = true;
};

// ---- divisibility by the distinguished univariate irreducibles ----------

inline bool divides_x(const BiPoly& T) {
    for (const auto& [key, c] : T.t)
        if (key.first == 0) return false;
    return !T.is_zero();
}

inline bool divides_y(const BiPoly& T) {
    for (const auto& [key, c] : T.t)
        if (key.second == 0) return false;
    return !T.is_zero();
}

inline bool divides_xm1(const BiPoly& T) { return T.specialize_x(1).is_zero(); }
inline bool divides_ym1(const BiPoly& T) { return T.specialize_y(1).is_zero(); }

inline BiPoly div_by_x(const BiPoly& T) {
    BiPoly Q;
    for (const auto& [key, c] : T.t) {
        if (key.first < 1) fail("DivisionInexact", "x does not divide");
        Q.add_term(key.first - 1, key.second, c);
    }
    return Q;
}

inline BiPoly div_by_y(const BiPoly& T) { return div_by_x(T.swap_vars()).swap_vars(); }

inline BiPoly div_by_xm1(const BiPoly& T) {
    XYPoly xm1(std::vector<YPoly>{YPoly::constant(-1), YPoly::constant(1)});
    return BiPoly::from_xpoly(T.to_xpoly().div_exact(xm1));
}

inline BiPoly div_by_ym1(const BiPoly& T) {
    return div_by_xm1(T.swap_vars()).swap_vars();
}

// Divisors of U among {x, y, x-1, y-1} -- by a degree argument these are the
// only univariate irreducibles that can divide a Brylawski polynomial.
struct UnivariateDivisors {
    bool x = false, y = false, xm1 = false, ym1 = false;

    std::vector<std::string> names() const {
        std::vector<std::string> out;
        if (x) out.push_back("x");
        if (y) out.push_back("y");
        if (xm1) out.push_back("x-1");
        if (ym1) out.push_back("y-1");
        return out;
    }
};

inline UnivariateDivisors scan_univariate(const BiPoly& U) {
    return {divides_x(U), divides_y(U), divides_xm1(U), divides_ym1(U)};
}

inline UnivariateDivisors univariate_factor_scan(const BiPoly& U) {
    if (!detect_brylawski(U).has_value())
        fail("NotBrylawski", "univariate factor scan expects a Brylawski polynomial");
    return scan_univariate(U);
}

// ---- the two coefficient criteria ----------------------------------------

namespace detail {

inline BrylawskiParams require_brylawski_rank(const BiPoly& T) {
    auto p = detect_brylawski(T);
    if (!p) fail("NotBrylawski", "criterion needs a Brylawski polynomial");
    if (p->r < 1 || p->n - p->r < 1)
        fail("RankOutOfRange", "criterion needs r >= 1 and n - r >= 1");
    return *p;
}

}  // namespace detail

// Sufficient condition: (i) x-1, y-1 do not divide; (ii) coefficient of x is
// nonzero; (iii) deg_x + deg_y <= n+1 (equivalently in {n, n+1}); and unit
// coefficient gcd. All hold -> Irreducible; never concludes Reducible.
inline IrredVerdict criterion_A(const BiPoly& T) {
    BrylawskiParams p = detail::require_brylawski_rank(T);
    IrredVerdict out;
    out.method = Method::CriterionA;
    std::vector<std::string> failed;
    if (divides_xm1(T) || divides_ym1(T)) failed.push_back("x-1 or y-1 divides");
    if (T.coeff(1, 0) == 0) failed.push_back("coefficient of x is zero");
    long degsum = T.deg_x() + T.deg_y();
    if (degsum > p.n + 1)
        failed.push_back("degree sum " + std::to_string(degsum) + " exceeds n+1");
    if (T.content() != 1) failed.push_back("coefficient gcd is not 1");
    if (failed.empty()) {
        out.verdict = Verdict::Irreducible;
        out.notes = (degsum == p.n) ? "degree sum equals n" : "degree sum equals n+1";
    } else {
        out.verdict = Verdict::Inconclusive;
        for (const auto& f : failed) out.notes += (out.notes.empty() ? "" : "; ") + f;
    }
    return out;
}

// Sufficient condition: (i) none of x, y, x-1, y-1 divide; (ii) coefficient
// of xy is odd; (iii) deg_x + deg_y = n; and unit coefficient gcd.
inline IrredVerdict criterion_B(const BiPoly& T) {
    BrylawskiParams p = detail::require_brylawski_rank(T);
    IrredVerdict out;
    out.method = Method::CriterionB;
    std::vector<std::string> failed;
    auto div = scan_univariate(T);
    if (div.x || div.y || div.xm1 || div.ym1)
        failed.push_back("a distinguished univariate factor divides");
    if (T.coeff(1, 1) % 2 == 0) failed.push_back("coefficient of xy is even");
    long degsum = T.deg_x() + T.deg_y();
    if (degsum != p.n)
        failed.push_back("degree sum " + std::to_string(degsum) + " is not n");
    if (T.content() != 1) failed.push_back("coefficient gcd is not 1");
    if (failed.empty()) {
        out.verdict = Verdict::Irreducible;
        out.notes = "coefficient of xy is odd and degree sum equals n";
    } else {
        out.verdict = Verdict::Inconclusive;
        for (const auto& f : failed) out.notes += (out.notes.empty() ? "" : "; ") + f;
    }
    return out;
}

// ---- mod-p specialization certificate -------------------------------------

// Searches t in 0, 1, -1, 2, -2, ... and ascending primes p for a
// specialization T(x, t) that stays degree deg_x(T) mod p and factors with
// pattern {d:1}, i.e. is irreducible over F_p. Such a witness proves T
// irreducible as a polynomial in x over Q(y).
inline IrredVerdict modp_irreducibility_certificate(const BiPoly& T, long t_range = 20,
                                                    uint64_t p_range = 200) {
    IrredVerdict out;
    out.method = Method::ModPSpecialization;
    const int d = static_cast<int>(T.deg_x());
    if (d < 1) {
        out.notes = "x-degree below 1";
        return out;
    }
    for (long k = 0; k <= 2 * t_range; ++k) {
        long t = (k % 2 == 0) ? -k / 2 : (k + 1) / 2;  // 0, 1, -1, 2, -2, ...
        UniPoly f = T.specialize_y(Int(t));
        if (f.degree() < d) continue;  // leading y-coefficient vanished at t
        for (uint64_t p = 2; p <= p_range; p = next_prime_u64(p)) {
            if (f.lc() % p == 0) continue;
            auto pat = factor_pattern(reduce_mod(f, p));
            if (pat && pat->size() == 1 && pat->count(d) == 1 && (*pat)[d] == 1) {
                out.verdict = Verdict::Irreducible;
                out.witness_t = t;
                out.witness_p = p;
                out.notes = "specialization y=" + std::to_string(t) + " irreducible mod " +
                            std::to_string(p) + "; irreducible in x over Q(y)";
                return out;
            }
        }
    }
    out.notes = "no witness within budget";
    return out;
}

// ---- combined pipeline -----------------------------------------------------

// Tries, in order: distinguished univariate divisors (exact Reducible
// witness), content factors in y or x alone, criterion A, criterion B, the
// polygon criterion on the plain and on the (x-1, y-1)-shifted support, and
// the mod-p specialization certificate. One-sided methods never report
// Reducible without an exact factorization witness.
inline IrredVerdict irreducibility_verdict(const BiPoly& T, long t_range = 20,
                                           uint64_t p_range = 200,
                                           MethodToggle enabled = {}) {
    if (T.is_zero()) fail("ZeroPolynomial", "verdict on the zero polynomial");
    IrredVerdict out;
    if (T.is_constant()) {
        out.notes = "constant polynomial";
        return out;
    }

    auto reducible = [&](const BiPoly& f, const BiPoly& g, const std::string& note) {
        IrredVerdict v;
        v.verdict = Verdict::Reducible;
        v.method = Method::UnivariateFactor;
        v.witness = {f, g};
        v.notes = note;
        return v;
    };

    // distinguished univariate divisors with a nonconstant cofactor
    struct Cand {
        bool divides;
        BiPoly (*quot)(const BiPoly&);
        const char* name;
    };
    const Cand cands[] = {{divides_x(T), div_by_x, "x"},
                          {divides_y(T), div_by_y, "y"},
                          {divides_xm1(T), div_by_xm1, "x-1"},
                          {divides_ym1(T), div_by_ym1, "y-1"}};
    for (const auto& c : cands) {
        if (!c.divides) continue;
        BiPoly Q = c.quot(T);
        if (!Q.is_constant()) {
            const std::string nm = c.name;
            BiPoly factor = (nm == "x")   ? BiPoly::x()
                            : (nm == "y") ? BiPoly::y()
                            : (nm == "x-1")
                                ? BiPoly::x() - BiPoly::constant(1)
                                : BiPoly::y() - BiPoly::constant(1);
            return reducible(factor, Q, "divisible by " + nm);
        }
    }

    // content in y alone (gcd of the x-coefficients), then in x alone
    {
        XYPoly fx = T.to_xpoly();
        YPoly g;
        for (const auto& cy : fx.c)
            if (!cy.is_zero()) g = g.is_zero() ? cy : poly_gcd(g, cy);
        if (g.degree() >= 1) {
            BiPoly rest = BiPoly::from_xpoly(fx.div_exact(XYPoly::constant(g)));
            if (!rest.is_constant())
                return reducible(from_unipoly_in_y(g), rest, "content factor in y");
        }
        XYPoly fy = T.swap_vars().to_xpoly();
        YPoly h;
        for (const auto& cx : fy.c)
            if (!cx.is_zero()) h = h.is_zero() ? cx : poly_gcd(h, cx);
        if (h.degree() >= 1) {
            BiPoly rest =
                BiPoly::from_xpoly(fy.div_exact(XYPoly::constant(h))).swap_vars();
            if (!rest.is_constant())
                return reducible(from_unipoly_in_x(h), rest, "content factor in x");
        }
    }

    // coefficient criteria (skipped when their preconditions fail)
    using Criterion = IrredVerdict (*)(const BiPoly&);
    const std::pair<bool, Criterion> criteria[] = {{enabled.criterion_a, criterion_A},
                                                   {enabled.criterion_b, criterion_B}};
    for (auto [use, crit] : criteria) {
        if (!use) continue;
        try {
            IrredVerdict v = crit(T);
            if (v.verdict == Verdict::Irreducible) return v;
        } catch (const Error&) {
            // not Brylawski or rank out of range: move on
        }
    }

    // polygon criterion, on the plain support and on the shifted support
    if (enabled.newton && !divides_x(T) && !divides_y(T)) {
        for (int shifted = 0; shifted <= 1; ++shifted) {
            BiPoly S = shifted ? T.shifted(1, 1) : T;
            if (S.t.size() < 2) continue;  // monomial support proves nothing here
            NewtonPolygon P = newton_polygon(S);
            if (boundary_lattice_points(P) > 40) continue;  // search budget
            if (polygon_indecomposable(P)) {
                IrredVerdict v;
                v.verdict = Verdict::Irreducible;
                v.method = Method::NewtonPolygon;
                v.notes = shifted ? "indecomposable Newton polygon in x-1, y-1"
                                  : "indecomposable Newton polygon";
                v.polygon_vertices = P.vertices;
                return v;
            }
        }
    }

    // The specialization certificate reads T as a polynomial in x; a pure-y
    // input would be invisible to it, so certify the swapped polynomial then.
    if (enabled.modp) {
        BiPoly M = (T.deg_x() >= 1) ? T : T.swap_vars();
        IrredVerdict m = modp_irreducibility_certificate(M, t_range, p_range);
        if (m.verdict == Verdict::Irreducible) {
            if (T.deg_x() < 1) m.notes += " (variables swapped)";
            return m;
        }
    }

    out.notes = "no method concluded";
    return out;
}

}  // namespace tuttelab
