#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "tuttelab/bipoly.hpp"
#include "tuttelab/error.hpp"
#include "tuttelab/families.hpp"
#include "tuttelab/irred.hpp"
#include "tuttelab/json_io.hpp"
#include "tuttelab/modpoly.hpp"
#include "tuttelab/primes.hpp"
#include "tuttelab/unipoly.hpp"

namespace tuttelab {

// ---- cycle-type evidence ---------------------------------------------------

enum class EvidenceKind { FullCycle, Transposition, LongPrimeCycle };

inline const char* evidence_kind_name(EvidenceKind k) {
    switch (k) {
        case EvidenceKind::FullCycle: return "FullCycle";
        case EvidenceKind::Transposition: return "Transposition";
        default: return "LongPrimeCycle";
    }
}

struct CycleEvidence {
    EvidenceKind kind;
    long q = 0;  // cycle length for LongPrimeCycle, unused otherwise
    long witness_t = 0;
    uint64_t witness_p = 0;
    FactorPattern pattern;
};

enum class Conclusion { FullSymmetric, TransitiveOnly, Inconclusive };

inline const char* conclusion_name(Conclusion c) {
    switch (c) {
        case Conclusion::FullSymmetric: return "FullSymmetric";
        case Conclusion::TransitiveOnly: return "TransitiveOnly";
        default: return "Inconclusive";
    }
}

struct SymmetricGroupCertificate {
    int r = 0;
    Conclusion conclusion = Conclusion::Inconclusive;
    std::vector<CycleEvidence> evidence;
    std::string notes;
    BiPoly poly;  // kept so the certificate re-verifies standalone
};

// Factor degrees mod p mirror the cycle type of a Frobenius element, so each
// pattern shape below forces a specific kind of permutation into the group.

inline bool pattern_is_full_cycle(const FactorPattern& pat, int r) {
    return pat.size() == 1 && pat.count(r) == 1 && pat.at(r) == 1;
}

// exactly one even part, equal to 2: some odd power of the element is a
// transposition
inline bool pattern_is_transposition(const FactorPattern& pat) {
    auto it = pat.find(2);
    if (it == pat.end() || it->second != 1) return false;
    for (const auto& [d, c] : pat)
        if (d % 2 == 0 && d != 2) return false;
    return true;
}

// a cycle of prime length q > r/2 (then no other part can repeat q)
inline std::optional<long> pattern_long_prime_cycle(const FactorPattern& pat, int r) {
    for (const auto& [d, c] : pat)
        if (2 * d > r && c >= 1 && is_prime_u64(static_cast<uint64_t>(d))) return d;
    return std::nullopt;
}

inline std::vector<EvidenceKind> required_evidence(int r) {
    if (r <= 2) return {EvidenceKind::FullCycle};
    if (r == 3) return {EvidenceKind::FullCycle, EvidenceKind::Transposition};
    return {EvidenceKind::FullCycle, EvidenceKind::Transposition,
            EvidenceKind::LongPrimeCycle};
}

// ---- certification ----------------------------------------------------------

// Scans specializations y = t (t = 0, 1, -1, 2, ...) and primes p ascending,
// keeping the first witness of each required evidence kind.  A full cycle, a
// transposition, and a long prime cycle inside a transitive group force the
// whole symmetric group, so a complete evidence set certifies S_r.
inline SymmetricGroupCertificate certify_symmetric(const BiPoly& T, long t_budget = 50,
                                                   uint64_t p_budget = 500) {
    SymmetricGroupCertificate cert;
    cert.poly = T;
    const int r = T.deg_x();
    if (r < 1) fail("DegreeZero", "certification needs positive x-degree");
    cert.r = r;
    if (discriminant_x(T).is_zero())
        fail("NotSquarefreeOverQy", "repeated x-factor over the function field");
    if (r == 1) {
        cert.conclusion = Conclusion::FullSymmetric;
        cert.notes = "degree one is trivially symmetric";
        return cert;
    }

    const auto needed = required_evidence(r);
    auto have = [&](EvidenceKind k) {
        for (const auto& e : cert.evidence)
            if (e.kind == k) return true;
        return false;
    };
    auto complete = [&] {
        for (EvidenceKind k : needed)
            if (!have(k)) return false;
        return true;
    };

    for (long kidx = 0; kidx <= 2 * t_budget && !complete(); ++kidx) {
        long t = (kidx % 2 == 0) ? -kidx / 2 : (kidx + 1) / 2;
        UniPoly f = T.specialize_y(Int(t));
        if (f.degree() < r) continue;   // degree must survive the specialization
        if (!is_squarefree(f)) continue;  // and the specialized roots stay distinct
        for (uint64_t p = 2; p <= p_budget && !complete(); p = next_prime_u64(p)) {
            if (f.lc() % p == 0) continue;
            auto pat = factor_pattern(reduce_mod(f, p));
            if (!pat) continue;  // ramified: pattern says nothing
            for (EvidenceKind k : needed) {
                if (have(k)) continue;
                if (k == EvidenceKind::FullCycle && pattern_is_full_cycle(*pat, r))
                    cert.evidence.push_back({k, 0, t, p, *pat});
                else if (k == EvidenceKind::Transposition && pattern_is_transposition(*pat))
                    cert.evidence.push_back({k, 0, t, p, *pat});
                else if (k == EvidenceKind::LongPrimeCycle) {
                    if (auto q = pattern_long_prime_cycle(*pat, r))
                        cert.evidence.push_back({k, *q, t, p, *pat});
                }
            }
        }
    }

    if (complete()) {
        cert.conclusion = Conclusion::FullSymmetric;
        cert.notes = (r <= 2)   ? "full cycle witnessed"
                     : (r == 3) ? "full cycle and transposition witnessed"
                                : "full cycle, transposition, and long prime cycle witnessed";
    } else if (have(EvidenceKind::FullCycle)) {
        cert.conclusion = Conclusion::TransitiveOnly;
        cert.notes = "full-cycle witness only";
    } else {
        bool transitive = false;
        try {
            transitive = criterion_A(T).verdict == Verdict::Irreducible;
        } catch (const Error&) {
        }
        if (transitive) {
            cert.conclusion = Conclusion::TransitiveOnly;
            cert.notes = "transitive via the coefficient criterion; no full-cycle witness";
        } else {
            cert.conclusion = Conclusion::Inconclusive;
            cert.notes = "budget exhausted";
        }
    }
    return cert;
}

// Re-derives every claim of the certificate from the stored witnesses; throws
// CertificateInvalid on the first discrepancy.
inline void verify_certificate(const SymmetricGroupCertificate& cert) {
    auto invalid = [](const std::string& d) { fail("CertificateInvalid", d); };
    if (cert.r < 1) invalid("degree below one");
    if (cert.poly.deg_x() != cert.r) invalid("stored degree disagrees with the polynomial");
    if (discriminant_x(cert.poly).is_zero())
        invalid("polynomial has a repeated x-factor over the function field");
    for (const auto& ev : cert.evidence) {
        UniPoly f = cert.poly.specialize_y(Int(ev.witness_t));
        if (f.degree() != cert.r) invalid("witness specialization drops degree");
        if (!is_squarefree(f)) invalid("witness specialization is not squarefree");
        if (!is_prime_u64(ev.witness_p)) invalid("witness modulus is not prime");
        if (f.lc() % ev.witness_p == 0) invalid("leading coefficient vanishes mod p");
        auto pat = factor_pattern(reduce_mod(f, ev.witness_p));
        if (!pat) invalid("witness reduction is not squarefree mod p");
        if (*pat != ev.pattern) invalid("stored pattern disagrees with recomputation");
        switch (ev.kind) {
            case EvidenceKind::FullCycle:
                if (!pattern_is_full_cycle(*pat, cert.r)) invalid("pattern is not a full cycle");
                break;
            case EvidenceKind::Transposition:
                if (!pattern_is_transposition(*pat)) invalid("pattern is not a transposition type");
                break;
            case EvidenceKind::LongPrimeCycle:
                if (ev.q < 2 || !is_prime_u64(static_cast<uint64_t>(ev.q)) ||
                    2 * ev.q <= cert.r || pat->count(static_cast<int>(ev.q)) == 0)
                    invalid("pattern has no long prime cycle of the stated length");
                break;
        }
    }
    auto have = [&](EvidenceKind k) {
        for (const auto& e : cert.evidence)
            if (e.kind == k) return true;
        return false;
    };
    switch (cert.conclusion) {
        case Conclusion::FullSymmetric: {
            if (cert.r == 1) break;
            for (EvidenceKind k : required_evidence(cert.r))
                if (!have(k)) invalid("conclusion lacks a required evidence kind");
            break;
        }
        case Conclusion::TransitiveOnly: {
            if (have(EvidenceKind::FullCycle)) break;
            bool transitive = false;
            try {
                transitive = criterion_A(cert.poly).verdict == Verdict::Irreducible;
            } catch (const Error&) {
            }
            if (!transitive) invalid("transitivity claim has no supporting witness");
            break;
        }
        case Conclusion::Inconclusive:
            break;
    }
}

// ---- certificate JSON --------------------------------------------------------

inline Json certificate_to_json(const SymmetricGroupCertificate& cert) {
    Json j;
    j["poly"] = bipoly_to_json(cert.poly);
    j["r"] = cert.r;
    j["conclusion"] = conclusion_name(cert.conclusion);
    j["notes"] = cert.notes;
    Json rows = Json::array();
    for (const auto& ev : cert.evidence) {
        Json row;
        row["kind"] = evidence_kind_name(ev.kind);
        if (ev.kind == EvidenceKind::LongPrimeCycle) row["q"] = ev.q;
        row["t"] = ev.witness_t;
        row["p"] = ev.witness_p;
        Json pat = Json::array();
        for (const auto& [d, c] : ev.pattern) pat.push_back(Json::array({d, c}));
        row["pattern"] = pat;
        rows.push_back(row);
    }
    j["evidence"] = rows;
    return j;
}

inline SymmetricGroupCertificate certificate_from_json(const Json& j) {
    SymmetricGroupCertificate cert;
    try {
        cert.poly = bipoly_from_json(j.at("poly"));
        cert.r = j.at("r").get<int>();
        std::string con = j.at("conclusion").get<std::string>();
        if (con == "FullSymmetric") cert.conclusion = Conclusion::FullSymmetric;
        else if (con == "TransitiveOnly") cert.conclusion = Conclusion::TransitiveOnly;
        else if (con == "Inconclusive") cert.conclusion = Conclusion::Inconclusive;
        else fail("JsonParse", "unknown conclusion: " + con);
        cert.notes = j.value("notes", std::string{});
        for (const auto& row : j.at("evidence")) {
            CycleEvidence ev;
            std::string kind = row.at("kind").get<std::string>();
            if (kind == "FullCycle") ev.kind = EvidenceKind::FullCycle;
            else if (kind == "Transposition") ev.kind = EvidenceKind::Transposition;
            else if (kind == "LongPrimeCycle") ev.kind = EvidenceKind::LongPrimeCycle;
            else fail("JsonParse", "unknown evidence kind: " + kind);
            if (ev.kind == EvidenceKind::LongPrimeCycle) ev.q = row.at("q").get<long>();
            ev.witness_t = row.at("t").get<long>();
            ev.witness_p = row.at("p").get<uint64_t>();
            for (const auto& pc : row.at("pattern")) {
                if (!pc.is_array() || pc.size() != 2) fail("JsonParse", "bad pattern entry");
                ev.pattern[pc[0].get<int>()] = pc[1].get<int>();
            }
            cert.evidence.push_back(std::move(ev));
        }
    } catch (const Json::exception& e) {
        fail("JsonParse", std::string("certificate: ") + e.what());
    }
    return cert;
}

// ---- analyzers for the closed-form families ---------------------------------

inline long euler_phi(long r) {
    if (r < 1) fail("InvalidParameters", "euler_phi needs r >= 1");
    long phi = r, m = r;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        phi -= phi / p;
        while (m % p == 0) m /= p;
    }
    if (m > 1) phi -= phi / m;
    return phi;
}

inline Int factorial_int(int k) {
    Int f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

struct TwoValuedBound {
    long bound = 0;            // r * phi(r), an order bound for the y-side group
    bool precondition_ok = false;  // (y-1)^n - y^n has no repeated root
    bool index_at_least_3 = false;  // bound excludes both S_r and A_r (r >= 4)
};

inline TwoValuedBound two_valued_bound(int n, int r) {
    if (!(1 <= r && r <= n)) fail("InvalidParameters", "two_valued_bound needs 1 <= r <= n");
    TwoValuedBound out;
    out.bound = static_cast<long>(r) * euler_phi(r);
    UniPoly ym1(std::vector<Int>{-1, 1}), yy(std::vector<Int>{0, 1});
    UniPoly P = UniPoly::constant(1);
    for (int i = 0; i < n; ++i) P = P * ym1;
    UniPoly yn = UniPoly::constant(1);
    for (int i = 0; i < n; ++i) yn = yn * yy;
    P = P - yn;
    out.precondition_ok = P.degree() < 1 || is_squarefree(P);
    out.index_at_least_3 = r >= 4 && Int(3) * out.bound <= factorial_int(r);
    return out;
}

// Discriminant of x^m + a x^k + b in closed form (valid for gcd(m,k) = 1).
inline Int trinomial_disc(int n, const Int& a, int k, const Int& b) {
    const int m = n;
    if (!(m > k && k >= 1)) fail("InvalidParameters", "trinomial needs m > k >= 1");
    if (std::gcd(m, k) != 1) fail("InvalidParameters", "trinomial closed form needs gcd(m,k)=1");
    Int core = pow_int(Int(m), m) * pow_int(b, m - k) +
               Int(parity_sign(m + 1)) * pow_int(Int(m - k), m - k) * pow_int(Int(k), k) *
                   pow_int(a, m);
    return Int(parity_sign(static_cast<long>(m) * (m - 1) / 2)) * pow_int(b, k - 1) * core;
}

struct SquareQuotient {
    UniPoly f;          // g with the root divided out
    Int disc_g, disc_f;
    Int f_at_root;
    bool quotient_is_square = false;  // disc(g) == f(root)^2 * disc(f)
};

inline SquareQuotient square_quotient_check(const UniPoly& g, const Int& root) {
    if (g.degree() < 2) fail("InvalidParameters", "square quotient needs degree >= 2");
    if (g.eval(root) != 0) fail("NotARoot", "claimed root does not vanish");
    SquareQuotient out;
    UniPoly lin(std::vector<Int>{-root, 1});
    out.f = g.div_exact(lin);
    out.disc_g = discriminant(g);
    out.disc_f = discriminant(out.f);
    out.f_at_root = out.f.eval(root);
    out.quotient_is_square = out.disc_g == out.f_at_root * out.f_at_root * out.disc_f;
    return out;
}

struct DiscEvidence {
    Int prime_ell;
    int valuation = 0;           // odd by construction
    bool ell_coprime_check = false;  // ell does not divide j(j-1)
    bool square_quotient_ok = false;
};

struct DiscSearchReport {
    Int D0;
    Factorization factorization;
    bool budget_exceeded = false;
    std::optional<DiscEvidence> evidence;
};

// For f = (x^n + (j-1)x^{n-1} - j) / (x - 1): an odd prime with odd valuation
// in the discriminant core D0 (and coprime to j(j-1)) makes the inertia
// subgroup contribute a transposition.
inline DiscSearchReport disc_transposition_evidence(int n, int j) {
    if (n < 3 || j < 1) fail("InvalidParameters", "needs n >= 3, j >= 1");
    DiscSearchReport out;
    out.D0 = Int(-j) * pow_int(Int(n), n) +
             Int(parity_sign(n - 1)) * pow_int(Int(n - 1), n - 1) * pow_int(Int(j - 1), n);
    if (out.D0 == 0) return out;
    out.factorization = factor_integer(out.D0);
    out.budget_exceeded = !out.factorization.complete();
    if (out.budget_exceeded) return out;  // partial valuations would be unsound
    const Int jj = Int(j) * Int(j - 1);
    for (const auto& [ell, v] : out.factorization.primes) {
        if (ell == 2 || v % 2 == 0) continue;
        if (jj != 0 && jj % ell == 0) continue;
        if (jj == 0) continue;  // j = 1: the coprimality filter is vacuous-false
        std::vector<Int> coeffs(static_cast<size_t>(n) + 1, 0);
        coeffs[static_cast<size_t>(n)] = 1;
        coeffs[static_cast<size_t>(n) - 1] = j - 1;
        coeffs[0] = -j;
        SquareQuotient sq = square_quotient_check(UniPoly(coeffs), 1);
        out.evidence = DiscEvidence{ell, v, true, sq.quotient_is_square};
        break;
    }
    return out;
}

struct ThickCycleReport {
    int n = 0, j = 0;
    bool j_odd = false, n_odd = false, nm1_prime = false;
    bool odd_thickness_applies = false;    // j odd: transposition from the 2-adic factor
    bool case_n_odd = false;               // + n odd
    bool case_nm1_prime = false;           // + n-1 prime
    long residue_p = 0;                    // n-1 in {p, p^2}, p >= 5
    bool minus_j_nonsquare = false;        // Euler criterion at residue_p
    bool gcd_ok = false;                   // gcd(n, j-1) = 1
    bool residue_criterion_applies = false;
    std::string conclusion;
    SymmetricGroupCertificate certificate;
};

inline ThickCycleReport thick_cycle_theorem_conditions(int n, int j, long t_budget = 50,
                                                       uint64_t p_budget = 500) {
    if (n < 3 || j < 1) fail("InvalidParameters", "thick cycle needs n >= 3, j >= 1");
    ThickCycleReport rep;
    rep.n = n;
    rep.j = j;
    rep.j_odd = j % 2 == 1;
    rep.n_odd = n % 2 == 1;
    rep.nm1_prime = is_prime_u64(static_cast<uint64_t>(n - 1));
    rep.odd_thickness_applies = rep.j_odd;
    rep.case_n_odd = rep.j_odd && rep.n_odd;
    rep.case_nm1_prime = rep.j_odd && rep.nm1_prime;
    long m = n - 1;
    if (is_prime_u64(static_cast<uint64_t>(m)) && m >= 5) {
        rep.residue_p = m;
    } else {
        long s = std::lround(std::sqrt(static_cast<double>(m)));
        for (long c = std::max(2L, s - 1); c <= s + 1; ++c)
            if (c * c == m && is_prime_u64(static_cast<uint64_t>(c)) && c >= 5) rep.residue_p = c;
    }
    if (rep.residue_p) {
        uint64_t p = static_cast<uint64_t>(rep.residue_p);
        uint64_t mj = static_cast<uint64_t>(((-static_cast<long>(j)) % static_cast<long>(p) +
                                             static_cast<long>(p)) %
                                            static_cast<long>(p));
        rep.minus_j_nonsquare = mj != 0 && powmod_u64(mj, (p - 1) / 2, p) == p - 1;
    }
    rep.gcd_ok = std::gcd(static_cast<long>(n), static_cast<long>(j - 1)) == 1;
    rep.residue_criterion_applies = rep.residue_p && rep.minus_j_nonsquare && rep.gcd_ok;
    if (rep.residue_criterion_applies)
        rep.conclusion = "symmetric by the prime-power residue criterion";
    else if (rep.case_n_odd || rep.case_nm1_prime)
        rep.conclusion = "symmetric by the odd-thickness criterion";
    else if (rep.odd_thickness_applies)
        rep.conclusion = "transposition guaranteed (odd thickness); completeness not covered";
    else
        rep.conclusion = "no closed-form criterion applies";
    rep.certificate = certify_symmetric(thick_cycle_tutte(n, j), t_budget, p_budget);
    return rep;
}

// Products of two odd primes whose 2-orders cross-divide neither p-1.
inline std::vector<long> p1p2_search(long t_max) {
    if (t_max < 1 || t_max > 10'000'000) fail("InvalidParameters", "p1p2 bound out of range");
    std::vector<long> primes;
    {
        long lim = t_max / 3;
        std::vector<bool> comp(static_cast<size_t>(std::max(lim + 1, 2L)), false);
        for (long i = 2; i * i <= lim; ++i)
            if (!comp[static_cast<size_t>(i)])
                for (long k = i * i; k <= lim; k += i) comp[static_cast<size_t>(k)] = true;
        for (long i = 3; i <= lim; ++i)
            if (!comp[static_cast<size_t>(i)]) primes.push_back(i);
    }
    std::vector<long> out;
    for (size_t i = 0; i < primes.size(); ++i) {
        long p1 = primes[i];
        if (p1 * p1 > t_max) break;
        uint64_t ord1 = mult_order(2, static_cast<uint64_t>(p1));
        for (size_t k = i + 1; k < primes.size(); ++k) {
            long p2 = primes[k];
            if (p1 * p2 > t_max) break;
            uint64_t ord2 = mult_order(2, static_cast<uint64_t>(p2));
            bool ok = (static_cast<uint64_t>(p2 - 1) % ord1 != 0) &&
                      (static_cast<uint64_t>(p1 - 1) % ord2 != 0);
            if (!ok) continue;
            // same condition, recomputed as 2^n mod p_i != 2 on both legs
            uint64_t nn = static_cast<uint64_t>(p1) * static_cast<uint64_t>(p2);
            bool direct = powmod_u64(2, nn, static_cast<uint64_t>(p1)) != 2 &&
                          powmod_u64(2, nn, static_cast<uint64_t>(p2)) != 2;
            if (!direct)
                fail("InternalInconsistency", "order test and direct congruence disagree");
            out.push_back(p1 * p2);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

struct UniformReport {
    int a = 0, b = 0;
    bool shift_prime_gt_a = false;  // b - a prime and exceeding a
    bool a_composite = false;
    bool coprime = false;  // gcd(a, b) = 1
    bool doubly_transitive_asserted = false;
    SymmetricGroupCertificate certificate;
};

inline UniformReport uniform_precondition_report(int a, int b, long t_budget = 50,
                                                 uint64_t p_budget = 500) {
    if (!(2 <= a && a < b)) fail("InvalidParameters", "uniform report needs 2 <= a < b");
    UniformReport rep;
    rep.a = a;
    rep.b = b;
    int d = b - a;
    rep.shift_prime_gt_a = is_prime_u64(static_cast<uint64_t>(d)) && d > a;
    rep.a_composite = !is_prime_u64(static_cast<uint64_t>(a));  // a >= 2 here
    rep.coprime = std::gcd(a, b) == 1;
    rep.doubly_transitive_asserted = rep.shift_prime_gt_a && rep.a_composite;
    rep.certificate = certify_symmetric(uniform_tutte(a, b), t_budget, p_budget);
    return rep;
}

// x^{n-1} + x^{n-2} + ... + x - 1
inline UniPoly selmer_polynomial(int n) {
    if (n < 3) fail("InvalidParameters", "family starts at n = 3");
    std::vector<Int> c(static_cast<size_t>(n), 1);
    c[0] = -1;
    return UniPoly(c);
}

struct SelmerReport {
    int n = 0;
    UniPoly f;
    Int disc;
    int two_valuation = 0;
    Int odd_part;
    bool odd_part_gt_1 = false;
    bool squarefree_mod_2 = false;
    std::optional<SymmetricGroupCertificate> certificate;  // odd n only
};

inline SelmerReport selmer_family_report(int n, long t_budget = 50,
                                         uint64_t p_budget = 500) {
    SelmerReport rep;
    rep.n = n;
    rep.f = selmer_polynomial(n);
    rep.disc = discriminant(rep.f);
    Int ab = abs(rep.disc);
    while (ab != 0 && ab % 2 == 0) {
        ab /= 2;
        ++rep.two_valuation;
    }
    rep.odd_part = ab;
    rep.odd_part_gt_1 = ab > 1;
    rep.squarefree_mod_2 = factor_pattern(reduce_mod(rep.f, 2)).has_value();
    if (n % 2 == 1)
        rep.certificate = certify_symmetric(from_unipoly_in_x(rep.f), t_budget, p_budget);
    return rep;
}

// ---- report JSON -------------------------------------------------------------

inline Json thick_cycle_report_to_json(const ThickCycleReport& rep) {
    Json j;
    j["family"] = "thick";
    j["n"] = rep.n;
    j["j"] = rep.j;
    j["j_odd"] = rep.j_odd;
    j["n_odd"] = rep.n_odd;
    j["n_minus_1_prime"] = rep.nm1_prime;
    j["odd_thickness_applies"] = rep.odd_thickness_applies;
    j["case_n_odd"] = rep.case_n_odd;
    j["case_n_minus_1_prime"] = rep.case_nm1_prime;
    j["residue_p"] = rep.residue_p;
    j["minus_j_nonsquare"] = rep.minus_j_nonsquare;
    j["gcd_ok"] = rep.gcd_ok;
    j["residue_criterion_applies"] = rep.residue_criterion_applies;
    j["conclusion"] = rep.conclusion;
    j["certificate"] = certificate_to_json(rep.certificate);
    return j;
}

inline Json uniform_report_to_json(const UniformReport& rep) {
    Json j;
    j["family"] = "uniform";
    j["a"] = rep.a;
    j["b"] = rep.b;
    j["shift_prime_gt_a"] = rep.shift_prime_gt_a;
    j["a_composite"] = rep.a_composite;
    j["coprime"] = rep.coprime;
    j["doubly_transitive_asserted"] = rep.doubly_transitive_asserted;
    j["certificate"] = certificate_to_json(rep.certificate);
    return j;
}

inline Json selmer_report_to_json(const SelmerReport& rep) {
    Json j;
    j["family"] = "selmer";
    j["n"] = rep.n;
    j["f"] = unipoly_to_json(rep.f);
    j["disc"] = to_string(rep.disc);
    j["two_valuation"] = rep.two_valuation;
    j["odd_part"] = to_string(rep.odd_part);
    j["odd_part_gt_1"] = rep.odd_part_gt_1;
    j["squarefree_mod_2"] = rep.squarefree_mod_2;
    if (rep.certificate) j["certificate"] = certificate_to_json(*rep.certificate);
    return j;
}

inline Json disc_search_report_to_json(const DiscSearchReport& rep) {
    Json j;
    j["D0"] = to_string(rep.D0);
    Json fac = Json::array();
    for (const auto& [p, e] : rep.factorization.primes)
        fac.push_back(Json::array({to_string(p), e}));
    j["factorization"] = fac;
    j["complete"] = rep.factorization.complete();
    j["budget_exceeded"] = rep.budget_exceeded;
    if (rep.evidence) {
        Json ev;
        ev["prime_ell"] = to_string(rep.evidence->prime_ell);
        ev["valuation"] = rep.evidence->valuation;
        ev["ell_coprime_check"] = rep.evidence->ell_coprime_check;
        ev["square_quotient_ok"] = rep.evidence->square_quotient_ok;
        j["evidence"] = ev;
    } else {
        j["evidence"] = nullptr;
    }
    return j;
}

}  // namespace tuttelab
