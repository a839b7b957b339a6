#pragma once

// Univariate polynomial arithmetic over F_p (p an odd-or-even prime < 2^62)
// and distinct-degree factorization.  Only the *pattern* of irreducible
// factor degrees is ever needed here — it is compared against permutation
// cycle types — so no equal-degree splitting is performed.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tuttelab/bigint.hpp"
#include "tuttelab/error.hpp"
#include "tuttelab/primes.hpp"
#include "tuttelab/unipoly.hpp"

namespace tuttelab {

// degree -> number of irreducible factors of that degree
using FactorPattern = std::map<int, int>;

inline int pattern_degree(const FactorPattern& pat) {
    int r = 0;
    for (auto& [d, k] : pat) r += d * k;
    return r;
}

struct ModPoly {
    uint64_t p = 2;
    std::vector<uint64_t> c;  // c[i] in [0,p), no trailing zeros

    ModPoly() = default;
    ModPoly(uint64_t prime, std::vector<uint64_t> coeffs) : p(prime), c(std::move(coeffs)) {
        for (auto& v : c) v %= p;
        trim();
    }

    static ModPoly x(uint64_t p) { return ModPoly(p, {0, 1}); }
    static ModPoly constant(uint64_t p, uint64_t v) { return ModPoly(p, {v}); }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    uint64_t lc() const { return c.back(); }
    uint64_t coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c.size())) ? c[i] : 0;
    }

    friend bool operator==(const ModPoly& a, const ModPoly& b) {
        return a.p == b.p && a.c == b.c;
    }

    friend ModPoly operator+(const ModPoly& a, const ModPoly& b) {
        ModPoly r;
        r.p = a.p;
        r.c.resize(std::max(a.c.size(), b.c.size()), 0);
        for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
        for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = (r.c[i] + b.c[i]) % a.p;
        r.trim();
        return r;
    }
    friend ModPoly operator-(const ModPoly& a, const ModPoly& b) {
        ModPoly r;
        r.p = a.p;
        r.c.resize(std::max(a.c.size(), b.c.size()), 0);
        for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
        for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = (r.c[i] + a.p - b.c[i]) % a.p;
        r.trim();
        return r;
    }
    friend ModPoly operator*(const ModPoly& a, const ModPoly& b) {
        if (a.is_zero() || b.is_zero()) return ModPoly(a.p, {});
        ModPoly r;
        r.p = a.p;
        r.c.assign(a.c.size() + b.c.size() - 1, 0);
        for (size_t i = 0; i < a.c.size(); ++i) {
            if (a.c[i] == 0) continue;
            for (size_t j = 0; j < b.c.size(); ++j)
                r.c[i + j] = (r.c[i + j] + mulmod_u64(a.c[i], b.c[j], a.p)) % a.p;
        }
        r.trim();
        return r;
    }

    ModPoly scaled(uint64_t k) const {
        ModPoly r = *this;
        k %= p;
        for (auto& v : r.c) v = mulmod_u64(v, k, p);
        r.trim();
        return r;
    }

    ModPoly derivative() const {
        ModPoly r;
        r.p = p;
        if (c.size() > 1) {
            r.c.resize(c.size() - 1);
            for (size_t i = 1; i < c.size(); ++i) r.c[i - 1] = mulmod_u64(c[i], i % p, p);
        }
        r.trim();
        return r;
    }

    uint64_t eval(uint64_t v) const {
        uint64_t acc = 0;
        v %= p;
        for (auto it = c.rbegin(); it != c.rend(); ++it)
            acc = (mulmod_u64(acc, v, p) + *it) % p;
        return acc;
    }
};

inline uint64_t inv_mod(uint64_t a, uint64_t p) {
    a %= p;
    if (a == 0) fail("InternalInconsistency", "inverse of zero mod p");
    return powmod_u64(a, p - 2, p);
}

inline ModPoly make_monic(const ModPoly& f) {
    if (f.is_zero()) return f;
    return f.scaled(inv_mod(f.lc(), f.p));
}

// Euclidean division: A = Q*B + R, deg R < deg B.  Returns {Q, R}.
inline std::pair<ModPoly, ModPoly> mod_divmod(const ModPoly& A, const ModPoly& B) {
    if (B.is_zero()) fail("ZeroPolynomial", "mod-p division by zero polynomial");
    const uint64_t p = A.p;
    ModPoly R = A;
    ModPoly Q;
    Q.p = p;
    if (R.degree() >= B.degree()) Q.c.assign(R.degree() - B.degree() + 1, 0);
    uint64_t binv = inv_mod(B.lc(), p);
    while (!R.is_zero() && R.degree() >= B.degree()) {
        uint64_t q = mulmod_u64(R.lc(), binv, p);
        int shift = R.degree() - B.degree();
        Q.c[shift] = q;
        // R -= q x^shift * B
        for (size_t i = 0; i < B.c.size(); ++i) {
            uint64_t sub = mulmod_u64(q, B.c[i], p);
            R.c[i + shift] = (R.c[i + shift] + p - sub) % p;
        }
        R.trim();
    }
    Q.trim();
    return {Q, R};
}

inline ModPoly mod_rem(const ModPoly& A, const ModPoly& B) { return mod_divmod(A, B).second; }

inline ModPoly mod_gcd(ModPoly a, ModPoly b) {
    while (!b.is_zero()) {
        ModPoly r = mod_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a);
}

// base^e mod f (e as u64 exponent; enough for e = p).
inline ModPoly mod_powmod(ModPoly base, uint64_t e, const ModPoly& f) {
    ModPoly r = ModPoly::constant(f.p, 1);
    base = mod_rem(base, f);
    while (e) {
        if (e & 1) r = mod_rem(r * base, f);
        base = mod_rem(base * base, f);
        e >>= 1;
    }
    return r;
}

inline bool mod_squarefree(const ModPoly& f) {
    if (f.is_zero()) fail("ZeroPolynomial", "squarefree test of zero polynomial mod p");
    if (f.degree() < 1) return true;
    return mod_gcd(f, f.derivative()).degree() == 0;
}

// Distinct-degree factorization of a squarefree f: returns degree->count.
inline FactorPattern mod_factor_pattern(const ModPoly& f_in) {
    if (f_in.is_zero() || f_in.degree() < 1)
        fail("ZeroPolynomial", "factor pattern needs positive degree");
    if (!mod_squarefree(f_in)) fail("NotSquarefree", "factor pattern of non-squarefree polynomial");
    FactorPattern pat;
    ModPoly g = make_monic(f_in);
    ModPoly h = ModPoly::x(g.p);  // h = x^{p^d} mod g, running
    const ModPoly x = ModPoly::x(g.p);
    int d = 0;
    while (g.degree() > 0) {
        ++d;
        if (2 * d > g.degree()) {  // leftover is a single irreducible factor
            pat[g.degree()] += 1;
            break;
        }
        h = mod_powmod(h, g.p, g);
        ModPoly u = mod_gcd(h - x, g);
        if (u.degree() > 0) {
            pat[d] += u.degree() / d;
            g = mod_divmod(g, u).first;
            h = mod_rem(h, g);
        }
    }
    return pat;
}

// Coefficientwise reduction of an integer polynomial mod a prime.  The
// degree is allowed to drop when p divides the leading coefficient; callers
// that need degree preservation check for themselves.
inline ModPoly reduce_mod(const UniPoly& f, uint64_t p) {
    if (!is_prime_u64(p)) fail("NotPrime", "modulus must be prime");
    std::vector<uint64_t> cc(f.c.size());
    for (size_t i = 0; i < f.c.size(); ++i) {
        Int v = f.c[i] % Int(p);
        if (v < 0) v += p;
        cc[i] = static_cast<uint64_t>(v);
    }
    return ModPoly(p, std::move(cc));
}

// Public factor-pattern entry point: nullopt means NotSquarefree (a domain
// outcome, not an error).
inline std::optional<FactorPattern> factor_pattern(const ModPoly& f) {
    if (f.is_zero() || f.degree() < 1)
        fail("ZeroPolynomial", "factor pattern needs positive degree");
    if (!mod_squarefree(f)) return std::nullopt;
    return mod_factor_pattern(f);
}

}  // namespace tuttelab
