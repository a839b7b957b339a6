#pragma once

// Dense univariate polynomials over an exact integral domain R.
// R is either Int (giving UniPoly = Z[x]) or Poly<Int> (giving Z[y][x], which
// is how bivariate resultants/discriminants with respect to x are computed).
//
// Resultants use the subresultant polynomial remainder sequence — pseudo-
// division with the classic g/h coefficient reductions — so every division is
// exact and coefficient growth stays polynomial.  An independent Sylvester-
// matrix oracle in the test suite cross-checks this path.

#include <algorithm>
#include <type_traits>
#include <vector>

#include "tuttelab/bigint.hpp"
#include "tuttelab/error.hpp"

namespace tuttelab {

template <class R>
struct Poly;

namespace ring {

template <class R>
struct is_poly : std::false_type {};
template <class R>
struct is_poly<Poly<R>> : std::true_type {};

template <class R>
inline bool is_zero(const R& a) {
    if constexpr (is_poly<R>::value) return a.is_zero();
    else return a == 0;
}

template <class R>
inline R zero() { return R{}; }

template <class R>
inline R one() {
    if constexpr (is_poly<R>::value) return R::constant(one<typename R::Coeff>());
    else return R(1);
}

// Exact division; throws DivisionInexact if b does not divide a in R.
template <class R>
inline R div_exact(const R& a, const R& b) {
    if constexpr (is_poly<R>::value) {
        return a.div_exact(b);
    } else {
        if (is_zero(b)) fail("DivisionInexact", "division by zero in coefficient ring");
        R q = a / b;
        if (q * b != a) fail("DivisionInexact", "inexact coefficient division");
        return q;
    }
}

template <class R>
inline R pow(const R& base, long e) {
    R r = one<R>(), b = base;
    for (long k = e; k > 0; k >>= 1) {
        if (k & 1) r = r * b;
        b = b * b;
    }
    return r;
}

}  // namespace ring

template <class R>
struct Poly {
    using Coeff = R;

    std::vector<R> c;  // c[i] multiplies x^i; invariant: no trailing zeros

    Poly() = default;
    explicit Poly(std::vector<R> coeffs) : c(std::move(coeffs)) { trim(); }

    static Poly constant(R v) {
        Poly p;
        if (!ring::is_zero(v)) p.c.push_back(std::move(v));
        return p;
    }
    static Poly monomial(R v, int deg) {
        Poly p;
        if (!ring::is_zero(v)) {
            p.c.assign(deg + 1, ring::zero<R>());
            p.c[deg] = std::move(v);
        }
        return p;
    }
    static Poly x() { return monomial(ring::one<R>(), 1); }

    void trim() {
        while (!c.empty() && ring::is_zero(c.back())) c.pop_back();
    }

    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for 0
    const R& lc() const {
        if (is_zero()) fail("ZeroPolynomial", "leading coefficient of zero polynomial");
        return c.back();
    }
    R coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c.size())) return ring::zero<R>();
        return c[i];
    }
    bool is_constant() const { return c.size() <= 1; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c == b.c; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly operator-() const {
        Poly r = *this;
        for (auto& v : r.c) v = -v;
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r;
        r.c.resize(std::max(a.c.size(), b.c.size()), ring::zero<R>());
        for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
        for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = r.c[i] + b.c[i];
        r.trim();
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly{};
        Poly r;
        r.c.assign(a.c.size() + b.c.size() - 1, ring::zero<R>());
        for (size_t i = 0; i < a.c.size(); ++i) {
            if (ring::is_zero(a.c[i])) continue;
            for (size_t j = 0; j < b.c.size(); ++j)
                r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
        }
        r.trim();
        return r;
    }

    Poly scaled(const R& k) const {
        if (ring::is_zero(k)) return Poly{};
        Poly r = *this;
        for (auto& v : r.c) v = v * k;
        r.trim();  // zero divisors don't exist, but stay defensive
        return r;
    }

    Poly derivative() const {
        if (c.size() <= 1) return Poly{};
        Poly r;
        r.c.resize(c.size() - 1);
        for (size_t i = 1; i < c.size(); ++i) {
            R m = c[i];
            for (size_t k = 1; k < i; ++k) m = m + c[i];  // i * c[i] without Int(i)*R
            r.c[i - 1] = m;
        }
        r.trim();
        return r;
    }

    // Horner evaluation at a ring element.
    R eval(const R& v) const {
        R acc = ring::zero<R>();
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * v + *it;
        return acc;
    }

    // Pseudo-remainder: lc(B)^(degA-degB+1) * A = Q*B + prem(A,B),
    // deg prem < deg B.  (Returns A unchanged when deg A < deg B.)
    static Poly prem(Poly A, const Poly& B) {
        if (B.is_zero()) fail("ZeroPolynomial", "pseudo-division by zero");
        int db = B.degree();
        if (A.degree() < db) return A;
        const R& b = B.lc();
        int e = A.degree() - db + 1;
        while (!A.is_zero() && A.degree() >= db) {
            Poly t = Poly::monomial(A.lc(), A.degree() - db);
            A = A.scaled(b) - t * B;  // leading terms cancel exactly
            --e;
        }
        // pad so the total factor is exactly lc(B)^(delta+1)
        for (; e > 0; --e) A = A.scaled(b);
        return A;
    }

    // Exact division: requires B | A in R[x]; throws DivisionInexact else.
    Poly div_exact(const Poly& B) const {
        if (B.is_zero()) fail("DivisionInexact", "polynomial division by zero");
        if (is_zero()) return Poly{};
        if (degree() < B.degree()) fail("DivisionInexact", "divisor degree exceeds dividend");
        Poly A = *this;
        Poly Q;
        Q.c.assign(degree() - B.degree() + 1, ring::zero<R>());
        while (!A.is_zero() && A.degree() >= B.degree()) {
            R q = ring::div_exact(A.lc(), B.lc());
            int shift = A.degree() - B.degree();
            Q.c[shift] = q;
            A = A - Poly::monomial(q, shift) * B;
            if (!A.is_zero() && A.degree() >= shift + B.degree())
                fail("DivisionInexact", "no degree reduction in exact division");
        }
        if (!A.is_zero()) fail("DivisionInexact", "nonzero remainder in exact division");
        Q.trim();
        return Q;
    }
};

using UniPoly = Poly<Int>;
using YPoly = Poly<Int>;          // same type, named for the y variable role
using XYPoly = Poly<Poly<Int>>;   // Z[y][x]: outer variable x

// ---------------------------------------------------------------------------
// Z[x]-specific helpers

inline Int content(const UniPoly& f) {
    Int g = 0;
    for (const auto& v : f.c) g = gcd(g, v);
    return g;  // 0 for the zero polynomial, else > 0
}

inline UniPoly primitive_part(const UniPoly& f) {
    Int ct = content(f);
    if (ct == 0) return UniPoly{};
    UniPoly r = f;
    for (auto& v : r.c) v /= ct;
    return r;
}

// Polynomial gcd over Z via the primitive PRS; result has positive leading
// coefficient and content gcd(content f, content g).
inline UniPoly poly_gcd(UniPoly A, UniPoly B) {
    if (A.is_zero() && B.is_zero()) return UniPoly{};
    Int cg = gcd(content(A), content(B));
    A = primitive_part(A);
    B = primitive_part(B);
    if (A.degree() < B.degree()) std::swap(A, B);
    while (!B.is_zero()) {
        UniPoly R = UniPoly::prem(A, B);
        A = std::move(B);
        B = primitive_part(R);
    }
    UniPoly g = A;  // primitive
    if (!g.is_zero() && g.lc() < 0) g = -g;
    return g.scaled(cg);
}

inline bool is_squarefree(const UniPoly& f) {
    if (f.is_zero()) fail("ZeroPolynomial", "squarefree test of zero polynomial");
    if (f.degree() < 1) return true;
    return poly_gcd(f, f.derivative()).degree() == 0;
}

// Multiplicity of the root `r` (i.e. of the factor x - r) in f.
inline int root_multiplicity(const UniPoly& f, const Int& r) {
    if (f.is_zero()) fail("ZeroPolynomial", "root multiplicity in zero polynomial");
    UniPoly g = f;
    UniPoly lin(std::vector<Int>{-r, 1});
    int m = 0;
    while (!g.is_zero() && g.eval(r) == 0) {
        g = g.div_exact(lin);
        ++m;
    }
    return m;
}

// ---------------------------------------------------------------------------
// Resultant via the subresultant PRS (generic over the coefficient ring).

template <class R>
R resultant(Poly<R> A, Poly<R> B) {
    using P = Poly<R>;
    if (A.is_zero() || B.is_zero())
        fail("ZeroPolynomial", "resultant of zero polynomial");
    bool negate = false;
    if (A.degree() < B.degree()) {
        if ((A.degree() % 2 != 0) && (B.degree() % 2 != 0)) negate = !negate;
        std::swap(A, B);
    }
    if (A.degree() == 0) return ring::one<R>();  // two nonzero constants
    if (B.degree() == 0) {
        R r = ring::pow(B.lc(), A.degree());
        return negate ? R(-r) : r;
    }
    R g = ring::one<R>(), h = ring::one<R>();
    while (true) {
        int da = A.degree(), db = B.degree();
        long delta = da - db;
        if ((da % 2 != 0) && (db % 2 != 0)) negate = !negate;
        P Rm = P::prem(A, B);
        if (Rm.is_zero()) return ring::zero<R>();  // positive-degree common factor
        A = std::move(B);
        R divisor = g * ring::pow(h, delta);
        B = P{};
        B.c.resize(Rm.c.size());
        for (size_t i = 0; i < Rm.c.size(); ++i) B.c[i] = ring::div_exact(Rm.c[i], divisor);
        B.trim();
        g = A.lc();
        if (delta == 1) h = g;
        else if (delta > 1) h = ring::div_exact(ring::pow(g, delta), ring::pow(h, delta - 1));
        if (B.degree() == 0) {
            int dfin = A.degree();  // >= 1 here
            R num = ring::pow(B.lc(), dfin);
            R res = (dfin >= 2) ? ring::div_exact(num, ring::pow(h, dfin - 1)) : num;
            return negate ? -res : res;
        }
    }
}

// Discriminant of f with respect to its variable:
//   disc(f) = (-1)^{d(d-1)/2} * resultant(f, f') / lc(f),   d = deg f >= 1.
template <class R>
R discriminant(const Poly<R>& f) {
    if (f.is_zero()) fail("ZeroPolynomial", "discriminant of zero polynomial");
    int d = f.degree();
    if (d < 1) fail("ConstantPolynomial", "discriminant needs degree >= 1");
    R res = resultant(f, f.derivative());
    R q = ring::div_exact(res, f.lc());
    long e = static_cast<long>(d) * (d - 1) / 2;
    return (e % 2 != 0) ? R(-q) : q;
}

}  // namespace tuttelab
