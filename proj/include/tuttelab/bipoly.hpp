#pragma once

// Sparse bivariate polynomials over arbitrary-precision integers: the home
// of T(x,y) = sum t_{i,j} x^i y^j.  Canonical form: term map holds nonzero
// coefficients only, so equality is map equality.

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "tuttelab/bigint.hpp"
#include "tuttelab/error.hpp"
#include "tuttelab/unipoly.hpp"

namespace tuttelab {

struct BiPoly {
    using Key = std::pair<int, int>;  // (i, j): exponent of x^i y^j
    std::map<Key, Int> t;

    BiPoly() = default;

    static BiPoly zero() { return BiPoly{}; }
    static BiPoly constant(const Int& c) {
        BiPoly p;
        if (c != 0) p.t[{0, 0}] = c;
        return p;
    }
    static BiPoly monomial(const Int& c, int i, int j) {
        if (i < 0 || j < 0) fail("InvalidParameters", "negative exponent in monomial");
        BiPoly p;
        if (c != 0) p.t[{i, j}] = c;
        return p;
    }
    static BiPoly x() { return monomial(1, 1, 0); }
    static BiPoly y() { return monomial(1, 0, 1); }

    bool is_zero() const { return t.empty(); }
    bool is_constant() const {
        return t.empty() || (t.size() == 1 && t.begin()->first == Key{0, 0});
    }

    Int coeff(int i, int j) const {
        auto it = t.find({i, j});
        return it == t.end() ? Int(0) : it->second;
    }

    int deg_x() const {
        int d = -1;
        for (auto& [k, c] : t) d = std::max(d, k.first);
        return d;
    }
    int deg_y() const {
        int d = -1;
        for (auto& [k, c] : t) d = std::max(d, k.second);
        return d;
    }

    void add_term(int i, int j, const Int& c) {
        if (c == 0) return;
        if (i < 0 || j < 0) fail("InvalidParameters", "negative exponent");
        auto [it, fresh] = t.try_emplace({i, j}, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) t.erase(it);
        }
    }

    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.t == b.t; }
    friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

    BiPoly operator-() const {
        BiPoly r = *this;
        for (auto& [k, c] : r.t) c = -c;
        return r;
    }
    friend BiPoly operator+(const BiPoly& a, const BiPoly& b) {
        BiPoly r = a;
        for (auto& [k, c] : b.t) r.add_term(k.first, k.second, c);
        return r;
    }
    friend BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + (-b); }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
        BiPoly r;
        for (auto& [ka, ca] : a.t)
            for (auto& [kb, cb] : b.t)
                r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
        return r;
    }
    BiPoly scaled(const Int& k) const {
        BiPoly r;
        if (k == 0) return r;
        for (auto& [key, c] : t) r.t[key] = c * k;
        return r;
    }

    BiPoly pow(long e) const {
        if (e < 0) fail("InvalidParameters", "negative power of BiPoly");
        BiPoly r = constant(1), b = *this;
        for (long k = e; k > 0; k >>= 1) {
            if (k & 1) r = r * b;
            b = b * b;
        }
        return r;
    }

    Int eval(const Int& xv, const Int& yv) const {
        // desk-scale direct evaluation with power caches
        std::map<int, Int> xp, yp;
        auto get = [](std::map<int, Int>& cache, const Int& base, int e) -> const Int& {
            auto it = cache.find(e);
            if (it != cache.end()) return it->second;
            return cache.emplace(e, pow_int(base, e)).first->second;
        };
        Int acc = 0;
        for (auto& [k, c] : t) acc += c * get(xp, xv, k.first) * get(yp, yv, k.second);
        return acc;
    }

    // T(x, t): univariate in x.
    UniPoly specialize_y(const Int& tv) const {
        int dx = deg_x();
        if (dx < 0) return UniPoly{};
        std::vector<Int> cc(dx + 1, Int(0));
        for (auto& [k, c] : t) cc[k.first] += c * pow_int(tv, k.second);
        return UniPoly(std::move(cc));
    }
    // T(s, y): univariate in y.
    UniPoly specialize_x(const Int& sv) const {
        int dy = deg_y();
        if (dy < 0) return UniPoly{};
        std::vector<Int> cc(dy + 1, Int(0));
        for (auto& [k, c] : t) cc[k.second] += c * pow_int(sv, k.first);
        return UniPoly(std::move(cc));
    }

    BiPoly swap_vars() const {
        BiPoly r;
        for (auto& [k, c] : t) r.t[{k.second, k.first}] = c;
        return r;
    }

    // T(x+dx, y+dy) by per-term binomial expansion.
    BiPoly shifted(const Int& dx, const Int& dy) const {
        BiPoly r;
        for (auto& [k, c] : t) {
            auto [i, j] = k;
            for (int a = 0; a <= i; ++a) {
                Int cx = binom(i, a) * pow_int(dx, i - a);
                if (cx == 0) continue;
                for (int b = 0; b <= j; ++b) {
                    Int cy = binom(j, b) * pow_int(dy, j - b);
                    if (cy == 0) continue;
                    r.add_term(a, b, c * cx * cy);
                }
            }
        }
        return r;
    }

    // Leading x-coefficient as a polynomial in y.
    UniPoly lc_x() const {
        int dx = deg_x();
        if (dx < 0) fail("ZeroPolynomial", "leading coefficient of zero polynomial");
        std::vector<Int> cc;
        for (auto& [k, c] : t) {
            if (k.first != dx) continue;
            if (static_cast<int>(cc.size()) <= k.second) cc.resize(k.second + 1, Int(0));
            cc[k.second] = c;
        }
        return UniPoly(std::move(cc));
    }

    // View as element of Z[y][x] (outer variable x).
    XYPoly to_xpoly() const {
        int dx = deg_x();
        if (dx < 0) return XYPoly{};
        std::vector<YPoly> cc(dx + 1);
        for (auto& [k, c] : t) {
            auto& yc = cc[k.first].c;
            if (static_cast<int>(yc.size()) <= k.second) yc.resize(k.second + 1, Int(0));
            yc[k.second] = c;
        }
        for (auto& q : cc) q.trim();
        XYPoly r(std::move(cc));
        return r;
    }
    static BiPoly from_xpoly(const XYPoly& f) {
        BiPoly r;
        for (size_t i = 0; i < f.c.size(); ++i)
            for (size_t j = 0; j < f.c[i].c.size(); ++j)
                r.add_term(static_cast<int>(i), static_cast<int>(j), f.c[i].c[j]);
        return r;
    }

    // View as element of Z[x][y] (outer variable y).
    XYPoly to_ypoly() const { return swap_vars().to_xpoly(); }

    Int content() const {
        Int g = 0;
        for (auto& [k, c] : t) g = gcd(g, c);
        return g;
    }
};

inline BiPoly from_unipoly_in_x(const UniPoly& f) {
    BiPoly r;
    for (size_t i = 0; i < f.c.size(); ++i) r.add_term(static_cast<int>(i), 0, f.c[i]);
    return r;
}
inline BiPoly from_unipoly_in_y(const UniPoly& f) {
    BiPoly r;
    for (size_t j = 0; j < f.c.size(); ++j) r.add_term(0, static_cast<int>(j), f.c[j]);
    return r;
}

// disc_x(T) and Res_x as polynomials in y (Z[y][x] route).
inline YPoly discriminant_x(const BiPoly& T) {
    return discriminant(T.to_xpoly());
}
inline YPoly resultant_x(const BiPoly& A, const BiPoly& B) {
    return resultant(A.to_xpoly(), B.to_xpoly());
}

// ---------------------------------------------------------------------------
// Hyperbola substitution (y-1)^rho * U(y/(y-1), y).
//
// Writing d = deg_x U, U(y/(y-1), y) = N(y)/(y-1)^d with
// N(y) = sum u_{i,j} y^{i+j} (y-1)^{d-i}.  Cancelling the maximal power of
// (y-1) from N gives the minimal rho = d - mult and the exact quotient Q.
struct HyperbolaResult {
    long rho = 0;
    UniPoly Q;        // polynomial in y
    bool exact = true;
};

inline HyperbolaResult hyperbola_substitute(const BiPoly& U) {
    if (U.is_zero()) fail("ZeroPolynomial", "hyperbola substitution of zero polynomial");
    const int d = U.deg_x();
    UniPoly N;  // in y
    const UniPoly ym1(std::vector<Int>{-1, 1});  // y - 1
    // cache powers of (y-1)
    std::vector<UniPoly> p(d + 1);
    p[0] = UniPoly(std::vector<Int>{1});
    for (int k = 1; k <= d; ++k) p[k] = p[k - 1] * ym1;
    for (auto& [k, c] : U.t) {
        auto [i, j] = k;
        N = N + UniPoly::monomial(c, i + j) * p[d - i];
    }
    HyperbolaResult out;
    if (N.is_zero()) {
        // U vanishes identically on x(y-1)=y, i.e. (xy-x-y) | U.  No minimal
        // rho exists; report the zero quotient (detect_brylawski rejects it).
        out.rho = 0;
        out.Q = UniPoly{};
        return out;
    }
    int mult = root_multiplicity(N, 1);
    out.rho = d - mult;
    out.Q = N;
    UniPoly lin = ym1;
    for (int k = 0; k < mult; ++k) out.Q = out.Q.div_exact(lin);
    return out;
}

}  // namespace tuttelab
