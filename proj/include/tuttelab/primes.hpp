#pragma once

// Primality and integer factorization at desk scale: deterministic
// Miller-Rabin below 2^64, fixed-base Miller-Rabin above (probabilistic
// primality, documented), trial division to 10^6 followed by Brent's cycle
// variant of Pollard rho with an iteration cap.  Factorization never fails
// silently: leftover composite cofactors are reported, not dropped.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "tuttelab/bigint.hpp"
#include "tuttelab/error.hpp"

namespace tuttelab {

inline uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m) {
    uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

// Deterministic for all n < 2^64 with this base set.
inline bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        uint64_t x = powmod_u64(a % n, d, n);
        if (x == 0 || x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

inline uint64_t next_prime_u64(uint64_t n) {
    uint64_t c = n + 1;
    if (c <= 2) return 2;
    if (c % 2 == 0) ++c;
    while (!is_prime_u64(c)) c += 2;
    return c;
}

inline Int powmod_int(Int a, Int e, const Int& m) {
    Int r = 1;
    a %= m;
    if (a < 0) a += m;
    while (e > 0) {
        if (bit_test(e, 0)) r = r * a % m;
        a = a * a % m;
        e >>= 1;
    }
    return r;
}

// Miller-Rabin with fixed bases; deterministic procedure, probabilistic
// guarantee above 2^64 (error < 4^-12 per composite).
inline bool is_probable_prime(const Int& n) {
    if (n < 2) return false;
    if (n < (Int(1) << 64)) return is_prime_u64(static_cast<uint64_t>(n));
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return false;
    }
    Int d = n - 1;
    int s = 0;
    while (!bit_test(d, 0)) { d >>= 1; ++s; }
    for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        Int x = powmod_int(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = x * x % n;
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

struct Factorization {
    std::map<Int, int> primes;          // prime -> multiplicity
    std::vector<Int> unfactored;        // composite cofactors past the budget
    bool complete() const { return unfactored.empty(); }
};

namespace detail {

inline std::optional<Int> pollard_brent(const Int& n, long max_iters) {
    // Brent's improvement of Pollard rho.  Tries a few polynomial offsets c;
    // each attempt is capped, so the whole call is budget-bounded.
    for (uint64_t c = 1; c <= 6; ++c) {
        Int y = Int(2 + c), m = 128, g = 1, r = 1, q = 1, x = 0, ys = 0;
        long iters = 0;
        while (g == 1 && iters < max_iters) {
            x = y;
            for (Int i = 0; i < r; ++i) y = (y * y + c) % n;
            Int k = 0;
            while (k < r && g == 1) {
                ys = y;
                Int lim = (m < r - k) ? m : r - k;
                for (Int i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                }
                g = gcd(q, n);
                k += m;
                iters += static_cast<long>(lim);
            }
            r *= 2;
        }
        if (g == n) {
            long back = 0;
            do {
                ys = (ys * ys + c) % n;
                g = gcd(abs(x - ys), n);
            } while (g == 1 && ++back < max_iters);
        }
        if (g != n && g > 1) return g;
    }
    return std::nullopt;
}

inline void factor_rec(const Int& n, Factorization& out, long rho_budget) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        out.primes[n] += 1;
        return;
    }
    auto d = pollard_brent(n, rho_budget);
    if (!d) {
        out.unfactored.push_back(n);
        return;
    }
    factor_rec(*d, out, rho_budget);
    factor_rec(n / *d, out, rho_budget);
}

}  // namespace detail

// Trial division by primes up to `trial_bound`, then Pollard rho (Brent) with
// an iteration cap per cofactor.  |n| is factored; n = 0 is rejected.
inline Factorization factor_integer(Int n, uint64_t trial_bound = 1'000'000,
                                    long rho_budget = 200'000) {
    if (n == 0) fail("InvalidParameters", "factor_integer: zero has no factorization");
    Factorization out;
    if (n < 0) n = -n;
    if (n == 1) return out;
    for (uint64_t p = 2; p <= trial_bound && Int(p) * p <= n; p = next_prime_u64(p)) {
        while (n % p == 0) {
            out.primes[Int(p)] += 1;
            n /= p;
        }
    }
    if (n > 1) detail::factor_rec(n, out, rho_budget);
    return out;
}

// Multiplicative order of a modulo prime p (brute force is fine at our sizes,
// but we still walk divisors of p-1 for determinism and speed).
inline uint64_t mult_order(uint64_t a, uint64_t p) {
    if (!is_prime_u64(p)) fail("NotPrime", "mult_order: modulus must be prime");
    a %= p;
    if (a == 0) fail("InvalidParameters", "mult_order: a divisible by p");
    uint64_t ord = p - 1;
    auto fac = factor_integer(Int(p - 1));
    for (const auto& [q, e] : fac.primes) {
        uint64_t qq = static_cast<uint64_t>(q);
        for (int i = 0; i < e; ++i) {
            if (powmod_u64(a, ord / qq, p) == 1) ord /= qq;
            else break;
        }
    }
    return ord;
}

}  // namespace tuttelab
