#pragma once

// Cycle-type densities in symmetric groups and the large-sieve bound shape.
//
// A cycle type of degree r is a partition of r, stored sparsely as
// (part, multiplicity) pairs with distinct positive parts.  The density of a
// type lambda = (a_1, ..., a_r) among all permutations of r letters is
// 1 / prod_i (i^{a_i} * a_i!), and the densities over all partitions of r sum
// to one.  Three families matter for symmetric-group certification: the full
// cycle alone (transitivity), types with exactly one even part equal to 2
// (transposition detectors), and types containing a prime cycle longer than
// r/2.  Family densities are exact rationals obtained by enumerating the
// family, never by asymptotic formulas; the known asymptotics are checked as
// test properties instead.

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "tuttelab/bigint.hpp"
#include "tuttelab/error.hpp"
#include "tuttelab/primes.hpp"

namespace tuttelab {

// sparse cycle type: (part, multiplicity), parts distinct and positive
using Partition = std::vector<std::pair<int, int>>;

inline void validate_partition(const Partition& lam) {
    std::vector<int> seen;
    for (auto [part, mult] : lam) {
        if (part < 1 || mult < 1)
            fail("NotAPartition", "parts and multiplicities must be positive");
        for (int s : seen)
            if (s == part) fail("NotAPartition", "repeated part " + std::to_string(part));
        seen.push_back(part);
    }
}

inline int partition_weight(const Partition& lam) {
    validate_partition(lam);
    long w = 0;
    for (auto [part, mult] : lam) w += static_cast<long>(part) * mult;
    if (w > 1'000'000) fail("NotAPartition", "weight out of range");
    return static_cast<int>(w);
}

// density of the cycle type among all permutations: 1 / prod(i^{a_i} a_i!)
inline Rat cycle_type_density(const Partition& lam) {
    validate_partition(lam);
    Int denom = 1;
    for (auto [part, mult] : lam) {
        denom *= pow_int(Int(part), mult);
        for (int m = 2; m <= mult; ++m) denom *= m;
    }
    return Rat(Int(1), denom);
}

namespace detail {

// enumerate partitions of m (largest part first), parts filtered by `allowed`
template <class Pred, class Visit>
void walk_partitions(int m, int max_part, const Pred& allowed, Partition& acc,
                     const Visit& visit) {
    if (m == 0) {
        visit(acc);
        return;
    }
    for (int part = std::min(m, max_part); part >= 1; --part) {
        if (!allowed(part)) continue;
        for (int mult = m / part; mult >= 1; --mult) {
            acc.emplace_back(part, mult);
            walk_partitions(m - part * mult, part - 1, allowed, acc, visit);
            acc.pop_back();
        }
    }
}

}  // namespace detail

// all partitions of r, each with parts in decreasing order
inline std::vector<Partition> all_partitions(int r) {
    if (r < 0 || r > 40) fail("InvalidParameters", "partition degree " + std::to_string(r) + " out of range [0,40]");
    std::vector<Partition> out;
    Partition acc;
    detail::walk_partitions(
        r, r, [](int) { return true; }, acc,
        [&out](const Partition& lam) { out.push_back(lam); });
    return out;
}

enum class PatternFamilyKind { Irr, Transpositions, LongPrimeCycles };

inline const char* family_kind_name(PatternFamilyKind k) {
    switch (k) {
        case PatternFamilyKind::Irr: return "Irr";
        case PatternFamilyKind::Transpositions: return "Transpositions";
        case PatternFamilyKind::LongPrimeCycles: return "LongPrimeCycles";
    }
    return "?";
}

// Exact total density of a detector family among permutations of r letters.
// Irr: the single full-cycle type, density 1/r.  Transpositions: one 2-cycle
// and otherwise odd cycles only.  LongPrimeCycles: a q-cycle for some prime
// q > r/2 (such a part fits at most once, and no two such primes coexist).
inline Rat family_density(PatternFamilyKind kind, int r) {
    if (r < 2) fail("DegreeTooSmall", "degree " + std::to_string(r) + " below 2");
    if (r > 64) fail("InvalidParameters", "degree " + std::to_string(r) + " above enumeration cap 64");
    Rat total(0);
    Partition acc;
    switch (kind) {
        case PatternFamilyKind::Irr:
            return cycle_type_density({{r, 1}});
        case PatternFamilyKind::Transpositions:
            // fix the forced 2-cycle, enumerate odd types on the rest
            detail::walk_partitions(
                r - 2, r - 2, [](int part) { return part % 2 == 1; }, acc,
                [&total](Partition& lam) {
                    lam.emplace_back(2, 1);
                    total += cycle_type_density(lam);
                    lam.pop_back();
                });
            return total;
        case PatternFamilyKind::LongPrimeCycles:
            for (int q = r / 2 + 1; q <= r; ++q) {
                if (!is_prime_u64(static_cast<uint64_t>(q))) continue;
                detail::walk_partitions(
                    r - q, r - q, [](int) { return true; }, acc,
                    [&total, q](Partition& lam) {
                        lam.emplace_back(q, 1);
                        total += cycle_type_density(lam);
                        lam.pop_back();
                    });
            }
            return total;
    }
    fail("InvalidParameters", "unknown family kind");
}

// Shape of the large-sieve bound r^2 (1 + 1/log r)^{2s} (log N)/sqrt(N),
// evaluated in 50-digit floating point and snapshotted to an exact rational
// with absolute quantization error <= 5e-13 (documented precision 1e-12).
// The implied constant of the underlying theorem is unspecified and taken
// as 1: the value is a shape for comparisons, not an effective bound.
inline Rat gallagher_bound(int r, int s, long N) {
    if (r < 2 || s < 1 || N < 2) fail("InvalidParameters", "need r >= 2, s >= 1, N >= 2");
    using BF = boost::multiprecision::cpp_bin_float_50;
    const BF br(r), bN(N);
    BF val = br * br * pow(BF(1) + 1 / log(br), 2 * s) * log(bN) / sqrt(bN);
    const Int scale = pow_int(Int(10), 12);
    BF scaled = val * BF(to_string(scale)) + BF(0.5);  // value is positive
    Int num = scaled.convert_to<Int>();                // truncation = round half up
    return Rat(num, scale);
}

}  // namespace tuttelab
