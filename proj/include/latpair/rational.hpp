#pragma once

#include <gmpxx.h>

#include <string>

#include "latpair/errors.hpp"

namespace latpair {

using Int = mpz_class;
using Rat = mpq_class;

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

/// n/d in lowest terms; the raw two-argument mpq_class constructor does not
/// canonicalize and must not be used directly.
inline Rat frac(const Int& n, const Int& d) {
    check_input(d != 0, "zero denominator");
    Rat q(n, d);
    q.canonicalize();
    return q;
}

inline Rat frac(long n, long d) { return frac(Int(n), Int(d)); }

inline Int to_integer(const Rat& q) {
    check_internal(is_integer(q), "rational is not an integer");
    return q.get_num();
}

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

inline Int abs(const Int& a) {
    Int r;
    mpz_abs(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

inline Rat abs(const Rat& a) {
    Rat r;
    mpq_abs(r.get_mpq_t(), a.get_mpq_t());
    return r;
}

// Floor division, well-defined for negative operands.
inline Int fdiv(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int fmod(const Int& a, const Int& b) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int divexact(const Int& a, const Int& b) {
    check_internal(b != 0 && a % b == 0, "divexact: not divisible");
    Int q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int pow(const Int& a, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), e);
    return r;
}

// Largest k with p^k | a (a != 0).
inline long valuation(Int a, const Int& p) {
    check_internal(a != 0, "valuation of zero");
    long v = 0;
    while (a % p == 0) {
        a /= p;
        ++v;
    }
    return v;
}

// Squarefree part of a positive integer, by trial division.
inline Int squarefree_part(Int n) {
    check_internal(n > 0, "squarefree_part needs a positive integer");
    Int out = 1;
    for (Int p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        long v = 0;
        while (n % p == 0) {
            n /= p;
            ++v;
        }
        if (v % 2 != 0) out *= p;
    }
    return out * n;
}

inline Int squarefree_part(const Rat& q) {
    check_internal(q > 0, "squarefree_part needs a positive rational");
    return squarefree_part(Int(q.get_num() * q.get_den()));
}

// Euler's totient, trial division.
inline long euler_phi(long n) {
    long result = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

// q if n = q^s for a prime q, otherwise 0.
inline long prime_power_base(long n) {
    if (n < 2) return 0;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        return n == 1 ? p : 0;
    }
    return n; // n itself prime
}

inline std::string to_string(const Int& a) { return a.get_str(); }

inline std::string to_string(const Rat& q) {
    if (is_integer(q)) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

} // namespace latpair
