#pragma once

// Exact arithmetic in Z[Phi], where Phi = (1 + sqrt(5)) / 2 satisfies
// Phi^2 = Phi + 1, and the Beatty-style integer sequences built on it.
// Everything here is integer-exact; no floating point is involved, so
// identity checks over large ranges are genuine proofs by enumeration
// rather than approximations.

#include <gmpxx.h>

#include <string>
#include <vector>

#include "stdform/core.hpp"

namespace stdform {

using BigInt = mpz_class;

// Floor of the square root of a non-negative integer.
BigInt isqrt(const BigInt& x);

// p + q * Phi with integer p, q. Closed under +, -, *.
struct GoldenNumber {
    BigInt p;
    BigInt q;

    GoldenNumber() : p(0), q(0) {}
    GoldenNumber(BigInt p_, BigInt q_) : p(std::move(p_)), q(std::move(q_)) {}
    explicit GoldenNumber(long v) : p(v), q(0) {}

    friend GoldenNumber operator+(const GoldenNumber& a, const GoldenNumber& b) {
        return {a.p + b.p, a.q + b.q};
    }
    friend GoldenNumber operator-(const GoldenNumber& a, const GoldenNumber& b) {
        return {a.p - b.p, a.q - b.q};
    }
    GoldenNumber operator-() const { return {-p, -q}; }
    // (p1 + q1 Phi)(p2 + q2 Phi) = p1 p2 + q1 q2 + (p1 q2 + p2 q1 + q1 q2) Phi.
    friend GoldenNumber operator*(const GoldenNumber& a, const GoldenNumber& b) {
        return {a.p * b.p + a.q * b.q, a.p * b.q + b.p * a.q + a.q * b.q};
    }
    friend bool operator==(const GoldenNumber& a, const GoldenNumber& b) {
        return a.p == b.p && a.q == b.q;
    }
    friend bool operator!=(const GoldenNumber& a, const GoldenNumber& b) { return !(a == b); }
};

// Sign of p + q * Phi as a real number: -1, 0 or +1.
int sign(const GoldenNumber& x);

inline bool operator<(const GoldenNumber& a, const GoldenNumber& b) { return sign(a - b) < 0; }
inline bool operator>(const GoldenNumber& a, const GoldenNumber& b) { return sign(a - b) > 0; }
inline bool operator<=(const GoldenNumber& a, const GoldenNumber& b) { return sign(a - b) <= 0; }
inline bool operator>=(const GoldenNumber& a, const GoldenNumber& b) { return sign(a - b) >= 0; }

std::string to_string(const GoldenNumber& x);

// floor(p + q * Phi) as an integer. Exact: uses isqrt(5 q^2) to locate
// q * Phi between consecutive integers.
BigInt gn_floor(const GoldenNumber& x);

// Fractional part x - floor(x), returned as a GoldenNumber in [0, 1).
GoldenNumber gn_frac(const GoldenNumber& x);

// The lower Wythoff sequence a(n) = floor(n * Phi), defined for n >= 1.
BigInt beatty_a(const BigInt& n);

// g(k) = floor(Phi * floor(k / Phi)); g(0) = 0. Defined for k >= 0.
BigInt g_seq(const BigInt& k);

// First difference g(n) - g(n - 1), defined for n >= 1. Takes values 0, 1, 2.
int increment_g(const BigInt& n);

// e(n) = floor((n + 1) / Phi), defined for n >= 0.
BigInt e_seq(const BigInt& n);

struct IdentityCheck {
    std::string name;                   // the identity, written as a formula
    bool holds = false;                 // true when no counterexample was found
    long long first_counterexample = -1;// smallest n violating it, or -1
    long long counterexamples = 0;      // how many n in range violate it
    std::string note;                   // extra diagnostics (lhs/rhs at failure)
};

struct VerifyReport {
    long long n_max = 0;
    std::vector<IdentityCheck> checks;  // the five reported checks, in order
    bool all_hold = false;
    // The self-referencing Beatty recursion is checked in both sign variants;
    // the reported line covers the one that holds and notes the other.
    IdentityCheck recursion_minus;
    IdentityCheck recursion_plus;
};

// Check the five floor/fractional-part identities for all n in 1..n_max.
// jobs > 1 splits the range across threads; results are deterministic.
VerifyReport verify_identities(long long n_max, int jobs = 1);

// Five lines, one per check, each ending in PASS or FAIL (plus a note).
std::string format_report(const VerifyReport& report);

}  // namespace stdform
