#ifndef RAM2CERT_DISCBOUND_HPP
#define RAM2CERT_DISCBOUND_HPP

#include <string>

#include <gmpxx.h>

#include "ram2cert/errors.hpp"

namespace ram2::disc {

// The real number 2^exponent with an exact rational exponent. All
// discriminant bookkeeping happens on exponents; floating point only
// appears in the final rendering.
struct DyadicExponent {
    mpq_class exponent;

    double value() const;
    // "2^(47/8) = 58.6871" with the requested significant digits
    std::string render(int significant_digits = 6) const;
};

// Local model at the unique prime above 2: K_P = L(sqrt(x_1)...sqrt(x_m))
// over the unramified cubic layer L, so e = 2^m and Gal(K_P/L) has
// 2^m - 1 quadratic characters of conductor dividing p_L^16.
struct RamificationModel {
    long m = 0;
    int unramified_degree = 3;

    mpz_class ramification_index() const; // 2^m
    mpz_class quadratic_character_count() const; // 2^m - 1
};

// 16 (2^m - 1): conductor-discriminant bound on the exponent of d_{K_P/L}.
mpz_class local_conductor_exponent(long m);

struct RelDiscResult {
    mpq_class exponent;        // 2 [K:Q] (1 - 2^-m)
    bool tower_divisibility;   // whether 2^m divides [K:F]
};

// Exponent bound for d_{K/F} as a power of p_2, checked two ways:
// 16 g s (2^m - 1) with g s = [K:F] / 2^m against 2 [K:Q] (1 - 1/2^m).
// The identity is exact rational arithmetic; tower_divisibility records
// whether 2^m actually divides [K:F].
RelDiscResult relative_disc_exponent(long m, const mpz_class& deg_KF, const mpz_class& deg_KQ);

DyadicExponent delta_F(); // 2^(31/8)

// Exact exponent 47/8 - 2^(1-m) of the root-discriminant bound, strictly
// increasing in m with supremum 47/8. m = 0 is only meaningful with the
// unramified flag (returns delta_F's exponent 31/8).
DyadicExponent root_disc_upper_bound(long m, bool unramified = false);
DyadicExponent root_disc_upper_bound_sup(); // 47/8

// Unconditional lower bound for the root discriminant of any degree-n
// field with signature (r1, r2), from the Weil explicit formula with the
// compactly supported test-function family g(x/y)/cosh(x/2),
// g(v) = (1-|v|)cos(pi v) + sin(pi|v|)/pi. Every parameter y yields a
// valid bound; the evaluator maximizes over y and subtracts a certified
// quadrature margin, so the returned value is itself a valid lower bound.
struct OdlyzkoBound {
    double value = 0;            // the certified lower bound for delta_K
    double log_value = 0;        // log of the same
    double y = 0;                // test-function support parameter used
    double quadrature_margin = 0; // subtracted error allowance (log scale)
};

OdlyzkoBound odlyzko_lower_bound(const mpz_class& n, const mpz_class& r1, const mpz_class& r2);

enum class Verdict { TotallyComplex, Inconclusive };

std::string to_string(Verdict v);

struct VerdictRecord {
    Verdict verdict = Verdict::Inconclusive;
    double odlyzko_totally_real = 0; // lower bound if K were totally real
    double upper_bound = 0;          // 2^boundK
    double margin = 0;               // odlyzko - upper, when positive
    std::string note;
};

// "not totally real" iff the totally-real Odlyzko bound at degree n
// exceeds 2^boundK; a Galois field has homogeneous signature, so that
// verdict upgrades to "totally complex".
VerdictRecord totally_complex_verdict(const DyadicExponent& boundK, const mpz_class& n);

} // namespace ram2::disc

#endif
