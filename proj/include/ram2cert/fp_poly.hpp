#ifndef RAM2CERT_FP_POLY_HPP
#define RAM2CERT_FP_POLY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "ram2cert/errors.hpp"

namespace ram2::fp {

// Deterministic Miller-Rabin, valid for the whole 64-bit range.
bool is_prime_u64(std::uint64_t n);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);

// Polynomial over F_p, coefficients ascending, normalized (no leading zeros).
struct FpPoly {
    std::uint64_t p = 0;
    std::vector<std::uint64_t> c;

    FpPoly() = default;
    FpPoly(std::uint64_t prime, std::vector<std::uint64_t> coeffs);

    int degree() const { return static_cast<int>(c.size()) - 1; } // -1 for zero
    bool is_zero() const { return c.empty(); }
    std::uint64_t leading() const { return c.back(); }
    std::uint64_t coeff(int i) const {
        return i >= 0 && i < static_cast<int>(c.size()) ? c[static_cast<std::size_t>(i)] : 0;
    }
    std::uint64_t eval(std::uint64_t x) const;
    void normalize();
    FpPoly monic() const;
    std::string str() const;

    friend bool operator==(const FpPoly& a, const FpPoly& b) {
        return a.p == b.p && a.c == b.c;
    }
    friend bool operator<(const FpPoly& a, const FpPoly& b); // degree, then coeff order
};

FpPoly add(const FpPoly& a, const FpPoly& b);
FpPoly sub(const FpPoly& a, const FpPoly& b);
FpPoly mul(const FpPoly& a, const FpPoly& b);
FpPoly rem(const FpPoly& a, const FpPoly& m);
FpPoly gcd(FpPoly a, FpPoly b); // monic
FpPoly pow_mod(const FpPoly& base, const mpz_class& e, const FpPoly& m);
// substitute: a(s(x)) reduced mod m
FpPoly compose_mod(const FpPoly& a, const FpPoly& s, const FpPoly& m);

} // namespace ram2::fp

#endif
