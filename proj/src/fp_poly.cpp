#include "ram2cert/fp_poly.hpp"

#include <algorithm>
#include <sstream>

namespace ram2::fp {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mul_mod(r, a, p);
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    a %= p;
    if (a == 0) throw input_error("inversion of zero mod p");
    return pow_mod(a, p - 2, p); // p prime
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // these twelve bases decide primality for all 64-bit integers
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

FpPoly::FpPoly(std::uint64_t prime, std::vector<std::uint64_t> coeffs)
    : p(prime), c(std::move(coeffs)) {
    for (auto& v : c) v %= p;
    normalize();
}

void FpPoly::normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

std::uint64_t FpPoly::eval(std::uint64_t x) const {
    std::uint64_t r = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        r = (mul_mod(r, x, p) + *it) % p;
    return r;
}

FpPoly FpPoly::monic() const {
    if (is_zero() || leading() == 1) return *this;
    FpPoly r = *this;
    std::uint64_t s = inv_mod(leading(), p);
    for (auto& v : r.c) v = mul_mod(v, s, p);
    return r;
}

std::string FpPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        std::uint64_t v = coeff(i);
        if (!v) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || v != 1) os << v;
        if (i >= 1) os << (v != 1 ? "*x" : "x");
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

bool operator<(const FpPoly& a, const FpPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i)
        if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
    return false;
}

namespace {
void require_same_p(const FpPoly& a, const FpPoly& b) {
    if (a.p != b.p) throw internal_error("F_p polynomials over different primes");
}
} // namespace

FpPoly add(const FpPoly& a, const FpPoly& b) {
    require_same_p(a, b);
    std::vector<std::uint64_t> c(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = (a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i))) % a.p;
    return FpPoly(a.p, std::move(c));
}

FpPoly sub(const FpPoly& a, const FpPoly& b) {
    require_same_p(a, b);
    std::vector<std::uint64_t> c(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = (a.coeff(static_cast<int>(i)) + a.p - b.coeff(static_cast<int>(i))) % a.p;
    return FpPoly(a.p, std::move(c));
}

FpPoly mul(const FpPoly& a, const FpPoly& b) {
    require_same_p(a, b);
    if (a.is_zero() || b.is_zero()) return FpPoly(a.p, {});
    std::vector<std::uint64_t> c(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j)
            c[i + j] = (c[i + j] + mul_mod(a.c[i], b.c[j], a.p)) % a.p;
    return FpPoly(a.p, std::move(c));
}

FpPoly rem(const FpPoly& a, const FpPoly& m) {
    require_same_p(a, m);
    if (m.is_zero()) throw internal_error("polynomial division by zero");
    FpPoly r = a;
    const std::uint64_t lead_inv = inv_mod(m.leading(), m.p);
    while (r.degree() >= m.degree()) {
        const int shift = r.degree() - m.degree();
        const std::uint64_t q = mul_mod(r.leading(), lead_inv, m.p);
        for (int i = 0; i <= m.degree(); ++i) {
            auto& dst = r.c[static_cast<std::size_t>(i + shift)];
            dst = (dst + m.p - mul_mod(q, m.coeff(i), m.p)) % m.p;
        }
        r.normalize();
    }
    return r;
}

FpPoly gcd(FpPoly a, FpPoly b) {
    while (!b.is_zero()) {
        FpPoly r = rem(a, b);
        a = b;
        b = r;
    }
    return a.monic();
}

FpPoly pow_mod(const FpPoly& base, const mpz_class& e, const FpPoly& m) {
    if (e < 0) throw internal_error("negative polynomial exponent");
    FpPoly r(m.p, {1});
    FpPoly b = rem(base, m);
    const mp_bitcnt_t nbits = mpz_sizeinbase(e.get_mpz_t(), 2);
    if (e == 0) return r;
    for (mp_bitcnt_t i = nbits; i-- > 0;) {
        r = rem(mul(r, r), m);
        if (mpz_tstbit(e.get_mpz_t(), i)) r = rem(mul(r, b), m);
    }
    return r;
}

FpPoly compose_mod(const FpPoly& a, const FpPoly& s, const FpPoly& m) {
    // Horner over the coefficients of a
    FpPoly r(m.p, {});
    for (int i = a.degree(); i >= 0; --i) {
        r = rem(mul(r, s), m);
        r = add(r, FpPoly(m.p, {a.coeff(i)}));
    }
    return r;
}

} // namespace ram2::fp
