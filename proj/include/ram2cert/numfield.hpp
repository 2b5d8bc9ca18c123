#ifndef RAM2CERT_NUMFIELD_HPP
#define RAM2CERT_NUMFIELD_HPP

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "ram2cert/errors.hpp"
#include "ram2cert/fp_poly.hpp"

// Exact arithmetic in the fixed octic field F = Q(zeta_32)^+, generated by
// beta = zeta_32 + zeta_32^-1 with minimal polynomial
// x^8 - 8 x^6 + 20 x^4 - 16 x^2 + 2 and integral basis 1, beta, ..., beta^7.
namespace ram2::nf {

inline constexpr int kDegree = 8;
// minimal polynomial of beta, coefficients ascending
inline constexpr std::array<long, 9> kMinPoly = {2, 0, -16, 0, 20, 0, -8, 0, 1};
// sigma(beta) = -beta^3 + 3 beta; sigma generates Gal(F/Q) = Z/8
inline constexpr std::array<long, 8> kSigmaBeta = {0, 3, 0, -1, 0, 0, 0, 0};

// Field element with exact rational coordinates over the integral basis.
// Coordinates stay canonical after every operation; no floating point.
class Element {
public:
    Element(); // zero

    static Element from_coords(std::array<mpq_class, 8> coords);
    static Element from_int_coords(const std::array<long, 8>& coords);
    static Element integer(long n);
    static Element beta();

    const mpq_class& coord(int i) const { return c_.at(static_cast<std::size_t>(i)); }
    bool is_integral() const;
    bool is_zero() const;

    Element operator+(const Element& o) const;
    Element operator-(const Element& o) const;
    Element operator-() const;
    Element operator*(const Element& o) const;
    Element scaled(const mpq_class& s) const;
    bool operator==(const Element& o) const { return c_ == o.c_; }
    bool operator!=(const Element& o) const { return !(*this == o); }

    std::string str() const; // "1 + 2*b - 4*b^3 + b^5"

private:
    std::array<mpq_class, 8> c_;
};

// sigma^power, computed by substituting beta -> -beta^3 + 3 beta and
// reducing; power taken mod 8.
Element apply_sigma(const Element& a, int power = 1);

// N_{F/Q}(a): determinant of the multiplication-by-a matrix on the basis.
mpq_class norm(const Element& a);

// disc(O_F) = resultant(m, m') = 2^31 (the order Z[beta] is maximal).
const mpz_class& field_discriminant();

// A prime of F above the rational prime p, represented by its
// Kummer-Dedekind local factor mod p.
struct PrimeIdealFactor {
    std::uint64_t p = 0;
    fp::FpPoly local_factor; // monic irreducible over F_p
    int e = 1;               // ramification index
    int f = 1;               // residue degree
    int orbit_index = 1;     // position in the sigma-orbit, 1-based
};

struct RationalPrimeFactorization {
    std::uint64_t p = 0;
    std::vector<PrimeIdealFactor> factors; // sorted by orbit_index
    const PrimeIdealFactor& by_orbit(int index) const;
};

// Kummer-Dedekind factorization of p in O_F (valid at every p: the index
// [O_F : Z[beta]] is 1). Factors carry e, f and sigma-orbit labels; the
// orbit base point is the canonical smallest factor.
RationalPrimeFactorization factor_rational_prime(std::uint64_t p);

// Independent oracle for odd p: residue degree = multiplicative order of p
// in (Z/32)^x / {+-1}; returns (f, g) with f*g = 8.
std::pair<int, int> splitting_type_by_reciprocity(std::uint64_t p);

// sigma(q) among the factors of the same prime: the factor h_j with
// h_i(sigma(x)) = 0 mod (p, h_j). Exactly one such factor exists.
const PrimeIdealFactor& sigma_on_prime(const RationalPrimeFactorization& fact,
                                       const PrimeIdealFactor& q);

// Index (1-based) of the factor whose ideal contains gen; requires gen to
// lie in exactly one factor (true for the table's norm-p generators).
int orbit_containing_generator(const RationalPrimeFactorization& fact, const Element& gen);

// Relabel so the factor containing gen becomes the orbit base point p^1.
RationalPrimeFactorization relabel_from_generator(RationalPrimeFactorization fact,
                                                  const Element& gen);

} // namespace ram2::nf

#endif
