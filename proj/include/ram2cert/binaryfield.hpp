#ifndef RAM2CERT_BINARYFIELD_HPP
#define RAM2CERT_BINARYFIELD_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ram2cert/errors.hpp"

namespace ram2::gf2 {

// Polynomial over F_2, coefficients packed into one 64-bit word
// (bit i = coefficient of x^i). Capacity: degree <= 63; everything this
// library manipulates stays at degree <= 57.
struct Poly {
    std::uint64_t bits = 0;

    static Poly zero() { return {0}; }
    static Poly one() { return {1}; }
    static Poly x() { return {2}; }
    static Poly from_bits(std::uint64_t b) { return {b}; }
    // coefficients in ascending order of degree, each 0 or 1
    static Poly from_coeffs(const std::vector<int>& coeffs);

    int degree() const; // -1 for the zero polynomial
    bool is_zero() const { return bits == 0; }
    int coeff(int i) const { return static_cast<int>(bits >> i & 1); }

    friend Poly operator+(Poly a, Poly b) { return {a.bits ^ b.bits}; }
    friend Poly operator*(Poly a, Poly b); // throws internal_error past capacity
    friend bool operator==(Poly a, Poly b) { return a.bits == b.bits; }
    friend bool operator!=(Poly a, Poly b) { return a.bits != b.bits; }
    friend bool operator<(Poly a, Poly b) { return a.bits < b.bits; }

    static Poly rem(Poly a, Poly m);
    static Poly gcd(Poly a, Poly b);

    std::vector<int> coeffs() const;
    std::string str() const; // "x^8 + x^4 + x^3 + x^2 + 1"
};

// gcd / iterated-Frobenius irreducibility test. Degree must be >= 1.
bool is_irreducible(Poly p);

class FieldContext;

// An element of F_{2^k}, a residue modulo the context modulus. Elements
// are plain values; they keep a pointer to their context, which must
// outlive them. Mixing contexts throws input_error.
class Element {
public:
    Element() = default;

    std::uint32_t bits() const { return bits_; }
    const FieldContext& context() const;
    bool is_zero() const { return bits_ == 0; }

    Element operator+(const Element& o) const;
    Element operator*(const Element& o) const;
    bool operator==(const Element& o) const;
    bool operator!=(const Element& o) const { return !(*this == o); }

    Element inverse() const;         // throws input_error on zero
    Element pow(long long e) const;  // square-and-multiply; negative allowed for nonzero
    Element frobenius(int power = 1) const; // x -> x^(2^power)
    unsigned order() const;          // multiplicative order; throws on zero
    int trace() const;               // absolute trace, in {0, 1}

    std::string str() const;

private:
    friend class FieldContext;
    Element(const FieldContext* ctx, std::uint32_t bits) : ctx_(ctx), bits_(bits) {}
    const FieldContext* ctx_ = nullptr;
    std::uint32_t bits_ = 0;
};

// F_{2^k} presented as F_2[x]/(modulus), 1 <= k <= 16. The modulus is data:
// any irreducible polynomial of the right degree works, and results that
// matter downstream are modulus-independent by construction.
class FieldContext {
public:
    explicit FieldContext(Poly modulus);

    int degree() const { return k_; }
    Poly modulus() const { return modulus_; }
    std::uint32_t group_order() const { return order_; } // 2^k - 1
    const std::vector<std::uint32_t>& group_prime_factors() const { return group_factors_; }

    Element element(std::uint32_t bits) const; // bits must fit in k bits
    Element zero() const { return Element(this, 0); }
    Element one() const { return Element(this, 1); }
    Element x() const;

    std::uint32_t mul_bits(std::uint32_t a, std::uint32_t b) const;

private:
    friend class Element;
    int k_;
    Poly modulus_;
    std::uint32_t order_;
    std::vector<std::uint32_t> group_factors_;
    // full multiplication table for k <= 8 (65536 entries); larger fields
    // fall back to shift-and-xor
    std::vector<std::uint8_t> mul_table_;
};

// Minimal polynomial over F_2: product of (x - a^(2^i)) over the distinct
// Frobenius conjugates. Always irreducible, degree divides k.
Poly minimal_polynomial(const Element& a);

// ---- consistency search for the eigenvalue-table generator ----

// One (eigenvalue exponent, claimed Frobenius order) pair from the table.
struct SearchEntry {
    int exponent = 0;
    unsigned claimed_order = 0;
    std::string label; // e.g. "f:p31^3", for diagnostics
};

struct GeneratorSearchInput {
    std::vector<SearchEntry> entries;  // all (prime, form) pairs of the table
    std::vector<int> p2_exponents;     // T(p2) eigenvalue exponent per form
    Poly octic_a, octic_b;             // the two stated octic charpoly factors
    int charpoly_exp_f = 0;            // exponent at the charpoly base prime, form f
    int charpoly_exp_fprime = 0;       // same for f'
};

struct GeneratorWitness {
    Element alpha;
    bool octic_a_matches_f; // minimal_polynomial(alpha^charpoly_exp_f) == octic_a
};

struct GeneratorSearchResult {
    std::vector<GeneratorWitness> witnesses; // ascending by bit pattern
    int primitive_count = 0;
    bool witnesses_single_tau_orbit = false;
};

// Maps a trace value to the order of a Frobenius element with that trace.
// Supplied by the caller (the group-theory layer provides the real one) so
// this module stays below it in the layering.
using OrderFromTrace = std::function<unsigned(const Element&)>;

// Exhaustive search over the primitive elements g of the context: g is a
// witness iff setting alpha := g reproduces every claimed order, the two
// minimal polynomials at the charpoly base prime multiply to the stated
// octic product, and every T(p2) eigenvalue has order 3. All witnesses are
// reported, not just one.
GeneratorSearchResult find_consistent_generator(const FieldContext& ctx,
                                                const GeneratorSearchInput& input,
                                                const OrderFromTrace& order_from_trace);

} // namespace ram2::gf2

#endif
