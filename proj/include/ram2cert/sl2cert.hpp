#ifndef RAM2CERT_SL2CERT_HPP
#define RAM2CERT_SL2CERT_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "ram2cert/binaryfield.hpp"

namespace ram2::sl2 {

enum class SplitType {
    SplitTorus,         // char. polynomial splits over F_{2^k}; order | 2^k - 1
    NonsplitTorus,      // root lives in the quadratic extension; order | 2^k + 1
    UnipotentAmbiguous, // trace 0: identity and involutions are indistinguishable
};

std::string to_string(SplitType t);

// Order data for an SL_2(F_{2^k}) element known only through its trace t:
// the characteristic polynomial is x^2 + t x + 1.
struct FrobeniusOrder {
    gf2::Element trace;
    unsigned order = 0;
    SplitType split_type = SplitType::UnipotentAmbiguous;
    bool ambiguous = false; // true exactly for trace 0
};

// x^2 + t x + 1 splits over F_{2^k} iff Tr(t^-2) = 0 (Artin-Schreier).
// Split: order of a root found in the base field. Nonsplit: order of the
// class of y in F_{2^k}[y]/(y^2 + t y + 1). Trace 0 reports order 2 with
// the ambiguity flag set; certificates must never consume such entries.
FrobeniusOrder order_from_trace(const gf2::Element& t);

// Element a + b*y of F_{2^(2k)} presented as F_{2^k}[y]/(y^2 + t*y + 1).
// The extension is built per nonsplit trace; the root of the quadratic is
// available by construction as (0, 1).
struct QuadExtElement {
    gf2::Element a, b, t;
};

QuadExtElement quad_ext_mul(const QuadExtElement& u, const QuadExtElement& v);
QuadExtElement quad_ext_pow(const QuadExtElement& u, unsigned long long e);
unsigned quad_ext_order(const QuadExtElement& u); // divides 2^(2k) - 1

// ---- Dickson-based surjectivity certificate ----

struct OrderWitness {
    std::string label; // which prime/form produced the order
    unsigned order = 0;
};

struct FamilyExclusion {
    std::string family;
    bool excluded = false;
    std::string reason;
};

// Certificate that a subgroup of SL_2(F_{2^8}) containing elements of the
// witnessed orders must be the whole group. The decisive pair: an element
// of order 257 and an element of order o with 1 < o | 255.
struct SurjectivityCertificate {
    bool certified = false;
    std::optional<std::string> witness_257;
    std::optional<std::pair<std::string, unsigned>> witness_255divisor;
    std::vector<FamilyExclusion> excluded_families;
    std::string narrative; // self-contained case analysis for the report
};

SurjectivityCertificate dickson_certify(const std::vector<OrderWitness>& orders);

// |SL_2(F_q)| = q (q-1) (q+1); q a power of 2, q <= 2^20.
unsigned long long sl2_order(unsigned long long q);

struct GroupDegree {
    mpz_class value;
    std::vector<std::pair<mpz_class, unsigned>> factorization;
    std::string descriptor;
    mpz_class degree_K_over_F; // |SL_2(F_{2^8})|^2
};

// Degree of the compositum over Q: 8 * |SL_2(F_{2^8})|^2, with its prime
// factorization and the group descriptor string.
GroupDegree compositum_degree();

} // namespace ram2::sl2

#endif
