#ifndef RAM2CERT_DESCENT_HPP
#define RAM2CERT_DESCENT_HPP

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "ram2cert/binaryfield.hpp"
#include "ram2cert/numfield.hpp"

namespace ram2::descent {

// One (prime, orbit) eigenvalue entry of a newform row: the eigenvalue is
// alpha^exponent and claimed_order is the stated Frobenius order.
struct FormEntry {
    std::uint64_t p = 0;
    int orbit = 0;
    int exponent = 0;
    unsigned claimed_order = 0;
    bool operator==(const FormEntry&) const = default;
};

struct NewformRow {
    std::string label;
    std::vector<FormEntry> entries; // sorted by (p, orbit)
    int p2_exponent = 0;
    bool operator==(const NewformRow&) const = default;

    const FormEntry& at(std::uint64_t p, int orbit) const;
};

struct BasePrime {
    std::uint64_t p = 0;
    nf::Element generator;
    int generator_orbit = 1; // which orbit index the generator pins (base point)
    bool operator==(const BasePrime&) const = default;
};

struct EigenvalueTable {
    std::array<long, 9> minpoly{};
    std::array<long, 8> sigma_beta{};
    std::uint32_t modulus_bits = 0;
    std::optional<int> witness_exponent;
    std::vector<BasePrime> primes;
    NewformRow f, f_prime;
    gf2::Poly charpoly_p2, charpoly_p31;
    bool operator==(const EigenvalueTable&) const = default;
};

// Parse and validate a table document (JSON). Checks performed here:
// syntax, field descriptor against the fixed field, modulus irreducibility,
// orbit completeness, exponent and order ranges, row consistency, and the
// generator norms |N(gen)| = p.
EigenvalueTable parse_table(const std::string& json_text);
EigenvalueTable load_table(const std::filesystem::path& path);
std::string serialize_table(const EigenvalueTable& table);

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string details;             // parameters found, or first counterexample
    std::vector<std::string> notes;
};

// A solution of a_{sigma^shift(p)}(to) = tau^twist(a_p(from)) on all primes.
struct SwapSolution {
    std::string from, to;
    int shift = 0, twist = 0;
};

// a_{sigma^2(p)}(form) = tau^2(a_p(form)), elementwise over the table.
CheckResult check_tau2_sigma2(const EigenvalueTable& table, const gf2::Element& alpha,
                              const std::string& form_label);

// Exhaustive search over direction x shift x twist for swap relations
// between the two rows; reports every solution found.
CheckResult check_sigma_swap(const EigenvalueTable& table, const gf2::Element& alpha,
                             std::vector<SwapSolution>* solutions = nullptr);

// (i) product of the two minimal polynomials at the charpoly base prime
// equals the stated octic product, (ii) a(p2) satisfies x^2 + x + 1,
// (iii) degree bookkeeping 41 + 8 + 8 = 57 on both stated charpolys.
CheckResult check_charpoly_consistency(const EigenvalueTable& table, const gf2::Element& alpha);

// a(p2) generates F_4^x, i.e. has order 3, for every form carrying one.
CheckResult check_ordinarity(const EigenvalueTable& table, const gf2::Element& alpha);

// order_from_trace(eigenvalue) equals the claimed order at every entry,
// plus the parity alternation pattern along each row.
CheckResult recompute_orders(const EigenvalueTable& table, const gf2::Element& alpha);

// Assemble the generator-search input from the table.
gf2::GeneratorSearchInput to_search_input(const EigenvalueTable& table);

// The two stated octic factors of charpoly(T(p31^1)), from the table:
// charpoly / x^41 factored over F_2.
std::pair<gf2::Poly, gf2::Poly> stated_octics(const EigenvalueTable& table);

} // namespace ram2::descent

#endif
