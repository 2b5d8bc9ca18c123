#ifndef RAM2CERT_REPORT_HPP
#define RAM2CERT_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "ram2cert/descent.hpp"

namespace ram2::report {

struct CertifyOptions {
    std::optional<std::uint32_t> modulus_bits; // overrides the table's modulus
    std::optional<int> alpha_exponent;         // bypass the generator search
    int precision = 6;                         // significant digits in numeric rendering
    bool strict = false; // treat the literal swap direction (shift 1, twist 0) as required
};

struct CertifyOutcome {
    nlohmann::ordered_json report;
    bool certified = false;
};

// Runs the full pipeline: generator search, order recomputation, Dickson
// certificates, descent relations, charpoly and ordinarity checks, degree
// arithmetic, the discriminant bound and the Odlyzko comparison. The
// structured report is the single source of truth; the human rendering is
// derived from it.
CertifyOutcome run_certification(const descent::EigenvalueTable& table,
                                 const std::string& raw_table_bytes,
                                 const CertifyOptions& options);

std::string human_report(const nlohmann::ordered_json& report);

// FNV-1a 64-bit digest, hex-encoded; used to pin the table bytes in reports.
std::string fnv1a_hex(const std::string& bytes);

} // namespace ram2::report

#endif
