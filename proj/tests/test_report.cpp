#include <doctest.h>

#include <fstream>
#include <sstream>

#include "ram2cert/report.hpp"

using namespace ram2;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

TEST_CASE("full certification of the shipped table") {
    const std::string bytes = read_file(RAM2CERT_DATA_FILE);
    auto table = descent::parse_table(bytes);
    report::CertifyOptions opts;
    auto outcome = report::run_certification(table, bytes, opts);

    CHECK(outcome.certified);
    CHECK(outcome.report.at("overall") == "certified");
    CHECK(outcome.report.at("failed_checks").empty());
    CHECK(outcome.report.at("alpha").at("witness_count") == 8);
    CHECK(outcome.report.at("alpha").at("single_tau_orbit") == true);
    CHECK(outcome.report.at("degree").at("value") == "2251731094732800");
    CHECK(outcome.report.at("discriminant").at("verdict") == "totally complex");
    CHECK(outcome.report.at("checks").at("sigma_swap").at("literal_direction_holds") == false);

    SUBCASE("structured output is byte-stable across runs") {
        auto outcome2 = report::run_certification(table, bytes, opts);
        CHECK(outcome.report.dump(2) == outcome2.report.dump(2));
    }
    SUBCASE("the human rendering is derived from the structured report") {
        std::string text = report::human_report(outcome.report);
        CHECK(text.find("overall: certified") != std::string::npos);
        CHECK(text.find("2251731094732800") != std::string::npos);
        CHECK(text.find("totally complex") != std::string::npos);
    }
    SUBCASE("strict mode fails on the swap-direction discrepancy") {
        report::CertifyOptions strict = opts;
        strict.strict = true;
        auto res = report::run_certification(table, bytes, strict);
        CHECK_FALSE(res.certified);
        bool named = false;
        for (const auto& f : res.report.at("failed_checks"))
            if (f == "sigma_swap") named = true;
        CHECK(named);
    }
    SUBCASE("alpha bypass") {
        report::CertifyOptions bypass = opts;
        bypass.alpha_exponent = 1; // alpha = x, which is a witness
        auto res = report::run_certification(table, bytes, bypass);
        CHECK(res.certified);
        CHECK(res.report.at("alpha").at("bypassed") == true);
    }
    SUBCASE("a corrupted order entry fails with the failing check named") {
        auto mutated = table;
        mutated.f.entries[0].claimed_order = 255;
        auto res = report::run_certification(mutated, bytes, opts);
        CHECK_FALSE(res.certified);
        // the witness search comes up empty, so alpha_search is the named failure
        bool named = false;
        for (const auto& f : res.report.at("failed_checks"))
            if (f == "alpha_search") named = true;
        CHECK(named);
    }
}

TEST_CASE("digest is a pure function of the bytes") {
    CHECK(report::fnv1a_hex("") == "cbf29ce484222325");
    CHECK(report::fnv1a_hex("a") != report::fnv1a_hex("b"));
    CHECK(report::fnv1a_hex("table") == report::fnv1a_hex("table"));
}
