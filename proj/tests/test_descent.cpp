#include <doctest.h>

#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "ram2cert/descent.hpp"
#include "ram2cert/sl2cert.hpp"

using namespace ram2;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

const descent::EigenvalueTable& shipped_table() {
    static descent::EigenvalueTable t = descent::parse_table(read_file(RAM2CERT_DATA_FILE));
    return t;
}

const gf2::FieldContext& f256() {
    static gf2::FieldContext ctx(gf2::Poly::from_bits(285));
    return ctx;
}

gf2::Element certified_alpha() {
    auto result = gf2::find_consistent_generator(
        f256(), descent::to_search_input(shipped_table()),
        [](const gf2::Element& t) { return sl2::order_from_trace(t).order; });
    REQUIRE_FALSE(result.witnesses.empty());
    return result.witnesses.front().alpha;
}

} // namespace

TEST_CASE("parsing the shipped table") {
    const auto& t = shipped_table();
    CHECK(t.modulus_bits == 285);
    CHECK(t.primes.size() == 2);
    CHECK(t.f.entries.size() == 16);
    CHECK(t.f_prime.entries.size() == 16);
    CHECK(t.f.at(31, 1).exponent == 100);
    CHECK(t.f_prime.at(31, 1).exponent == 196);
    CHECK(t.charpoly_p2.degree() == 57);
    CHECK(t.charpoly_p31.degree() == 57);
    auto [a, b] = descent::stated_octics(t);
    CHECK(a == gf2::Poly::from_bits(283));
    CHECK(b == gf2::Poly::from_bits(357));
}

TEST_CASE("serialize/parse round-trip is the identity") {
    const auto& t = shipped_table();
    CHECK(descent::parse_table(descent::serialize_table(t)) == t);
}

TEST_CASE("parse rejections") {
    const std::string good = read_file(RAM2CERT_DATA_FILE);

    SUBCASE("malformed JSON") {
        CHECK_THROWS_AS(descent::parse_table("{ not json"), parse_error);
    }
    SUBCASE("norm mismatch") {
        std::string bad = good;
        auto pos = bad.find("[1, 2, 0, -4, 0, 1, 0, 0]");
        REQUIRE(pos != std::string::npos);
        bad.replace(pos, 25, "[1, 2, 0, -4, 0, 1, 0, 1]");
        CHECK_THROWS_WITH_AS(descent::parse_table(bad),
                             doctest::Contains("norm mismatch"), parse_error);
    }
    SUBCASE("missing row f_prime") {
        std::string bad = good;
        auto pos = bad.find("\"f_prime\"");
        REQUIRE(pos != std::string::npos);
        bad.replace(pos, 9, "\"f_other\"");
        CHECK_THROWS_WITH_AS(descent::parse_table(bad), doctest::Contains("f_prime"),
                             parse_error);
    }
    SUBCASE("semantic rejections via mutated tables") {
        auto t = shipped_table();
        t.f.entries[0].claimed_order = 7; // divides neither 255 nor 257
        CHECK_THROWS_AS(descent::parse_table(descent::serialize_table(t)), parse_error);

        t = shipped_table();
        t.f.entries[0].orbit = 9;
        CHECK_THROWS_AS(descent::parse_table(descent::serialize_table(t)), parse_error);

        t = shipped_table();
        t.f.entries[0].exponent = 255;
        CHECK_THROWS_AS(descent::parse_table(descent::serialize_table(t)), parse_error);

        t = shipped_table();
        t.f.entries.erase(t.f.entries.begin()); // missing (31, 1)
        CHECK_THROWS_AS(descent::parse_table(descent::serialize_table(t)), parse_error);

        t = shipped_table();
        t.minpoly[0] = 3;
        CHECK_THROWS_AS(descent::parse_table(descent::serialize_table(t)), parse_error);

        t = shipped_table();
        t.modulus_bits = 0b101000101; // x^8+x^6+x^2+1 = (x^4+x^3+x+1)^2: reducible
        CHECK_THROWS_AS(descent::parse_table(descent::serialize_table(t)), parse_error);
    }
}

TEST_CASE("tau^2 / sigma^2 intertwining") {
    const auto& t = shipped_table();
    gf2::Element alpha = certified_alpha();

    CHECK(descent::check_tau2_sigma2(t, alpha, "f").passed);
    CHECK(descent::check_tau2_sigma2(t, alpha, "f_prime").passed);

    SUBCASE("pure function: identical reports on reruns") {
        auto r1 = descent::check_tau2_sigma2(t, alpha, "f");
        auto r2 = descent::check_tau2_sigma2(t, alpha, "f");
        CHECK(r1.passed == r2.passed);
        CHECK(r1.details == r2.details);
    }
    SUBCASE("mutating p31^3 yields the documented counterexample pair") {
        auto mutated = t;
        for (auto& e : mutated.f.entries)
            if (e.p == 31 && e.orbit == 3) e.exponent = 144;
        auto res = descent::check_tau2_sigma2(mutated, alpha, "f");
        CHECK_FALSE(res.passed);
        CHECK(res.details.find("p31^1") != std::string::npos);
        CHECK(res.details.find("p31^3") != std::string::npos);
    }
    SUBCASE("claimed orders are tau-invariant along sigma^2 orbits") {
        for (const descent::NewformRow* row : {&t.f, &t.f_prime})
            for (std::uint64_t p : {31, 97})
                for (int i = 1; i <= 8; ++i)
                    CHECK(row->at(p, (i - 1 + 2) % 8 + 1).claimed_order ==
                          row->at(p, i).claimed_order);
    }
}

TEST_CASE("sigma swap search") {
    const auto& t = shipped_table();
    gf2::Element alpha = certified_alpha();

    std::vector<descent::SwapSolution> sols;
    auto res = descent::check_sigma_swap(t, alpha, &sols);
    CHECK(res.passed);
    REQUIRE(sols.size() == 8);

    // frozen solution set: a_{sigma^j p}(to) = tau^d(a_p(from))
    std::set<std::tuple<std::string, std::string, int, int>> found, expected;
    for (const auto& s : sols) found.insert({s.from, s.to, s.shift, s.twist});
    for (int k = 0; k < 4; ++k) {
        expected.insert({"f", "f_prime", 2 * k + 1, 2 * k % 8});
        expected.insert({"f_prime", "f", 2 * k + 1, (2 * k + 2) % 8});
    }
    CHECK(found == expected);

    // the literal untwisted direction a_{sigma(p)}(f) = a_p(f') is absent
    CHECK(found.count({"f_prime", "f", 1, 0}) == 0);
    // ... but the twist-2 version of it holds
    CHECK(found.count({"f_prime", "f", 1, 2}) == 1);

    SUBCASE("identical rows admit the trivial solution in both directions") {
        auto twin = t;
        twin.f_prime.entries = twin.f.entries;
        std::vector<descent::SwapSolution> s2;
        descent::check_sigma_swap(twin, alpha, &s2);
        bool trivial_fwd = false, trivial_bwd = false;
        for (const auto& s : s2) {
            if (s.shift == 0 && s.twist == 0 && s.from == "f") trivial_fwd = true;
            if (s.shift == 0 && s.twist == 0 && s.from == "f_prime") trivial_bwd = true;
        }
        CHECK(trivial_fwd);
        CHECK(trivial_bwd);
    }
    SUBCASE("randomized f_prime row admits no solution") {
        auto scrambled = t;
        std::mt19937_64 rng(99);
        for (auto& e : scrambled.f_prime.entries) e.exponent = static_cast<int>(rng() % 255);
        std::vector<descent::SwapSolution> s2;
        auto r2 = descent::check_sigma_swap(scrambled, alpha, &s2);
        CHECK_FALSE(r2.passed);
        CHECK(s2.empty());
    }
}

TEST_CASE("charpoly consistency") {
    const auto& t = shipped_table();
    gf2::Element alpha = certified_alpha();
    CHECK(descent::check_charpoly_consistency(t, alpha).passed);

    SUBCASE("eigenvalue 1 at p2 breaks the quadratic relation") {
        auto mutated = t;
        mutated.f.p2_exponent = 0; // alpha^0 = 1; 1 + 1 + 1 = 1 != 0 over F_2
        auto res = descent::check_charpoly_consistency(mutated, alpha);
        CHECK_FALSE(res.passed);
        CHECK(res.details.find("x^2 + x + 1") != std::string::npos);
    }
    SUBCASE("degree bookkeeping 41 + 8 + 8 = 57") {
        CHECK(t.charpoly_p31.degree() == 41 + 8 + 8);
        CHECK(t.charpoly_p2.degree() == 41 + 16);
    }
}

TEST_CASE("ordinarity at p2") {
    const auto& t = shipped_table();
    gf2::Element alpha = certified_alpha();
    CHECK(descent::check_ordinarity(t, alpha).passed);

    auto mutated = t;
    mutated.f.p2_exponent = 0; // order 1
    CHECK_FALSE(descent::check_ordinarity(mutated, alpha).passed);
    mutated.f.p2_exponent = 1; // order 255
    CHECK_FALSE(descent::check_ordinarity(mutated, alpha).passed);
    mutated.f.p2_exponent = 170; // the other generator of F_4^x
    mutated.f_prime.p2_exponent = 170;
    CHECK(descent::check_ordinarity(mutated, alpha).passed);
}

TEST_CASE("order recomputation") {
    const auto& t = shipped_table();
    gf2::Element alpha = certified_alpha();

    auto res = descent::recompute_orders(t, alpha);
    CHECK(res.passed);
    CHECK(res.details.find("32/32") != std::string::npos);
    REQUIRE_FALSE(res.notes.empty());
    CHECK(res.notes[0].find("alternate") != std::string::npos);

    SUBCASE("a corrupted claimed order is pinpointed") {
        auto mutated = t;
        for (auto& e : mutated.f.entries)
            if (e.p == 31 && e.orbit == 1) e.claimed_order = 255;
        auto r2 = descent::recompute_orders(mutated, alpha);
        CHECK_FALSE(r2.passed);
        CHECK(r2.details.find("p31^1") != std::string::npos);
        CHECK(r2.details.find("257") != std::string::npos);
    }
}
