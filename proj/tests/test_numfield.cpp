#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "ram2cert/numfield.hpp"

using namespace ram2;

namespace {

nf::Element random_integral(std::mt19937_64& rng) {
    std::array<long, 8> c{};
    for (auto& v : c) v = static_cast<long>(rng() % 19) - 9;
    return nf::Element::from_int_coords(c);
}

const nf::Element& sqrt2() {
    // zeta^4 + zeta^-4 = beta^4 - 4 beta^2 + 2
    static nf::Element s = nf::Element::from_int_coords({2, 0, -4, 0, 1, 0, 0, 0});
    return s;
}

} // namespace

TEST_CASE("multiplication and reduction") {
    nf::Element one = nf::Element::integer(1), beta = nf::Element::beta();
    CHECK(one * beta == beta);
    // beta^4 * beta^4 reduces through the minimal polynomial
    nf::Element b4 = beta * beta * beta * beta;
    CHECK(b4 * b4 == nf::Element::from_int_coords({-2, 0, 16, 0, -20, 0, 8, 0}));
    // (beta^4 - 4 beta^2 + 2)^2 = 2, twice: library path and generic-poly oracle
    CHECK(sqrt2() * sqrt2() == nf::Element::integer(2));
    auto via_oracle = oracles::qp_rem(
        oracles::qp_mul(oracles::element_to_poly(sqrt2()), oracles::element_to_poly(sqrt2())),
        oracles::min_poly_q());
    CHECK(oracles::poly_to_element(via_oracle) == nf::Element::integer(2));
}

TEST_CASE("sigma: defining image, order 8, multiplicativity, substitution oracle") {
    nf::Element beta = nf::Element::beta();
    CHECK(nf::apply_sigma(beta) == nf::Element::from_int_coords({0, 3, 0, -1, 0, 0, 0, 0}));
    CHECK(nf::apply_sigma(sqrt2()) == -sqrt2()); // sigma negates sqrt(2)

    std::mt19937_64 rng(101);
    for (int i = 0; i < 100; ++i) {
        nf::Element a = random_integral(rng);
        CHECK(nf::apply_sigma(a, 8) == a);
        CHECK(nf::apply_sigma(a) == oracles::sigma_by_substitution(a));
    }
    for (int i = 0; i < 50; ++i) {
        nf::Element a = random_integral(rng), b = random_integral(rng);
        CHECK(nf::apply_sigma(a * b) == nf::apply_sigma(a) * nf::apply_sigma(b));
        CHECK(nf::norm(nf::apply_sigma(a)) == nf::norm(a));
    }
    // iterating the substitution oracle eight times is also the identity
    nf::Element cur = beta;
    for (int i = 0; i < 8; ++i) cur = oracles::sigma_by_substitution(cur);
    CHECK(cur == beta);
}

TEST_CASE("norms") {
    CHECK(nf::norm(nf::Element::integer(2)) == 256);
    CHECK(nf::norm(nf::Element::beta()) == 2);

    nf::Element g31 = nf::Element::from_int_coords({1, 2, 0, -4, 0, 1, 0, 0});
    nf::Element g97 = nf::Element::from_int_coords({1, -12, -4, 19, 1, -8, 0, 1});
    CHECK(nf::norm(g31) == -31);
    CHECK(nf::norm(g97) == 97);
    CHECK(oracles::norm_by_resultant(g31) == -31);
    CHECK(oracles::norm_by_resultant(g97) == 97);

    SUBCASE("multiplicative on 1000 random pairs, and matches the resultant route") {
        std::mt19937_64 rng(555);
        for (int i = 0; i < 1000; ++i) {
            nf::Element a = random_integral(rng), b = random_integral(rng);
            CHECK(nf::norm(a * b) == nf::norm(a) * nf::norm(b));
        }
        for (int i = 0; i < 25; ++i) {
            nf::Element a = random_integral(rng);
            CHECK(nf::norm(a) == oracles::norm_by_resultant(a));
        }
    }
}

TEST_CASE("factorization of rational primes") {
    SUBCASE("31 splits completely") {
        auto fact = nf::factor_rational_prime(31);
        REQUIRE(fact.factors.size() == 8);
        for (const auto& f : fact.factors) {
            CHECK(f.e == 1);
            CHECK(f.f == 1);
        }
    }
    SUBCASE("2 is totally ramified") {
        auto fact = nf::factor_rational_prime(2);
        REQUIRE(fact.factors.size() == 1);
        CHECK(fact.factors[0].e == 8);
        CHECK(fact.factors[0].f == 1);
    }
    SUBCASE("3 is inert") {
        auto fact = nf::factor_rational_prime(3);
        REQUIRE(fact.factors.size() == 1);
        CHECK(fact.factors[0].e == 1);
        CHECK(fact.factors[0].f == 8);
    }
    SUBCASE("a composite input is rejected") {
        CHECK_THROWS_AS(nf::factor_rational_prime(91), input_error);
        CHECK_THROWS_AS(nf::factor_rational_prime(1), input_error);
    }
}

TEST_CASE("reciprocity oracle") {
    CHECK(nf::splitting_type_by_reciprocity(31) == std::pair(1, 8));
    CHECK(nf::splitting_type_by_reciprocity(97) == std::pair(1, 8));
    CHECK(nf::splitting_type_by_reciprocity(3) == std::pair(8, 1));
    CHECK(nf::splitting_type_by_reciprocity(7) == std::pair(4, 2));
    CHECK(nf::splitting_type_by_reciprocity(17) == std::pair(2, 4));
    CHECK_THROWS_AS(nf::splitting_type_by_reciprocity(2), input_error);
    CHECK_THROWS_AS(nf::splitting_type_by_reciprocity(15), input_error);
}

TEST_CASE("factorization agrees with reciprocity for all primes below 500") {
    for (std::uint64_t p = 2; p < 500; ++p) {
        if (!fp::is_prime_u64(p)) continue;
        auto fact = nf::factor_rational_prime(p);
        long ef_sum = 0;
        for (const auto& f : fact.factors) ef_sum += static_cast<long>(f.e) * f.f;
        CHECK(ef_sum == 8);
        if (p == 2) continue;
        auto [f, g] = nf::splitting_type_by_reciprocity(p);
        CHECK(static_cast<int>(fact.factors.size()) == g);
        for (const auto& q : fact.factors) {
            CHECK(q.f == f);
            CHECK(q.e == 1);
        }
    }
}

TEST_CASE("sigma action on primes") {
    nf::Element g31 = nf::Element::from_int_coords({1, 2, 0, -4, 0, 1, 0, 0});
    auto fact = nf::relabel_from_generator(nf::factor_rational_prime(31), g31);

    SUBCASE("the generator pins the base point, with the expected local roots") {
        // local root of p31^i: the value beta reduces to mod that prime
        const std::array<std::uint64_t, 8> roots{27, 20, 22, 10, 4, 11, 9, 21};
        for (int i = 1; i <= 8; ++i) {
            const auto& f = fact.by_orbit(i);
            std::uint64_t root = (31 - f.local_factor.coeff(0)) % 31;
            CHECK(root == roots[static_cast<std::size_t>(i - 1)]);
        }
    }
    SUBCASE("sigma advances the orbit index by one, cyclically") {
        for (int i = 1; i <= 8; ++i) {
            const auto& next = nf::sigma_on_prime(fact, fact.by_orbit(i));
            CHECK(next.orbit_index == i % 8 + 1);
        }
        // sigma^8 is the identity on the factor
        const nf::PrimeIdealFactor* cur = &fact.by_orbit(1);
        for (int i = 0; i < 8; ++i) cur = &nf::sigma_on_prime(fact, *cur);
        CHECK(cur->orbit_index == 1);
    }
    SUBCASE("the sigma-orbit of p97^1 visits all 8 factors exactly once") {
        nf::Element g97 = nf::Element::from_int_coords({1, -12, -4, 19, 1, -8, 0, 1});
        auto f97 = nf::relabel_from_generator(nf::factor_rational_prime(97), g97);
        std::set<int> seen;
        const nf::PrimeIdealFactor* cur = &f97.by_orbit(1);
        for (int i = 0; i < 8; ++i) {
            seen.insert(cur->orbit_index);
            cur = &nf::sigma_on_prime(f97, *cur);
        }
        CHECK(seen.size() == 8);
        // frozen local roots of the orbit traversal
        const std::array<std::uint64_t, 8> roots{85, 17, 32, 54, 12, 80, 65, 43};
        for (int i = 1; i <= 8; ++i)
            CHECK((97 - f97.by_orbit(i).local_factor.coeff(0)) % 97 ==
                  roots[static_cast<std::size_t>(i - 1)]);
    }
    SUBCASE("a generator lying in no factor is rejected") {
        CHECK_THROWS_AS(nf::orbit_containing_generator(fact, nf::Element::integer(1)),
                        input_error);
    }
}

TEST_CASE("field discriminant") {
    mpz_class expected;
    mpz_ui_pow_ui(expected.get_mpz_t(), 2, 31);
    CHECK(nf::field_discriminant() == expected);

    // independent route: Euclidean-PRS resultant of (m, m') over Q
    oracles::QPoly m = oracles::min_poly_q(), dm(8);
    for (int i = 1; i <= 8; ++i)
        dm[static_cast<std::size_t>(i - 1)] = mpq_class(i) * nf::kMinPoly[static_cast<std::size_t>(i)];
    CHECK(oracles::resultant(m, dm) == mpq_class(expected));

    // conductor-discriminant bookkeeping: character conductor exponents sum to 31
    int sum = 0;
    for (int e : oracles::kConductorExponents) sum += e;
    CHECK(sum == 31);
    CHECK(mpz_scan1(nf::field_discriminant().get_mpz_t(), 0) == 31); // v_2(disc) = 31
}
