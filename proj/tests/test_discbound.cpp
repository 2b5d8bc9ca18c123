#include <doctest.h>

#include <cmath>

#include "ram2cert/discbound.hpp"

using namespace ram2;

TEST_CASE("local conductor exponent 16 (2^m - 1)") {
    CHECK(disc::local_conductor_exponent(0) == 0);
    CHECK(disc::local_conductor_exponent(1) == 16);
    CHECK(disc::local_conductor_exponent(4) == 240);
    CHECK_THROWS_AS(disc::local_conductor_exponent(-1), input_error);
}

TEST_CASE("relative discriminant exponent: both routes agree exactly") {
    SUBCASE("m = 0 is unramified") {
        auto r = disc::relative_disc_exponent(0, 2, 16);
        CHECK(r.exponent == 0);
    }
    SUBCASE("toy degree [K:Q] = 16, m = 1") {
        auto r = disc::relative_disc_exponent(1, 2, 16);
        CHECK(r.exponent == 16);
        CHECK(r.tower_divisibility);
    }
    SUBCASE("true degree, m = 1..19") {
        const mpz_class KF = mpz_class(16776960) * 16776960;
        const mpz_class KQ = 8 * KF;
        mpq_class prev = -1;
        for (long m = 1; m <= 19; ++m) {
            auto r = disc::relative_disc_exponent(m, KF, KQ);
            // the identity between the two expressions is enforced inside;
            // also check the closed form directly
            mpz_class e;
            mpz_ui_pow_ui(e.get_mpz_t(), 2, static_cast<unsigned long>(m));
            mpq_class expected = mpq_class(2 * KQ * (e - 1)) / mpq_class(e);
            expected.canonicalize();
            CHECK(r.exponent == expected);
            CHECK(r.exponent > prev);
            prev = r.exponent;
            CHECK(r.tower_divisibility == (m <= 16)); // v_2([K:F]) = 16
        }
    }
    SUBCASE("degree mismatch is rejected") {
        CHECK_THROWS_AS(disc::relative_disc_exponent(1, 2, 17), input_error);
    }
}

TEST_CASE("root-discriminant upper bound exponents") {
    CHECK_THROWS_AS(disc::root_disc_upper_bound(0), input_error);
    CHECK(disc::root_disc_upper_bound(0, true).exponent == mpq_class(31, 8));
    CHECK(disc::root_disc_upper_bound(1).exponent == mpq_class(39, 8));
    CHECK(disc::root_disc_upper_bound(3).exponent == mpq_class(45, 8));
    CHECK(disc::root_disc_upper_bound(3).value() == doctest::Approx(49.3507464).epsilon(1e-6));

    SUBCASE("strictly increasing in m, bounded by the supremum 47/8") {
        mpq_class prev = 0;
        const mpq_class sup = disc::root_disc_upper_bound_sup().exponent;
        CHECK(sup == mpq_class(47, 8));
        for (long m = 1; m <= 64; ++m) {
            mpq_class e = disc::root_disc_upper_bound(m).exponent;
            CHECK(e > prev);
            CHECK(e < sup);
            prev = e;
        }
    }
    SUBCASE("numeric rendering at 53-bit precision") {
        CHECK(std::fabs(disc::delta_F().value() - 14.67206469127474) < 1e-6 * 14.672);
        CHECK(std::fabs(disc::root_disc_upper_bound_sup().value() - 58.68825876509896) <
              1e-6 * 58.688);
        CHECK(disc::delta_F().render(6).find("2^(31/8)") == 0);
        CHECK_THROWS_AS(disc::delta_F().render(0), input_error);
    }
}

TEST_CASE("odlyzko lower bound: soundness anchors") {
    SUBCASE("signature validation") {
        CHECK_THROWS_AS(disc::odlyzko_lower_bound(0, 0, 0), input_error);
        CHECK_THROWS_AS(disc::odlyzko_lower_bound(3, 2, 1), input_error);
    }
    SUBCASE("Q: any sound bound stays at or below 1") {
        auto b = disc::odlyzko_lower_bound(1, 1, 0);
        CHECK(b.value <= 1.0);
        CHECK(b.value > 0.95); // near-sharp for this test-function family
    }
    SUBCASE("Q(sqrt 2): delta = 8^(1/2) = 2.828...") {
        auto b = disc::odlyzko_lower_bound(2, 2, 0);
        CHECK(b.value <= 2.8285);
        CHECK(b.value > 2.0);
    }
    SUBCASE("imaginary quadratic: delta(Q(sqrt -3)) = 3^(1/2) = 1.732...") {
        auto b = disc::odlyzko_lower_bound(2, 0, 1);
        CHECK(b.value <= 1.7321);
        CHECK(b.value > 1.70);
    }
    SUBCASE("the fixed real octic: delta_F = 14.672...") {
        auto b = disc::odlyzko_lower_bound(8, 8, 0);
        CHECK(b.value <= 14.672);
        CHECK(b.value > 8.0);
    }
}

TEST_CASE("odlyzko lower bound: asymptotics and monotonicity") {
    const double complex_limit = 22.3816160954777; // 4 pi e^gamma
    const double real_limit = 60.8395403238834;    // 4 pi e^(gamma+1)

    SUBCASE("totally complex bounds increase toward 4 pi e^gamma from below") {
        double prev = 0;
        for (long n : {1000L, 1000000L, 1000000000L, 1000000000000L}) {
            auto b = disc::odlyzko_lower_bound(n, 0, mpz_class(n) / 2);
            CHECK(b.value < complex_limit);
            CHECK(b.value >= prev - 1e-9);
            prev = b.value;
        }
        CHECK(prev > 22.38); // essentially at the asymptote by n = 10^12
    }
    SUBCASE("totally real bounds increase toward 4 pi e^(gamma+1) from below") {
        double prev = 0;
        for (long n : {1000L, 1000000L, 1000000000L, 1000000000000L}) {
            auto b = disc::odlyzko_lower_bound(n, n, 0);
            CHECK(b.value < real_limit);
            CHECK(b.value >= prev - 1e-9);
            prev = b.value;
        }
        CHECK(prev > 60.8);
    }
}

TEST_CASE("totally complex verdict") {
    const mpz_class paper_degree("2251731094732800");

    SUBCASE("at the compositum degree the verdict is totally complex, margin > 2") {
        auto v = disc::totally_complex_verdict(disc::root_disc_upper_bound_sup(), paper_degree);
        CHECK(v.verdict == disc::Verdict::TotallyComplex);
        CHECK(v.odlyzko_totally_real >= 60.83);
        CHECK(v.upper_bound == doctest::Approx(58.68826).epsilon(1e-5));
        CHECK(v.margin > 2.0);
        CHECK(v.note.find("55.39") != std::string::npos);
    }
    SUBCASE("toy case: the octic bound cannot rule out totally real (F itself is real)") {
        auto v = disc::totally_complex_verdict(disc::delta_F(), 8);
        CHECK(v.verdict == disc::Verdict::Inconclusive);
    }
    SUBCASE("an upper bound above the Odlyzko value is inconclusive") {
        disc::DyadicExponent big{mpq_class(13, 2)}; // 2^6.5 = 90.5
        auto v = disc::totally_complex_verdict(big, paper_degree);
        CHECK(v.verdict == disc::Verdict::Inconclusive);
    }
}
