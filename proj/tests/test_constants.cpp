#include <doctest.h>

#include <cmath>
#include <numbers>

#include "morrey/constants.hpp"
#include "morrey/manifolds.hpp"
#include "morrey/profiles.hpp"
#include "morrey/variational.hpp"

using namespace morrey;

TEST_SUITE("constants") {

TEST_CASE("unit ball volumes") {
    CHECK(unit_ball_volume(2) == doctest::Approx(std::numbers::pi).epsilon(1e-14));
    CHECK(unit_ball_volume(3) == doctest::Approx(4.0 * std::numbers::pi / 3.0).epsilon(1e-14));
    CHECK(unit_ball_volume(1) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK_THROWS_AS(unit_ball_volume(0), std::domain_error);
}

TEST_CASE("exponent bundles") {
    CHECK(make_exponents(2, 4.0).eta == doctest::Approx(0.8).epsilon(1e-15));
    CHECK(make_exponents(2, 3.0).eta == doctest::Approx(6.0 / 7.0).epsilon(1e-15));
    CHECK(make_exponents(3, 4.0).eta == doctest::Approx(12.0 / 13.0).epsilon(1e-15));
    CHECK(make_exponents(2, 4.0).p_conj == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
    CHECK_THROWS_AS(make_exponents(2, 2.0), std::domain_error);
    CHECK_THROWS_AS(make_exponents(2, 1.5), std::domain_error);
    CHECK_THROWS_AS(make_exponents(1, 3.0), std::domain_error);
}

TEST_CASE("eta monotone in n, limit n/(n+1) for large p") {
    for (int n = 2; n < 9; ++n) {
        CHECK(make_exponents(n + 1, 10.0).eta > make_exponents(n, 10.0).eta);
    }
    for (int n : {2, 3, 5}) {
        const double e = make_exponents(n, 1e6).eta;
        CHECK(std::fabs(e - static_cast<double>(n) / (n + 1)) < 1e-5);
    }
}

TEST_CASE("c1 closed values") {
    // independently computed from n^{-1/p} omega^{-1/n} ((p-1)/(p-n))^{1/p'}
    CHECK(sharp_c1(make_exponents(2, 3.0)) ==
          doctest::Approx(0.71083433244324035).epsilon(1e-13));
    CHECK(sharp_c1(make_exponents(2, 4.0)) ==
          doctest::Approx(0.64303706857874376).epsilon(1e-13));
    CHECK(sharp_c1(make_exponents(3, 4.0)) ==
          doctest::Approx(1.0744785687380551).epsilon(1e-13));
    CHECK(sharp_c1(make_exponents(3, 5.0)) ==
          doctest::Approx(0.86703549236752497).epsilon(1e-13));
    CHECK(sharp_c1(make_exponents(4, 6.0)) ==
          doctest::Approx(1.1427623002775742).epsilon(1e-13));

    const double direct = std::pow(2.0, -0.25) * std::pow(std::numbers::pi, -0.5) *
                          std::pow(1.5, 0.75);
    CHECK(sharp_c1(make_exponents(2, 4.0)) == doctest::Approx(direct).epsilon(1e-15));
}

TEST_CASE("c1 equals the inverse quotient of the power extremal") {
    const WarpedModel m = make_euclidean(2);
    for (double p : {4.0, 100.0}) {
        const Exponents e = make_exponents(2, p);
        const RadialProfile u = make_power_extremal(e, 1.0, m);
        const double q1 = quotient(u, m, e, QuotientKind::Q1);
        CHECK(sharp_c1(e) == doctest::Approx(1.0 / q1).epsilon(1e-8));
    }
}

TEST_CASE("c1 diverges as p approaches n") {
    // c1 ~ (p-n)^{-1/p'} with 1/p' -> (n-1)/n, so the blow-up is a fractional
    // power of 1/(p-n); p-n = 1e-7 is comfortably past the 1e3 mark.
    for (int n : {2, 3}) {
        const double far = sharp_c1(make_exponents(n, 2.0 * n));
        const double c3 = sharp_c1(make_exponents(n, n + 1e-3));
        const double c5 = sharp_c1(make_exponents(n, n + 1e-5));
        const double c7 = sharp_c1(make_exponents(n, n + 1e-7));
        CHECK(c3 > far);
        CHECK(c5 > c3);
        CHECK(c7 > c5);
        CHECK(c7 > 1e3 * far);
    }
}

TEST_CASE("c2 closed form matches the operational quotient") {
    for (const auto& [n, p] : std::vector<std::pair<int, double>>{{2, 4.0}, {3, 5.0}}) {
        const Exponents e = make_exponents(n, p);
        const double closed = sharp_c2_closed(e);
        const double op = sharp_c2_operational(e, 1.0);
        CHECK(std::fabs(closed / op - 1.0) < 1e-6);
        CHECK_NOTHROW(sharp_c2(e));
    }
    // frozen cross-check values
    CHECK(sharp_c2_closed(make_exponents(2, 4.0)) ==
          doctest::Approx(0.94066603838457796).epsilon(1e-12));
    CHECK(sharp_c2_closed(make_exponents(3, 5.0)) ==
          doctest::Approx(1.1170563781899276).epsilon(1e-12));
}

TEST_CASE("operational c2 is lambda independent") {
    const Exponents e = make_exponents(2, 4.0);
    QuadratureSpec spec;
    spec.rel_tol = 1e-11;
    const double at_half = sharp_c2_operational(e, 0.5, spec);
    const double at_two = sharp_c2_operational(e, 2.0, spec);
    CHECK(std::fabs(at_half - at_two) < 1e-8 * at_two);
}

TEST_CASE("inverse c1 equals the Euclidean fixed-support minimum") {
    for (const auto& [n, p] : std::vector<std::pair<int, double>>{{2, 4.0}, {3, 5.0}}) {
        const Exponents e = make_exponents(n, p);
        const WarpedModel m = make_euclidean(n);
        for (double lambda : {0.5, 2.0}) {
            const RadialMinimum mn = exact_radial_minimum(m, e, lambda);
            CHECK(std::fabs(mn.q1_min - 1.0 / sharp_c1(e)) < 1e-7);
        }
    }
}

TEST_CASE("sphere area consistency with omega") {
    for (int n : {2, 3, 4}) {
        const WarpedModel m = make_euclidean(n);
        CHECK(sphere_area(m, 1.0) == n * unit_ball_volume(n));  // exact by construction
    }
}

TEST_CASE("sharp constants bundle") {
    const SharpConstants sc = sharp_constants(make_exponents(2, 4.0));
    CHECK(sc.c1 == doctest::Approx(0.64303706857874376).epsilon(1e-13));
    CHECK(sc.c2 == doctest::Approx(0.94066603838457796).epsilon(1e-10));
    CHECK(sc.omega_n == doctest::Approx(std::numbers::pi).epsilon(1e-14));
}

}  // TEST_SUITE
