#include <cmath>

#include "doctest.h"
#include "qnm/geometry.hpp"

using namespace qnm;

TEST_CASE("lapse evaluation and derivative agree with finite differences") {
    BlackHoleParams p{1.0, 0.4, 0.03, Model::dSRN};
    const double d = 1e-6;
    for (double r : {0.7, 1.5, 3.0, 6.0}) {
        const double fd = (evaluate_lapse(p, r + d) - evaluate_lapse(p, r - d)) / (2.0 * d);
        CHECK(lapse_derivative(p, r) == doctest::Approx(fd).epsilon(1e-8));
    }
    CHECK_THROWS_AS(evaluate_lapse(p, 0.0), std::domain_error);
}

TEST_CASE("complex lapse overload restricts to the real one") {
    BlackHoleParams p{1.0, 0.3, 0.05, Model::dSRN};
    for (double r : {0.5, 2.0, 5.0}) {
        const Complex c = evaluate_lapse(p, Complex(r, 0.0));
        CHECK(c.real() == doctest::Approx(evaluate_lapse(p, r)).epsilon(1e-14));
        CHECK(c.imag() == 0.0);
        const Complex cd = lapse_derivative(p, Complex(r, 0.0));
        CHECK(cd.real() == doctest::Approx(lapse_derivative(p, r)).epsilon(1e-14));
    }
}

TEST_CASE("golden horizon data at M=1, Q=0.3, Lambda=0.05") {
    BlackHoleParams p{1.0, 0.3, 0.05, Model::dSRN};
    const auto h = find_horizons(p);
    REQUIRE(h.roots.size() == 4);
    CHECK(h.roots[0] == doctest::Approx(-8.60352933027079).epsilon(1e-11));
    CHECK(h.roots[1] == doctest::Approx(0.0460607592622477).epsilon(1e-11));
    CHECK(h.roots[2] == doctest::Approx(2.11516925323383).epsilon(1e-11));
    CHECK(h.roots[3] == doctest::Approx(6.44229931777472).epsilon(1e-11));
    CHECK(h.kappa_minus() == doctest::Approx(0.178753179643843).epsilon(1e-11));
    CHECK(h.kappa_plus() == doctest::Approx(-0.0836137439652246).epsilon(1e-11));
    CHECK(h.r_minus() == h.roots[2]);
    CHECK(h.r_plus() == h.roots[3]);
}

TEST_CASE("root residuals, ordering, and sign pattern over a parameter grid") {
    int points = 0;
    for (double M : {0.8, 1.0, 1.3}) {
        for (double q_ratio : {0.0, 0.2, 0.5, 0.8}) {
            for (double lm2 : {0.005, 0.02, 0.06}) {
                BlackHoleParams p{M, q_ratio * M, lm2 / (M * M), Model::dSRN};
                const auto h = find_horizons(p);
                ++points;
                REQUIRE(h.roots.size() == (p.charge != 0.0 ? 4u : 3u));
                for (std::size_t j = 0; j < h.roots.size(); ++j) {
                    const double r = h.roots[j];
                    // normalized residual of r^2 F(r) = 0
                    const double res = std::abs(r * r * evaluate_lapse(p, r)) /
                                       (1.0 + r * r * r * r * p.lambda / 3.0);
                    CHECK(res <= 1e-12);
                    if (j > 0) CHECK(h.roots[j - 1] < r);
                    CHECK(h.kappas[j] == doctest::Approx(0.5 * lapse_derivative(p, r)));
                }
                CHECK(h.roots.front() < 0.0);
                CHECK(h.roots[1] > 0.0);
                CHECK(h.kappa_minus() > 0.0);
                CHECK(h.kappa_plus() < 0.0);
                // F positive on the exterior region
                CHECK(evaluate_lapse(p, 0.5 * (h.r_minus() + h.r_plus())) > 0.0);
            }
        }
    }
    CHECK(points >= 20);
}

TEST_CASE("inadmissible parameters are rejected") {
    CHECK_THROWS_AS(find_horizons({1.0, 0.3, 0.2, Model::dSRN}), InadmissibleParameters);
    CHECK_THROWS_AS(find_horizons({1.0, 0.3, 0.0, Model::dSRN}), std::invalid_argument);
    CHECK_THROWS_AS(find_horizons({1.0, 1.2, 0.02, Model::dSRN}), std::invalid_argument);
    CHECK_THROWS_AS(find_horizons({-1.0, 0.0, 0.02, Model::dSRN}), std::invalid_argument);
}

TEST_CASE("degenerate horizon detection in surface_gravities") {
    BlackHoleParams p{1.0, 0.0, 0.05, Model::dSRN};
    // F' vanishes at the lapse maximum r = (3M/Lambda)^(1/3)
    const double r_flat = std::cbrt(3.0 * p.mass / p.lambda);
    CHECK(std::abs(lapse_derivative(p, r_flat)) < 1e-10);
    CHECK_THROWS_AS(surface_gravities(p, {r_flat}), InadmissibleParameters);
}
