#include <cmath>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "doctest.h"
#include "qnm/barrier.hpp"
#include "qnm/chart.hpp"
#include "qnm/match.hpp"

using namespace qnm;

TEST_CASE("closed-form tortoise matches adaptive quadrature of 1/F") {
    BlackHoleParams p{1.0, 0.0, 0.03, Model::dSRN};
    ChartMap chart(p);
    const double rm = chart.horizons().r_minus(), rp = chart.horizons().r_plus();
    auto integrand = [&](double r) { return 1.0 / evaluate_lapse(p, r); };
    for (double t : {0.15, 0.35, 0.5, 0.75, 0.9}) {
        const double r = rm + t * (rp - rm);
        const double quad = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
            integrand, chart.barrier_radius(), r, 12, 1e-14);
        CHECK(std::abs(chart.tortoise_of_radius(r) - quad) <= 1e-10 * (1.0 + std::abs(quad)));
    }
    CHECK(chart.tortoise_of_radius(chart.barrier_radius()) == doctest::Approx(0.0));
}

TEST_CASE("near-horizon divergence follows the dominant log term") {
    BlackHoleParams p{1.0, 0.3, 0.04, Model::dSRN};
    ChartMap chart(p);
    const double rm = chart.horizons().r_minus();
    const double km = chart.horizons().kappa_minus();
    const double x1 = chart.tortoise_of_radius(rm + 1e-6);
    const double x2 = chart.tortoise_of_radius(rm + 1e-8);
    CHECK(x2 - x1 == doctest::Approx(std::log(1e-2) / (2.0 * km)).epsilon(1e-6));
}

TEST_CASE("round trip r -> x -> r is exact in the radial variable") {
    for (auto pars : {BlackHoleParams{1.0, 0.3, 0.05, Model::dSRN},
                      BlackHoleParams{1.0, 0.0, 0.02, Model::dSS}}) {
        ChartMap chart(pars);
        const double rm = chart.horizons().r_minus(), rp = chart.horizons().r_plus();
        for (double t = 1e-6; t < 1.0; t += 0.02) {
            const double r = rm + t * (rp - rm);
            const double back = chart.radius_of_tortoise(chart.tortoise_of_radius(r));
            CHECK(std::abs(back - r) <= 1e-10 * r);
        }
    }
}

TEST_CASE("round trip x -> r -> x away from the horizon-dominated tails") {
    // for |x| large the map compresses toward r_+-, where double precision
    // cannot carry more than ~e^{-2 kappa |x|} / eps of the inverse; the
    // 1e-10 contract is honored on the well-conditioned range
    BlackHoleParams p{1.0, 0.3, 0.05, Model::dSRN};
    ChartMap chart(p);
    for (double x = -30.0; x <= 30.0; x += 0.73) {
        const double back = chart.tortoise_of_radius(chart.radius_of_tortoise(x));
        CHECK(std::abs(back - x) <= 1e-10 * (1.0 + std::abs(x)));
    }
}

TEST_CASE("alpha decays at the surface-gravity rates with the advertised amplitudes") {
    BlackHoleParams p{1.0, 0.3, 0.05, Model::dSRN};
    ChartMap chart(p);
    const double km = chart.horizons().kappa_minus();
    const double kp = chart.horizons().kappa_plus();

    std::vector<double> xs, am, ap, v0m, v0p;
    for (double t = 40.0; t <= 60.0; t += 2.0) {
        xs.push_back(t);
        am.push_back(chart.alpha(-t));
        ap.push_back(chart.alpha(t));
        v0m.push_back(chart.potential(Grade::dsrn_semiclassical, 0.0, -t).value.real());
        v0p.push_back(chart.potential(Grade::dsrn_semiclassical, 0.0, t).value.real());
    }
    auto decay = [&](const std::vector<double>& ys) {
        double s = 0.0;
        for (std::size_t i = 1; i < xs.size(); ++i)
            s += (std::log(ys[i]) - std::log(ys[i - 1])) / (xs[i] - xs[i - 1]);
        return s / (xs.size() - 1.0);
    };
    // alpha ~ e^{kappa x}; the potential alpha^2 decays at 2 kappa
    CHECK(std::abs(decay(am) + km) <= 0.05 * km);
    CHECK(std::abs(decay(ap) - kp) <= 0.05 * (-kp));
    CHECK(std::abs(decay(v0m) + 2.0 * km) <= 0.05 * 2.0 * km);
    CHECK(std::abs(decay(v0p) - 2.0 * kp) <= 0.05 * 2.0 * (-kp));

    // asymptotic amplitude constants
    CHECK(chart.alpha(-55.0) ==
          doctest::Approx(chart.alpha_amplitude_minus() * std::exp(km * -55.0)).epsilon(1e-4));
    CHECK(chart.alpha(55.0) ==
          doctest::Approx(chart.alpha_amplitude_plus() * std::exp(kp * 55.0)).epsilon(1e-4));
}

TEST_CASE("alpha_prime agrees with finite differences") {
    BlackHoleParams p{1.0, 0.3, 0.03, Model::dSRN};
    ChartMap chart(p);
    const double d = 1e-5;
    for (double x : {-8.0, -1.0, 0.0, 2.5, 10.0}) {
        const double fd = (chart.alpha(x + d) - chart.alpha(x - d)) / (2.0 * d);
        CHECK(chart.alpha_prime(x) == doctest::Approx(fd).epsilon(1e-7));
    }
}

TEST_CASE("contour continuation restricts to the real map and respects the cone") {
    BlackHoleParams p{1.0, 0.3, 0.04, Model::dSRN};
    ChartMap chart(p);
    const Complex r_real = chart.radius_on_contour(Complex(1.3, 0.0));
    CHECK(r_real.imag() == 0.0);
    CHECK(r_real.real() == doctest::Approx(chart.radius_of_tortoise(1.3)).epsilon(1e-12));

    // small vertical step stays close to the real value
    const Complex r_up = chart.radius_on_contour(Complex(1.3, 1e-4));
    CHECK(std::abs(r_up - r_real) < 1e-3);
    CHECK_THROWS_AS(chart.radius_on_contour(Complex(0.5, 40.0)), std::domain_error);
}

TEST_CASE("ray potential is branch-continuous and matches the real-line values at theta=0") {
    BlackHoleParams p{1.0, 0.0, 0.02, Model::dSS};
    ChartMap chart(p);
    std::vector<double> ys;
    for (double y = -12.0; y <= 12.0; y += 1.5) ys.push_back(y);

    const auto flat = chart.potential_on_ray(Grade::dss_semiclassical, 0.1, 0.0, ys);
    for (std::size_t i = 0; i < ys.size(); ++i) {
        const auto s = chart.potential(Grade::dss_semiclassical, 0.1, ys[i]);
        CHECK(std::abs(flat[i] - s.value) <= 1e-9 * (1.0 + std::abs(s.value)));
    }

    // no branch jumps along a rotated ray: neighbouring samples stay close
    const auto rot = chart.potential_on_ray(Grade::dss_semiclassical, 0.1, 0.4, ys);
    for (std::size_t i = 1; i < ys.size(); ++i)
        CHECK(std::abs(rot[i] - rot[i - 1]) < 0.5 * (1.0 + std::abs(rot[i])));
}

TEST_CASE("graded potentials compose from alpha as documented") {
    BlackHoleParams p{1.0, 0.3, 0.03, Model::dSRN};
    ChartMap chart(p);
    const double x = 1.7, h = 0.2;
    const double al = chart.alpha(x), alp = chart.alpha_prime(x);
    CHECK(chart.potential(Grade::alpha, 0.0, x).value.real() == doctest::Approx(al));
    CHECK(chart.potential(Grade::alpha_prime, 0.0, x).value.real() == doctest::Approx(alp));
    CHECK(chart.potential(Grade::dirac_q, h, x).value.real() == doctest::Approx(-al / h));
    CHECK(chart.potential(Grade::schrodinger_plus, h, x).value.real() ==
          doctest::Approx(al * al / (h * h) - alp / h));
    CHECK(chart.potential(Grade::schrodinger_minus, h, x).value.real() ==
          doctest::Approx(al * al / (h * h) + alp / h));
    CHECK(chart.potential(Grade::dsrn_semiclassical, h, x).value.real() ==
          doctest::Approx(al * al + h * alp));
    CHECK_THROWS_AS(chart.potential(Grade::dirac_q, 0.0, x), std::invalid_argument);
    CHECK_THROWS_AS(chart.potential(Grade::dss_semiclassical, h, x), std::invalid_argument);
}

TEST_CASE("chart construction validates the cone angle") {
    BlackHoleParams p{1.0, 0.0, 0.02, Model::dSS};
    CHECK_THROWS_AS(ChartMap(p, 1.2), std::invalid_argument);
    CHECK_THROWS_AS(ChartMap(p, 0.0), std::invalid_argument);
}
