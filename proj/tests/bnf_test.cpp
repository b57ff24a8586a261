#include <cmath>
#include <random>

#include <boost/multiprecision/cpp_int.hpp>

#include "doctest.h"
#include "qnm/barrier.hpp"
#include "qnm/bnf.hpp"

using namespace qnm;
using Rational = boost::multiprecision::cpp_rational;

namespace {

// perturbed harmonic symbol with independent coefficients, the raw input
// of the reduction: Omega + a3 x^3 + a4 x^4 + h (c1 x + c2 x^2)
GradedSymbol<double> synthetic(double a3, double a4, double c1, double c2, int maxg = 8) {
    GradedSymbol<double> s(maxg);
    s.add({0, 2, 0}, 0.5);
    s.add({2, 0, 0}, -0.5);
    s.add({3, 0, 0}, a3);
    s.add({4, 0, 0}, a4);
    s.add({1, 0, 1}, c1);
    s.add({2, 0, 1}, c2);
    return s;
}

}  // namespace

TEST_CASE("reduction reproduces the closed forms over 10 random draws") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> U(-0.5, 0.5);
    for (int draw = 0; draw < 10; ++draw) {
        const double a3 = U(rng), a4 = U(rng), c1 = U(rng), c2 = U(rng);
        const auto table = reduce_symbol(synthetic(a3, a4, c1, c2));

        CHECK(table.at({0, 1}) == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(std::abs(table.at({0, 2}) - b02_closed(a3, a4)) <= 1e-12);
        // h-linear diagonal entry (the Omega-linear one) carries the
        // -3 c1 a3 - c2 closed form
        CHECK(std::abs(table.at({1, 1}) - b12_closed(a3, c1, c2)) <= 1e-12);
        // h^2 constant from the full exponential conjugation; the
        // single-commutator shortcut a3^2 - c1^2/2 is NOT what the star
        // conjugation produces (see b20 acceptance note)
        CHECK(std::abs(table.at({2, 0}) - (0.5 * a3 * a3 + 0.5 * c1 * c1)) <= 1e-12);
    }
}

TEST_CASE("exact rational reduction: closed forms hold identically") {
    const Rational a3(1, 5), a4(-3, 7), c1(2, 9), c2(1, 4);
    GradedSymbol<Rational> s(8);
    s.add({0, 2, 0}, Rational(1, 2));
    s.add({2, 0, 0}, Rational(-1, 2));
    s.add({3, 0, 0}, a3);
    s.add({4, 0, 0}, a4);
    s.add({1, 0, 1}, c1);
    s.add({2, 0, 1}, c2);
    const auto table = reduce_symbol(s);

    CHECK(table.at({0, 1}) == Rational(1));
    CHECK(table.at({0, 2}) == Rational(15, 4) * a3 * a3 + Rational(3, 2) * a4);
    CHECK(table.at({1, 1}) == Rational(-3) * c1 * a3 - c2);
    CHECK(table.at({2, 0}) == a3 * a3 / 2 + c1 * c1 / 2);
}

TEST_CASE("substitution identity relating the barrier derivatives to b02") {
    BlackHoleParams p{1.0, 0.3, 0.03, Model::dSRN};
    const auto e = taylor_expand(p, 8);
    const auto n = normalize_hamiltonian(e);
    const double w = e.omega;
    const double v3 = e.taylor_h0.derivative_at_origin(3);
    const double v4 = e.taylor_h0.derivative_at_origin(4);

    // a3 = V0'''/(12 w^{5/2}), a4 = V0''''/(48 w^3)
    CHECK(n.a.at(3) == doctest::Approx(v3 / (12.0 * std::pow(w, 2.5))).epsilon(1e-13));
    CHECK(n.a.at(4) == doctest::Approx(v4 / (48.0 * w * w * w)).epsilon(1e-13));
    // c1 = -w^{1/2}/(2 z0): h-linear grade is alpha', whose slope at the
    // top is -z0 omega^2 / ... fixed by the barrier geometry
    const double lhs = 15.0 / (4.0 * 144.0) * v3 * v3 / std::pow(w, 5) + v4 / (32.0 * w * w * w);
    CHECK(lhs == doctest::Approx(b02_closed(n.a.at(3), n.a.at(4))).epsilon(1e-13));
}

TEST_CASE("physical dSRN reduction: supersymmetric cancellation of the h-linear diagonal") {
    BlackHoleParams p{1.0, 0.3, 0.05, Model::dSRN};
    const auto bnf = reduce_to_normal_form(taylor_expand(p, 8));
    const auto n = normalize_hamiltonian(taylor_expand(p, 8));

    // c1 from the normalization and its closed form
    CHECK(n.c.at(1) == doctest::Approx(-std::sqrt(bnf.omega) / (2.0 * bnf.z0)).epsilon(1e-10));
    // q = -alpha/h relates the h-linear terms to the cubic ones; the
    // Omega-linear h coefficient cancels identically
    CHECK(std::abs(bnf.b(1, 1)) <= 1e-12);
    CHECK(std::abs(bnf.b(1, 2)) <= 1e-12);
    CHECK(std::abs(b12_closed(n.a.at(3), n.c.at(1), n.c.at(2))) <= 1e-12);
}

TEST_CASE("golden dSRN table at M=1, Q=0.3, Lambda=0.05") {
    const auto bnf = reduce_to_normal_form(taylor_expand({1.0, 0.3, 0.05, Model::dSRN}, 8));
    CHECK(bnf.z0 == doctest::Approx(0.146724615842).epsilon(1e-10));
    CHECK(bnf.omega == doctest::Approx(0.021302582969).epsilon(1e-10));
    CHECK(bnf.e0 == doctest::Approx(0.505293487773).epsilon(1e-10));
    CHECK(bnf.b(0, 1) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(bnf.b(0, 2) == doctest::Approx(0.571252061937).epsilon(1e-10));
    CHECK(bnf.b(0, 3) == doctest::Approx(0.0569393897334).epsilon(1e-9));
    CHECK(bnf.b(2, 0) == doctest::Approx(0.133689198922).epsilon(1e-10));
    CHECK(bnf.b(2, 1) == doctest::Approx(0.0518841984613).epsilon(1e-9));
    CHECK(effective_h2_constant(bnf) ==
          doctest::Approx(bnf.b(2, 0) - 0.25 * bnf.b(0, 2)).epsilon(1e-14));
}

TEST_CASE("golden dSS table at M=1, Lambda=0.02") {
    BlackHoleParams p{1.0, 0.0, 0.02, Model::dSS};
    const auto e = taylor_expand(p, 8);
    const auto n = normalize_hamiltonian(e);
    const auto bnf = reduce_to_normal_form(e);

    CHECK(bnf.z0 == doctest::Approx(0.174270968237).epsilon(1e-10));
    CHECK(bnf.omega == doctest::Approx(0.0303703703704).epsilon(1e-10));
    CHECK(bnf.e0 == doctest::Approx(0.5).epsilon(1e-12));  // z0^2 = omega when Q = 0
    CHECK(bnf.b(0, 2) == doctest::Approx(0.613888888889).epsilon(1e-10));
    CHECK(bnf.b(2, 0) == doctest::Approx(0.288518518519).epsilon(1e-10));
    CHECK(effective_h2_constant(bnf) == doctest::Approx(0.135046296296).epsilon(1e-9));

    // d0 = 9 M^2 V0^2 / omega feeds b20 = a3^2/2 + d0
    const double d0 = 9.0 * p.mass * p.mass * std::pow(bnf.z0, 4) / bnf.omega;
    CHECK(n.d.at(0) == doctest::Approx(d0).epsilon(1e-12));
    CHECK(bnf.b(2, 0) == doctest::Approx(0.5 * n.a.at(3) * n.a.at(3) + d0).epsilon(1e-11));

    // uncharged input has no h-linear grade: odd h powers vanish throughout
    for (const auto& [mj, val] : bnf.table)
        if (mj.first % 2 == 1) CHECK(std::abs(val) <= 1e-12);
}

TEST_CASE("the two published b12 candidates disagree with each other and the recursion") {
    const auto bnf = reduce_to_normal_form(taylor_expand({1.0, 0.3, 0.05, Model::dSRN}, 8));
    const double ca = b12_candidate_a(bnf.z0, bnf.omega, bnf.v3);
    const double cb = b12_candidate_b(bnf.z0, bnf.omega, bnf.v3);
    CHECK(std::abs(ca - cb) > 1e-3);
    CHECK(std::abs(ca - bnf.b(1, 1)) > 1e-3);
    CHECK(std::abs(cb - bnf.b(1, 1)) > 1e-3);
}

TEST_CASE("energy eigenvalues: oscillator order and the spectral substitution") {
    const auto bnf = reduce_to_normal_form(taylor_expand({1.0, 0.0, 0.02, Model::dSS}, 8));
    const double h = 0.1;
    for (int k = 0; k <= 3; ++k) {
        const Complex e0 = energy_eigenvalue(bnf, k, h, 0);
        const Complex exact(bnf.z0 * bnf.z0, -h * bnf.omega * (2.0 * k + 1.0));
        CHECK(std::abs(e0 - exact) <= 1e-15);
        CHECK(energy_eigenvalue(bnf, k, h, 1) == e0);  // orders 0 and 1 coincide
    }
    // order 2 adds the three m+j = 2 entries with the Weyl-ordered
    // substitution q2 = iota^2 - h^2/4
    const int k = 1;
    const Complex iota(0.0, -0.5 * 3.0 * h);
    Complex manual = energy_eigenvalue(bnf, k, h, 0);
    manual += 2.0 * bnf.omega * bnf.b(0, 2) * (iota * iota - 0.25 * h * h);
    manual += 2.0 * bnf.omega * bnf.b(2, 0) * h * h;
    CHECK(std::abs(energy_eigenvalue(bnf, k, h, 2) - manual) <= 1e-15);

    CHECK_THROWS_AS(energy_eigenvalue(bnf, -1, h, 2), std::invalid_argument);
    CHECK_THROWS_AS(energy_eigenvalue(bnf, 0, h, -1), std::invalid_argument);
}
