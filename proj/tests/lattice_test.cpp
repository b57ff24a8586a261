#include <cmath>

#include "doctest.h"
#include "qnm/barrier.hpp"
#include "qnm/bnf.hpp"
#include "qnm/lattice.hpp"

using namespace qnm;

namespace {

BnfCoefficients dsrn_bnf(double M, double Q, double L) {
    return reduce_to_normal_form(taylor_expand({M, Q, L, Model::dSRN}, 8));
}

BnfCoefficients dss_bnf(double M, double L) {
    return reduce_to_normal_form(taylor_expand({M, 0.0, L, Model::dSS}, 8));
}

const Pseudopole* find_pole(const std::vector<Pseudopole>& v, int k, double l,
                            const std::string& candidate = "engine") {
    for (const auto& p : v)
        if (p.k == k && p.l == l && p.candidate == candidate) return &p;
    return nullptr;
}

}  // namespace

TEST_CASE("uncharged leading row: mu = omega^{1/2}((l+1/2) - i(k+1/2))") {
    const auto bnf = dss_bnf(1.0, 0.0);
    const double s = std::sqrt(bnf.omega);  // = z0 = 1/sqrt(27)
    CHECK(s == doctest::Approx(1.0 / std::sqrt(27.0)).epsilon(1e-12));

    LatticeRequest req;
    req.kmax = 2;
    req.lmin = 1.0;
    req.lmax = 3.0;
    req.order = 0;
    const auto poles = dss_pseudopoles(bnf, req, DssParam::l_half);
    for (const auto& p : poles) {
        const Complex expected = s * Complex(p.l + 0.5, -(p.k + 0.5));
        CHECK(std::abs(p.value - expected) <= 1e-12);
        CHECK(p.multiplicity == 2 * static_cast<int>(p.l) + 1);
    }
    const auto* p10 = find_pole(poles, 0, 1.0);
    REQUIRE(p10);
    CHECK(p10->value.real() == doctest::Approx(1.5 / std::sqrt(27.0)).epsilon(1e-12));
    CHECK(p10->value.imag() == doctest::Approx(-0.5 / std::sqrt(27.0)).epsilon(1e-12));
}

TEST_CASE("charged leading row at Q -> 0: l = 9/2, k = 0 gives (5 - i/2)/sqrt(27)") {
    const auto bnf = dsrn_bnf(1.0, 0.0, 0.0);
    LatticeRequest req;
    req.kmax = 0;
    req.lmin = req.lmax = 4.5;
    req.order = 0;
    const auto poles = dsrn_pseudopoles(bnf, req);
    REQUIRE(poles.size() == 1);
    CHECK(poles[0].n == doctest::Approx(5.0));
    CHECK(poles[0].multiplicity == 8);  // 2l - 1
    CHECK(poles[0].value.real() == doctest::Approx(5.0 / std::sqrt(27.0)).epsilon(1e-12));
    CHECK(poles[0].value.imag() == doctest::Approx(-0.5 / std::sqrt(27.0)).epsilon(1e-12));
}

TEST_CASE("f-series closed expressions") {
    const auto bnf = dsrn_bnf(1.0, 0.3, 0.02);
    const double z0 = bnf.z0, w = bnf.omega;
    for (int k = 0; k <= 3; ++k) {
        const double s = 2.0 * k + 1.0;
        const Complex f1 = lattice_f1(bnf, k);
        CHECK(f1.real() == 0.0);
        CHECK(f1.imag() == doctest::Approx(-w * s / (2.0 * z0)).epsilon(1e-13));

        const Complex f2 = lattice_f2(bnf, k, 0.0, false);
        const double re = w * w * s * s / (8.0 * z0 * z0 * z0) -
                          w / (4.0 * z0) * bnf.b(0, 2) * s * s +
                          w / z0 * effective_h2_constant(bnf);
        const double im = -w / (2.0 * z0) * bnf.b(1, 1) * s;
        CHECK(f2.real() == doctest::Approx(re).epsilon(1e-13));
        CHECK(f2.imag() == doctest::Approx(im).epsilon(1e-13));

        // override replaces the h-linear coefficient only
        const Complex f2o = lattice_f2(bnf, k, 0.25, true);
        CHECK(f2o.real() == doctest::Approx(f2.real()).epsilon(1e-13));
        CHECK(f2o.imag() == doctest::Approx(-w / (2.0 * z0) * 0.25 * s).epsilon(1e-13));
    }
}

TEST_CASE("orders 0 and 1 coincide; order 2 adds f2/n") {
    const auto bnf = dsrn_bnf(1.0, 0.3, 0.02);
    for (int order : {0, 1, 2}) {
        LatticeRequest req;
        req.kmax = 1;
        req.lmin = req.lmax = 7.5;
        req.order = order;
        const auto poles = dsrn_pseudopoles(bnf, req);
        for (const auto& p : poles) {
            const Complex base = p.n * bnf.z0 + lattice_f1(bnf, p.k);
            if (order < 2)
                CHECK(std::abs(p.value - base) <= 1e-14);
            else
                CHECK(std::abs(p.value - base - lattice_f2(bnf, p.k, 0.0, false) / p.n) <= 1e-14);
        }
    }
}

TEST_CASE("angular-momentum validation") {
    const auto bc = dsrn_bnf(1.0, 0.3, 0.02);
    const auto bs = dss_bnf(1.0, 0.02);
    LatticeRequest req;
    req.kmax = 1;

    req.lmin = req.lmax = 3.0;  // integer: not a Dirac weight
    CHECK_THROWS_AS(dsrn_pseudopoles(bc, req), std::invalid_argument);
    req.lmin = req.lmax = 3.25;
    CHECK_THROWS_AS(dsrn_pseudopoles(bc, req), std::invalid_argument);
    req.lmin = req.lmax = 2.5;
    CHECK(dsrn_pseudopoles(bc, req).size() == 2);

    req.lmin = req.lmax = 2.5;
    CHECK_THROWS_AS(dss_pseudopoles(bs, req), std::invalid_argument);
    req.lmin = req.lmax = 0.0;
    CHECK_THROWS_AS(dss_pseudopoles(bs, req), std::invalid_argument);
    req.lmin = 2.0;
    req.lmax = 1.0;
    CHECK_THROWS_AS(dss_pseudopoles(bs, req), std::invalid_argument);

    // model mix-ups
    req.lmin = req.lmax = 2.0;
    CHECK_THROWS_AS(dsrn_pseudopoles(bs, {1, 2.5, 2.5, 2, false}), std::invalid_argument);
    CHECK_THROWS_AS(dss_pseudopoles(bc, req), std::invalid_argument);
}

TEST_CASE("the two uncharged parameterizations agree to O(n^-3)") {
    const auto bnf = dss_bnf(1.0, 0.02);
    auto gap = [&](double l) {
        LatticeRequest req;
        req.kmax = 0;
        req.lmin = req.lmax = l;
        req.order = 2;
        const auto a = dss_pseudopoles(bnf, req, DssParam::l_half);
        const auto b = dss_pseudopoles(bnf, req, DssParam::l_full);
        return std::abs(a[0].value - b[0].value);
    };
    const double g10 = gap(10.0), g20 = gap(20.0);
    CHECK(g10 < 1e-4);
    // cubic decay of the re-expansion remainder
    const double ratio = g10 / g20;
    CHECK(ratio > 4.0);
    CHECK(ratio < 16.0);
}

TEST_CASE("candidate emission alters only the imaginary f2 part") {
    const auto bnf = dsrn_bnf(1.0, 0.3, 0.02);
    LatticeRequest req;
    req.kmax = 1;
    req.lmin = req.lmax = 5.5;
    req.order = 2;
    req.emit_candidates = true;
    const auto poles = dsrn_pseudopoles(bnf, req);
    CHECK(poles.size() == 6);  // (engine, a, b) x k=0,1
    for (int k = 0; k <= 1; ++k) {
        const auto* e = find_pole(poles, k, 5.5, "engine");
        const auto* a = find_pole(poles, k, 5.5, "candidate_a");
        const auto* b = find_pole(poles, k, 5.5, "candidate_b");
        REQUIRE((e && a && b));
        CHECK(a->value.real() == doctest::Approx(e->value.real()).epsilon(1e-13));
        CHECK(b->value.real() == doctest::Approx(e->value.real()).epsilon(1e-13));
        CHECK(std::abs(a->value.imag() - e->value.imag()) > 1e-9);
        CHECK(std::abs(b->value.imag() - a->value.imag()) > 1e-9);
    }
    // order < 2 carries no f2, hence no candidate distinction to emit
    req.order = 1;
    CHECK(dsrn_pseudopoles(bnf, req).size() == 2);
}

TEST_CASE("mirror assembly and axis tagging") {
    const auto bnf = dsrn_bnf(1.0, 0.3, 0.02);
    LatticeRequest req;
    req.kmax = 1;
    req.lmin = 4.5;
    req.lmax = 5.5;
    req.order = 2;
    auto primaries = dsrn_pseudopoles(bnf, req);
    // fabricate one purely imaginary pole to exercise the coincidence tag
    Pseudopole axis = primaries[0];
    axis.value = Complex(0.0, -0.3);
    primaries.push_back(axis);

    const auto all = assemble_resonance_sets(primaries);
    REQUIRE(all.size() == 2 * primaries.size());
    for (std::size_t i = 0; i < primaries.size(); ++i) {
        const auto& p = all[i];
        const auto& m = all[primaries.size() + i];
        CHECK(p.branch == "primary");
        CHECK(m.branch == "mirror");
        CHECK(m.value == -std::conj(p.value));
        CHECK(m.k == p.k);
        CHECK(m.axis_coincident == (std::abs(p.value.real()) <= 1e-10));
    }
    CHECK(all[primaries.size() - 1].axis_coincident);
    CHECK(all.back().axis_coincident);
}

TEST_CASE("region filter is a closed-box test") {
    const auto bnf = dss_bnf(1.0, 0.02);
    LatticeRequest req;
    req.kmax = 2;
    req.lmin = 1.0;
    req.lmax = 10.0;
    req.order = 2;
    const auto poles = dss_pseudopoles(bnf, req, DssParam::l_full);
    RegionSpec box{0.5, 1.2, -0.2, 0.0};
    const auto inside = filter_region(poles, box);
    std::size_t manual = 0;
    for (const auto& p : poles)
        if (p.value.real() >= box.re_min && p.value.real() <= box.re_max &&
            p.value.imag() >= box.im_min && p.value.imag() <= box.im_max)
            ++manual;
    CHECK(inside.size() == manual);
    CHECK(!inside.empty());
    for (const auto& p : inside) {
        CHECK(p.value.real() >= box.re_min);
        CHECK(p.value.real() <= box.re_max);
    }
}
