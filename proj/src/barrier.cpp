#include "qnm/barrier.hpp"

#include <cmath>

namespace qnm {

namespace {

// Series of F(r(x)) given the series of r(x).
Series lapse_of(const BlackHoleParams& p, const Series& r) {
    const Series rinv = r.inverse();
    Series f(r.order(), 1.0);
    f = f - 2.0 * p.mass * rinv + (p.charge * p.charge) * (rinv * rinv) -
        (p.lambda / 3.0) * (r * r);
    return f;
}

// r(x) about x0 from dr/dx = F(r), r(x0) = r0.
Series radius_series_at(const BlackHoleParams& p, double r0, std::size_t N) {
    Series r(N);
    r[0] = r0;
    for (std::size_t m = 0; m + 1 <= N; ++m) {
        const Series f = lapse_of(p, r);
        r[m + 1] = f[m] / static_cast<double>(m + 1);
    }
    return r;
}

}  // namespace

BarrierPoint locate_barrier(const BlackHoleParams& p) {
    p.validate();
    const double M = p.mass, Q = p.charge;
    const double r0 = 0.5 * (3.0 * M + std::sqrt(9.0 * M * M - 8.0 * Q * Q));
    const double z0sq = M / (r0 * r0 * r0) - Q * Q / (r0 * r0 * r0 * r0) - p.lambda / 3.0;
    if (!(z0sq > 0.0))
        throw InadmissibleParameters("barrier: V0(x0) not positive (lambda too large)");
    // chain-rule V0'' = -2 (3M/r0 - 4Q^2/r0^2) V0^2
    const double v2 = -2.0 * (3.0 * M / r0 - 4.0 * Q * Q / (r0 * r0)) * z0sq * z0sq;
    BarrierPoint b;
    b.r0 = r0;
    b.x0 = 0.0;
    b.z0 = std::sqrt(z0sq);
    b.omega = std::sqrt(0.5 * std::abs(v2));
    return b;
}

BarrierExpansion taylor_expand(const BlackHoleParams& p, std::size_t N) {
    if (N < 4 || N > 12)
        throw std::invalid_argument("taylor_expand: order must be in [4, 12]");
    const BarrierPoint bp = locate_barrier(p);

    BarrierExpansion e;
    e.params = p;
    e.r0 = bp.r0;
    e.x0 = 0.0;
    e.order = N;
    e.radius_series = radius_series_at(p, bp.r0, N + 2);

    const Series& r = e.radius_series;
    const Series v0_full = lapse_of(p, r) * (r * r).inverse();
    const Series alpha = v0_full.sqrt();
    const Series alpha_x = alpha.derivative();

    auto truncate = [&](const Series& s) {
        Series t(N);
        for (std::size_t m = 0; m <= N; ++m) t[m] = s[m];
        return t;
    };
    e.taylor_h0 = truncate(v0_full);
    e.taylor_h1 = truncate(alpha_x);
    // dSS h^2 grade: alpha^2 (2 alpha alpha' r^3 + 2 alpha^2 r^2)
    //             = V0 V0' r^3 + 2 V0^2 r^2.
    e.taylor_h2 = truncate(v0_full * v0_full.derivative() * (r * r * r) +
                           2.0 * (v0_full * v0_full) * (r * r));

    e.z0 = alpha[0];
    e.omega = std::sqrt(0.5 * std::abs(e.taylor_h0.derivative_at_origin(2)));
    return e;
}

BarrierCrossCheck cross_check_printed_formulas(const BarrierExpansion& exp) {
    const double M = exp.params.mass, Q = exp.params.charge, L = exp.params.lambda;
    const double r0 = exp.r0;
    const double v0 = exp.taylor_h0[0];

    BarrierCrossCheck c;
    c.v2_chain = exp.taylor_h0.derivative_at_origin(2);
    c.v2_form_a = (4.0 * Q * Q / (r0 * r0) - 2.0) * v0 * v0;
    c.v2_form_b = -2.0 * (3.0 * M / r0 - 4.0 * Q * Q / (r0 * r0)) * v0 * v0;
    const double scale = std::abs(c.v2_chain);
    c.v2_pass = std::abs(c.v2_form_a - c.v2_form_b) <= 1e-12 * scale &&
                std::abs(c.v2_chain - c.v2_form_a) <= 1e-10 * scale;

    c.v3_chain = exp.taylor_h0.derivative_at_origin(3);
    c.v3_printed = 4.0 / r0 *
                   (11.0 * M * r0 - 18.0 * Q * Q - 8.0 * M * r0 * r0 * r0 +
                    12.0 * Q * Q * r0 * r0 + 4.0 / 3.0 * L * (std::pow(r0, 4) - std::pow(r0, 6))) *
                   v0 * v0 * v0;
    c.v3_agree = std::abs(c.v3_chain - c.v3_printed) <= 1e-8 * std::max(1.0, std::abs(c.v3_chain));
    return c;
}

}  // namespace qnm
