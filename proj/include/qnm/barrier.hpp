#pragma once

#include "qnm/series.hpp"
#include "qnm/types.hpp"

namespace qnm {

/// Graded Taylor data of the semiclassical potential at the barrier top
/// x0 = x(r0) (anchored to 0).  taylor_h0 is the series of alpha^2,
/// taylor_h1 the h-linear part (alpha', dSRN), taylor_h2 the h^2 part
/// (dSS).  Coefficients are of (x - x0)^m.
struct BarrierExpansion {
    BlackHoleParams params;
    double r0 = 0.0;     // photon-sphere radius
    double x0 = 0.0;     // anchor convention
    double z0 = 0.0;     // alpha(x0)
    double omega = 0.0;  // sqrt(|V0''(x0)|/2)
    std::size_t order = 8;
    Series taylor_h0;
    Series taylor_h1;
    Series taylor_h2;
    Series radius_series;  // r(x) about x0, used for audits

    double v0_derivative(std::size_t m) const { return taylor_h0.derivative_at_origin(m); }
};

struct BarrierPoint {
    double r0, x0, z0, omega;
};

/// Printed-formula audit.  The second-derivative check must pass; the
/// third-derivative closed form in the source material is dimensionally
/// inconsistent and is reported, not asserted.
struct BarrierCrossCheck {
    double v2_chain = 0.0;      // V0''(x0) from the chain rule
    double v2_form_a = 0.0;     // (4Q^2/r0^2 - 2) V0^2
    double v2_form_b = 0.0;     // -2 (3M/r0 - 4Q^2/r0^2) V0^2
    bool v2_pass = false;
    double v3_chain = 0.0;      // V0'''(x0) from the chain rule
    double v3_printed = 0.0;    // printed closed form (audit only)
    bool v3_agree = false;
};

/// Closed-form barrier location: r0 = (3M + sqrt(9M^2 - 8Q^2))/2,
/// z0^2 = M/r0^3 - Q^2/r0^4 - Lambda/3, omega from the chain-rule V0''.
BarrierPoint locate_barrier(const BlackHoleParams& p);

/// Full graded expansion to the requested order (4 <= N <= 12).
BarrierExpansion taylor_expand(const BlackHoleParams& p, std::size_t N = 8);

BarrierCrossCheck cross_check_printed_formulas(const BarrierExpansion& exp);

}  // namespace qnm
