#pragma once

#include <functional>

#include "qnm/chart.hpp"
#include "qnm/types.hpp"

namespace qnm {

/// Scattering problem data on the line: superpotential q, its derivative,
/// and the truncation abscissa for the Jost integrations.
struct LinePotential {
    std::function<double(double)> q;
    std::function<double(double)> qp;
    double x_inf = 40.0;
    bool compact = false;  // q vanishes identically beyond x_inf
};

/// Superpotential q = alpha / h of the Dirac system, optionally multiplied
/// by a smooth cutoff (1 on [-x_c, x_c], 0 outside [-x_c - width, ...]).
/// Compact mode makes the transition coefficient entire, enabling searches
/// below the analyticity strip of the true potential.
LinePotential dirac_line_potential(const ChartMap& chart, double h, bool compact,
                                   double x_c = 30.0, double width = 5.0);

/// Depth of the Jost analyticity strip for the true (exponentially
/// decaying) potential: 0.9 * min(kappa_-, |kappa_+|).
double strip_depth(const HorizonData& horizons);

/// Transition coefficient a(lambda) of the Zakharov-Shabat system
/// u' = i lambda u - i q v, v' = -i lambda v + i q u with potential
/// sign * q; a == 1 for q == 0, zeros of a are the resonances.
Complex zs_coefficient(const LinePotential& pot, Complex lambda, int sign);

/// Jost-solution Wronskian of -u'' + (q^2 + sign q') u = lambda^2 u;
/// zeros away from lambda = 0 are the Schrodinger resonances.
Complex schrodinger_wronskian(const LinePotential& pot, Complex lambda, int sign);

/// C-infinity bump transition, 1 at s <= 0 and 0 at s >= 1.
double smooth_step_down(double s);

}  // namespace qnm
