#pragma once

#include <array>
#include <vector>

#include "qnm/types.hpp"

namespace qnm {

/// Real zeros of the lapse function F together with their surface gravities.
/// For charge != 0 the roots are (r_n, r_c, r_minus, r_plus) with
/// r_n < 0 < r_c < r_minus < r_plus; for charge == 0 the Cauchy root is
/// absent and three roots remain.
struct HorizonData {
    std::vector<double> roots;   // sorted ascending
    std::vector<double> kappas;  // kappa_j = F'(r_j)/2, same order

    double r_minus() const { return roots[roots.size() - 2]; }
    double r_plus() const { return roots.back(); }
    double kappa_minus() const { return kappas[kappas.size() - 2]; }
    double kappa_plus() const { return kappas.back(); }
};

/// F(r) = 1 - 2M/r + Q^2/r^2 - (Lambda/3) r^2.
double evaluate_lapse(const BlackHoleParams& p, double r);
Complex evaluate_lapse(const BlackHoleParams& p, Complex r);

/// dF/dr.
double lapse_derivative(const BlackHoleParams& p, double r);
Complex lapse_derivative(const BlackHoleParams& p, Complex r);

/// All real roots of r^2 F(r) = 0 (excluding r = 0 when Q = 0), Newton
/// polished, with surface gravities.  Requires lambda > 0.
/// Throws InadmissibleParameters when the root structure does not match
/// the model (4 roots for Q != 0, 3 for Q = 0).
HorizonData find_horizons(const BlackHoleParams& p);

/// kappa_j = F'(r_j)/2 for verified roots.  Throws on degenerate horizons
/// (|F'(r_j)| < 1e-10).
std::vector<double> surface_gravities(const BlackHoleParams& p, const std::vector<double>& roots);

}  // namespace qnm
