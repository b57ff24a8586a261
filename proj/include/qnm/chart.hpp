#pragma once

#include <cmath>
#include <vector>

#include "qnm/geometry.hpp"
#include "qnm/types.hpp"

namespace qnm {

enum class Grade {
    alpha,
    alpha_prime,
    dirac_q,
    schrodinger_plus,
    schrodinger_minus,
    dsrn_semiclassical,
    dss_semiclassical,
};

struct PotentialSample {
    Complex x;
    Complex value;
    Grade grade;
    double h;
};

/// Invertible tortoise <-> radial map on the exterior region (r_-, r_+),
/// with holomorphic extension to a conic neighbourhood of the real axis.
/// The integration constant is fixed by x(r0) = 0 with r0 the barrier
/// radius.  Immutable after construction.
class ChartMap {
  public:
    explicit ChartMap(const BlackHoleParams& params, double theta_cone = M_PI / 5.0);

    const BlackHoleParams& params() const { return params_; }
    const HorizonData& horizons() const { return horizons_; }
    double barrier_radius() const { return r0_; }
    double theta_cone() const { return theta_cone_; }

    /// Closed-form sum of logarithms, anchored so x(r0) = 0.
    double tortoise_of_radius(double r) const;

    /// Inverse map; total on the real line (near-horizon solves switch to
    /// the log variable automatically).
    double radius_of_tortoise(double x) const;

    /// Holomorphic extension r(z) by continuation of dr/dz = F(r) along the
    /// vertical segment from the real anchor Re z.
    Complex radius_on_contour(Complex z) const;

    /// alpha(x) = sqrt(F(r(x)))/r(x) and its x-derivative, real line.
    double alpha(double x) const;
    double alpha_prime(double x) const;

    /// Asymptotic amplitudes: alpha(x) ~ alpha_pm e^{kappa_pm x}.
    double alpha_amplitude_minus() const { return alpha_minus_; }
    double alpha_amplitude_plus() const { return alpha_plus_; }

    PotentialSample potential(Grade grade, double h, double x) const;

    /// Potential samples along the scaling contour z = e^{i theta_s} y for
    /// the given ordered offsets y (ascending).  Branch-continuous in the
    /// square root from the real anchor at y = 0.
    std::vector<Complex> potential_on_ray(Grade grade, double h, double theta_s,
                                          const std::vector<double>& ys) const;

    bool in_cone(Complex z) const;

  private:
    Complex continue_radius(Complex z_from, Complex r_from, Complex z_to) const;
    Complex grade_value(Grade grade, double h, Complex r, Complex& sqrtF_hint) const;

    BlackHoleParams params_;
    HorizonData horizons_;
    double r0_;
    double anchor_const_;  // c in the closed form, so that x(r0) = 0
    double theta_cone_;
    double cone_pad_ = 0.75;
    double x_switch_minus_, x_switch_plus_;  // near-horizon switchover
    std::vector<double> table_x_, table_r_;  // monotone cache on the bulk
    double alpha_minus_ = 0.0, alpha_plus_ = 0.0;
};

}  // namespace qnm
