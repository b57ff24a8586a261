#pragma once

#include <functional>
#include <vector>

#include "qnm/chart.hpp"
#include "qnm/types.hpp"

namespace qnm {

enum class ResonanceMethod { complex_scaling, dirac_jost };

struct ResonanceEstimate {
    Complex value{0.0, 0.0};   // lambda, Re > 0 branch, Im < 0
    Complex energy{0.0, 0.0};  // lambda^2 where applicable
    ResonanceMethod method = ResonanceMethod::complex_scaling;
    double h = 0.0;
    int grid = 0;
    double theta = 0.0;
    double drift = 0.0;  // relative movement under (theta, grid) refinement
};

struct ScalingSettings {
    int grid = 250;                 // interior collocation points
    double refine_factor = 1.5;     // grid ladder for the stability check
    double theta = 0.5;             // scaling angle, must be <= chart cone
    double theta_perturb = 1.1;     // second-angle stability factor
    double map_scale = 0.0;         // algebraic-map length L; 0 = automatic
    double drift_tol = 1e-6;        // relative acceptance drift
    double window = 0.0;            // |E - z0^2| search window; 0 = automatic
};

/// Potential sampled along the rotated contour z = e^{i theta} y at the
/// given ordered offsets; batch form so chart-backed evaluation can reuse
/// one analytic continuation sweep per grid.
using RayPotential =
    std::function<std::vector<Complex>(double theta, const std::vector<double>& ys)>;

/// Adapter for potentials with a cheap pointwise holomorphic formula.
RayPotential pointwise_ray(std::function<Complex(Complex)> f);

/// Eigenvalues of the rotated operator e^{-2 i theta}(hD)^2 + V(e^{i theta} y)
/// discretized by Chebyshev collocation under the algebraic map
/// y = L t / sqrt(1 - t^2).  Returns the eigenvalues near e_top with
/// Im E < 0 that are stable under grid and angle refinement, shallowest
/// first; lambda = sqrt(E)/h on the Re > 0 branch.
std::vector<ResonanceEstimate> scaled_spectrum(const RayPotential& potential, double h,
                                               Complex e_top, double omega_scale, int count,
                                               const ScalingSettings& settings);

/// Chart-backed resonances of the graded potential at semiclassical
/// parameter h.
std::vector<ResonanceEstimate> scaled_eigen_resonances(const ChartMap& chart, Grade grade,
                                                       double h, int count,
                                                       const ScalingSettings& settings);

}  // namespace qnm
