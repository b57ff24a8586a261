#pragma once

#include <functional>
#include <vector>

#include "qnm/types.hpp"

namespace qnm {

using AnalyticFunction = std::function<Complex(Complex)>;

struct Rectangle {
    double re_min, re_max, im_min, im_max;
    bool empty() const { return re_min >= re_max || im_min >= im_max; }
    Complex center() const { return {0.5 * (re_min + re_max), 0.5 * (im_min + im_max)}; }
    double diameter() const { return std::max(re_max - re_min, im_max - im_min); }
};

/// Winding number of f around the rectangle boundary by adaptive phase
/// tracking; f must be zero-free on the boundary.  Throws when the phase
/// cannot be resolved (likely zero on or near the boundary).
int winding_number(const AnalyticFunction& f, const Rectangle& rect, int initial_samples = 64);

/// All zeros inside the rectangle: recursive quadrisection guided by the
/// winding count, then Muller refinement.  Multiple zeros are returned
/// once per location with no multiplicity bookkeeping beyond the count
/// consistency check.
std::vector<Complex> find_zeros(const AnalyticFunction& f, const Rectangle& rect,
                                double locate_tol = 1e-10, int initial_samples = 64);

/// Muller iteration from a starting point; throws on non-convergence.
Complex refine_zero(const AnalyticFunction& f, Complex start, double step, double tol = 1e-12,
                    int max_iter = 60);

}  // namespace qnm
