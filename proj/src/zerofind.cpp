#include "qnm/zerofind.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qnm {

namespace {

/// Accumulated phase change of f along the segment [a, b], bisecting until
/// each step turns by less than pi/2.
double phase_change(const AnalyticFunction& f, Complex a, Complex b, Complex fa, Complex fb,
                    int depth) {
    if (std::abs(fa) == 0.0 || std::abs(fb) == 0.0)
        throw std::runtime_error("winding_number: zero on the contour");
    const double d = std::arg(fb / fa);
    if (std::abs(d) < M_PI / 2.0) return d;
    if (depth > 40) throw std::runtime_error("winding_number: phase unresolved on the contour");
    const Complex m = 0.5 * (a + b);
    const Complex fm = f(m);
    return phase_change(f, a, m, fa, fm, depth + 1) + phase_change(f, m, b, fm, fb, depth + 1);
}

}  // namespace

int winding_number(const AnalyticFunction& f, const Rectangle& rect, int initial_samples) {
    if (rect.empty()) return 0;
    std::vector<Complex> corners = {
        {rect.re_min, rect.im_min}, {rect.re_max, rect.im_min},
        {rect.re_max, rect.im_max}, {rect.re_min, rect.im_max}};
    double total = 0.0;
    for (int side = 0; side < 4; ++side) {
        const Complex a = corners[side], b = corners[(side + 1) % 4];
        const int m = std::max(initial_samples / 4, 2);
        Complex prev = a, fprev = f(a);
        for (int i = 1; i <= m; ++i) {
            const Complex cur = a + (b - a) * (static_cast<double>(i) / m);
            const Complex fcur = f(cur);
            total += phase_change(f, prev, cur, fprev, fcur, 0);
            prev = cur;
            fprev = fcur;
        }
    }
    const double w = total / (2.0 * M_PI);
    const long n = std::lround(w);
    if (std::abs(w - n) > 0.25)
        throw std::runtime_error("winding_number: non-integer winding, contour too coarse");
    return static_cast<int>(n);
}

Complex refine_zero(const AnalyticFunction& f, Complex start, double step, double tol,
                    int max_iter) {
    Complex x0 = start + Complex(step, 0.0), x1 = start + Complex(0.0, step), x2 = start;
    Complex f0 = f(x0), f1 = f(x1), f2 = f(x2);
    for (int it = 0; it < max_iter; ++it) {
        const Complex h1 = x1 - x0, h2 = x2 - x1;
        if (std::abs(h2) == 0.0) return x2;
        const Complex d1 = (f1 - f0) / h1, d2 = (f2 - f1) / h2;
        const Complex a = (d2 - d1) / (h2 + h1);
        const Complex b = a * h2 + d2;
        const Complex disc = std::sqrt(b * b - 4.0 * f2 * a);
        const Complex den = (std::abs(b + disc) > std::abs(b - disc)) ? b + disc : b - disc;
        if (std::abs(den) == 0.0) throw std::runtime_error("refine_zero: degenerate step");
        const Complex dx = -2.0 * f2 / den;
        const Complex x3 = x2 + dx;
        const Complex f3 = f(x3);
        x0 = x1; f0 = f1;
        x1 = x2; f1 = f2;
        x2 = x3; f2 = f3;
        if (std::abs(dx) <= tol * (1.0 + std::abs(x2))) return x2;
    }
    throw std::runtime_error("refine_zero: no convergence");
}

namespace {

void find_zeros_impl(const AnalyticFunction& f, const Rectangle& rect, double locate_tol,
                     int samples, int depth, std::vector<Complex>& out) {
    int w;
    try {
        w = winding_number(f, rect, samples);
    } catch (const std::runtime_error&) {
        // zero at or near the boundary: nudge the box outward slightly
        const double pad = 1e-6 * (1.0 + rect.diameter());
        if (depth > 30) throw;
        Rectangle padded{rect.re_min - pad, rect.re_max + pad, rect.im_min - pad,
                         rect.im_max + pad};
        find_zeros_impl(f, padded, locate_tol, samples, depth + 1, out);
        return;
    }
    if (w == 0) return;
    if (w == 1 || rect.diameter() < 64.0 * locate_tol) {
        const Complex z = refine_zero(f, rect.center(), 0.1 * rect.diameter(), locate_tol);
        const double pad = 1e-3 * rect.diameter();
        const bool inside = z.real() >= rect.re_min - pad && z.real() <= rect.re_max + pad &&
                            z.imag() >= rect.im_min - pad && z.imag() <= rect.im_max + pad;
        if (inside || rect.diameter() < 64.0 * locate_tol || depth > 28) {
            for (Complex seen : out)
                if (std::abs(seen - z) <= 16.0 * locate_tol) return;
            out.push_back(z);
            return;
        }
        // Muller escaped the cell; subdivide to pin the zero down
    }
    if (depth > 30) throw std::runtime_error("find_zeros: subdivision limit");
    const Complex c = rect.center();
    const Rectangle quads[4] = {
        {rect.re_min, c.real(), rect.im_min, c.imag()},
        {c.real(), rect.re_max, rect.im_min, c.imag()},
        {rect.re_min, c.real(), c.imag(), rect.im_max},
        {c.real(), rect.re_max, c.imag(), rect.im_max}};
    for (const Rectangle& q : quads) find_zeros_impl(f, q, locate_tol, samples, depth + 1, out);
}

}  // namespace

std::vector<Complex> find_zeros(const AnalyticFunction& f, const Rectangle& rect,
                                double locate_tol, int initial_samples) {
    std::vector<Complex> out;
    if (rect.empty()) return out;
    find_zeros_impl(f, rect, locate_tol, initial_samples, 0, out);
    std::sort(out.begin(), out.end(), [](Complex a, Complex b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    return out;
}

}  // namespace qnm
