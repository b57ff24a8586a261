#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace qnm {

inline double rk_norm(const std::complex<double>& v) { return std::abs(v); }
template <typename V>
double rk_norm(const V& v) { return v.norm(); }

/// Dormand-Prince 5(4) adaptive step from t to t_end along the real
/// parameter t; the state may be complex.  rhs(t, y) -> dy/dt.
template <typename State, typename Rhs>
State integrate_rk45(Rhs&& rhs, State y, double t, double t_end,
                     double abs_tol = 1e-12, double rel_tol = 1e-12) {
    static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    static constexpr double a21 = 1.0 / 5;
    static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                            a54 = -212.0 / 729;
    static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                            a64 = 49.0 / 176, a65 = -5103.0 / 18656;
    static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                            b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                            e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

    const double dir = (t_end >= t) ? 1.0 : -1.0;
    const double span = std::abs(t_end - t);
    if (span == 0.0) return y;
    double h = dir * std::min(0.1 * span + 1e-30, 0.1);

    State k1 = rhs(t, y);
    int steps = 0;
    while (dir * (t_end - t) > 0.0) {
        if (++steps > 2000000) throw std::runtime_error("rk45: step limit exceeded");
        if (dir * (t + h - t_end) > 0.0) h = t_end - t;

        State k2 = rhs(t + c2 * h, y + h * a21 * k1);
        State k3 = rhs(t + c3 * h, y + h * (a31 * k1 + a32 * k2));
        State k4 = rhs(t + c4 * h, y + h * (a41 * k1 + a42 * k2 + a43 * k3));
        State k5 = rhs(t + c5 * h, y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
        State k6 = rhs(t + h, y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
        State ynew = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
        State k7 = rhs(t + h, ynew);
        State err = h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);

        const double sc = abs_tol + rel_tol * std::max(rk_norm(y), rk_norm(ynew));
        const double e = rk_norm(err) / sc;
        if (e <= 1.0) {
            t += h;
            y = ynew;
            k1 = k7;  // FSAL
        }
        const double fac = std::clamp(0.9 * std::pow(std::max(e, 1e-16), -0.2), 0.2, 5.0);
        h *= fac;
        if (std::abs(h) < 1e-15 * (1.0 + std::abs(t)))
            throw std::runtime_error("rk45: step size collapsed");
    }
    return y;
}

}  // namespace qnm
