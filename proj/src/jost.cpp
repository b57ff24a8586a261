#include "qnm/jost.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

#include "qnm/rk45.hpp"

namespace qnm {

double smooth_step_down(double s) {
    if (s <= 0.0) return 1.0;
    if (s >= 1.0) return 0.0;
    const double a = std::exp(-1.0 / s);
    const double b = std::exp(-1.0 / (1.0 - s));
    return b / (a + b);
}

namespace {

double smooth_step_down_derivative(double s) {
    if (s <= 0.0 || s >= 1.0) return 0.0;
    const double h = 1e-6;
    return (smooth_step_down(s + h) - smooth_step_down(s - h)) / (2.0 * h);
}

}  // namespace

double strip_depth(const HorizonData& horizons) {
    return 0.9 * std::min(horizons.kappa_minus(), -horizons.kappa_plus());
}

LinePotential dirac_line_potential(const ChartMap& chart, double h, bool compact, double x_c,
                                   double width) {
    if (h <= 0.0) throw std::invalid_argument("dirac_line_potential: h must be > 0");
    LinePotential pot;
    pot.compact = compact;
    if (compact) {
        pot.x_inf = x_c + width;
        pot.q = [&chart, h, x_c, width](double x) {
            const double chi = smooth_step_down((std::abs(x) - x_c) / width);
            return chi == 0.0 ? 0.0 : -chart.alpha(x) / h * chi;
        };
        pot.qp = [&chart, h, x_c, width](double x) {
            const double s = (std::abs(x) - x_c) / width;
            const double chi = smooth_step_down(s);
            if (chi == 0.0) return 0.0;
            const double chip =
                smooth_step_down_derivative(s) / width * (x >= 0.0 ? 1.0 : -1.0);
            return -(chart.alpha_prime(x) * chi + chart.alpha(x) * chip) / h;
        };
    } else {
        // truncate where |q| drops below 1e-12
        const double km = chart.horizons().kappa_minus();
        const double kp = -chart.horizons().kappa_plus();
        const double am = chart.alpha_amplitude_minus();
        const double ap = chart.alpha_amplitude_plus();
        const double xm = std::log(am / (1e-12 * h)) / km;
        const double xp = std::log(ap / (1e-12 * h)) / kp;
        pot.x_inf = std::max({xm, xp, 20.0});
        pot.q = [&chart, h](double x) { return -chart.alpha(x) / h; };
        pot.qp = [&chart, h](double x) { return -chart.alpha_prime(x) / h; };
    }
    return pot;
}

Complex zs_coefficient(const LinePotential& pot, Complex lambda, int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("zs_coefficient: sign must be +-1");
    const double X = pot.x_inf;
    const Complex I(0.0, 1.0);
    const Complex boundary = std::exp(I * lambda * X);

    auto rhs = [&](double x, Eigen::Vector2cd f) -> Eigen::Vector2cd {
        const Complex q = sign * pot.q(x);
        return {I * lambda * f(0) - I * q * f(1), -I * lambda * f(1) + I * q * f(0)};
    };

    // phi ~ (0, e^{-i lambda x}) at -inf, psi ~ (e^{+i lambda x}, 0) at +inf
    Eigen::Vector2cd phi(Complex(0.0, 0.0), boundary);
    phi = integrate_rk45<Eigen::Vector2cd>(rhs, phi, -X, 0.0, 1e-12, 1e-12);
    Eigen::Vector2cd psi(boundary, Complex(0.0, 0.0));
    psi = integrate_rk45<Eigen::Vector2cd>(rhs, psi, X, 0.0, 1e-12, 1e-12);

    return phi(1) * psi(0) - phi(0) * psi(1);
}

Complex schrodinger_wronskian(const LinePotential& pot, Complex lambda, int sign) {
    const double X = pot.x_inf;
    const Complex I(0.0, 1.0);
    const Complex boundary = std::exp(I * lambda * X);

    auto rhs = [&](double x, Eigen::Vector2cd f) -> Eigen::Vector2cd {
        const double q = pot.q(x);
        const Complex v = q * q + static_cast<double>(sign) * pot.qp(x);
        return {f(1), (v - lambda * lambda) * f(0)};
    };

    Eigen::Vector2cd fm(boundary, -I * lambda * boundary);  // ~ e^{-i lambda x} at -inf
    fm = integrate_rk45<Eigen::Vector2cd>(rhs, fm, -X, 0.0, 1e-12, 1e-12);
    Eigen::Vector2cd fp(boundary, I * lambda * boundary);  // ~ e^{+i lambda x} at +inf
    fp = integrate_rk45<Eigen::Vector2cd>(rhs, fp, X, 0.0, 1e-12, 1e-12);

    return fm(0) * fp(1) - fm(1) * fp(0);
}

}  // namespace qnm
