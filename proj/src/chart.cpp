#include "qnm/chart.hpp"

#include <algorithm>
#include <cmath>

#include "qnm/rk45.hpp"

namespace qnm {

namespace {
double photon_sphere_radius(const BlackHoleParams& p) {
    return 0.5 * (3.0 * p.mass + std::sqrt(9.0 * p.mass * p.mass - 8.0 * p.charge * p.charge));
}
}  // namespace

ChartMap::ChartMap(const BlackHoleParams& params, double theta_cone)
    : params_(params), horizons_(find_horizons(params)), r0_(photon_sphere_radius(params)),
      theta_cone_(theta_cone) {
    if (!(theta_cone_ > 0.0 && theta_cone_ <= M_PI / 4.0))
        throw std::invalid_argument("theta_cone must lie in (0, pi/4]");

    // log-sum without the anchor shift
    auto raw = [&](double r) {
        double x = 0.0;
        for (std::size_t j = 0; j < horizons_.roots.size(); ++j) {
            const double rj = horizons_.roots[j];
            const double term = (rj == horizons_.r_plus()) ? (rj - r) : (r - rj);
            x += 0.5 / horizons_.kappas[j] * std::log(term);
        }
        return x;
    };
    anchor_const_ = -raw(r0_);

    const double rm = horizons_.r_minus(), rp = horizons_.r_plus();
    const double delta = 1e-3 * (rp - rm);
    x_switch_minus_ = tortoise_of_radius(rm + delta);
    x_switch_plus_ = tortoise_of_radius(rp - delta);

    // monotone (x, r) cache on the bulk region
    const int n = 2048;
    table_x_.resize(n);
    table_r_.resize(n);
    for (int i = 0; i < n; ++i) {
        const double x = x_switch_minus_ + (x_switch_plus_ - x_switch_minus_) * i / (n - 1.0);
        double lo = rm + 0.5 * delta, hi = rp - 0.5 * delta;
        for (int it = 0; it < 60; ++it) {
            const double mid = 0.5 * (lo + hi);
            (tortoise_of_radius(mid) < x ? lo : hi) = mid;
        }
        table_x_[i] = x;
        table_r_[i] = 0.5 * (lo + hi);
    }

    // alpha(x) ~ alpha_pm e^{kappa_pm x}: amplitudes from the log expansion
    // of the closed form at each horizon.
    auto rest = [&](double r, double skip_root) {
        double s = 0.0;
        for (std::size_t j = 0; j < horizons_.roots.size(); ++j) {
            const double rj = horizons_.roots[j];
            if (rj == skip_root) continue;
            const double term = (rj == rp) ? (rj - r) : (r - rj);
            s += 0.5 / horizons_.kappas[j] * std::log(term);
        }
        return s;
    };
    const double km = horizons_.kappa_minus(), kp = horizons_.kappa_plus();
    const double Cm = std::exp(-2.0 * km * (rest(rm, rm) + anchor_const_));
    const double Cp = std::exp(-2.0 * kp * (rest(rp, rp) + anchor_const_));
    alpha_minus_ = std::sqrt(2.0 * km * Cm) / rm;
    alpha_plus_ = std::sqrt(-2.0 * kp * Cp) / rp;
}

double ChartMap::tortoise_of_radius(double r) const {
    const double rm = horizons_.r_minus(), rp = horizons_.r_plus();
    if (!(r > rm && r < rp))
        throw std::domain_error("tortoise_of_radius: r outside (r_-, r_+)");
    double x = anchor_const_;
    for (std::size_t j = 0; j < horizons_.roots.size(); ++j) {
        const double rj = horizons_.roots[j];
        const double term = (rj == rp) ? (rj - r) : (r - rj);
        x += 0.5 / horizons_.kappas[j] * std::log(term);
    }
    return x;
}

double ChartMap::radius_of_tortoise(double x) const {
    const double rm = horizons_.r_minus(), rp = horizons_.r_plus();
    const double km = horizons_.kappa_minus(), kp = horizons_.kappa_plus();

    auto rest = [&](double r, double skip_root) {
        double s = anchor_const_;
        for (std::size_t j = 0; j < horizons_.roots.size(); ++j) {
            const double rj = horizons_.roots[j];
            if (rj == skip_root) continue;
            const double term = (rj == rp) ? (rj - r) : (r - rj);
            s += 0.5 / horizons_.kappas[j] * std::log(term);
        }
        return s;
    };

    if (x <= x_switch_minus_) {
        // solve in w = ln(r - r_-): fixed point of the exact closed form
        double r = rm + 1e-3 * (rp - rm);
        for (int it = 0; it < 200; ++it) {
            const double w = 2.0 * km * (x - rest(r, rm));
            const double rn = (w < -700.0) ? rm : rm + std::exp(w);
            if (std::abs(rn - r) <= 1e-16 * rm) return rn;
            r = rn;
        }
        return r;
    }
    if (x >= x_switch_plus_) {
        double r = rp - 1e-3 * (rp - rm);
        for (int it = 0; it < 200; ++it) {
            const double w = 2.0 * kp * (x - rest(r, rp));
            const double rn = (w < -700.0) ? rp : rp - std::exp(w);
            if (std::abs(rn - r) <= 1e-16 * rp) return rn;
            r = rn;
        }
        return r;
    }

    // bulk: cached table seed + safeguarded Newton (dx/dr = 1/F)
    const auto it = std::lower_bound(table_x_.begin(), table_x_.end(), x);
    const std::size_t i = std::min<std::size_t>(it - table_x_.begin(), table_x_.size() - 1);
    double r = table_r_[i];
    double lo = rm, hi = rp;
    for (int k = 0; k < 100; ++k) {
        const double g = tortoise_of_radius(r) - x;
        if (std::abs(g) < 1e-14 * (1.0 + std::abs(x))) break;
        (g < 0.0 ? lo : hi) = r;
        double rn = r - g * evaluate_lapse(params_, r);
        if (!(rn > lo && rn < hi)) rn = 0.5 * (lo + hi);
        r = rn;
    }
    return r;
}

bool ChartMap::in_cone(Complex z) const {
    return std::abs(z.imag()) <= std::tan(theta_cone_) * std::abs(z.real()) + cone_pad_;
}

Complex ChartMap::continue_radius(Complex z_from, Complex r_from, Complex z_to) const {
    const Complex dz = z_to - z_from;
    auto rhs = [&](double, Complex r) { return evaluate_lapse(params_, r) * dz; };
    Complex r = integrate_rk45<Complex>(rhs, r_from, 0.0, 1.0, 1e-13, 1e-13);
    if (!std::isfinite(r.real()) || !std::isfinite(r.imag()))
        throw std::runtime_error("contour left domain of analyticity");
    return r;
}

Complex ChartMap::radius_on_contour(Complex z) const {
    if (!in_cone(z))
        throw std::domain_error("radius_on_contour: z outside the analyticity cone");
    const double a = z.real();
    const double ra = radius_of_tortoise(a);
    if (z.imag() == 0.0) return Complex(ra, 0.0);
    return continue_radius(Complex(a, 0.0), Complex(ra, 0.0), z);
}

double ChartMap::alpha(double x) const {
    const double r = radius_of_tortoise(x);
    const double F = evaluate_lapse(params_, r);
    return std::sqrt(std::max(F, 0.0)) / r;
}

double ChartMap::alpha_prime(double x) const {
    const double r = radius_of_tortoise(x);
    const double F = evaluate_lapse(params_, r);
    const double Fp = lapse_derivative(params_, r);
    return std::sqrt(std::max(F, 0.0)) * (Fp / (2.0 * r) - F / (r * r));
}

Complex ChartMap::grade_value(Grade grade, double h, Complex r, Complex& sqrtF_hint) const {
    const Complex F = evaluate_lapse(params_, r);
    const Complex Fp = lapse_derivative(params_, r);
    Complex s = std::sqrt(F);
    if (std::abs(s - sqrtF_hint) > std::abs(-s - sqrtF_hint)) s = -s;
    sqrtF_hint = s;

    const Complex al = s / r;
    const Complex alp = s * (Fp / (2.0 * r) - F / (r * r));
    const Complex v0 = F / (r * r);

    switch (grade) {
        case Grade::alpha: return al;
        case Grade::alpha_prime: return alp;
        case Grade::dirac_q:
            if (h <= 0.0) throw std::invalid_argument("dirac_q requires h > 0");
            return -al / h;
        case Grade::schrodinger_plus:
            if (h <= 0.0) throw std::invalid_argument("schrodinger grades require h > 0");
            return al * al / (h * h) - alp / h;
        case Grade::schrodinger_minus:
            if (h <= 0.0) throw std::invalid_argument("schrodinger grades require h > 0");
            return al * al / (h * h) + alp / h;
        case Grade::dsrn_semiclassical: return v0 + h * alp;
        case Grade::dss_semiclassical: {
            if (params_.charge != 0.0)
                throw std::invalid_argument("dss grade requires zero charge");
            const Complex dv0dx = (Fp / (r * r) - 2.0 * F / (r * r * r)) * F;
            const Complex w2 = v0 * (dv0dx * r * r * r + 2.0 * v0 * r * r);
            return v0 + h * h * w2;
        }
    }
    throw std::logic_error("unknown grade");
}

PotentialSample ChartMap::potential(Grade grade, double h, double x) const {
    const double r = radius_of_tortoise(x);
    Complex hint = std::sqrt(Complex(std::max(evaluate_lapse(params_, r), 0.0)));
    PotentialSample s;
    s.x = x;
    s.h = h;
    s.grade = grade;
    s.value = grade_value(grade, h, Complex(r, 0.0), hint);
    return s;
}

std::vector<Complex> ChartMap::potential_on_ray(Grade grade, double h, double theta_s,
                                                const std::vector<double>& ys) const {
    const Complex dir = std::exp(Complex(0.0, theta_s));
    std::vector<Complex> out(ys.size());

    // march outward from the real anchor in each direction, keeping the
    // square-root branch continuous
    auto sweep = [&](bool positive) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < ys.size(); ++i)
            if ((ys[i] > 0.0) == positive && ys[i] != 0.0) idx.push_back(i);
        std::sort(idx.begin(), idx.end(),
                  [&](std::size_t a, std::size_t b) { return std::abs(ys[a]) < std::abs(ys[b]); });
        Complex z_prev(0.0, 0.0);
        Complex r_prev(r0_, 0.0);
        Complex hint = std::sqrt(Complex(evaluate_lapse(params_, r0_), 0.0));
        for (std::size_t i : idx) {
            const Complex z = dir * ys[i];
            const Complex r = continue_radius(z_prev, r_prev, z);
            out[i] = grade_value(grade, h, r, hint);
            z_prev = z;
            r_prev = r;
        }
    };
    for (std::size_t i = 0; i < ys.size(); ++i) {
        if (ys[i] == 0.0) {
            Complex hint = std::sqrt(Complex(evaluate_lapse(params_, r0_), 0.0));
            out[i] = grade_value(grade, h, Complex(r0_, 0.0), hint);
        }
    }
    sweep(false);
    sweep(true);
    return out;
}

}  // namespace qnm
