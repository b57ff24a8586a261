#include "qnm/geometry.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qnm {

double evaluate_lapse(const BlackHoleParams& p, double r) {
    if (r == 0.0) throw std::domain_error("evaluate_lapse: r = 0");
    return 1.0 - 2.0 * p.mass / r + p.charge * p.charge / (r * r) - p.lambda / 3.0 * r * r;
}

Complex evaluate_lapse(const BlackHoleParams& p, Complex r) {
    if (r == Complex(0.0, 0.0)) throw std::domain_error("evaluate_lapse: r = 0");
    return 1.0 - 2.0 * p.mass / r + p.charge * p.charge / (r * r) - p.lambda / 3.0 * r * r;
}

double lapse_derivative(const BlackHoleParams& p, double r) {
    return 2.0 * p.mass / (r * r) - 2.0 * p.charge * p.charge / (r * r * r) - 2.0 * p.lambda / 3.0 * r;
}

Complex lapse_derivative(const BlackHoleParams& p, Complex r) {
    return 2.0 * p.mass / (r * r) - 2.0 * p.charge * p.charge / (r * r * r) - 2.0 * p.lambda / 3.0 * r;
}

namespace {

// Real roots of a monic polynomial via the companion matrix, Newton polished
// on the original (non-monic) polynomial r^2 F(r).
std::vector<double> real_roots(const std::vector<double>& monic_coeffs_desc) {
    const int n = static_cast<int>(monic_coeffs_desc.size()) - 1;
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
    for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) companion(i, n - 1) = -monic_coeffs_desc[n - i];
    Eigen::EigenSolver<Eigen::MatrixXd> es(companion);
    std::vector<double> out;
    for (int i = 0; i < n; ++i) {
        auto ev = es.eigenvalues()(i);
        if (std::abs(ev.imag()) < 1e-8 * (1.0 + std::abs(ev.real()))) out.push_back(ev.real());
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

HorizonData find_horizons(const BlackHoleParams& p) {
    p.validate();
    if (!(p.lambda > 0.0))
        throw std::invalid_argument("find_horizons: lambda > 0 required for a cosmological horizon");

    const double M = p.mass, Q = p.charge, L3 = p.lambda / 3.0;

    // r^2 F(r) = -L3 r^4 + r^2 - 2M r + Q^2.  Monic form (divide by -L3):
    // r^4 - r^2/L3 + 2M r/L3 - Q^2/L3.
    std::vector<double> roots;
    if (Q != 0.0) {
        roots = real_roots({1.0, 0.0, -1.0 / L3, 2.0 * M / L3, -Q * Q / L3});
    } else {
        // factor out r: -L3 r^3 + r - 2M; monic r^3 - r/L3 + 2M/L3.
        roots = real_roots({1.0, 0.0, -1.0 / L3, 2.0 * M / L3});
    }

    // Newton polish on g(r) = r^2 F(r).
    auto g = [&](double r) { return -L3 * r * r * r * r + r * r - 2.0 * M * r + Q * Q; };
    auto gp = [&](double r) { return -4.0 * L3 * r * r * r + 2.0 * r - 2.0 * M; };
    for (double& r : roots) {
        for (int it = 0; it < 4; ++it) {
            double d = gp(r);
            if (d == 0.0) break;
            r -= g(r) / d;
        }
    }

    const size_t expected = (Q != 0.0) ? 4u : 3u;
    if (roots.size() != expected) {
        std::ostringstream msg;
        msg << "inadmissible parameters: expected " << expected << " real horizon radii, found "
            << roots.size() << " (lambda*M^2 = " << p.lambda * M * M
            << " likely too large: merged/extremal horizons)";
        throw InadmissibleParameters(msg.str());
    }
    // Ordering r_n < 0 < (r_c <) r_- < r_+.
    if (!(roots.front() < 0.0))
        throw InadmissibleParameters("inadmissible parameters: negative root r_n missing");
    for (size_t i = 1; i < roots.size(); ++i) {
        if (!(roots[i] > 0.0))
            throw InadmissibleParameters("inadmissible parameters: positive roots missing");
    }

    HorizonData h;
    h.roots = roots;
    h.kappas = surface_gravities(p, roots);
    if (!(h.kappa_minus() > 0.0 && h.kappa_plus() < 0.0))
        throw InadmissibleParameters("inadmissible parameters: surface-gravity sign pattern violated");
    return h;
}

std::vector<double> surface_gravities(const BlackHoleParams& p, const std::vector<double>& roots) {
    std::vector<double> kappas;
    kappas.reserve(roots.size());
    for (double r : roots) {
        const double d = lapse_derivative(p, r);
        if (std::abs(d) < 1e-10)
            throw InadmissibleParameters("degenerate horizon: |F'(r_j)| < 1e-10");
        kappas.push_back(0.5 * d);
    }
    return kappas;
}

}  // namespace qnm
