#include "qnm/collocation.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "qnm/barrier.hpp"

namespace qnm {

namespace {

struct Discretization {
    std::vector<double> y;   // interior nodes under the algebraic map
    Eigen::MatrixXd d2;      // d^2/dy^2 on the interior (Dirichlet)
};

/// Chebyshev-Lobatto differentiation with the algebraic map
/// y = L t / sqrt(1 - t^2); endpoint rows/columns dropped.
Discretization build_discretization(int n_interior, double length) {
    const int n = n_interior + 1;
    std::vector<double> t(n + 1), c(n + 1);
    for (int i = 0; i <= n; ++i) {
        t[i] = std::cos(M_PI * i / n);
        c[i] = (i == 0 || i == n) ? 2.0 : 1.0;
    }
    Eigen::MatrixXd d(n + 1, n + 1);
    for (int i = 0; i <= n; ++i) {
        double diag = 0.0;
        for (int j = 0; j <= n; ++j) {
            if (i == j) continue;
            const double sign = ((i + j) % 2 == 0) ? 1.0 : -1.0;
            d(i, j) = c[i] / c[j] * sign / (t[i] - t[j]);
            diag -= d(i, j);
        }
        d(i, i) = diag;
    }
    const Eigen::MatrixXd d2t = d * d;

    Discretization out;
    out.y.resize(n_interior);
    out.d2.resize(n_interior, n_interior);
    for (int i = 1; i < n; ++i) {
        const double ti = t[i], s = 1.0 - ti * ti;
        out.y[i - 1] = length * ti / std::sqrt(s);
        const double yt = length * std::pow(s, -1.5);
        const double ytt = 3.0 * length * ti * std::pow(s, -2.5);
        const double a = 1.0 / (yt * yt);
        const double b = ytt / (yt * yt * yt);
        for (int j = 0; j <= n; ++j) {
            if (j == 0 || j == n) continue;
            out.d2(i - 1, j - 1) = a * d2t(i, j) - b * d(i, j);
        }
    }
    return out;
}

std::vector<Complex> rotated_eigenvalues(const RayPotential& pot, double h, double theta, int n,
                                         double length) {
    const Discretization g = build_discretization(n, length);
    const std::vector<Complex> v = pot(theta, g.y);
    if (static_cast<int>(v.size()) != n)
        throw std::runtime_error("rotated_eigenvalues: potential batch size mismatch");
    const Complex rot = std::exp(Complex(0.0, theta));
    Eigen::MatrixXcd a = (-h * h / (rot * rot)) * g.d2.cast<Complex>();
    for (int i = 0; i < n; ++i) a(i, i) += v[i];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(a, /*computeEigenvectors=*/false);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("rotated_eigenvalues: eigensolver failed");
    const auto& w = es.eigenvalues();
    return std::vector<Complex>(w.data(), w.data() + w.size());
}

std::vector<Complex> select_window(std::vector<Complex> ev, Complex e_top, double window,
                                   double im_slack) {
    std::erase_if(ev, [&](Complex e) {
        return std::abs(e - e_top) > window || e.imag() >= im_slack;
    });
    std::sort(ev.begin(), ev.end(), [](Complex a, Complex b) { return a.imag() > b.imag(); });
    return ev;
}

double nearest_distance(const std::vector<Complex>& set, Complex e) {
    double best = std::numeric_limits<double>::infinity();
    for (Complex s : set) best = std::min(best, std::abs(s - e));
    return best;
}

}  // namespace

RayPotential pointwise_ray(std::function<Complex(Complex)> f) {
    return [f = std::move(f)](double theta, const std::vector<double>& ys) {
        const Complex rot = std::exp(Complex(0.0, theta));
        std::vector<Complex> out(ys.size());
        for (std::size_t i = 0; i < ys.size(); ++i) out[i] = f(rot * ys[i]);
        return out;
    };
}

std::vector<ResonanceEstimate> scaled_spectrum(const RayPotential& potential, double h,
                                               Complex e_top, double omega_scale, int count,
                                               const ScalingSettings& settings) {
    if (!(settings.theta > 0.0)) throw std::invalid_argument("scaled_spectrum: theta must be > 0");
    if (count < 1) throw std::invalid_argument("scaled_spectrum: count must be >= 1");

    const double length =
        settings.map_scale > 0.0 ? settings.map_scale : 15.0 * std::sqrt(h / omega_scale);
    const double window =
        settings.window > 0.0 ? settings.window : (2.0 * count + 4.0) * h * omega_scale;
    const double im_slack = 0.1 * h * omega_scale;

    const int n1 = settings.grid;
    const int n2 = static_cast<int>(std::lround(settings.grid * settings.refine_factor));
    const double th1 = settings.theta;
    const double th2 = settings.theta * settings.theta_perturb;

    const auto base =
        select_window(rotated_eigenvalues(potential, h, th1, n1, length), e_top, window, im_slack);
    const auto fine =
        select_window(rotated_eigenvalues(potential, h, th1, n2, length), e_top, window, im_slack);
    const auto tilt =
        select_window(rotated_eigenvalues(potential, h, th2, n2, length), e_top, window, im_slack);

    std::vector<ResonanceEstimate> out;
    for (Complex e : fine) {
        const double scale = std::max(std::abs(e), 1e-300);
        const double drift = std::max(nearest_distance(base, e), nearest_distance(tilt, e)) / scale;
        if (drift > settings.drift_tol) continue;
        bool dup = false;
        for (const auto& prev : out)
            if (std::abs(prev.energy - e) <= 100.0 * settings.drift_tol * scale) dup = true;
        if (dup) continue;

        ResonanceEstimate r;
        r.energy = e;
        r.value = std::sqrt(e) / h;
        if (r.value.real() < 0.0) r.value = -r.value;
        r.method = ResonanceMethod::complex_scaling;
        r.h = h;
        r.grid = n2;
        r.theta = th1;
        r.drift = drift;
        out.push_back(r);
        if (static_cast<int>(out.size()) == count) break;
    }
    return out;
}

std::vector<ResonanceEstimate> scaled_eigen_resonances(const ChartMap& chart, Grade grade,
                                                       double h, int count,
                                                       const ScalingSettings& settings) {
    if (settings.theta * settings.theta_perturb > chart.theta_cone() + 1e-12)
        throw std::invalid_argument("scaled_eigen_resonances: theta exceeds the chart cone");

    const BarrierPoint bp = locate_barrier(chart.params());
    RayPotential pot = [&chart, grade, h](double theta, const std::vector<double>& ys) {
        return chart.potential_on_ray(grade, h, theta, ys);
    };
    return scaled_spectrum(pot, h, Complex(bp.z0 * bp.z0, 0.0), bp.omega, count, settings);
}

}  // namespace qnm
