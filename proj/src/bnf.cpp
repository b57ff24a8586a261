#include "qnm/bnf.hpp"

#include <cmath>
#include <stdexcept>

namespace qnm {

NormalizedHamiltonian normalize_hamiltonian(const BarrierExpansion& exp, int max_grade) {
    if (max_grade < 4)
        throw std::invalid_argument("normalize_hamiltonian: max_grade must be >= 4");
    NormalizedHamiltonian n;
    n.model = exp.params.model;
    n.z0 = exp.z0;
    n.omega = exp.omega;
    n.e0 = exp.z0 * exp.z0 / (2.0 * exp.omega);
    n.max_grade = max_grade;
    n.symbol = GradedSymbol<double>(max_grade);

    n.symbol.add({0, 0, 0}, n.e0);
    n.symbol.add({0, 2, 0}, 0.5);
    n.symbol.add({2, 0, 0}, -0.5);

    const double w = exp.omega;
    const std::size_t top = exp.taylor_h0.order();
    // magnitude floor: barrier-top criticality makes the odd low-order
    // entries vanish only up to roundoff
    const double floor0 = 1e-12 * (std::abs(n.e0) + 1.0);

    auto rescaled = [&](double coef, int j) { return coef * std::pow(w, -0.5 * j) / (2.0 * w); };

    for (int j = 3; j <= std::min<int>(top, max_grade); ++j) {
        const double aj = rescaled(exp.taylor_h0[j], j);
        if (std::abs(aj) < floor0) continue;
        n.a[j] = aj;
        n.symbol.add({j, 0, 0}, aj);
    }
    if (n.model == Model::dSRN) {
        for (int j = 0; j <= std::min<int>(top, max_grade - 2); ++j) {
            const double cj = rescaled(exp.taylor_h1[j], j);
            if (std::abs(cj) < floor0) continue;
            n.c[j] = cj;
            n.symbol.add({j, 0, 1}, cj);
        }
    } else {
        for (int j = 0; j <= std::min<int>(top, max_grade - 4); ++j) {
            const double dj = rescaled(exp.taylor_h2[j], j);
            if (std::abs(dj) < floor0) continue;
            n.d[j] = dj;
            n.symbol.add({j, 0, 2}, dj);
        }
    }
    return n;
}

BnfCoefficients reduce_to_normal_form(const BarrierExpansion& exp, int max_grade) {
    const NormalizedHamiltonian n = normalize_hamiltonian(exp, max_grade);
    auto table = reduce_symbol(n.symbol);

    BnfCoefficients b;
    b.model = n.model;
    b.z0 = n.z0;
    b.omega = n.omega;
    b.e0 = n.e0;
    b.v3 = exp.taylor_h0.derivative_at_origin(3);
    b.max_grade = max_grade;
    for (const auto& [mj, val] : table) {
        if (mj == std::pair<int, int>{0, 0}) continue;  // constant e0, kept separately
        b.table[mj] = val;
    }

    if (std::abs(b.b(0, 1) - 1.0) > 1e-12)
        throw std::runtime_error("normal form lost the harmonic normalization b_{0,1} = 1");
    return b;
}

double b02_closed(double a3, double a4) { return 15.0 / 4.0 * a3 * a3 + 1.5 * a4; }

double b12_closed(double a3, double c1, double c2) { return -3.0 * c1 * a3 - c2; }

double b20_closed_h1(double a3, double c1) { return a3 * a3 - 0.5 * c1 * c1; }

double b20_closed_h2(double a3, double d0) { return a3 * a3 + d0; }

double b12_candidate_a(double z0, double omega, double v3) {
    return 1.0 / (8.0 * z0 * z0 * z0) - 3.0 * v3 / (8.0 * z0 * omega * omega);
}

double b12_candidate_b(double z0, double omega, double v3) {
    return -1.0 / (8.0 * z0 * z0 * z0) - v3 / (8.0 * z0 * omega * omega);
}

Complex energy_eigenvalue(const BnfCoefficients& bnf, int k, double h, int order) {
    if (k < 0) throw std::invalid_argument("energy_eigenvalue: k must be >= 0");
    if (order < 0) throw std::invalid_argument("energy_eigenvalue: order must be >= 0");
    const int cutoff = std::max(order, 1);
    const Complex iota = Complex(0.0, -0.5) * ((2.0 * k + 1.0) * h);
    const double h2 = h * h;

    auto q = [&](int j) -> Complex {
        switch (j) {
            case 0: return 1.0;
            case 1: return iota;
            case 2: return iota * iota - 0.25 * h2;
            case 3: return iota * iota * iota - 1.25 * h2 * iota;
        }
        throw std::invalid_argument("energy_eigenvalue: order beyond the supported table");
    };

    Complex e(bnf.z0 * bnf.z0, 0.0);
    for (const auto& [mj, val] : bnf.table) {
        const auto [m, j] = mj;
        if (m + j < 1 || m + j > cutoff) continue;
        e += 2.0 * bnf.omega * val * std::pow(h, m) * q(j);
    }
    return e;
}

double effective_h2_constant(const BnfCoefficients& bnf) {
    return bnf.b(2, 0) - 0.25 * bnf.b(0, 2);
}

}  // namespace qnm
