#pragma once

#include <cmath>
#include <map>
#include <utility>

#include "qnm/barrier.hpp"
#include "qnm/symbol.hpp"
#include "qnm/types.hpp"

namespace qnm {

/// Quantum Birkhoff normal-form table: H ~ e0 + sum b_{m,j} h^m Omega^j
/// after conjugation, with Omega the harmonic symbol (xi^2 - x^2)/2.
/// The (0,1) entry is 1 by construction; reduce_to_normal_form enforces it.
struct BnfCoefficients {
    Model model = Model::dSRN;
    double z0 = 0.0;
    double omega = 0.0;
    double e0 = 0.0;  // z0^2 / (2 omega)
    double v3 = 0.0;  // third x-derivative of the barrier potential, for audits
    int max_grade = 8;
    std::map<std::pair<int, int>, double> table;  // (m, j) -> b_{m,j}

    double b(int m, int j) const {
        auto it = table.find({m, j});
        return it == table.end() ? 0.0 : it->second;
    }
};

/// Rescaled barrier Hamiltonian xi^2/2 - x^2/2 + e0 + perturbation, the
/// input of the normal-form recursion.  The named coefficient lists mirror
/// the symbol for audits (a: h^0 x^j, c: h^1 x^j, d: h^2 x^j).
struct NormalizedHamiltonian {
    Model model = Model::dSRN;
    double z0 = 0.0;
    double omega = 0.0;
    double e0 = 0.0;
    int max_grade = 8;
    GradedSymbol<double> symbol;
    std::map<int, double> a, c, d;
};

/// Kill the off-diagonal part of H grade by grade with Moyal-exponential
/// conjugations.  H must be Omega + (terms of grade >= 3) + constants; the
/// returned map sends (h-power m, Omega-power j) to b_{m,j}.  Exact over a
/// rational field.
template <typename T>
std::map<std::pair<int, int>, T> reduce_symbol(GradedSymbol<T> h_symbol) {
    const int maxg = h_symbol.max_grade();

    for (int g = 3; g <= maxg; ++g) {
        GradedSymbol<T> r_uv = to_uv(h_symbol.grade_part(g));
        GradedSymbol<T> s_uv(maxg);
        for (const auto& [mono, coef] : r_uv.terms()) {
            const int p = mono.x, q = mono.xi;
            if (p == q) continue;
            s_uv.add(mono, (T(0) - coef) / T(q - p));
        }
        if (s_uv.empty()) continue;
        const GradedSymbol<T> s = from_uv(s_uv);

        // exp((i/h) ad_S) truncated by grade
        GradedSymbol<T> acc = h_symbol;
        GradedSymbol<T> cur = h_symbol;
        T factorial(1);
        for (int k = 1; k <= maxg; ++k) {
            cur = moyal_adjoint(s, cur);
            if (cur.empty()) break;
            factorial *= T(k);
            acc = acc + cur.scaled(T(1) / factorial);
        }
        h_symbol = acc;
    }

    // read off u^j v^j h^m = (-2 Omega)^j h^m
    GradedSymbol<T> diag = to_uv(h_symbol);
    std::map<std::pair<int, int>, T> out;
    for (const auto& [mono, coef] : diag.terms()) {
        if (mono.x != mono.xi) continue;
        const int j = mono.x;
        T scale(1);
        for (int a = 0; a < j; ++a) scale *= T(-2);
        out[{mono.h, j}] += coef * scale;
    }
    return out;
}

/// Residual off-diagonal mass after reduction, for numerical audits.
template <typename T>
T off_diagonal_residual(GradedSymbol<T> h_symbol) {
    GradedSymbol<T> uv = to_uv(h_symbol);
    T r(0);
    for (const auto& [mono, coef] : uv.terms()) {
        if (mono.x == mono.xi) continue;
        r += coef * coef;
    }
    return r;
}

/// Build the rescaled Hamiltonian symbol from the barrier Taylor data
/// (x -> omega^{-1/2} x, overall factor 1/(2 omega)).
NormalizedHamiltonian normalize_hamiltonian(const BarrierExpansion& exp, int max_grade = 8);

/// Full pipeline: normalize, reduce, package.  Throws std::runtime_error
/// when the (0,1) entry deviates from 1 beyond roundoff or the reduction
/// leaves off-diagonal mass.
BnfCoefficients reduce_to_normal_form(const BarrierExpansion& exp, int max_grade = 8);

/// Closed forms for the leading table entries in terms of the named input
/// coefficients.  Used as independent checks of the recursion.
double b02_closed(double a3, double a4);                 // 15/4 a3^2 + 3/2 a4
double b12_closed(double a3, double c1, double c2);      // -3 c1 a3 - c2
double b20_closed_h1(double a3, double c1);              // a3^2 - c1^2/2  (h^1 coupling)
double b20_closed_h2(double a3, double d0);              // a3^2 + d0      (h^2 coupling)

/// Two published candidate closed forms for b_{1,2}; they disagree with
/// each other and with the recursion, so both are carried until the
/// spectral adjudication picks one (or neither).
double b12_candidate_a(double z0, double omega, double v3);
double b12_candidate_b(double z0, double omega, double v3);

/// E_k(h) = z0^2 + 2 omega sum b_{m,j} h^m q_j(iota, h) over
/// 1 <= m + j <= max(order, 1), iota = (2k+1) h / (2i).  q_j is the
/// spectral substitution for the j-th power of the harmonic symbol under
/// Weyl quantization: q_1 = iota, q_2 = iota^2 - h^2/4,
/// q_3 = iota^3 - (5/4) h^2 iota.  (The h^2 shifts are required: the
/// operator power Op(Omega)^j and the Weyl quantization of Omega^j differ
/// at O(h^2), which feeds the resonance constant at second order.)
/// Order 0 is the oscillator lattice z0^2 - i h omega (2k+1).
Complex energy_eigenvalue(const BnfCoefficients& bnf, int k, double h, int order);

/// Constant that actually multiplies h^2 in E/(2 omega): the table entry
/// b_{2,0} shifted by the Weyl-ordering term -b_{0,2}/4.
double effective_h2_constant(const BnfCoefficients& bnf);

}  // namespace qnm
