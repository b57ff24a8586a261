#include "qnm/lattice.hpp"

#include <cmath>
#include <stdexcept>

namespace qnm {

Complex lattice_f1(const BnfCoefficients& bnf, int k) {
    return Complex(0.0, -1.0) * (bnf.omega * (2.0 * k + 1.0)) / (2.0 * bnf.z0);
}

Complex lattice_f2(const BnfCoefficients& bnf, int k, double b12_override, bool use_override) {
    const double z0 = bnf.z0, w = bnf.omega;
    const double s = 2.0 * k + 1.0;
    const double b02 = bnf.b(0, 2);
    const double b12 = use_override ? b12_override : bnf.b(1, 1);
    const double b20 = effective_h2_constant(bnf);  // Weyl-ordering shift included
    return Complex(w * w * s * s / (8.0 * z0 * z0 * z0) - w / (4.0 * z0) * b02 * s * s +
                       w / z0 * b20,
                   -w / (2.0 * z0) * b12 * s);
}

namespace {

Complex lattice_value(const BnfCoefficients& bnf, int k, double n, int order,
                      double b12_override, bool use_override, double extra_f2_shift) {
    Complex mu = n * bnf.z0 + lattice_f1(bnf, k);
    if (order >= 2)
        mu += (lattice_f2(bnf, k, b12_override, use_override) + extra_f2_shift) / n;
    return mu;
}

bool is_half_integer(double l) { return std::abs(2.0 * l - std::round(2.0 * l)) < 1e-12; }

}  // namespace

std::vector<Pseudopole> dsrn_pseudopoles(const BnfCoefficients& bnf, const LatticeRequest& req) {
    if (bnf.model != Model::dSRN)
        throw std::invalid_argument("dsrn_pseudopoles: coefficient table is not dSRN");
    if (!(req.lmax >= req.lmin) || req.kmax < 0)
        throw std::invalid_argument("dsrn_pseudopoles: empty request");
    if (!is_half_integer(req.lmin) || std::abs(std::round(req.lmin) - req.lmin) < 0.25)
        throw std::invalid_argument("dsrn_pseudopoles: l must be half-integral (1/2, 3/2, ...)");

    std::vector<Pseudopole> out;
    for (double l = req.lmin; l <= req.lmax + 1e-9; l += 1.0) {
        const double n = l + 0.5;
        for (int k = 0; k <= req.kmax; ++k) {
            Pseudopole p;
            p.model = Model::dSRN;
            p.k = k;
            p.l = l;
            p.n = n;
            p.order = req.order;
            p.multiplicity = static_cast<int>(std::lround(2.0 * l - 1.0));
            p.value = lattice_value(bnf, k, n, req.order, 0.0, false, 0.0);
            out.push_back(p);
            if (req.emit_candidates && req.order >= 2) {
                const double ca = b12_candidate_a(bnf.z0, bnf.omega, bnf.v3);
                const double cb = b12_candidate_b(bnf.z0, bnf.omega, bnf.v3);
                Pseudopole qa = p;
                qa.candidate = "candidate_a";
                qa.value = lattice_value(bnf, k, n, req.order, ca, true, 0.0);
                out.push_back(qa);
                Pseudopole qb = p;
                qb.candidate = "candidate_b";
                qb.value = lattice_value(bnf, k, n, req.order, cb, true, 0.0);
                out.push_back(qb);
            }
        }
    }
    return out;
}

std::vector<Pseudopole> dss_pseudopoles(const BnfCoefficients& bnf, const LatticeRequest& req,
                                        DssParam param) {
    if (bnf.model != Model::dSS)
        throw std::invalid_argument("dss_pseudopoles: coefficient table is not dSS");
    if (!(req.lmax >= req.lmin) || req.kmax < 0)
        throw std::invalid_argument("dss_pseudopoles: empty request");
    if (std::abs(req.lmin - std::round(req.lmin)) > 1e-12 || req.lmin < 1.0)
        throw std::invalid_argument("dss_pseudopoles: l must be an integer >= 1");

    std::vector<Pseudopole> out;
    for (double l = req.lmin; l <= req.lmax + 1e-9; l += 1.0) {
        for (int k = 0; k <= req.kmax; ++k) {
            Pseudopole p;
            p.model = Model::dSS;
            p.k = k;
            p.l = l;
            p.n = l + 0.5;
            p.order = req.order;
            p.multiplicity = static_cast<int>(std::lround(2.0 * l + 1.0));
            if (param == DssParam::l_half) {
                // re-expanded in n = l + 1/2: sqrt(l(l+1)) = n - 1/(8n) + ...
                p.value = lattice_value(bnf, k, p.n, req.order, 0.0, false, -bnf.z0 / 8.0);
            } else {
                const double nu = std::sqrt(l * (l + 1.0));
                p.value = lattice_value(bnf, k, nu, req.order, 0.0, false, 0.0);
            }
            out.push_back(p);
        }
    }
    return out;
}

std::vector<Pseudopole> assemble_resonance_sets(const std::vector<Pseudopole>& primaries,
                                                double axis_tol) {
    std::vector<Pseudopole> out = primaries;
    for (const Pseudopole& p : primaries) {
        Pseudopole m = p;
        m.branch = "mirror";
        m.value = -std::conj(p.value);
        m.axis_coincident = std::abs(p.value.real()) <= axis_tol;
        out.push_back(m);
    }
    for (Pseudopole& p : out)
        if (p.branch == "primary") p.axis_coincident = std::abs(p.value.real()) <= axis_tol;
    return out;
}

std::vector<Pseudopole> filter_region(const std::vector<Pseudopole>& poles,
                                      const RegionSpec& box) {
    std::vector<Pseudopole> out;
    for (const Pseudopole& p : poles) {
        const double re = p.value.real(), im = p.value.imag();
        if (re >= box.re_min && re <= box.re_max && im >= box.im_min && im <= box.im_max)
            out.push_back(p);
    }
    return out;
}

}  // namespace qnm
