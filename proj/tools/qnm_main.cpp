#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qnm/bnf.hpp"
#include "qnm/collocation.hpp"
#include "qnm/io.hpp"
#include "qnm/jost.hpp"
#include "qnm/lattice.hpp"
#include "qnm/match.hpp"
#include "qnm/zerofind.hpp"

namespace {

using namespace qnm;

struct RunConfig {
    double mass = 1.0;
    double charge = 0.0;
    double lambda = 0.02;
    std::string model = "dsrn";
    int kmax = 2;
    double lmin = -1.0;  // negative: model default
    double lmax = -1.0;
    int order = 2;
    double trunc_ratio = 0.25;
    int grid = 250;
    double theta = 0.5;
    std::string mode = "compact";
    double x_c = 30.0;
    std::string format = "csv";
    std::string out;
    std::string suite = "all";
    std::string grade = "";
    double h = 0.1;
    int precision = 12;
    bool candidates = false;

    BlackHoleParams params() const {
        BlackHoleParams p;
        p.mass = mass;
        p.charge = charge;
        p.lambda = lambda;
        if (model == "dsrn")
            p.model = Model::dSRN;
        else if (model == "dss")
            p.model = Model::dSS;
        else
            throw CLI::ValidationError("--model must be dsrn or dss");
        p.validate();
        return p;
    }

    void fill_l_defaults() {
        const bool dsrn = model == "dsrn";
        if (lmin < 0.0) lmin = dsrn ? 4.5 : 5.0;
        if (lmax < 0.0) lmax = lmin + 5.0;
    }

    ScalingSettings scaling() const {
        ScalingSettings s;
        s.grid = grid;
        s.theta = theta;
        return s;
    }
};

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.out.empty())
        std::cout << text;
    else
        write_text_file(cfg.out, text);
}

Grade parse_grade(const RunConfig& cfg) {
    const std::string g =
        cfg.grade.empty() ? (cfg.model == "dsrn" ? "dsrn_semiclassical" : "dss_semiclassical")
                          : cfg.grade;
    for (Grade cand : {Grade::alpha, Grade::alpha_prime, Grade::dirac_q, Grade::schrodinger_plus,
                       Grade::schrodinger_minus, Grade::dsrn_semiclassical,
                       Grade::dss_semiclassical})
        if (g == grade_name(cand)) return cand;
    throw CLI::ValidationError("unknown grade: " + g);
}

int cmd_horizons(const RunConfig& cfg) {
    const auto p = cfg.params();
    const auto hz = find_horizons(p);
    const auto bp = locate_barrier(p);
    nlohmann::json j = horizons_json(p, hz, cfg.precision);
    j["r0"] = nlohmann::json::parse(format_number(bp.r0, cfg.precision));
    j["z0"] = nlohmann::json::parse(format_number(bp.z0, cfg.precision));
    j["omega"] = nlohmann::json::parse(format_number(bp.omega, cfg.precision));
    emit(cfg, j.dump(2) + "\n");
    return 0;
}

int cmd_potential(const RunConfig& cfg) {
    const auto p = cfg.params();
    ChartMap chart(p);
    const Grade grade = parse_grade(cfg);
    std::vector<PotentialSample> samples;
    const double span = 30.0;
    const int npts = 601;
    for (int i = 0; i < npts; ++i) {
        const double x = -span + 2.0 * span * i / (npts - 1);
        samples.push_back(chart.potential(grade, cfg.h, x));
    }
    emit(cfg, potential_csv(samples, cfg.precision));
    return 0;
}

int cmd_barrier(const RunConfig& cfg) {
    const auto p = cfg.params();
    const auto e = taylor_expand(p);
    nlohmann::json j = barrier_json(e, cfg.precision);
    const auto chk = cross_check_printed_formulas(e);
    j["second_derivative_check"] = chk.v2_pass;
    emit(cfg, j.dump(2) + "\n");
    return 0;
}

int cmd_bnf(const RunConfig& cfg) {
    const auto p = cfg.params();
    const auto b = reduce_to_normal_form(taylor_expand(p));
    emit(cfg, bnf_json(b, cfg.precision).dump(2) + "\n");
    return 0;
}

int cmd_qnm(RunConfig cfg) {
    const auto p = cfg.params();
    cfg.fill_l_defaults();
    const auto b = reduce_to_normal_form(taylor_expand(p));
    LatticeRequest req;
    req.kmax = cfg.kmax;
    req.lmin = cfg.lmin;
    req.lmax = cfg.lmax;
    req.order = cfg.order;
    req.emit_candidates = cfg.candidates;
    const auto primaries = p.model == Model::dSRN ? dsrn_pseudopoles(b, req)
                                                  : dss_pseudopoles(b, req);
    const auto all = assemble_resonance_sets(primaries);
    if (cfg.format == "json")
        emit(cfg, pseudopoles_json(all, cfg.precision).dump(2) + "\n");
    else
        emit(cfg, pseudopoles_csv(all, cfg.precision));
    return 0;
}

bool suite_enabled(const RunConfig& cfg, const std::string& name) {
    return cfg.suite == "all" || cfg.suite == name;
}

int cmd_verify(RunConfig cfg) {
    const auto p = cfg.params();
    cfg.fill_l_defaults();
    nlohmann::json report;
    std::vector<std::string> failures;
    auto record = [&](const std::string& name, bool pass, nlohmann::json detail) {
        detail["pass"] = pass;
        report[name] = detail;
        if (!pass) failures.push_back(name);
        std::fprintf(stderr, "[%s] %s\n", pass ? "PASS" : "FAIL", name.c_str());
    };

    ChartMap chart(p);
    const auto exp = taylor_expand(p);
    const auto bnf = reduce_to_normal_form(exp);

    if (suite_enabled(cfg, "quadratic")) {
        const double z0 = exp.z0, w = exp.omega, h = 0.05;
        RayPotential pot = pointwise_ray(
            [z0, w](Complex z) { return z0 * z0 - w * w * z * z; });
        auto est = scaled_spectrum(pot, h, Complex(z0 * z0, 0.0), w, 6, cfg.scaling());
        double worst = 1.0;
        if (est.size() == 6) {
            worst = 0.0;
            for (int k = 0; k < 6; ++k) {
                const Complex exact(z0 * z0, -h * w * (2.0 * k + 1.0));
                worst = std::max(worst, std::abs(est[k].energy - exact) / std::abs(exact));
            }
        }
        record("quadratic", worst <= 1e-8, {{"worst_relative_error", worst}});
    }

    if (suite_enabled(cfg, "partner")) {
        const auto rep = partner_equivalence_check(chart, 0.1, 3, cfg.scaling());
        record("partner", rep.pass, partner_json(rep, cfg.precision));
    }

    if (suite_enabled(cfg, "union")) {
        const double n = 5.0, h = 1.0 / n;
        const LinePotential pot = dirac_line_potential(chart, h, true, cfg.x_c);
        const double z0 = exp.z0, w = exp.omega;
        Rectangle box{0.3 * z0 * n, (n + 2.5) * z0, -5.5 * w / z0, -1e-3};
        auto dq = find_zeros([&](Complex l) { return zs_coefficient(pot, l, +1); }, box);
        auto dm = find_zeros([&](Complex l) { return zs_coefficient(pot, l, -1); }, box);
        auto sz = find_zeros([&](Complex l) { return schrodinger_wronskian(pot, l, +1); }, box);
        std::vector<Complex> uni = dq;
        for (Complex z : dm) {
            bool dup = false;
            for (Complex u : uni) dup = dup || std::abs(u - z) < 1e-6;
            if (!dup) uni.push_back(z);
        }
        double worst = 0.0;
        bool pass = sz.size() >= 6 && uni.size() == sz.size();
        for (Complex z : sz) {
            double best = 1e300;
            for (Complex u : uni) best = std::min(best, std::abs(u - z));
            worst = std::max(worst, best);
        }
        pass = pass && worst <= 1e-6;
        record("union", pass,
               {{"schrodinger_zeros", sz.size()},
                {"dirac_union_zeros", uni.size()},
                {"worst_match", worst}});
    }

    if (suite_enabled(cfg, "convergence")) {
        std::vector<double> ls;
        const bool dsrn = p.model == Model::dSRN;
        for (double l = dsrn ? 4.5 : 5.0; l <= 50.0; l *= 1.6)
            ls.push_back(dsrn ? std::floor(l) + 0.5 : std::round(l));
        nlohmann::json both = nlohmann::json::array();
        bool pass = true;
        for (int order : {1, 2}) {
            const auto rep = lattice_convergence(chart, bnf, order, cfg.kmax, ls, cfg.scaling());
            for (const auto& s : rep.per_k) {
                pass = pass && s.fit.points >= 4 && std::abs(s.fit.slope + order) <= 0.5;
            }
            both.push_back(convergence_json(rep, cfg.precision));
        }
        record("convergence", pass, {{"orders", both}});
    }

    if (suite_enabled(cfg, "adjudicate") && p.model == Model::dSRN) {
        std::vector<double> ls;
        for (double l = 4.5; l <= 50.0; l *= 1.6) ls.push_back(std::floor(l) + 0.5);
        const auto v = adjudicate_b12(chart, bnf, cfg.kmax, ls, cfg.scaling());
        record("adjudicate", true, adjudication_json(v, cfg.precision));
    }

    if (suite_enabled(cfg, "freeregion")) {
        const auto rep = free_region_scan(chart, 10.0, 10.0, 0.5 * std::min(
            chart.horizons().kappa_minus(), -chart.horizons().kappa_plus()), cfg.x_c);
        record("freeregion", rep.pass, free_region_json(rep, cfg.precision));
    }

    report["failures"] = failures;
    emit(cfg, report.dump(2) + "\n");
    return failures.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"barrier-top quasinormal mode lattice toolkit"};
    app.require_subcommand(1);

    RunConfig cfg;
    app.set_config("--config")->configurable(false);
    app.add_option("--mass", cfg.mass, "black hole mass M > 0")->configurable(true);
    app.add_option("--charge", cfg.charge, "charge Q, Q^2 < 9M^2/8");
    app.add_option("--lambda", cfg.lambda, "cosmological constant >= 0");
    app.add_option("--model", cfg.model, "dsrn | dss");
    app.add_option("--kmax", cfg.kmax, "depth index range 0..kmax");
    app.add_option("--lmin", cfg.lmin, "smallest angular momentum");
    app.add_option("--lmax", cfg.lmax, "largest angular momentum");
    app.add_option("--order", cfg.order, "lattice/energy expansion order")
        ->check(CLI::Range(0, 3));
    app.add_option("--grid", cfg.grid, "collocation interior points");
    app.add_option("--theta", cfg.theta, "complex scaling angle");
    app.add_option("--mode", cfg.mode, "strip | compact (Jost searches)");
    app.add_option("--format", cfg.format, "csv | json");
    app.add_option("--out", cfg.out, "output path (default stdout)");
    app.add_option("--suite", cfg.suite,
                   "verify suite: all|quadratic|partner|union|convergence|adjudicate|freeregion");
    app.add_option("--grade", cfg.grade, "potential grade for the potential command");
    app.add_option("--hbar", cfg.h, "semiclassical parameter for the potential command");
    app.add_option("--trunc-ratio", cfg.trunc_ratio, "lattice truncation kappa (k <= kappa l)");
    app.add_flag("--candidates", cfg.candidates, "emit closed-form b12 candidate lattices");

    // flags may appear after the subcommand name; they fall through to the
    // global option set
    app.add_subcommand("horizons", "lapse roots, surface gravities, barrier data")->fallthrough();
    app.add_subcommand("potential", "sample a graded potential on the real line")->fallthrough();
    app.add_subcommand("barrier", "barrier-top Taylor data")->fallthrough();
    app.add_subcommand("bnf", "Birkhoff normal form coefficient table")->fallthrough();
    app.add_subcommand("qnm", "pseudopole lattice")->fallthrough();
    app.add_subcommand("verify", "oracle verification suites")->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand("horizons")) return cmd_horizons(cfg);
        if (app.got_subcommand("potential")) return cmd_potential(cfg);
        if (app.got_subcommand("barrier")) return cmd_barrier(cfg);
        if (app.got_subcommand("bnf")) return cmd_bnf(cfg);
        if (app.got_subcommand("qnm")) return cmd_qnm(cfg);
        if (app.got_subcommand("verify")) return cmd_verify(cfg);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
