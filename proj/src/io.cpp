#include "qnm/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qnm {

namespace {

using nlohmann::json;

void sort_poles(std::vector<Pseudopole>& poles) {
    std::sort(poles.begin(), poles.end(), [](const Pseudopole& a, const Pseudopole& b) {
        if (a.l != b.l) return a.l < b.l;
        if (a.k != b.k) return a.k < b.k;
        if (a.branch != b.branch) return a.branch < b.branch;
        return a.candidate < b.candidate;
    });
}

}  // namespace

std::string format_number(double v, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    return buf;
}

const char* grade_name(Grade grade) {
    switch (grade) {
        case Grade::alpha: return "alpha";
        case Grade::alpha_prime: return "alpha_prime";
        case Grade::dirac_q: return "dirac_q";
        case Grade::schrodinger_plus: return "schrodinger_plus";
        case Grade::schrodinger_minus: return "schrodinger_minus";
        case Grade::dsrn_semiclassical: return "dsrn_semiclassical";
        case Grade::dss_semiclassical: return "dss_semiclassical";
    }
    return "unknown";
}

std::string pseudopoles_csv(std::vector<Pseudopole> poles, int precision) {
    sort_poles(poles);
    std::ostringstream out;
    out << "model,branch,k,l,n,re,im,multiplicity,order,candidate\n";
    for (const auto& p : poles) {
        out << to_string(p.model) << ',' << p.branch << ',' << p.k << ','
            << format_number(p.l, precision) << ',' << format_number(p.n, precision) << ','
            << format_number(p.value.real(), precision) << ','
            << format_number(p.value.imag(), precision) << ',' << p.multiplicity << ','
            << p.order << ',' << p.candidate << '\n';
    }
    return out.str();
}

nlohmann::json pseudopoles_json(std::vector<Pseudopole> poles, int precision) {
    sort_poles(poles);
    json rows = json::array();
    for (const auto& p : poles) {
        rows.push_back({{"model", to_string(p.model)},
                        {"branch", p.branch},
                        {"k", p.k},
                        {"l", p.l},
                        {"n", p.n},
                        {"re", json::parse(format_number(p.value.real(), precision))},
                        {"im", json::parse(format_number(p.value.imag(), precision))},
                        {"multiplicity", p.multiplicity},
                        {"order", p.order},
                        {"candidate", p.candidate},
                        {"axis_coincident", p.axis_coincident}});
    }
    return json{{"pseudopoles", rows}};
}

std::string potential_csv(const std::vector<PotentialSample>& samples, int precision) {
    std::ostringstream out;
    out << "x,value_re,value_im,grade,h\n";
    for (const auto& s : samples) {
        out << format_number(s.x.real(), precision) << ','
            << format_number(s.value.real(), precision) << ','
            << format_number(s.value.imag(), precision) << ',' << grade_name(s.grade) << ','
            << format_number(s.h, precision) << '\n';
    }
    return out.str();
}

nlohmann::json horizons_json(const BlackHoleParams& params, const HorizonData& horizons,
                             int precision) {
    json roots = json::array(), kappas = json::array();
    for (double r : horizons.roots) roots.push_back(json::parse(format_number(r, precision)));
    for (double k : horizons.kappas) kappas.push_back(json::parse(format_number(k, precision)));
    return json{{"model", to_string(params.model)},
                {"mass", params.mass},
                {"charge", params.charge},
                {"lambda", params.lambda},
                {"roots", roots},
                {"surface_gravities", kappas}};
}

nlohmann::json barrier_json(const BarrierExpansion& e, int precision) {
    auto series = [&](const Series& s) {
        json a = json::array();
        for (double c : s.coefficients()) a.push_back(json::parse(format_number(c, precision)));
        return a;
    };
    return json{{"r0", json::parse(format_number(e.r0, precision))},
                {"z0", json::parse(format_number(e.z0, precision))},
                {"omega", json::parse(format_number(e.omega, precision))},
                {"order", e.order},
                {"taylor_h0", series(e.taylor_h0)},
                {"taylor_h1", series(e.taylor_h1)},
                {"taylor_h2", series(e.taylor_h2)}};
}

nlohmann::json bnf_json(const BnfCoefficients& b, int precision) {
    json table = json::array();
    for (const auto& [mj, val] : b.table) {
        table.push_back({{"h_power", mj.first},
                         {"omega_power", mj.second},
                         {"value", json::parse(format_number(val, precision))}});
    }
    return json{{"model", to_string(b.model)},
                {"z0", json::parse(format_number(b.z0, precision))},
                {"omega", json::parse(format_number(b.omega, precision))},
                {"e0", json::parse(format_number(b.e0, precision))},
                {"max_grade", b.max_grade},
                {"effective_h2_constant",
                 json::parse(format_number(effective_h2_constant(b), precision))},
                {"table", table}};
}

nlohmann::json convergence_json(const ConvergenceReport& rep, int precision) {
    json per_k = json::array();
    for (const auto& s : rep.per_k) {
        json pts = json::array();
        for (std::size_t i = 0; i < s.n.size(); ++i)
            pts.push_back({{"n", s.n[i]},
                           {"distance", json::parse(format_number(s.distance[i], precision))}});
        per_k.push_back({{"k", s.k},
                         {"slope", json::parse(format_number(s.fit.slope, precision))},
                         {"residual", json::parse(format_number(s.fit.residual, precision))},
                         {"points", pts}});
    }
    return json{{"model", to_string(rep.model)},
                {"order", rep.order},
                {"oracle_complete", rep.oracle_complete},
                {"per_k", per_k}};
}

nlohmann::json partner_json(const PartnerReport& rep, int precision) {
    auto list = [&](const std::vector<Complex>& v) {
        json a = json::array();
        for (Complex z : v)
            a.push_back({{"re", json::parse(format_number(z.real(), precision))},
                         {"im", json::parse(format_number(z.imag(), precision))}});
        return a;
    };
    return json{{"pass", rep.pass},
                {"max_relative_gap", json::parse(format_number(rep.max_relative_gap, precision))},
                {"plus", list(rep.plus)},
                {"minus", list(rep.minus)}};
}

nlohmann::json adjudication_json(const AdjudicationVerdict& v, int precision) {
    return nlohmann::json{
        {"winner", v.winner},
        {"slope_engine", json::parse(format_number(v.slope_engine, precision))},
        {"slope_candidate_a", json::parse(format_number(v.slope_candidate_a, precision))},
        {"slope_candidate_b", json::parse(format_number(v.slope_candidate_b, precision))},
        {"notes", v.notes}};
}

nlohmann::json free_region_json(const FreeRegionReport& rep, int precision) {
    return nlohmann::json{
        {"re_min", json::parse(format_number(rep.box.re_min, precision))},
        {"re_max", json::parse(format_number(rep.box.re_max, precision))},
        {"im_min", json::parse(format_number(rep.box.im_min, precision))},
        {"im_max", json::parse(format_number(rep.box.im_max, precision))},
        {"vacuous", rep.vacuous},
        {"zero_count", rep.zero_count},
        {"pass", rep.pass}};
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f << content;
    if (!f) throw std::runtime_error("write failed: " + path);
}

}  // namespace qnm
