#pragma once

#include <map>
#include <string>
#include <vector>

#include "qnm/collocation.hpp"
#include "qnm/lattice.hpp"
#include "qnm/zerofind.hpp"

namespace qnm {

struct SlopeFit {
    double slope = 0.0;
    double intercept = 0.0;
    double residual = 0.0;  // rms of log-residuals
    int points = 0;
};

/// Least-squares line through (log x, log y).
SlopeFit fit_log_slope(const std::vector<double>& xs, const std::vector<double>& ys);

struct MatchPair {
    Pseudopole pole;
    ResonanceEstimate estimate;
    double distance = 0.0;
};

struct MatchReport {
    std::vector<MatchPair> pairs;
    std::vector<Pseudopole> unmatched_poles;
    std::vector<ResonanceEstimate> unmatched_estimates;
};

/// Greedy nearest-neighbour pairing within the matching radius.
MatchReport match_sets(const std::vector<Pseudopole>& poles,
                       const std::vector<ResonanceEstimate>& estimates, double radius);

struct PartnerReport {
    bool pass = false;
    double max_relative_gap = 0.0;
    std::vector<Complex> plus, minus;  // lambda lists of the two partners
};

/// Resonances of the two superpartner potentials q^2 + h q' and q^2 - h q'
/// must agree; compares the first `count` from the scaling solver.
PartnerReport partner_equivalence_check(const ChartMap& chart, double h, int count,
                                        const ScalingSettings& settings, double rel_tol = 1e-6);

struct ConvergenceSeries {
    int k = 0;
    std::vector<double> n;         // l + 1/2
    std::vector<double> distance;  // |mu_lattice - mu_oracle|
    SlopeFit fit;
};

struct ConvergenceReport {
    Model model = Model::dSRN;
    int order = 2;
    std::vector<ConvergenceSeries> per_k;
    bool oracle_complete = true;  // every (k, l) produced a stable estimate
};

/// Oracle estimates mu = sqrt(E)/h for each l, matched against the
/// order-nu lattice; distances fitted against n = l + 1/2 per k.
ConvergenceReport lattice_convergence(const ChartMap& chart, const BnfCoefficients& bnf,
                                      int order, int kmax, const std::vector<double>& ls,
                                      const ScalingSettings& settings);

struct AdjudicationVerdict {
    std::string winner = "inconclusive";  // candidate_a | candidate_b | inconclusive
    double slope_engine = 0.0;
    double slope_candidate_a = 0.0;
    double slope_candidate_b = 0.0;
    std::string notes;
};

/// Order-2 residual slopes for the two published b12 closed forms (and the
/// recursion value, for reference); a candidate wins only if it alone
/// reaches slope -2 +- 0.5.
AdjudicationVerdict adjudicate_b12(const ChartMap& chart, const BnfCoefficients& bnf, int kmax,
                                   const std::vector<double>& ls,
                                   const ScalingSettings& settings);

struct FreeRegionReport {
    Rectangle box{0.0, 0.0, 0.0, 0.0};
    bool vacuous = false;
    int zero_count = 0;
    bool pass = false;
};

/// Argument-principle zero count of the compact-mode transition
/// coefficients (both potential signs) over [R, n/R] + i[-C0, 0].
FreeRegionReport free_region_scan(const ChartMap& chart, double n, double big_r, double c0,
                                  double x_c = 30.0);

}  // namespace qnm
