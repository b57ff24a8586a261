#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "qnm/barrier.hpp"
#include "qnm/bnf.hpp"
#include "qnm/chart.hpp"
#include "qnm/geometry.hpp"
#include "qnm/lattice.hpp"
#include "qnm/match.hpp"

namespace qnm {

/// Fixed significant-digit formatting used by every exporter so identical
/// inputs produce byte-identical files.
std::string format_number(double v, int precision = 12);

/// CSV schema: model,branch,k,l,n,re,im,multiplicity,order,candidate.
/// Rows sorted by (l, k, branch, candidate).
std::string pseudopoles_csv(std::vector<Pseudopole> poles, int precision = 12);

nlohmann::json pseudopoles_json(std::vector<Pseudopole> poles, int precision = 12);

/// CSV schema: x,value_re,value_im,grade,h.
std::string potential_csv(const std::vector<PotentialSample>& samples, int precision = 12);

nlohmann::json horizons_json(const BlackHoleParams& params, const HorizonData& horizons,
                             int precision = 12);
nlohmann::json barrier_json(const BarrierExpansion& expansion, int precision = 12);
nlohmann::json bnf_json(const BnfCoefficients& bnf, int precision = 12);
nlohmann::json convergence_json(const ConvergenceReport& report, int precision = 12);
nlohmann::json partner_json(const PartnerReport& report, int precision = 12);
nlohmann::json adjudication_json(const AdjudicationVerdict& verdict, int precision = 12);
nlohmann::json free_region_json(const FreeRegionReport& report, int precision = 12);

void write_text_file(const std::string& path, const std::string& content);

const char* grade_name(Grade grade);

}  // namespace qnm
