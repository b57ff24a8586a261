#pragma once

#include <string>
#include <vector>

#include "qnm/bnf.hpp"
#include "qnm/types.hpp"

namespace qnm {

/// One approximate resonance, with enough provenance to round-trip through
/// the exporters and the matching pipeline.
struct Pseudopole {
    Model model = Model::dSRN;
    std::string branch = "primary";     // "primary" | "mirror"
    std::string candidate = "engine";   // b12 source: engine | candidate_a | candidate_b
    int k = 0;                          // depth index
    double l = 0.0;                     // angular momentum (half-integer for dSRN)
    double n = 0.0;                     // l + 1/2
    int order = 2;
    int multiplicity = 1;
    Complex value{0.0, 0.0};
    bool axis_coincident = false;       // primary and mirror meet on i R
};

struct LatticeRequest {
    int kmax = 3;          // k = 0..kmax
    double lmin = 0.0;     // inclusive, step 1 in l
    double lmax = 0.0;
    int order = 2;         // 0/1: n z0 + f1;  2: adds f2 / n
    bool emit_candidates = false;  // also emit the closed-form b12 variants
};

/// Charged-case lattice mu = n z0 + f1 + f2/n for the Dirac angular
/// momenta l = lmin, lmin+1, ..., multiplicity 2l - 1.  l must be
/// half-integral.  With emit_candidates the two published b12 closed-form
/// variants are emitted alongside the recursion value, tagged.
std::vector<Pseudopole> dsrn_pseudopoles(const BnfCoefficients& bnf, const LatticeRequest& req);

/// Angular parameterization for the uncharged lattice: expansion in
/// (l + 1/2) (re-expanded, carries the extra -z0/8 shift) or in
/// sqrt(l(l+1)) directly.
enum class DssParam { l_half, l_full };

/// Uncharged-case lattice for integer l, multiplicity 2l + 1.
std::vector<Pseudopole> dss_pseudopoles(const BnfCoefficients& bnf, const LatticeRequest& req,
                                        DssParam param = DssParam::l_half);

/// Append the reflected family {-conj mu} as branch "mirror" and tag pairs
/// that coincide on the imaginary axis.  Ordering is deterministic:
/// primaries in input order, then mirrors in input order.
std::vector<Pseudopole> assemble_resonance_sets(const std::vector<Pseudopole>& primaries,
                                                double axis_tol = 1e-10);

struct RegionSpec {
    double re_min, re_max, im_min, im_max;
};

std::vector<Pseudopole> filter_region(const std::vector<Pseudopole>& poles, const RegionSpec& box);

/// f-series entries shared by the lattice builders, exposed for tests.
Complex lattice_f1(const BnfCoefficients& bnf, int k);
Complex lattice_f2(const BnfCoefficients& bnf, int k, double b12_override, bool use_override);

}  // namespace qnm
