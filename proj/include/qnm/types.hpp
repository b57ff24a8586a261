#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace qnm {

using Complex = std::complex<double>;

enum class Model { dSRN, dSS };

inline const char* to_string(Model m) { return m == Model::dSRN ? "dsrn" : "dss"; }

/// Physical parameters of the black hole in geometric units.
struct BlackHoleParams {
    double mass   = 1.0;   // M > 0
    double charge = 0.0;   // Q, with Q^2 < (9/8) M^2
    double lambda = 0.0;   // cosmological constant, >= 0
    Model  model  = Model::dSRN;

    void validate() const {
        if (!(mass > 0.0))
            throw std::invalid_argument("mass must be positive");
        if (!(charge * charge < 9.0 / 8.0 * mass * mass))
            throw std::invalid_argument("charge^2 must be below (9/8) mass^2");
        if (lambda < 0.0)
            throw std::invalid_argument("lambda must be non-negative");
        if (model == Model::dSS && charge != 0.0)
            throw std::invalid_argument("dSS model requires zero charge");
    }
};

/// Thrown when the lapse function does not develop the horizon structure
/// the model needs (e.g. lambda*M^2 too large, merged horizons).
class InadmissibleParameters : public std::runtime_error {
  public:
    explicit InadmissibleParameters(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qnm
