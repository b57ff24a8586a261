#pragma once

#include <cassert>
#include <cmath>
#include <cstddef>
#include <vector>

namespace qnm {

/// Dense truncated Taylor series sum_m c[m] (x - x0)^m, fixed truncation
/// order.  Arithmetic truncates consistently; used for exact chain-rule
/// expansion of the potential at the barrier top.
class Series {
  public:
    Series() = default;
    explicit Series(std::size_t order) : c_(order + 1, 0.0) {}
    Series(std::size_t order, double constant) : c_(order + 1, 0.0) { c_[0] = constant; }

    std::size_t order() const { return c_.size() - 1; }
    double& operator[](std::size_t m) { return c_[m]; }
    double operator[](std::size_t m) const { return c_[m]; }

    Series operator+(const Series& o) const {
        Series r(order());
        for (std::size_t m = 0; m <= order(); ++m) r.c_[m] = c_[m] + o.c_[m];
        return r;
    }
    Series operator-(const Series& o) const {
        Series r(order());
        for (std::size_t m = 0; m <= order(); ++m) r.c_[m] = c_[m] - o.c_[m];
        return r;
    }
    Series operator*(const Series& o) const {
        Series r(order());
        for (std::size_t m = 0; m <= order(); ++m)
            for (std::size_t k = 0; k <= m; ++k) r.c_[m] += c_[k] * o.c_[m - k];
        return r;
    }
    Series operator*(double s) const {
        Series r(*this);
        for (auto& v : r.c_) v *= s;
        return r;
    }

    /// 1/this; requires nonzero constant term.
    Series inverse() const {
        assert(c_[0] != 0.0);
        Series r(order());
        r.c_[0] = 1.0 / c_[0];
        for (std::size_t m = 1; m <= order(); ++m) {
            double acc = 0.0;
            for (std::size_t k = 1; k <= m; ++k) acc += c_[k] * r.c_[m - k];
            r.c_[m] = -acc / c_[0];
        }
        return r;
    }

    /// sqrt(this); requires positive constant term.
    Series sqrt() const {
        assert(c_[0] > 0.0);
        Series r(order());
        r.c_[0] = std::sqrt(c_[0]);
        for (std::size_t m = 1; m <= order(); ++m) {
            double acc = 0.0;
            for (std::size_t k = 1; k < m; ++k) acc += r.c_[k] * r.c_[m - k];
            r.c_[m] = (c_[m] - acc) / (2.0 * r.c_[0]);
        }
        return r;
    }

    /// d/dx, same truncation order (top coefficient becomes stale zero).
    Series derivative() const {
        Series r(order());
        for (std::size_t m = 1; m <= order(); ++m) r.c_[m - 1] = c_[m] * static_cast<double>(m);
        return r;
    }

    /// m! * c[m], i.e. the m-th derivative at the expansion point.
    double derivative_at_origin(std::size_t m) const {
        double f = 1.0;
        for (std::size_t k = 2; k <= m; ++k) f *= static_cast<double>(k);
        return c_[m] * f;
    }

    const std::vector<double>& coefficients() const { return c_; }

  private:
    std::vector<double> c_;
};

inline Series operator*(double s, const Series& a) { return a * s; }

}  // namespace qnm
