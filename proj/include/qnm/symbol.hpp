#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace qnm {

/// Monomial x^i xi^j h^m; total grade i + j + 2m (h counts twice).
struct Monomial {
    int x = 0, xi = 0, h = 0;
    int grade() const { return x + xi + 2 * h; }
    auto operator<=>(const Monomial&) const = default;
};

/// Exact graded polynomial in (x, xi, h) over a field T (double or a
/// rational type).  All operations truncate to max_grade.
template <typename T>
class GradedSymbol {
  public:
    explicit GradedSymbol(int max_grade = 12) : max_grade_(max_grade) {}

    int max_grade() const { return max_grade_; }
    const std::map<Monomial, T>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    void add(Monomial mono, const T& c) {
        if (mono.grade() > max_grade_) return;
        auto [it, inserted] = terms_.emplace(mono, c);
        if (!inserted) {
            it->second += c;
            if (it->second == T(0)) terms_.erase(it);
        } else if (c == T(0)) {
            terms_.erase(it);
        }
    }

    T coefficient(Monomial mono) const {
        auto it = terms_.find(mono);
        return it == terms_.end() ? T(0) : it->second;
    }

    GradedSymbol operator+(const GradedSymbol& o) const {
        GradedSymbol r(*this);
        for (const auto& [mono, c] : o.terms_) r.add(mono, c);
        return r;
    }
    GradedSymbol operator-(const GradedSymbol& o) const {
        GradedSymbol r(*this);
        for (const auto& [mono, c] : o.terms_) r.add(mono, T(0) - c);
        return r;
    }
    GradedSymbol scaled(const T& s) const {
        GradedSymbol r(max_grade_);
        for (const auto& [mono, c] : terms_) r.add(mono, c * s);
        return r;
    }

    /// Partial derivatives d^nx d^kxi applied termwise.
    GradedSymbol derivative(int nx, int nxi) const {
        GradedSymbol r(max_grade_);
        for (const auto& [mono, c] : terms_) {
            if (mono.x < nx || mono.xi < nxi) continue;
            T f = c;
            for (int a = 0; a < nx; ++a) f *= T(mono.x - a);
            for (int a = 0; a < nxi; ++a) f *= T(mono.xi - a);
            r.add({mono.x - nx, mono.xi - nxi, mono.h}, f);
        }
        return r;
    }

    GradedSymbol multiplied(const GradedSymbol& o) const {
        GradedSymbol r(max_grade_);
        for (const auto& [a, ca] : terms_)
            for (const auto& [b, cb] : o.terms_) r.add({a.x + b.x, a.xi + b.xi, a.h + b.h}, ca * cb);
        return r;
    }

    /// Multiply every term by h^k.
    GradedSymbol times_h(int k) const {
        GradedSymbol r(max_grade_);
        for (const auto& [mono, c] : terms_) r.add({mono.x, mono.xi, mono.h + k}, c);
        return r;
    }

    /// Keep only terms of the given total grade.
    GradedSymbol grade_part(int g) const {
        GradedSymbol r(max_grade_);
        for (const auto& [mono, c] : terms_)
            if (mono.grade() == g) r.add(mono, c);
        return r;
    }

  private:
    int max_grade_;
    std::map<Monomial, T> terms_;
};

namespace detail {
inline long long binomial(int n, int k) {
    long long r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}
}  // namespace detail

/// j-th Moyal bracket {a,b}_j = sum_n C(j,n)(-1)^n d_x^n d_xi^{j-n} a *
/// d_x^{j-n} d_xi^n b.  j = 1 is the Poisson bracket a_xi b_x - a_x b_xi.
template <typename T>
GradedSymbol<T> moyal_bracket(const GradedSymbol<T>& a, const GradedSymbol<T>& b, int j) {
    GradedSymbol<T> r(a.max_grade());
    for (int n = 0; n <= j; ++n) {
        const T sign = (n % 2 == 0) ? T(detail::binomial(j, n)) : T(-detail::binomial(j, n));
        r = r + a.derivative(n, j - n).multiplied(b.derivative(j - n, n)).scaled(sign);
    }
    return r;
}

/// (i/h)[S, X]^star = {S,X}_1 - (h^2/24){S,X}_3 + (h^4/1920){S,X}_5 - ...
template <typename T>
GradedSymbol<T> moyal_adjoint(const GradedSymbol<T>& s, const GradedSymbol<T>& x) {
    GradedSymbol<T> r(x.max_grade());
    // coefficient of {.,.}_j is (-1)^{(j-1)/2} / (j! 2^{j-1})
    T denom_fact(1);
    for (int j = 1; j <= x.max_grade(); j += 2) {
        for (int f = (j == 1) ? 1 : j - 1; f <= j; ++f) denom_fact *= T(f);
        const long long two_pow = 1LL << (j - 1);
        T coef = T(1) / (denom_fact * T(two_pow));
        if (((j - 1) / 2) % 2 == 1) coef = T(0) - coef;
        GradedSymbol<T> br = moyal_bracket(s, x, j);
        if (br.empty()) continue;
        r = r + br.times_h(j - 1).scaled(coef);
    }
    return r;
}

/// Change of basis x = (u+v)/2, xi = (u-v)/2; Omega = (xi^2 - x^2)/2 = -uv/2.
/// Returns map keyed the same way with (x -> u-power, xi -> v-power).
template <typename T>
GradedSymbol<T> to_uv(const GradedSymbol<T>& s) {
    GradedSymbol<T> r(s.max_grade());
    const T half = T(1) / T(2);
    for (const auto& [mono, c] : s.terms()) {
        // x^i = 2^-i (u+v)^i, xi^j = 2^-j (u-v)^j
        T scale = c;
        for (int a = 0; a < mono.x + mono.xi; ++a) scale *= half;
        for (int p = 0; p <= mono.x; ++p) {
            for (int q = 0; q <= mono.xi; ++q) {
                T term = scale * T(detail::binomial(mono.x, p)) * T(detail::binomial(mono.xi, q));
                if ((mono.xi - q) % 2 == 1) term = T(0) - term;
                r.add({p + q, (mono.x - p) + (mono.xi - q), mono.h}, term);
            }
        }
    }
    return r;
}

/// Inverse basis change u = x + xi, v = x - xi.
template <typename T>
GradedSymbol<T> from_uv(const GradedSymbol<T>& s) {
    GradedSymbol<T> r(s.max_grade());
    for (const auto& [mono, c] : s.terms()) {
        const int p = mono.x, q = mono.xi;  // u-, v-powers
        for (int a = 0; a <= p; ++a) {
            for (int b = 0; b <= q; ++b) {
                T term = c * T(detail::binomial(p, a)) * T(detail::binomial(q, b));
                if ((q - b) % 2 == 1) term = T(0) - term;
                r.add({a + b, (p - a) + (q - b), mono.h}, term);
            }
        }
    }
    return r;
}

}  // namespace qnm
