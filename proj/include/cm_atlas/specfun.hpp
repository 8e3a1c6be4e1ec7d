#pragma once

/// \file specfun.hpp
///
/// Log-gamma, digamma and polygamma functions on the positive real axis.
///
/// psi and psi^(k) are evaluated by shifting the argument upward with the
/// recurrence psi^(k)(x+1) = psi^(k)(x) + (-1)^k k!/x^(k+1) until x >= 10 + k
/// and then summing the Bernoulli-number asymptotic expansion.  The error
/// estimate carried in PolyEval is the magnitude of the first omitted
/// asymptotic term (truncation only; rounding is not tracked).

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <math.h>

#include "errors.hpp"

namespace cm_atlas {

/// Euler-Mascheroni constant.
inline constexpr double euler_gamma = 0.57721566490153286060651209008240243;

inline constexpr double pi = 3.14159265358979323846264338327950288;

inline constexpr int max_polygamma_order = 16;

enum class eval_method { asymptotic, recurrence_asymptotic, oracle_series, quadrature };

inline const char* to_string(eval_method m) {
    switch (m) {
        case eval_method::asymptotic: return "asymptotic";
        case eval_method::recurrence_asymptotic: return "recurrence+asymptotic";
        case eval_method::oracle_series: return "oracle-series";
        case eval_method::quadrature: return "quadrature";
    }
    return "?";
}

/// A polygamma evaluation: value, truncation-error estimate and method.
struct PolyEval {
    double value = 0.0;
    double abs_err_est = 0.0;
    eval_method method = eval_method::asymptotic;
};

namespace detail {

// B_2, B_4, ..., B_32.
inline constexpr std::array<double, 16> bernoulli_even = {
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0,
    -7709321041217.0 / 510.0,
};

constexpr long double binomial_ld(int n, int k) {
    long double r = 1.0L;
    for (int i = 1; i <= k; ++i) r = r * static_cast<long double>(n - k + i) / i;
    return r;
}

// B_m from sum_{j=0}^{m} C(m+1, j) B_j = 0.
constexpr std::array<long double, 33> bernoulli_by_recurrence() {
    std::array<long double, 33> b{};
    b[0] = 1.0L;
    for (int m = 1; m <= 32; ++m) {
        long double acc = 0.0L;
        for (int j = 0; j < m; ++j) acc += binomial_ld(m + 1, j) * b[j];
        b[m] = -acc / static_cast<long double>(m + 1);
    }
    return b;
}

constexpr bool bernoulli_table_is_consistent() {
    constexpr auto b = bernoulli_by_recurrence();
    for (std::size_t j = 0; j < bernoulli_even.size(); ++j) {
        const long double ref = b[2 * (j + 1)];
        const long double d = static_cast<long double>(bernoulli_even[j]) - ref;
        const long double scale = ref < 0 ? -ref : ref;
        if ((d < 0 ? -d : d) > 1e-9L * scale) return false;
    }
    return true;
}

static_assert(bernoulli_table_is_consistent(), "Bernoulli table disagrees with the recurrence");

inline constexpr std::array<double, 51> factorials = [] {
    std::array<double, 51> f{};
    f[0] = 1.0;
    for (std::size_t i = 1; i < f.size(); ++i) f[i] = f[i - 1] * static_cast<double>(i);
    return f;
}();

inline constexpr double eps = std::numeric_limits<double>::epsilon();

inline void require_positive(double x, const char* fn) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw domain_error(std::string(fn) + ": argument must be finite and > 0");
    }
}

// Number of unit shifts that bring x to at least `target`.
inline int shift_count(double x, double target) {
    return x < target ? static_cast<int>(std::ceil(target - x)) : 0;
}

}  // namespace detail

inline constexpr double factorial(int n) { return detail::factorials.at(static_cast<std::size_t>(n)); }

/// ln Gamma(x) for x > 0.
inline double ln_gamma(double x) {
    detail::require_positive(x, "ln_gamma");
    int sign = 1;
    return ::lgamma_r(x, &sign);
}

/// Digamma psi(x) for x > 0.
inline PolyEval digamma(double x) {
    detail::require_positive(x, "digamma");
    const int n = detail::shift_count(x, 10.0);
    double shift = 0.0;
    for (int j = n - 1; j >= 0; --j) shift += 1.0 / (x + j);
    const double y = x + n;

    const double inv2 = 1.0 / (y * y);
    const double head = std::log(y) - 0.5 / y;
    const double scale = std::abs(std::log(y)) + 0.5 / y;
    double tail = 0.0;
    double err = 0.0;
    double pw = inv2;
    for (std::size_t j = 0; j < detail::bernoulli_even.size(); ++j) {
        const double term = detail::bernoulli_even[j] / (2.0 * (j + 1)) * pw;
        if (std::abs(term) <= 0.5 * detail::eps * scale) {
            err = std::abs(term);
            break;
        }
        tail += term;
        err = std::abs(term);
        pw *= inv2;
    }
    return {head - tail - shift, err, n > 0 ? eval_method::recurrence_asymptotic : eval_method::asymptotic};
}

/// Polygamma psi^(k)(x) for 1 <= k <= 16, x > 0.
inline PolyEval polygamma(int k, double x) {
    if (k < 1 || k > max_polygamma_order) {
        throw order_error("polygamma: order must be in [1, 16]");
    }
    detail::require_positive(x, "polygamma");
    const int n = detail::shift_count(x, 10.0 + k);
    const double sign = (k % 2 == 1) ? 1.0 : -1.0;  // (-1)^(k+1)

    // (-1)^(k+1) k! sum_{j<n} (x+j)^-(k+1), smallest terms first.
    double shift = 0.0;
    for (int j = n - 1; j >= 0; --j) shift += std::pow(x + j, -(k + 1));
    shift *= detail::factorials[k];

    const double y = x + n;
    const double inv = 1.0 / y;
    const double inv2 = inv * inv;
    const double yk = std::pow(y, -k);
    const double lead = detail::factorials[k - 1] * yk + 0.5 * detail::factorials[k] * yk * inv;
    double tail = 0.0;
    double err = 0.0;
    double pw = yk * inv2;
    for (std::size_t j = 0; j < detail::bernoulli_even.size(); ++j) {
        const int m = 2 * static_cast<int>(j + 1);
        const double term = detail::bernoulli_even[j] * detail::factorials[m + k - 1] / detail::factorials[m] * pw;
        if (std::abs(term) <= 0.5 * detail::eps * lead) {
            err = std::abs(term);
            break;
        }
        tail += term;
        err = std::abs(term);
        pw *= inv2;
    }
    return {sign * (lead + tail + shift), err,
            n > 0 ? eval_method::recurrence_asymptotic : eval_method::asymptotic};
}

/// psi^(k)(x) for 0 <= k <= 16 as a bare value (k = 0 is digamma).
inline double psi(int k, double x) { return k == 0 ? digamma(x).value : polygamma(k, x).value; }

/// [psi'(x)]^2 + psi''(x), evaluated without the O(x^2) cancellation of the
/// naive form for large x.
inline double trigamma_sq_plus_tetragamma(double x) {
    detail::require_positive(x, "trigamma_sq_plus_tetragamma");
    if (x < 20.0) {
        const double p1 = polygamma(1, x).value;
        return p1 * p1 + polygamma(2, x).value;
    }
    // psi' = 1/x + r1, psi'' = -1/x^2 - 1/x^3 - sum (2j+1) B_2j x^-(2j+2);
    // the 1/x^2 and 1/x^3 parts cancel exactly.
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    double s1 = 0.0;
    double t = 0.0;
    double pw = inv2 * inv;  // x^-(2j+1) for j = 1
    for (std::size_t j = 0; j < detail::bernoulli_even.size(); ++j) {
        const double b = detail::bernoulli_even[j];
        const double m = 2.0 * (j + 1);
        const double ds = b * pw;
        const double dt = (1.0 - m) * b * pw * inv;
        s1 += ds;
        t += dt;
        if (std::abs(dt) <= detail::eps * 1e-3 * std::abs(t)) break;
        pw *= inv2;
    }
    const double r1 = 0.5 * inv2 + s1;
    return t + r1 * r1;
}

namespace detail {

/// Q_m(a, b) = [a^-m - b^-m] / (b - a) for m = 1, 2, ..., generated by
/// Q_{m+1} = Q_m / a + b^-m Q_1.  Every term is positive for a, b > 0, so the
/// divided difference is formed without cancellation (and is finite as b -> a).
class inverse_power_dd {
public:
    inverse_power_dd(double a, double b) : inv_a_(1.0 / a), inv_b_(1.0 / b), q1_(inv_a_ * inv_b_), q_(q1_), b_pow_(inv_b_) {}

    int order() const { return m_; }
    double value() const { return q_; }
    void advance() {
        q_ = q_ * inv_a_ + b_pow_ * q1_;
        b_pow_ *= inv_b_;
        ++m_;
    }

private:
    double inv_a_;
    double inv_b_;
    double q1_;
    double q_;
    double b_pow_;  // b^-m
    int m_ = 1;
};

}  // namespace detail

/// ln Gamma(b) - ln Gamma(a) for a, b > 0 without subtracting two ln Gamma
/// values: unit shifts to >= 10, then the difference of Stirling series.
inline double ln_gamma_diff(double a, double b) {
    detail::require_positive(a, "ln_gamma_diff");
    detail::require_positive(b, "ln_gamma_diff");
    if (a == b) return 0.0;
    if (b < a) return -ln_gamma_diff(b, a);
    const double h = b - a;
    const int n = detail::shift_count(a, 10.0);
    double shift = 0.0;
    for (int j = n - 1; j >= 0; --j) shift += std::log1p(h / (a + j));
    const double aa = a + n;
    const double bb = b + n;
    // Stirling: ln G(x) ~ (x - 1/2) ln x - x + ln(2 pi)/2 + sum B_2j / (2j (2j-1) x^(2j-1))
    double series = 0.0;
    detail::inverse_power_dd q(aa, bb);  // Q_1
    for (std::size_t j = 0; j < detail::bernoulli_even.size(); ++j) {
        const double m = 2.0 * (j + 1);
        const double term = detail::bernoulli_even[j] / (m * (m - 1.0)) * q.value();
        series += term;
        if (std::abs(term) <= 1e-17 * std::abs(series)) break;
        q.advance();
        q.advance();
    }
    const double head = h * (std::log(bb) - 1.0) + (aa - 0.5) * std::log1p(h / aa);
    return head - h * series - shift;
}

/// The unique positive zero c of psi, c = 1.4616...
inline double psi_positive_root() {
    static const double root = [] {
        double lo = 1.0;  // psi(1) = -gamma < 0
        double hi = 2.0;  // psi(2) = 1 - gamma > 0
        while (hi - lo > 1e-14) {
            const double mid = 0.5 * (lo + hi);
            if (digamma(mid).value < 0.0) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        return 0.5 * (lo + hi);
    }();
    return root;
}

}  // namespace cm_atlas
