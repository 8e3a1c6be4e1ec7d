#pragma once

/// \file families.hpp
///
/// Divided-difference di-/tri-gamma families on (-alpha, inf), alpha = min(s, t):
///
///   D_k(x)      = [psi^(k)(x+t) - psi^(k)(x+s)] / (t - s),   D_k = psi^(k+1)(x+s) if s = t
///   Delta(x)    = D_0(x)^2 + lambda D_1(x)
///   theta(x)    = D_0(x) - [1 + lambda (2x+s+t)] / [2 (x+s)(x+t)]
///   ln H(x)     = log of the gamma-ratio family whose derivative is theta
///
/// together with Lambda_{s,t}, z_{s,t}, phi, Q and the tanh kernel g.
/// The cases s = t and |t - s| = 1 are detected by exact equality and use
/// closed forms.

#include <algorithm>
#include <cmath>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "errors.hpp"
#include "params.hpp"
#include "specfun.hpp"

namespace cm_atlas {

inline constexpr int max_family_order = 8;

/// A value together with the magnitude of the terms that were summed to form
/// it; rounding error in `value` is O(eps * scale).
struct scaled_value {
    double value = 0.0;
    double scale = 0.0;
};

namespace detail {

inline void require_order(int n, int max_n, const char* fn) {
    if (n < 0 || n > max_n) throw order_error(std::string(fn) + ": derivative order out of range");
}

inline double minus_one_pow(int n) { return (n % 2 == 0) ? 1.0 : -1.0; }

// [psi^(k)(b) - psi^(k)(a)] / h for 0 < a < b, h = b - a.  The recurrence
// shift and the Bernoulli expansion are both differenced termwise through
// Q_m(a, b), so nothing cancels even when h is tiny or a is large.
inline double divided_diff_generic(int k, double a, double b, double h) {
    const int n = shift_count(a, 10.0 + k);
    double shift = 0.0;
    for (int j = n - 1; j >= 0; --j) {
        inverse_power_dd q(a + j, b + j);
        for (int m = 1; m <= k; ++m) q.advance();
        shift += q.value();
    }
    shift *= factorial(k);

    const double aa = a + n;
    const double bb = b + n;
    inverse_power_dd q(aa, bb);
    double lead = 0.0;
    if (k == 0) {
        lead = std::log1p(h / aa) / h + 0.5 * q.value();
        q.advance();  // Q_2
    } else {
        for (int m = 1; m < k; ++m) q.advance();
        lead = factorial(k - 1) * q.value();
        q.advance();
        lead += 0.5 * factorial(k) * q.value();
        q.advance();  // Q_{k+2}
    }
    double tail = 0.0;
    for (std::size_t j = 0; j < bernoulli_even.size(); ++j) {
        const int m = 2 * static_cast<int>(j + 1);
        const double coef = k == 0 ? bernoulli_even[j] / m : bernoulli_even[j] * factorials[m + k - 1] / factorials[m];
        const double term = coef * q.value();
        tail += term;
        if (std::abs(term) <= 0.5 * eps * std::abs(lead)) break;
        q.advance();
        q.advance();
    }
    return minus_one_pow(k) * (lead + tail + shift);
}

}  // namespace detail

/// [psi^(k)(x+t) - psi^(k)(x+s)] / (t - s), confluent limit psi^(k+1)(x+s).
inline double divided_diff_psi(int k, double s, double t, double x) {
    detail::require_order(k, max_polygamma_order - 1, "divided_diff_psi");
    const double alpha = std::min(s, t);
    if (!(x > -alpha) || !std::isfinite(x)) throw domain_error("divided_diff_psi: x must satisfy x > -min(s, t)");
    if (s == t) return psi(k + 1, x + s);
    const double h = std::abs(t - s);
    if (h == 1.0) {
        // psi^(k)(u+1) - psi^(k)(u) = (-1)^k k! / u^(k+1)
        return detail::minus_one_pow(k) * factorial(k) * std::pow(x + alpha, -(k + 1));
    }
    return detail::divided_diff_generic(k, x + alpha, x + std::max(s, t), h);
}

namespace detail {

inline std::vector<double> divided_diffs(const ParamTriple& p, int max_k, double x) {
    std::vector<double> d(static_cast<std::size_t>(max_k + 1));
    for (int k = 0; k <= max_k; ++k) d[static_cast<std::size_t>(k)] = divided_diff_psi(k, p.s(), p.t(), x);
    return d;
}

// (1 - lambda)/u^2 and its derivatives at the unit gap.
inline double unit_gap_delta(const ParamTriple& p, int n, double x) {
    const double u = x + p.alpha();
    return (1.0 - p.lambda()) * minus_one_pow(n) * factorial(n + 1) * std::pow(u, -(n + 2));
}

// (1 - lambda)/2 [1/u + 1/(u+1)] and its derivatives at the unit gap.
inline double unit_gap_theta(const ParamTriple& p, int n, double x) {
    const double u = x + p.alpha();
    const double m = -(n + 1);
    return 0.5 * (1.0 - p.lambda()) * minus_one_pow(n) * factorial(n) * (std::pow(u, m) + std::pow(u + 1.0, m));
}

}  // namespace detail

/// Delta_{s,t;lambda}(x).
inline double delta(const ParamTriple& p, double x) {
    p.require_inside(x, "delta");
    if (p.gap_regime() == regime::unit_gap) return detail::unit_gap_delta(p, 0, x);
    const double d0 = divided_diff_psi(0, p.s(), p.t(), x);
    const double d1 = divided_diff_psi(1, p.s(), p.t(), x);
    return d0 * d0 + p.lambda() * d1;
}

/// Delta^(n)(x) for n = 0..max_n with term magnitudes, from
/// Delta^(n) = sum_i C(n,i) D_i D_{n-i} + lambda D_{n+1}.
inline std::vector<scaled_value> delta_deriv_series(const ParamTriple& p, int max_n, double x) {
    detail::require_order(max_n, max_family_order, "delta_deriv");
    p.require_inside(x, "delta_deriv");
    std::vector<scaled_value> out(static_cast<std::size_t>(max_n + 1));
    if (p.gap_regime() == regime::unit_gap) {
        for (int n = 0; n <= max_n; ++n) {
            const double v = detail::unit_gap_delta(p, n, x);
            out[static_cast<std::size_t>(n)] = {v, std::abs(v)};
        }
        return out;
    }
    const auto d = detail::divided_diffs(p, max_n + 1, x);
    for (int n = 0; n <= max_n; ++n) {
        double value = 0.0;
        double scale = 0.0;
        double binom = 1.0;
        for (int i = 0; i <= n; ++i) {
            const double term = binom * d[static_cast<std::size_t>(i)] * d[static_cast<std::size_t>(n - i)];
            value += term;
            scale += std::abs(term);
            binom = binom * (n - i) / (i + 1);
        }
        const double lin = p.lambda() * d[static_cast<std::size_t>(n + 1)];
        value += lin;
        scale += std::abs(lin);
        out[static_cast<std::size_t>(n)] = {value, scale};
    }
    return out;
}

/// Delta^(n)(x), 0 <= n <= 8.
inline double delta_deriv(const ParamTriple& p, int n, double x) {
    detail::require_order(n, max_family_order, "delta_deriv");
    return delta_deriv_series(p, n, x)[static_cast<std::size_t>(n)].value;
}

/// theta_{s,t;lambda}(x); its antiderivative is ln H_{s,t;lambda}.
inline double theta(const ParamTriple& p, double x) {
    p.require_inside(x, "theta");
    switch (p.gap_regime()) {
        case regime::unit_gap: return detail::unit_gap_theta(p, 0, x);
        case regime::equal: {
            const double u = x + p.s();
            return psi(1, u) - (1.0 + 2.0 * p.lambda() * u) / (2.0 * u * u);
        }
        default: break;
    }
    const double a = x + p.s();
    const double b = x + p.t();
    const double d0 = divided_diff_psi(0, p.s(), p.t(), x);
    return d0 - (1.0 + p.lambda() * (2.0 * x + p.s() + p.t())) / (2.0 * a * b);
}

/// theta^(n)(x) for n = 0..max_n with term magnitudes.  The rational part is
/// differentiated in partial-fraction form.
inline std::vector<scaled_value> theta_deriv_series(const ParamTriple& p, int max_n, double x) {
    detail::require_order(max_n, max_family_order, "theta_deriv");
    p.require_inside(x, "theta_deriv");
    std::vector<scaled_value> out(static_cast<std::size_t>(max_n + 1));
    const double lam = p.lambda();
    for (int n = 0; n <= max_n; ++n) {
        double dn = 0.0;
        double rat = 0.0;
        if (p.gap_regime() == regime::unit_gap) {
            const double v = detail::unit_gap_theta(p, n, x);
            out[static_cast<std::size_t>(n)] = {v, std::abs(v)};
            continue;
        }
        const double sgn = detail::minus_one_pow(n);
        if (p.gap_regime() == regime::equal) {
            const double u = x + p.s();
            dn = psi(n + 1, u);
            rat = sgn * (0.5 * factorial(n + 1) * std::pow(u, -(n + 2)) + lam * factorial(n) * std::pow(u, -(n + 1)));
        } else {
            // Orient so that a = x + min(s,t), b = x + max(s,t); both D_n and
            // the rational part are symmetric in (s, t).
            const double a = x + p.alpha();
            const double b = x + std::max(p.s(), p.t());
            dn = divided_diff_psi(n, p.s(), p.t(), x);
            const double m = n + 1;
            detail::inverse_power_dd qd(a, b);
            for (int m = 1; m <= n; ++m) qd.advance();
            const double q = qd.value();
            rat = 0.5 * sgn * factorial(n) * (q + lam * (std::pow(a, -m) + std::pow(b, -m)));
        }
        out[static_cast<std::size_t>(n)] = {dn - rat, std::abs(dn) + std::abs(rat)};
    }
    if (max_n >= 0) out[0].value = theta(p, x);
    return out;
}

/// theta^(n)(x), 0 <= n <= 8.
inline double theta_deriv(const ParamTriple& p, int n, double x) {
    detail::require_order(n, max_family_order, "theta_deriv");
    if (n == 0) return theta(p, x);
    return theta_deriv_series(p, n, x)[static_cast<std::size_t>(n)].value;
}

/// g(u) = tanh((t-s)u/2) / [(t-s) tanh(u/2)]; identically 1 when |t-s| = 1.
inline double kernel_g(double s, double t, double u) {
    if (s == t) throw degenerate_error("kernel_g: requires s != t");
    if (!(u > 0.0) || std::isnan(u)) throw domain_error("kernel_g: requires u > 0");
    const double h = t - s;
    if (std::abs(h) == 1.0) return 1.0;
    if (u < 1e-6) return 1.0 + (1.0 - h * h) * u * u / 12.0;
    return std::tanh(0.5 * h * u) / (h * std::tanh(0.5 * u));
}

/// theta by quadrature of its Laplace representation
///   theta(x) = 1/2 int_0^inf [g(u) - lambda] (e^{-(x+s)u} + e^{-(x+t)u}) du.
inline double theta_quadrature(const ParamTriple& p, double x) {
    p.require_inside(x, "theta_quadrature");
    if (p.gap_regime() == regime::equal) throw degenerate_error("theta_quadrature: requires s != t");
    const double a = x + p.s();
    const double b = x + p.t();
    const double lam = p.lambda();
    const double rate = x + p.alpha();
    const double upper = 40.0 / rate;  // e^{-rate * upper} < 1e-17

    auto integrand = [&](double u) {
        if (u <= 0.0) return 1.0 - lam;
        return 0.5 * (kernel_g(p.s(), p.t(), u) - lam) * (std::exp(-a * u) + std::exp(-b * u));
    };
    double err = 0.0;
    double l1 = 0.0;
    const double value =
        boost::math::quadrature::gauss_kronrod<double, 61>::integrate(integrand, 0.0, upper, 20, 1e-14, &err, &l1);
    // g is monotone between 1 and 1/|t-s|, which bounds |g - lambda|.
    const double g_bound = std::max(std::abs(1.0 - lam), std::abs(1.0 / p.gap() - lam));
    const double tail = 0.5 * g_bound * (std::exp(-a * upper) / a + std::exp(-b * upper) / b);
    if (!std::isfinite(value) || err + tail > 1e-10 * l1) {
        throw numerical_error("theta_quadrature: adaptive Gauss-Kronrod did not reach tolerance");
    }
    return value;
}

/// ln H_{s,t;lambda}(x), assembled from ln_gamma (never via exp/log of H).
inline double ln_h(const ParamTriple& p, double x) {
    p.require_inside(x, "ln_h");
    const double lam = p.lambda();
    switch (p.gap_regime()) {
        case regime::unit_gap: {
            const double u = x + p.alpha();
            return 0.5 * (1.0 - lam) * (std::log(u) + std::log1p(u));
        }
        case regime::equal: {
            const double u = x + p.s();
            return -lam * std::log(u) + psi(0, u) + 0.5 / u;
        }
        default: break;
    }
    const double h = p.t() - p.s();
    const double a = x + p.s();
    const double b = x + p.t();
    // [(1/h - lam) ln b - (1/h + lam) ln a] / 2 regrouped around ln(b/a).
    return 0.5 * std::log1p(h / a) / h - 0.5 * lam * (std::log(a) + std::log(b)) + ln_gamma_diff(a, b) / h;
}

/// H_{s,t;lambda}(x); throws overflow_error instead of returning inf.
inline double h_func(const ParamTriple& p, double x) {
    const double l = ln_h(p, x);
    if (l > 700.0) throw overflow_error("h_func: ln H exceeds 700; use ln_h");
    return std::exp(l);
}

/// Lambda_{s,t}(x) = [2(x+s)(x+t)/(2x+s+t)] [D_0(x) - 1/(2(x+s)(x+t))].
inline double capital_lambda(double s, double t, double x) {
    if (s == t) throw degenerate_error("capital_lambda: requires s != t");
    const double alpha = std::min(s, t);
    if (!(x > -alpha) || !std::isfinite(x)) throw domain_error("capital_lambda: x must satisfy x > -min(s, t)");
    const double a = x + s;
    const double b = x + t;
    if (a + b == 0.0) throw domain_error("capital_lambda: pole at 2x + s + t = 0");
    const double d0 = divided_diff_psi(0, s, t, x);
    return 2.0 * a * b / (a + b) * (d0 - 0.5 / (a * b));
}

/// z_{s,t}(x) = [Gamma(x+t)/Gamma(x+s)]^{1/(t-s)} - x, or e^{psi(x+s)} - x for s = t.
inline double z_func(double s, double t, double x) {
    const double alpha = std::min(s, t);
    if (!(x > -alpha) || !std::isfinite(x)) throw domain_error("z_func: x must satisfy x > -min(s, t)");
    if (s == t) return std::exp(psi(0, x + s)) - x;
    return std::exp(ln_gamma_diff(x + s, x + t) / (t - s)) - x;
}

namespace detail {

// ln(e^y - 1) for y > 0 without overflow or cancellation.
inline double log_expm1(double y) {
    if (y > 1.0) return y + std::log1p(-std::exp(-y));
    return std::log(std::expm1(y));
}

// (p - 1) e^p + 1 = sum_{n>=2} (n-1) p^n / n!
inline double q_denominator(double p) {
    if (std::abs(p) >= 0.5) return (p - 1.0) * std::exp(p) + 1.0;
    double term = p;  // p^n / n!
    double acc = 0.0;
    for (int n = 2; n < 40; ++n) {
        term *= p / n;
        const double add = (n - 1) * term;
        acc += add;
        if (std::abs(add) <= 1e-18 * std::abs(acc)) break;
    }
    return acc;
}

// The x != c branch of Q, evaluated everywhere it is finite.
inline double q_generic(double x) {
    const double c = psi_positive_root();
    const double p = psi(0, x);
    return (ln_gamma(x) - ln_gamma(c)) / q_denominator(p);
}

}  // namespace detail

/// phi(x) = psi(x) + ln(e^{1/x} - 1).
inline double phi(double x) {
    if (!(x > 0.0) || !std::isfinite(x)) throw domain_error("phi: requires x > 0");
    return psi(0, x) + detail::log_expm1(1.0 / x);
}

/// Width of the window around c where Q takes its limiting value 1/psi'(c).
inline constexpr double q_singularity_window = 1e-4;

/// Q(x) = [ln Gamma(x) - ln Gamma(c)] / ([psi(x) - 1] e^{psi(x)} + 1), = 1/psi'(c) near c.
inline double q_func(double x) {
    if (!(x > 0.0) || !std::isfinite(x)) throw domain_error("q_func: requires x > 0");
    const double c = psi_positive_root();
    if (std::abs(x - c) <= q_singularity_window) return 1.0 / psi(1, c);
    return detail::q_generic(x);
}

}  // namespace cm_atlas
