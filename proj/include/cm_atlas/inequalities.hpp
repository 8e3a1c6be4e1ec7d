#pragma once

/// \file inequalities.hpp
///
/// Pointwise and swept checks of the gamma/polygamma inequalities and limits.
///
/// Every check is phrased as one or more strict inequalities lhs < rhs.  The
/// margin of a part is rhs - lhs (positive when it holds); a verdict reports
/// the smallest margin over its parts and sweep points, and the witness is the
/// point and the two sides where that minimum occurs.  Checks whose sides can
/// overflow are compared in log space; this is noted per check.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <initializer_list>
#include <limits>
#include <string>
#include <vector>

#include "errors.hpp"
#include "families.hpp"
#include "params.hpp"
#include "specfun.hpp"

namespace cm_atlas {

struct InequalityWitness {
    double point = std::numeric_limits<double>::quiet_NaN();
    double lhs = std::numeric_limits<double>::quiet_NaN();
    double rhs = std::numeric_limits<double>::quiet_NaN();
};

struct InequalityVerdict {
    std::string name;
    std::string domain_swept;
    bool holds = false;
    double worst_margin = std::numeric_limits<double>::quiet_NaN();
    InequalityWitness witness;
};

namespace detail {

struct strict_less {
    double lhs;
    double rhs;
    // rhs - lhs formed analytically when the direct difference cancels; NaN = unset.
    double exact = std::numeric_limits<double>::quiet_NaN();
    double margin() const { return std::isnan(exact) ? rhs - lhs : exact; }
};

inline std::string fmt_num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

inline InequalityVerdict point_verdict(std::string name, double point, std::initializer_list<strict_less> parts) {
    InequalityVerdict v;
    v.name = std::move(name);
    v.domain_swept = "point " + fmt_num(point);
    bool first = true;
    for (const auto& part : parts) {
        const double m = part.margin();
        // NaN margins are treated as the worst possible outcome.
        if (first || std::isnan(m) || m < v.worst_margin) {
            v.worst_margin = std::isnan(m) ? -std::numeric_limits<double>::infinity() : m;
            v.witness = {point, part.lhs, part.rhs};
            first = false;
        }
    }
    v.holds = v.worst_margin > 0.0;
    return v;
}

inline void require_order_range(int k, int lo, int hi, const char* fn) {
    if (k < lo || k > hi) throw order_error(std::string(fn) + ": order out of range");
}

}  // namespace detail

/// Combines verdicts under one name: worst margin wins, holds iff all hold.
inline InequalityVerdict worst_of(std::string name, std::string domain, const std::vector<InequalityVerdict>& parts) {
    InequalityVerdict out;
    out.name = std::move(name);
    out.domain_swept = std::move(domain);
    out.holds = !parts.empty();
    bool first = true;
    for (const auto& v : parts) {
        out.holds = out.holds && v.holds;
        if (first || v.worst_margin < out.worst_margin) {
            out.worst_margin = v.worst_margin;
            out.witness = v.witness;
            first = false;
        }
    }
    return out;
}

/// Evaluates `check` at every point and keeps the worst verdict.
template <class Check>
InequalityVerdict sweep(std::string name, std::string domain, const std::vector<double>& points, Check&& check) {
    std::vector<InequalityVerdict> parts;
    parts.reserve(points.size());
    for (double x : points) parts.push_back(check(x));
    return worst_of(std::move(name), std::move(domain), parts);
}

/// n log-spaced points on [lo, hi].
inline std::vector<double> log_points(double lo, double hi, int n) {
    if (!(lo > 0.0) || !(hi > lo) || n < 2) throw domain_error("log_points: need 0 < lo < hi and n >= 2");
    std::vector<double> xs(static_cast<std::size_t>(n));
    const double l0 = std::log(lo);
    const double l1 = std::log(hi);
    for (int i = 0; i < n; ++i) xs[static_cast<std::size_t>(i)] = std::exp(l0 + (l1 - l0) * i / (n - 1));
    xs.front() = lo;
    xs.back() = hi;
    return xs;
}

/// Default sweep: 400 log-spaced points on [1e-3, 1e4].
inline std::vector<double> default_sweep() { return log_points(1e-3, 1e4, 400); }

inline std::string sweep_label(const std::vector<double>& xs) {
    return "log grid [" + detail::fmt_num(xs.front()) + ", " + detail::fmt_num(xs.back()) + "], " +
           std::to_string(xs.size()) + " points";
}

// ---------------------------------------------------------------------------
// Divided differences of polygamma functions, bounded by the rational family
// with constants beta (below) and gamma (above).

/// (k-1)!/2 [(1/(b-a) + c)/a^k + (c - 1/(b-a))/b^k], without cancellation.
inline double thm3_bound(double a, double b, int k, double c) {
    detail::inverse_power_dd q(std::min(a, b), std::max(a, b));
    for (int m = 1; m < k; ++m) q.advance();
    return 0.5 * factorial(k - 1) * (q.value() + c * (std::pow(a, -k) + std::pow(b, -k)));
}

inline InequalityVerdict check_thm3_divided_diff(double a, double b, int k, double beta, double gamma) {
    detail::require_positive(a, "check_thm3_divided_diff");
    detail::require_positive(b, "check_thm3_divided_diff");
    if (a == b) throw degenerate_error("check_thm3_divided_diff: requires a != b");
    detail::require_order_range(k, 1, 8, "check_thm3_divided_diff");
    // (-1)^(k-1) [psi^(k-1)(b) - psi^(k-1)(a)] / (b - a)
    const double mid = detail::minus_one_pow(k - 1) * divided_diff_psi(k - 1, a, b, 0.0);
    // Margins with the (k-1)!/lo^k pole removed through the recurrence
    // psi^(k-1)(lo) = psi^(k-1)(lo+1) - (-1)^(k-1) (k-1)!/lo^k.  Near lo = 0 the
    // sides agree to O(lo^k) relatively, so the direct difference is pure rounding.
    const double lo = std::min(a, b);
    const double hi = std::max(a, b);
    const double h = hi - lo;
    const double shifted_gap = hi - (lo + 1.0);
    const double tail = detail::minus_one_pow(k - 1) * divided_diff_psi(k - 1, lo + 1.0, hi, 0.0) * shifted_gap;
    const double poles = 0.5 * factorial(k - 1) * (std::pow(lo, -k) + std::pow(hi, -k));
    const double lower_margin = poles * (1.0 / h - beta) + tail / h;
    const double upper_margin = poles * (gamma - 1.0 / h) - tail / h;
    return detail::point_verdict("thm3", a,
                                 {{thm3_bound(a, b, k, beta), mid, lower_margin},
                                  {mid, thm3_bound(a, b, k, gamma), upper_margin}});
}

/// Sweeps a over `as` with b = a + gap.
inline InequalityVerdict sweep_thm3(double gap, int k, double beta, double gamma, const std::vector<double>& as) {
    const std::string name = "thm3[gap=" + detail::fmt_num(gap) + ",k=" + std::to_string(k) +
                             ",beta=" + detail::fmt_num(beta) + ",gamma=" + detail::fmt_num(gamma) + "]";
    return sweep(name, "a: " + sweep_label(as) + ", b = a + gap", as,
                 [&](double a) { return check_thm3_divided_diff(a, a + gap, k, beta, gamma); });
}

/// Sharp (beta, gamma) for a given |b - a|.
inline std::pair<double, double> thm3_sharp_constants(double gap) {
    gap = std::abs(gap);
    return gap < 1.0 ? std::pair{1.0, 1.0 / gap} : std::pair{1.0 / gap, 1.0};
}

// ---------------------------------------------------------------------------

/// [G(b)/G(a)]^{1/(b-a)} < sqrt(ab) (a/b)^{1/(2(b-a))} for 0 < |b-a| < 1, reversed
/// for |b-a| > 1.  Compared in log space.
inline InequalityVerdict check_gamma_ratio(double a, double b) {
    detail::require_positive(a, "check_gamma_ratio");
    detail::require_positive(b, "check_gamma_ratio");
    const double gap = std::abs(b - a);
    if (gap == 0.0 || gap == 1.0) throw degenerate_error("check_gamma_ratio: requires a != b and |b - a| != 1");
    const double h = b - a;
    const double lhs = ln_gamma_diff(a, b) / h;
    const double rhs = 0.5 * (std::log(a) + std::log(b)) - 0.5 * std::log1p(h / a) / h;
    if (gap < 1.0) return detail::point_verdict("gamma-ratio", a, {{lhs, rhs}});
    return detail::point_verdict("gamma-ratio(reversed)", a, {{rhs, lhs}});
}

// ---------------------------------------------------------------------------

/// [G(x+1)/G(x+1/2)]^2 < (x+1/2) sqrt((x+1/2)/(x+1)) and the weaker
/// [G(x+1)/G(x+1/2)]^2 - x < 1/2, plus refined rhs <= x + 1/2.
inline InequalityVerdict check_watson(double x) {
    if (!(x > -0.5) || !std::isfinite(x)) throw domain_error("check_watson: requires x > -1/2");
    const double lhs = std::exp(2.0 * ln_gamma_diff(x + 0.5, x + 1.0));
    const double refined = std::exp(1.5 * std::log(x + 0.5) - 0.5 * std::log(x + 1.0));
    auto v = detail::point_verdict("watson", x, {{lhs, refined}, {lhs - x, 0.5}});
    // The refinement implies the original only because refined <= x + 1/2.
    if (!(refined <= x + 0.5)) v.holds = false;
    return v;
}

// ---------------------------------------------------------------------------

/// p(x) = 75x^10 + 900x^9 + ... + 450 by Horner.
inline double p_polynomial(double x) {
    static constexpr double coef[] = {75.0,    900.0,   4840.0,  15370.0, 31865.0, 45050.0,
                                      44101.0, 29700.0, 13290.0, 3600.0,  450.0};
    double acc = 0.0;
    for (double c : coef) acc = acc * x + c;
    return acc;
}

/// [psi'(x)]^2 + psi''(x) > p(x) / [900 x^4 (x+1)^10] (and > 0).
inline InequalityVerdict check_p_polynomial(double x) {
    detail::require_positive(x, "check_p_polynomial");
    const double lhs = trigamma_sq_plus_tetragamma(x);
    const double rhs = p_polynomial(x) / (900.0 * std::pow(x, 4) * std::pow(x + 1.0, 10));
    return detail::point_verdict("p-polynomial", x, {{rhs, lhs}, {0.0, lhs}});
}

/// [psi'(x)]^2 + psi''(x) > 0.
inline InequalityVerdict check_positivity(double x) {
    detail::require_positive(x, "check_positivity");
    return detail::point_verdict("positivity", x, {{0.0, trigamma_sq_plus_tetragamma(x)}});
}

// ---------------------------------------------------------------------------

/// (k-1)!/x^k + k!/(2x^{k+1}) < (-1)^{k+1} psi^(k)(x) < (k-1)!/x^k + k!/x^{k+1}.
inline InequalityVerdict check_qi_psi_bounds(int k, double x) {
    detail::require_order_range(k, 1, 8, "check_qi_psi_bounds");
    detail::require_positive(x, "check_qi_psi_bounds");
    const double mid = detail::minus_one_pow(k + 1) * polygamma(k, x).value;
    const double head = factorial(k - 1) * std::pow(x, -k);
    const double step = factorial(k) * std::pow(x, -(k + 1));
    return detail::point_verdict("qi-sandwich[k=" + std::to_string(k) + "]", x,
                                 {{head + 0.5 * step, mid}, {mid, head + step}});
}

// ---------------------------------------------------------------------------

/// a - ln(e^{1/x} - 1) < psi(x) < b - ln(e^{1/x} - 1); sharp (a, b) = (-gamma, 0).
inline InequalityVerdict check_batir_psi(double x, double a = -euler_gamma, double b = 0.0) {
    detail::require_positive(x, "check_batir_psi");
    // Equivalent to a < phi(x) < b with phi(x) = psi(x) + ln(e^{1/x} - 1),
    // formed without cancellation.  Witness sides are reported in phi form.
    const double ph = phi(x);
    return detail::point_verdict("batir", x, {{a, ph}, {ph, b}});
}

/// psi(x) > ln(pi^2/6) - gamma - ln(e^{1/x} - 1), claimed for x >= 2.
inline InequalityVerdict check_batir_one_sided(double x) {
    if (!(x >= 2.0) || !std::isfinite(x)) throw domain_error("check_batir_one_sided: requires x >= 2");
    const double bound = std::log(pi * pi / 6.0) - euler_gamma;
    return detail::point_verdict("batir-one-sided", x, {{bound, phi(x)}});
}

// ---------------------------------------------------------------------------

/// (n-1)! exp[alpha/x - n psi(x)] < |psi^(n)(x)| < (n-1)! exp[beta/x - n psi(x)],
/// compared in log space; sharp (alpha, beta) = (-n, 0).
inline InequalityVerdict check_exp_psi_bound(int n, double x, double alpha, double beta) {
    detail::require_order_range(n, 1, 6, "check_exp_psi_bound");
    detail::require_positive(x, "check_exp_psi_bound");
    const double log_mid = std::log(std::abs(polygamma(n, x).value));
    const double base = std::log(factorial(n - 1)) - n * psi(0, x);
    return detail::point_verdict("exp-psi-bound[n=" + std::to_string(n) + "]", x,
                                 {{base + alpha / x, log_mid}, {log_mid, base + beta / x}});
}

inline InequalityVerdict check_exp_psi_bound(int n, double x) {
    return check_exp_psi_bound(n, x, -static_cast<double>(n), 0.0);
}

// ---------------------------------------------------------------------------

/// (-1)^n psi^(n+1)(x) < n / ((n-1)!)^{1/n} [(-1)^{n-1} psi^(n)(x)]^{1+1/n}.
inline InequalityVerdict check_alzer_ratio(int n, double x) {
    detail::require_order_range(n, 1, 6, "check_alzer_ratio");
    detail::require_positive(x, "check_alzer_ratio");
    const std::string name = "alzer-ratio[n=" + std::to_string(n) + "]";
    if (n == 1) {
        // -psi''(x) < [psi'(x)]^2, with the difference formed without cancellation.
        const double p1 = polygamma(1, x).value;
        const double rhs = p1 * p1;
        const double margin = trigamma_sq_plus_tetragamma(x);
        return detail::point_verdict(name, x, {{rhs - margin, rhs}});
    }
    const double lhs = detail::minus_one_pow(n) * polygamma(n + 1, x).value;
    const double base = detail::minus_one_pow(n - 1) * polygamma(n, x).value;
    const double rhs = n / std::pow(factorial(n - 1), 1.0 / n) * std::pow(base, 1.0 + 1.0 / n);
    return detail::point_verdict(name, x, {{lhs, rhs}});
}

/// Q-factor bound exp{alpha [e^psi psi - e^psi + 1]} <= G(x)/G(c) <= exp{beta [...]}
/// for x > c, default (alpha, beta) = (1, 6 e^gamma / pi^2); compared in log space.
inline InequalityVerdict check_q_bounds(double x, double alpha = 1.0,
                                        double beta = 6.0 * std::exp(euler_gamma) / (pi * pi)) {
    const double c = psi_positive_root();
    if (!(x > c) || !std::isfinite(x)) throw domain_error("check_q_bounds: requires x > c");
    const double p = psi(0, x);
    const double w = detail::q_denominator(p);  // e^psi psi - e^psi + 1
    const double mid = ln_gamma(x) - ln_gamma(c);
    return detail::point_verdict("q-bounds", x, {{alpha * w, mid}, {mid, beta * w}});
}

// ---------------------------------------------------------------------------
// Limits.  Each limit is evaluated at staged arguments; it passes when the
// residual |value - target| shrinks monotonically across stages (or has
// reached the rounding floor) and the last residual is within tolerance.

struct LimitStage {
    double arg;
    double value;
};

inline constexpr double limit_noise_floor = 1e-12;

inline InequalityVerdict limit_verdict(std::string name, std::string domain, double target, double tol,
                                       const std::vector<LimitStage>& stages) {
    InequalityVerdict v;
    v.name = std::move(name);
    v.domain_swept = std::move(domain);
    bool monotone = true;
    double prev = std::numeric_limits<double>::infinity();
    for (const auto& st : stages) {
        const double r = std::abs(st.value - target);
        if (!(r < prev) && r > limit_noise_floor) monotone = false;
        prev = r;
    }
    const auto& last = stages.back();
    v.worst_margin = tol - std::abs(last.value - target);
    v.witness = {last.arg, last.value, target};
    v.holds = monotone && v.worst_margin > 0.0;
    if (!monotone) v.worst_margin = -std::abs(v.worst_margin);
    return v;
}

namespace detail {

template <class F>
std::vector<LimitStage> stages_of(const std::vector<double>& args, F&& f) {
    std::vector<LimitStage> out;
    out.reserve(args.size());
    for (double a : args) out.push_back({a, f(a)});
    return out;
}

inline std::vector<double> decades(int from, int to) {
    std::vector<double> out;
    const int step = from <= to ? 1 : -1;
    for (int e = from;; e += step) {
        out.push_back(std::pow(10.0, e));
        if (e == to) break;
    }
    return out;
}

}  // namespace detail

/// G(x+s) / (x^s G(x)) -> 1 as x -> inf.
inline InequalityVerdict limit_wendel(double s = 0.7) {
    auto st = detail::stages_of(detail::decades(1, 5),
                                [&](double x) { return std::exp(ln_gamma_diff(x, x + s) - s * std::log(x)); });
    return limit_verdict("limit:wendel[s=" + detail::fmt_num(s) + "]", "x = 1e1 .. 1e5", 1.0, 1e-5, st);
}

/// (-1)^{k+1} x^k psi^(k)(x) -> (k-1)! as x -> inf.
inline InequalityVerdict limit_polygamma_power(int k, double tol) {
    auto st = detail::stages_of(detail::decades(1, 5), [&](double x) {
        return detail::minus_one_pow(k + 1) * std::pow(x, k) * polygamma(k, x).value;
    });
    return limit_verdict("limit:x^k-psi^(k)[k=" + std::to_string(k) + "]", "x = 1e1 .. 1e5", factorial(k - 1), tol,
                         st);
}

/// u psi(u) -> -1 as u -> 0+.
inline InequalityVerdict limit_u_psi() {
    auto st = detail::stages_of(detail::decades(-1, -7), [](double u) { return u * psi(0, u); });
    return limit_verdict("limit:u-psi(u)", "u = 1e-1 .. 1e-7", -1.0, 1e-5, st);
}

inline InequalityVerdict limit_phi_infinity() {
    auto st = detail::stages_of(detail::decades(1, 6), [](double x) { return phi(x); });
    return limit_verdict("limit:phi(inf)", "x = 1e1 .. 1e6", 0.0, 1e-5, st);
}

inline InequalityVerdict limit_phi_zero() {
    auto st = detail::stages_of(detail::decades(-1, -6), [](double x) { return phi(x); });
    return limit_verdict("limit:phi(0+)", "x = 1e-1 .. 1e-6", -euler_gamma, 1e-3, st);
}

inline InequalityVerdict limit_capital_lambda_infinity(double s = 0.0, double t = 0.5) {
    auto st = detail::stages_of(detail::decades(1, 6), [&](double x) { return capital_lambda(s, t, x); });
    return limit_verdict("limit:Lambda(inf)", "x = 1e1 .. 1e6", 1.0, 1e-4, st);
}

inline InequalityVerdict limit_capital_lambda_boundary(double s = 0.0, double t = 0.5) {
    const double alpha = std::min(s, t);
    auto st = detail::stages_of(detail::decades(-1, -7),
                                [&](double off) { return capital_lambda(s, t, -alpha + off); });
    for (auto& x : st) x.arg = -alpha + x.arg;
    return limit_verdict("limit:Lambda(-alpha+)", "x + alpha = 1e-1 .. 1e-7", 1.0 / std::abs(t - s), 1e-3, st);
}

/// ln H_{s,t;lambda}(x) as x -> inf: -> 0 for lambda = 1, -> -inf for
/// lambda > 1, -> +inf for lambda < 1.  The divergent branches must move
/// monotonically and end beyond +-5.
inline InequalityVerdict limit_h_trichotomy(double lambda, double s = 0.0, double t = 0.5) {
    const ParamTriple p(s, t, lambda);
    auto st = detail::stages_of(detail::decades(1, 6), [&](double x) { return ln_h(p, x); });
    const std::string name = "limit:H-trichotomy[lambda=" + detail::fmt_num(lambda) + "]";
    const std::string domain = "x = 1e1 .. 1e6";
    if (lambda == 1.0) return limit_verdict(name, domain, 0.0, 1e-6, st);
    const double dir = lambda > 1.0 ? -1.0 : 1.0;
    InequalityVerdict v;
    v.name = name;
    v.domain_swept = domain;
    bool monotone = true;
    for (std::size_t i = 1; i < st.size(); ++i) monotone = monotone && dir * (st[i].value - st[i - 1].value) > 0.0;
    const double last = st.back().value;
    v.worst_margin = dir * last - 5.0;
    v.witness = {st.back().arg, last, dir * 5.0};
    v.holds = monotone && v.worst_margin > 0.0;
    return v;
}

/// e^{psi(x+1)} - x is strictly decreasing and strictly convex on (-1, inf):
/// sign tests of first and second divided differences on a grid.  Near -1 the
/// function is flat to working precision, so the second difference is allowed
/// to sit within its own rounding error of zero.
inline InequalityVerdict check_exp_psi_decreasing_convex(const GridSpec& grid = {1e-3, 1e2, 400, spacing::log}) {
    const auto xs = make_grid(grid, 1.0);
    std::vector<double> f(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) f[i] = z_func(1.0, 1.0, xs[i]);
    std::vector<InequalityVerdict> parts;
    for (std::size_t i = 0; i + 2 < xs.size(); ++i) {
        const double h1 = xs[i + 1] - xs[i];
        const double h2 = xs[i + 2] - xs[i + 1];
        const double d1 = (f[i + 1] - f[i]) / h1;
        const double d2 = (f[i + 2] - f[i + 1]) / h2;
        const double dd = (d2 - d1) / (h1 + h2);
        const double noise = 8.0 * detail::eps * (std::abs(f[i]) + std::abs(f[i + 1]) + std::abs(f[i + 2])) /
                             (std::min(h1, h2) * (h1 + h2));
        parts.push_back(detail::point_verdict("exp-psi-decreasing-convex", xs[i], {{d1, 0.0}, {-noise, dd}}));
    }
    return worst_of("exp-psi-decreasing-convex", "x on (-1, 1e2], 400 log points above -1", parts);
}

/// The full limits suite.
inline std::vector<InequalityVerdict> check_limits_suite() {
    return {
        limit_wendel(0.7),
        limit_polygamma_power(1, 1e-4),
        limit_polygamma_power(2, 1e-4),
        limit_polygamma_power(3, 1e-3),
        limit_u_psi(),
        limit_phi_infinity(),
        limit_phi_zero(),
        limit_capital_lambda_infinity(),
        limit_capital_lambda_boundary(),
        limit_h_trichotomy(1.0),
        limit_h_trichotomy(2.0),
        limit_h_trichotomy(0.5),
        check_exp_psi_decreasing_convex(),
    };
}

}  // namespace cm_atlas
