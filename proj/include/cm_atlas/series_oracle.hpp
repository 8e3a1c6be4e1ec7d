#pragma once

/// \file series_oracle.hpp
///
/// Slow reference evaluation of psi^(k)(x) by direct summation of
///
///     psi(x)      = -gamma + sum_{n>=0} [1/(n+1) - 1/(n+x)]
///     psi^(k)(x)  = (-1)^(k+1) k! sum_{n>=0} (n+x)^-(k+1),   k >= 1
///
/// The summand f is monotone and convex (or concave) in n, so the tail
/// sum_{n>=N} f(n) is bracketed by the integral bounds
///
///     int_N^inf f + f(N)/2   and   int_{N-1/2}^inf f.
///
/// The midpoint of the bracket is used and its half-width is reported as the
/// truncation error.  Nothing here is shared with the asymptotic fast path.

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "errors.hpp"
#include "specfun.hpp"

namespace cm_atlas {

namespace oracle_detail {

// Neumaier-compensated accumulator.
struct compensated_sum {
    double sum = 0.0;
    double c = 0.0;
    void add(double v) {
        const double t = sum + v;
        if (std::abs(sum) >= std::abs(v)) {
            c += (sum - t) + v;
        } else {
            c += (v - t) + sum;
        }
        sum = t;
    }
    double value() const { return sum + c; }
};

struct series_terms {
    int k;
    double x;

    double term(double n) const {
        if (k == 0) return (x - 1.0) / ((n + 1.0) * (n + x));
        return std::pow(n + x, -(k + 1));
    }
    // int_a^inf term(u) du
    double tail_integral(double a) const {
        if (k == 0) return std::log1p((x - 1.0) / (a + 1.0));
        return std::pow(a + x, -k) / k;
    }
    // Rough magnitude of the full sum, used to size the truncation target.
    double magnitude() const {
        if (k == 0) return std::abs(std::log(x)) + 1.0 / x + 1.0;
        return std::pow(x, -k) / k + std::pow(x, -(k + 1));
    }
};

struct tail_bracket {
    double mid;
    double half_width;
};

inline tail_bracket bracket_tail(const series_terms& s, double n) {
    const double trap = s.tail_integral(n) + 0.5 * s.term(n);
    const double midp = s.tail_integral(n - 0.5);
    const double lo = std::min(trap, midp);
    const double hi = std::max(trap, midp);
    return {0.5 * (lo + hi), 0.5 * (hi - lo)};
}

}  // namespace oracle_detail

/// Reference psi^(k)(x), 0 <= k <= 16, by direct series with a bracketed tail.
inline PolyEval polygamma_oracle(int k, double x) {
    if (k < 0 || k > max_polygamma_order) {
        throw order_error("polygamma_oracle: order must be in [0, 16]");
    }
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw domain_error("polygamma_oracle: argument must be finite and > 0");
    }
    const oracle_detail::series_terms s{k, x};
    const double target = 1e-15 * s.magnitude();

    constexpr std::int64_t max_terms = std::int64_t{1} << 26;
    std::int64_t n_terms = 16;
    oracle_detail::tail_bracket tail = oracle_detail::bracket_tail(s, static_cast<double>(n_terms));
    while (tail.half_width > target && n_terms < max_terms) {
        n_terms *= 2;
        tail = oracle_detail::bracket_tail(s, static_cast<double>(n_terms));
    }

    oracle_detail::compensated_sum acc;
    for (std::int64_t n = n_terms - 1; n >= 0; --n) acc.add(s.term(static_cast<double>(n)));
    acc.add(tail.mid);

    if (k == 0) {
        return {acc.value() - euler_gamma, tail.half_width, eval_method::oracle_series};
    }
    const double kfact = std::tgamma(k + 1.0);
    const double sign = (k % 2 == 1) ? 1.0 : -1.0;
    return {sign * kfact * acc.value(), kfact * tail.half_width, eval_method::oracle_series};
}

}  // namespace cm_atlas
