#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "errors.hpp"

namespace cm_atlas {

enum class regime { equal, unit_gap, sub_unit_gap, super_unit_gap };

inline const char* to_string(regime r) {
    switch (r) {
        case regime::equal: return "equal";
        case regime::unit_gap: return "unit-gap";
        case regime::sub_unit_gap: return "sub-unit-gap";
        case regime::super_unit_gap: return "super-unit-gap";
    }
    return "?";
}

/// Classify |t - s| against 1.  Confluence is exact binary64 equality.
inline regime classify_gap(double s, double t) {
    if (s == t) return regime::equal;
    const double gap = std::abs(t - s);
    if (gap == 1.0) return regime::unit_gap;
    return gap < 1.0 ? regime::sub_unit_gap : regime::super_unit_gap;
}

/// (s, t, lambda) together with alpha = min(s, t) and the gap regime.
class ParamTriple {
public:
    ParamTriple(double s, double t, double lambda)
        : s_(s), t_(t), lambda_(lambda), alpha_(std::min(s, t)), regime_(classify_gap(s, t)) {
        if (!std::isfinite(s) || !std::isfinite(t) || !std::isfinite(lambda)) {
            throw domain_error("ParamTriple: s, t and lambda must be finite");
        }
    }

    double s() const { return s_; }
    double t() const { return t_; }
    double lambda() const { return lambda_; }
    double alpha() const { return alpha_; }
    regime gap_regime() const { return regime_; }
    double gap() const { return std::abs(t_ - s_); }

    ParamTriple swapped() const { return {t_, s_, lambda_}; }
    ParamTriple with_lambda(double lambda) const { return {s_, t_, lambda}; }

    /// x must lie strictly inside (-alpha, inf).
    void require_inside(double x, const char* fn) const {
        if (!(x > -alpha_) || !std::isfinite(x)) {
            throw domain_error(std::string(fn) + ": x must satisfy x > -min(s, t)");
        }
    }

private:
    double s_;
    double t_;
    double lambda_;
    double alpha_;
    regime regime_;
};

enum class spacing { log, linear };

/// Evaluation grid on (-alpha, x_max]: the first point sits `delta` above -alpha.
struct GridSpec {
    double delta = 1e-3;
    double x_max = 1e4;
    int n_points = 400;
    spacing spacing_law = spacing::log;
};

/// Points of `grid` for a family living on (-alpha, inf), strictly increasing.
inline std::vector<double> make_grid(const GridSpec& grid, double alpha) {
    if (!(grid.delta > 0.0) || !std::isfinite(grid.delta)) {
        throw domain_error("grid: delta must be > 0");
    }
    if (grid.n_points < 2) throw domain_error("grid: need at least 2 points");
    const double lo = -alpha + grid.delta;
    if (!(grid.x_max > lo) || !std::isfinite(grid.x_max)) {
        throw domain_error("grid: x_max must exceed -alpha + delta");
    }
    std::vector<double> xs(static_cast<std::size_t>(grid.n_points));
    const int last = grid.n_points - 1;
    if (grid.spacing_law == spacing::log) {
        // Offsets above -alpha are log-spaced from delta to x_max + alpha.
        const double l0 = std::log(grid.delta);
        const double l1 = std::log(grid.x_max + alpha);
        for (int i = 0; i <= last; ++i) {
            const double off = std::exp(l0 + (l1 - l0) * i / last);
            xs[static_cast<std::size_t>(i)] = -alpha + off;
        }
    } else {
        for (int i = 0; i <= last; ++i) {
            xs[static_cast<std::size_t>(i)] = lo + (grid.x_max - lo) * i / last;
        }
    }
    xs.front() = lo;
    xs.back() = grid.x_max;
    for (std::size_t i = 1; i < xs.size(); ++i) {
        if (!(xs[i] > xs[i - 1])) throw domain_error("grid: points not strictly increasing (degenerate spacing)");
    }
    return xs;
}

}  // namespace cm_atlas
