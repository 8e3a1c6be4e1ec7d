#pragma once

/// \file cmcheck.hpp
///
/// Numerical complete-monotonicity checks for the Delta and theta families:
/// sign scans of (-1)^n f^(n) over a grid, classification against the
/// closed-form predicate, sharp-lambda recovery by bisection and violation
/// witnesses.
///
/// A sampled value v = (-1)^n f^(n)(x) counts as violating CM only if
/// v < -1e-10 (1 + scale), where scale is the summed magnitude of the terms
/// that produced f^(n)(x).  Symmetrically, -f violates CM where v > tol.

#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "families.hpp"
#include "params.hpp"

namespace cm_atlas {

enum class family { delta, theta };

inline const char* to_string(family f) { return f == family::delta ? "delta" : "theta"; }

enum class tri_state { yes, no, unknown };

inline const char* to_string(tri_state t) {
    switch (t) {
        case tri_state::yes: return "yes";
        case tri_state::no: return "no";
        case tri_state::unknown: return "unknown";
    }
    return "?";
}

enum class cm_verdict { cm_consistent, negcm_consistent, neither, identically_zero };

inline const char* to_string(cm_verdict v) {
    switch (v) {
        case cm_verdict::cm_consistent: return "CM-consistent";
        case cm_verdict::negcm_consistent: return "negCM-consistent";
        case cm_verdict::neither: return "neither";
        case cm_verdict::identically_zero: return "identically-zero";
    }
    return "?";
}

/// Which sign pattern is being tested: f itself (cm) or -f (negcm).
enum class sign_test { cm, negcm };

inline const char* to_string(sign_test s) { return s == sign_test::cm ? "cm" : "negcm"; }

enum class sharp_direction { cm_upper, negcm_lower };

inline const char* to_string(sharp_direction d) { return d == sharp_direction::cm_upper ? "cm-upper" : "negcm-lower"; }

struct Theorem1Prediction {
    tri_state delta_cm = tri_state::unknown;
    tri_state neg_delta_cm = tri_state::unknown;
    bool identically_zero = false;
};

inline std::string predicted_label(const Theorem1Prediction& p) {
    if (p.identically_zero) return "identically-zero";
    if (p.delta_cm == tri_state::yes) return "CM";
    if (p.neg_delta_cm == tri_state::yes) return "negCM";
    if (p.delta_cm == tri_state::no && p.neg_delta_cm == tri_state::no) return "neither";
    return "not-CM";
}

/// The CM classification of +-Delta_{s,t;lambda} (identical for theta).
inline Theorem1Prediction theorem1_predicate(const ParamTriple& p) {
    auto tri = [](bool b) { return b ? tri_state::yes : tri_state::no; };
    const double lam = p.lambda();
    switch (p.gap_regime()) {
        case regime::sub_unit_gap: return {tri(lam <= 1.0), tri(lam >= 1.0 / p.gap()), false};
        case regime::super_unit_gap: return {tri(lam <= 1.0 / p.gap()), tri(lam >= 1.0), false};
        case regime::equal: return {tri(lam <= 1.0), tri_state::unknown, false};
        case regime::unit_gap: return {tri(lam < 1.0), tri(lam > 1.0), lam == 1.0};
    }
    return {};
}

struct OrderMinimum {
    int order = 0;
    double min_value = 0.0;
    double argmin_x = 0.0;
};

/// A sample at which (-1)^n g^(n)(x) < -tolerance for g = f (cm) or g = -f (negcm).
struct ViolationWitness {
    int order = 0;
    double x = 0.0;
    double value = 0.0;  // the sign-violating (-1)^n g^(n)(x)
    sign_test sign = sign_test::cm;
    double relative = 0.0;  // value / term scale, used to rank witnesses
};

struct CmReport {
    family fam = family::delta;
    ParamTriple params{0.0, 0.0, 0.0};
    int max_order = 0;
    std::vector<OrderMinimum> per_order_min;
    std::vector<ViolationWitness> witnesses;  // worst per (sign, order)
    cm_verdict verdict = cm_verdict::neither;
    Theorem1Prediction predicted;
    bool agree = false;
};

inline constexpr double sign_tolerance_rel = 1e-10;
inline constexpr double zero_threshold = 1e-12;
inline constexpr int default_max_order = 6;

inline bool verdict_compatible(cm_verdict v, const Theorem1Prediction& p) {
    switch (v) {
        case cm_verdict::identically_zero:
            return p.identically_zero || p.delta_cm == tri_state::yes || p.neg_delta_cm == tri_state::yes;
        case cm_verdict::cm_consistent:
            return !p.identically_zero && p.delta_cm != tri_state::no && p.neg_delta_cm != tri_state::yes;
        case cm_verdict::negcm_consistent:
            return !p.identically_zero && p.delta_cm != tri_state::yes && p.neg_delta_cm != tri_state::no;
        case cm_verdict::neither:
            return !p.identically_zero && p.delta_cm != tri_state::yes && p.neg_delta_cm != tri_state::yes;
    }
    return false;
}

namespace detail {

inline std::vector<scaled_value> family_series(family fam, const ParamTriple& p, int max_order, double x) {
    return fam == family::delta ? delta_deriv_series(p, max_order, x) : theta_deriv_series(p, max_order, x);
}

struct sign_scan {
    bool cm_ok = true;
    bool negcm_ok = true;
    bool all_zero = true;
    std::vector<OrderMinimum> minima;
    std::vector<std::optional<ViolationWitness>> worst_cm;     // per order
    std::vector<std::optional<ViolationWitness>> worst_negcm;  // per order
};

// Visit order for grid indices: both extremes first, then inward.
inline std::vector<std::size_t> extremes_first(std::size_t n) {
    std::vector<std::size_t> order;
    order.reserve(n);
    std::size_t lo = 0;
    std::size_t hi = n;
    while (lo < hi) {
        order.push_back(lo++);
        if (lo < hi) order.push_back(--hi);
    }
    return order;
}

inline void keep_worst(std::optional<ViolationWitness>& slot, const ViolationWitness& w) {
    if (!slot || w.relative < slot->relative) slot = w;
}

inline sign_scan scan_signs(family fam, const ParamTriple& p, int max_order, const std::vector<double>& xs) {
    sign_scan out;
    const auto orders = static_cast<std::size_t>(max_order + 1);
    out.minima.resize(orders);
    out.worst_cm.resize(orders);
    out.worst_negcm.resize(orders);
    for (std::size_t n = 0; n < orders; ++n) {
        out.minima[n] = {static_cast<int>(n), std::numeric_limits<double>::infinity(), xs.front()};
    }
    for (std::size_t idx : extremes_first(xs.size())) {
        const double x = xs[idx];
        const auto series = family_series(fam, p, max_order, x);
        for (std::size_t n = 0; n < orders; ++n) {
            const double v = minus_one_pow(static_cast<int>(n)) * series[n].value;
            const double scale = series[n].scale;
            const double tol = sign_tolerance_rel * (1.0 + scale);
            const double rel = scale > 0.0 ? v / scale : 0.0;
            if (v < out.minima[n].min_value || (v == out.minima[n].min_value && x < out.minima[n].argmin_x)) {
                out.minima[n].min_value = v;
                out.minima[n].argmin_x = x;
            }
            if (std::abs(v) > zero_threshold) out.all_zero = false;
            const int order = static_cast<int>(n);
            if (v < -tol) {
                out.cm_ok = false;
                keep_worst(out.worst_cm[n], {order, x, v, sign_test::cm, rel});
            }
            if (v > tol) {
                out.negcm_ok = false;
                keep_worst(out.worst_negcm[n], {order, x, -v, sign_test::negcm, -rel});
            }
        }
    }
    return out;
}

inline void require_grid_inside(const ParamTriple& p, const std::vector<double>& xs) {
    if (xs.empty() || !(xs.front() > -p.alpha())) throw domain_error("grid must lie inside (-min(s,t), inf)");
}

}  // namespace detail

/// Samples (-1)^n f^(n), n = 0..max_order, over the grid and classifies f.
inline CmReport cm_verify(family fam, const ParamTriple& p, int max_order, const GridSpec& grid = {}) {
    detail::require_order(max_order, max_family_order, "cm_verify");
    const auto xs = make_grid(grid, p.alpha());
    detail::require_grid_inside(p, xs);
    auto scan = detail::scan_signs(fam, p, max_order, xs);

    CmReport rep;
    rep.fam = fam;
    rep.params = p;
    rep.max_order = max_order;
    rep.per_order_min = std::move(scan.minima);
    for (int sgn = 0; sgn < 2; ++sgn) {
        const auto& slots = sgn == 0 ? scan.worst_cm : scan.worst_negcm;
        for (const auto& w : slots) {
            if (w) rep.witnesses.push_back(*w);
        }
    }
    if (scan.all_zero) {
        rep.verdict = cm_verdict::identically_zero;
    } else if (scan.cm_ok && scan.negcm_ok) {
        throw numerical_error("cm_verify: both f and -f pass at nonzero magnitude (numerical fault)");
    } else if (scan.cm_ok) {
        rep.verdict = cm_verdict::cm_consistent;
    } else if (scan.negcm_ok) {
        rep.verdict = cm_verdict::negcm_consistent;
    } else {
        rep.verdict = cm_verdict::neither;
    }
    rep.predicted = theorem1_predicate(p);
    rep.agree = verdict_compatible(rep.verdict, rep.predicted);
    return rep;
}

/// Worst sign violation of f (cm) or -f (negcm), or none.  Grid extremes are
/// visited first, so ties resolve toward the ends of the grid.
inline std::optional<ViolationWitness> find_violation(family fam, const ParamTriple& p, sign_test sign, int max_order,
                                                      const GridSpec& grid = {}) {
    detail::require_order(max_order, max_family_order, "find_violation");
    const auto xs = make_grid(grid, p.alpha());
    detail::require_grid_inside(p, xs);
    const auto scan = detail::scan_signs(fam, p, max_order, xs);
    const auto& slots = sign == sign_test::cm ? scan.worst_cm : scan.worst_negcm;
    std::optional<ViolationWitness> worst;
    for (const auto& w : slots) {
        if (w) detail::keep_worst(worst, *w);
    }
    return worst;
}

struct LambdaBracket {
    double lo = -10.0;
    double hi = 10.0;
};

/// Boundary of the set of lambda for which f (cm-upper) or -f (negcm-lower)
/// passes the sign scan.  f is affine in lambda, so the pass set is a half-line.
inline double sharp_lambda_estimate(family fam, double s, double t, sharp_direction dir,
                                    int max_order = default_max_order, const GridSpec& grid = {},
                                    LambdaBracket bracket = {}, double width = 1e-4) {
    if (s == t && dir == sharp_direction::negcm_lower) {
        throw degenerate_error("sharp_lambda_estimate: negcm-lower requires s != t");
    }
    detail::require_order(max_order, max_family_order, "sharp_lambda_estimate");
    const double alpha = std::min(s, t);
    const auto xs = make_grid(grid, alpha);
    auto passes = [&](double lam) {
        const ParamTriple p(s, t, lam);
        const auto scan = detail::scan_signs(fam, p, max_order, xs);
        return dir == sharp_direction::cm_upper ? scan.cm_ok : scan.negcm_ok;
    };
    double lo = bracket.lo;
    double hi = bracket.hi;
    const bool pass_lo = passes(lo);
    const bool pass_hi = passes(hi);
    if (pass_lo == pass_hi) throw bracket_error("sharp_lambda_estimate: predicate does not change sign on bracket");
    while (hi - lo > width) {
        const double mid = 0.5 * (lo + hi);
        if (passes(mid) == pass_lo) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

/// The theoretical sharp constant for the given direction (1 or 1/|t-s|).
inline double sharp_lambda_theory(double s, double t, sharp_direction dir) {
    const double gap = std::abs(t - s);
    if (gap == 0.0) return 1.0;
    const bool sub = gap < 1.0;
    if (dir == sharp_direction::cm_upper) return sub ? 1.0 : 1.0 / gap;
    return sub ? 1.0 / gap : 1.0;
}

}  // namespace cm_atlas
