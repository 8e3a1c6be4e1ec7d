#pragma once

/// \file suite.hpp
///
/// The desk-scale acceptance suite: classification matrix, sharp constants,
/// identities, special-function core, divided-difference bounds, the
/// inequality registry and the limits.  Each criterion is a pure function of
/// fixed seeds and grids, so repeated runs produce identical results.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "cmcheck.hpp"
#include "families.hpp"
#include "inequalities.hpp"
#include "series_oracle.hpp"
#include "specfun.hpp"

namespace cm_atlas::suite {

struct ExpectedVerdict {
    InequalityVerdict verdict;
    bool expected_holds = true;
    bool ok() const { return verdict.holds == expected_holds; }
};

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    std::vector<std::pair<std::string, double>> metrics;
    std::vector<std::string> failures;
    std::vector<ExpectedVerdict> checks;
};

inline constexpr std::uint64_t default_seed = 20240917;

namespace detail {

inline std::string num(double v) { return cm_atlas::detail::fmt_num(v); }

inline std::string triple_label(const ParamTriple& p) {
    return "(s=" + num(p.s()) + ", t=" + num(p.t()) + ", lambda=" + num(p.lambda()) + ")";
}

inline void finish_checks(CriterionResult& r) {
    for (const auto& c : r.checks) {
        if (!c.ok()) {
            r.failures.push_back(c.verdict.name + (c.expected_holds ? ": expected to hold, margin " : ": expected a violation, margin ") +
                                 num(c.verdict.worst_margin) + " at " + num(c.verdict.witness.point));
        }
    }
    r.pass = r.failures.empty();
}

/// Random triples with s != t and |t - s| != 1.
inline std::vector<ParamTriple> random_triples(std::mt19937_64& rng, int count) {
    std::uniform_real_distribution<double> us(-0.5, 2.0);
    std::uniform_real_distribution<double> ugap(0.05, 3.0);
    std::uniform_real_distribution<double> ulam(-1.0, 3.0);
    std::bernoulli_distribution flip(0.5);
    std::vector<ParamTriple> out;
    while (static_cast<int>(out.size()) < count) {
        const double s = us(rng);
        const double gap = ugap(rng);
        const double t = flip(rng) ? s + gap : s - gap;
        const double lam = ulam(rng);
        if (std::abs(t - s) == 1.0) continue;
        out.emplace_back(s, t, lam);
    }
    return out;
}

/// Central difference with one Richardson step: O(h^4).
template <class F>
double richardson_derivative(F&& f, double x, double h) {
    const double d1 = (f(x + h) - f(x - h)) / (2.0 * h);
    const double d2 = (f(x + 0.5 * h) - f(x - 0.5 * h)) / h;
    return (4.0 * d2 - d1) / 3.0;
}

}  // namespace detail

// 1 ---------------------------------------------------------------------------

inline std::vector<double> matrix_lambdas(double gap) {
    std::vector<double> lams = {0.2, 0.95, 1.05, 5.0};
    if (gap == 1.0) {
        lams.push_back(1.0);
    } else {
        lams.push_back(1.0 / gap - 0.05);
        lams.push_back(1.0 / gap + 0.05);
    }
    std::sort(lams.begin(), lams.end());
    return lams;
}

inline CriterionResult classification_matrix() {
    CriterionResult r{1, "Classification matrix (delta and theta, max order 6)", false, {}, {}, {}};
    int cells = 0;
    int undefined = 0;
    int disagreements = 0;
    for (family fam : {family::delta, family::theta}) {
        for (double gap : {0.3, 1.0, 2.0}) {
            for (double s : {0.0, 0.5, 3.0}) {
                for (double lam : matrix_lambdas(gap)) {
                    const ParamTriple p(s, s + gap, lam);
                    const auto pred = theorem1_predicate(p);
                    if (!pred.identically_zero && pred.delta_cm == tri_state::unknown &&
                        pred.neg_delta_cm == tri_state::unknown) {
                        ++undefined;
                        continue;
                    }
                    ++cells;
                    const auto rep = cm_verify(fam, p, default_max_order);
                    if (!rep.agree) {
                        ++disagreements;
                        r.failures.push_back(std::string(to_string(fam)) + " " + detail::triple_label(p) + ": verdict " +
                                             to_string(rep.verdict) + ", predicted " + predicted_label(pred));
                    }
                }
            }
        }
    }
    r.metrics = {{"cells", cells}, {"undefined_cells", undefined}, {"disagreements", disagreements}};
    r.pass = disagreements == 0 && cells > 0;
    return r;
}

// 2 ---------------------------------------------------------------------------

inline constexpr double sharp_tolerance = 1e-2;

inline CriterionResult sharp_constants() {
    CriterionResult r{2, "Sharp-constant recovery within 1e-2", false, {}, {}, {}};
    double worst = 0.0;
    for (family fam : {family::delta, family::theta}) {
        for (double gap : {0.25, 0.4, 0.75, 1.5, 2.5}) {
            for (sharp_direction dir : {sharp_direction::cm_upper, sharp_direction::negcm_lower}) {
                const std::string label = std::string(to_string(fam)) + " gap=" + detail::num(gap) + " " + to_string(dir);
                try {
                    const double est = sharp_lambda_estimate(fam, 0.0, gap, dir);
                    const double theory = sharp_lambda_theory(0.0, gap, dir);
                    const double err = std::abs(est - theory);
                    worst = std::max(worst, err);
                    r.metrics.emplace_back(label, est);
                    if (!(err <= sharp_tolerance)) {
                        r.failures.push_back(label + ": estimate " + detail::num(est) + " vs " + detail::num(theory));
                    }
                } catch (const std::exception& e) {
                    r.failures.push_back(label + ": " + e.what());
                }
            }
        }
    }
    r.metrics.emplace_back("max_abs_gap", worst);
    r.pass = r.failures.empty();
    return r;
}

// 3 ---------------------------------------------------------------------------

inline constexpr double telescoping_tolerance = 1e-10;
inline constexpr double quadrature_tolerance = 1e-8;
inline constexpr double ln_h_derivative_tolerance = 1e-7;

inline CriterionResult identities(std::uint64_t seed = default_seed) {
    CriterionResult r{3, "Telescoping, quadrature and ln H' = theta identities", false, {}, {}, {}};
    std::mt19937_64 rng(seed);
    const auto triples = detail::random_triples(rng, 20);
    double tele = 0.0;
    double quad = 0.0;
    double deriv = 0.0;
    for (const auto& p : triples) {
        const double s = p.s();
        const double t = p.t();
        for (double x : make_grid({1e-3, 1e3, 100, spacing::log}, p.alpha())) {
            const double d0 = delta(p, x);
            const double d1 = delta(p, x + 1.0);
            const double rhs = 2.0 * theta(p, x) / ((x + s) * (x + t));
            const double rel = std::abs(d0 - d1 - rhs) / (std::abs(d0) + std::abs(d1) + std::abs(rhs));
            if (rel > tele) tele = rel;
            if (!(rel <= telescoping_tolerance)) {
                r.failures.push_back("telescoping " + detail::triple_label(p) + " at x=" + detail::num(x));
            }
        }
        for (double off : log_points(1e-2, 1e2, 10)) {
            const double x = -p.alpha() + off;
            const double th = theta(p, x);
            try {
                const double rel = std::abs(theta_quadrature(p, x) - th) / std::max(1.0, std::abs(th));
                quad = std::max(quad, rel);
                if (!(rel <= quadrature_tolerance)) {
                    r.failures.push_back("quadrature " + detail::triple_label(p) + " at x=" + detail::num(x));
                }
            } catch (const std::exception& e) {
                r.failures.push_back("quadrature " + detail::triple_label(p) + ": " + e.what());
            }
        }
        for (double off : log_points(1e-1, 1e2, 10)) {
            const double x = -p.alpha() + off;
            const double th = theta(p, x);
            const double fd = detail::richardson_derivative([&](double y) { return ln_h(p, y); }, x, 1e-2 * off);
            const double rel = std::abs(fd - th) / std::max(1.0, std::abs(th));
            deriv = std::max(deriv, rel);
            if (!(rel <= ln_h_derivative_tolerance)) {
                r.failures.push_back("ln_h' vs theta " + detail::triple_label(p) + " at x=" + detail::num(x));
            }
        }
    }
    r.metrics = {{"triples", static_cast<double>(triples.size())},
                 {"max_telescoping_rel", tele},
                 {"max_quadrature_rel", quad},
                 {"max_ln_h_derivative_rel", deriv}};
    r.pass = r.failures.empty();
    return r;
}

// 4 ---------------------------------------------------------------------------

/// Rounding allowance added to the two truncation estimates (which do not
/// track rounding), in units of eps times the value's magnitude scale.
inline constexpr double oracle_rounding_ulps = 64.0;
inline constexpr double recurrence_tolerance = 1e-10;

inline CriterionResult special_functions() {
    CriterionResult r{4, "Fast polygamma vs series oracle, recurrence and the root c", false, {}, {}, {}};
    double worst_ratio = 0.0;
    for (int k = 0; k <= 12; ++k) {
        for (double x : log_points(1e-2, 1e3, 200)) {
            const PolyEval fast = k == 0 ? digamma(x) : polygamma(k, x);
            const PolyEval ref = polygamma_oracle(k, x);
            // digamma carries an O(1) cancellation scale; higher orders scale with |value|.
            const double mag = k == 0 ? 1.0 + std::abs(ref.value) : std::abs(ref.value);
            const double tol = fast.abs_err_est + ref.abs_err_est + oracle_rounding_ulps * cm_atlas::detail::eps * mag;
            const double diff = std::abs(fast.value - ref.value);
            worst_ratio = std::max(worst_ratio, diff / tol);
            if (!(diff <= tol)) {
                r.failures.push_back("oracle k=" + std::to_string(k) + " x=" + detail::num(x) + " diff " + detail::num(diff));
            }
        }
    }
    double worst_rec = 0.0;
    for (int k = 0; k <= 12; ++k) {
        for (double x : {0.01, 0.1, 1.0, 5.0, 50.0}) {
            const double lhs = psi(k, x + 1.0) - psi(k, x);
            const double step = cm_atlas::detail::minus_one_pow(k) * factorial(k) * std::pow(x, -(k + 1));
            const double rel = std::abs(lhs - step) / (1.0 + std::abs(psi(k, x)));
            worst_rec = std::max(worst_rec, rel);
            if (!(rel <= recurrence_tolerance)) {
                r.failures.push_back("recurrence k=" + std::to_string(k) + " x=" + detail::num(x));
            }
        }
    }
    const double c = psi_positive_root();
    const double psi_c = psi(0, c);
    if (!(c > 1.4616 && c < 1.4617)) r.failures.push_back("root c = " + detail::num(c) + " outside (1.4616, 1.4617)");
    if (!(std::abs(psi_c) <= 1e-12)) r.failures.push_back("|psi(c)| = " + detail::num(std::abs(psi_c)));
    r.metrics = {{"max_oracle_diff_over_tol", worst_ratio},
                 {"max_recurrence_rel", worst_rec},
                 {"root_c", c},
                 {"psi_at_c", psi_c}};
    r.pass = r.failures.empty();
    return r;
}

// 5 ---------------------------------------------------------------------------

inline CriterionResult theorem3(std::uint64_t seed = default_seed) {
    CriterionResult r{5, "Divided-difference bounds at sharp constants and gamma-ratio inequality", false, {}, {}, {}};
    const auto as = default_sweep();
    for (double gap : {0.5, 2.0}) {
        const auto [beta, gamma] = thm3_sharp_constants(gap);
        for (int k = 1; k <= 3; ++k) {
            r.checks.push_back({sweep_thm3(gap, k, beta, gamma, as), true});
            r.checks.push_back({sweep_thm3(gap, k, beta + 0.01, gamma, as), false});
            r.checks.push_back({sweep_thm3(gap, k, beta, gamma - 0.01, as), false});
        }
    }
    std::mt19937_64 rng(seed + 5);
    std::uniform_real_distribution<double> log_a(std::log(1e-2), std::log(1e2));
    std::bernoulli_distribution flip(0.5);
    const std::pair<double, double> regimes[] = {{0.01, 0.99}, {1.01, 10.0}};
    for (const auto& [lo, hi] : regimes) {
        std::uniform_real_distribution<double> ugap(lo, hi);
        std::vector<InequalityVerdict> parts;
        for (int i = 0; i < 100; ++i) {
            double a = std::exp(log_a(rng));
            double b = a + ugap(rng);
            if (flip(rng)) std::swap(a, b);
            parts.push_back(check_gamma_ratio(a, b));
        }
        const std::string name = lo < 1.0 ? "gamma-ratio[0<|b-a|<1]" : "gamma-ratio(reversed)[|b-a|>1]";
        r.checks.push_back({worst_of(name, "100 random (a, b) pairs", parts), true});
    }
    detail::finish_checks(r);
    r.metrics = {{"checks", static_cast<double>(r.checks.size())}};
    return r;
}

// 6 ---------------------------------------------------------------------------

/// Sweep reaching far enough toward 0+ for the sharpness perturbations.
inline std::vector<double> sharpness_sweep() { return log_points(1e-4, 1e4, 400); }

inline CriterionResult inequality_suite() {
    CriterionResult r{6, "Polygamma inequality registry at sharp constants", false, {}, {}, {}};
    const auto xs = default_sweep();
    const std::string dom = sweep_label(xs);
    r.checks.push_back({sweep("p-polynomial", dom, xs, [](double x) { return check_p_polynomial(x); }), true});
    r.checks.push_back({sweep("positivity", dom, xs, [](double x) { return check_positivity(x); }), true});
    for (int k = 1; k <= 8; ++k) {
        r.checks.push_back({sweep("qi-sandwich[k=" + std::to_string(k) + "]", dom, xs,
                                  [k](double x) { return check_qi_psi_bounds(k, x); }),
                            true});
    }
    for (int n = 1; n <= 6; ++n) {
        r.checks.push_back({sweep("exp-psi-bound[n=" + std::to_string(n) + "]", dom, xs,
                                  [n](double x) { return check_exp_psi_bound(n, x); }),
                            true});
    }
    r.checks.push_back({sweep("batir", dom, xs, [](double x) { return check_batir_psi(x); }), true});
    for (int n = 1; n <= 6; ++n) {
        r.checks.push_back({sweep("alzer-ratio[n=" + std::to_string(n) + "]", dom, xs,
                                  [n](double x) { return check_alzer_ratio(n, x); }),
                            true});
    }

    const auto sx = sharpness_sweep();
    const std::string sdom = sweep_label(sx);
    r.checks.push_back({sweep("batir[a=-gamma+0.01]", sdom, sx,
                              [](double x) { return check_batir_psi(x, -euler_gamma + 0.01, 0.0); }),
                        false});
    r.checks.push_back(
        {sweep("batir[b=-0.01]", sdom, sx, [](double x) { return check_batir_psi(x, -euler_gamma, -0.01); }), false});
    for (int n = 1; n <= 6; ++n) {
        const std::string tag = "[n=" + std::to_string(n);
        r.checks.push_back({sweep("exp-psi-bound" + tag + ",alpha=-n+0.01]", sdom, sx,
                                  [n](double x) { return check_exp_psi_bound(n, x, -n + 0.01, 0.0); }),
                            false});
        r.checks.push_back({sweep("exp-psi-bound" + tag + ",beta=-0.01]", sdom, sx,
                                  [n](double x) { return check_exp_psi_bound(n, x, -n, -0.01); }),
                            false});
    }
    detail::finish_checks(r);
    r.metrics = {{"checks", static_cast<double>(r.checks.size())}};
    return r;
}

// 7 ---------------------------------------------------------------------------

inline CriterionResult limits() {
    CriterionResult r{7, "Limits with monotonically shrinking residuals", false, {}, {}, {}};
    for (auto& v : check_limits_suite()) r.checks.push_back({std::move(v), true});
    detail::finish_checks(r);
    r.metrics = {{"checks", static_cast<double>(r.checks.size())}};
    return r;
}

/// Criteria 1 to 7 in order.
inline std::vector<CriterionResult> run_all() {
    return {classification_matrix(), sharp_constants(), identities(), special_functions(),
            theorem3(),              inequality_suite(), limits()};
}

}  // namespace cm_atlas::suite
