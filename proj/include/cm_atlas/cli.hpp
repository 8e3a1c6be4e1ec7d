#pragma once

/// \file cli.hpp
///
/// The cm_atlas command line: eval, cm-check, sharp, inequalities, report.
///
/// Exit codes: 0 when every assertion passes, 1 when a mathematical
/// disagreement or violation is found, 2 for usage and domain errors.
/// Grid settings resolve as command-line flags > CM_ATLAS_GRID > defaults,
/// where CM_ATLAS_GRID is "delta,x_max,n,log|lin".

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cmcheck.hpp"
#include "errors.hpp"
#include "families.hpp"
#include "inequalities.hpp"
#include "params.hpp"
#include "report_io.hpp"
#include "specfun.hpp"
#include "suite.hpp"

namespace cm_atlas::cli {

inline constexpr int schema_version = 1;
inline constexpr int exit_ok = 0;
inline constexpr int exit_violation = 1;
inline constexpr int exit_usage = 2;

class usage_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class out_format { json, csv, human };

inline out_format parse_format(const std::string& s) {
    if (s == "json") return out_format::json;
    if (s == "csv") return out_format::csv;
    return out_format::human;
}

// --- grid resolution ---------------------------------------------------------

struct GridFlags {
    std::optional<double> delta;
    std::optional<double> x_max;
    std::optional<int> n_points;
    std::optional<std::string> spacing_law;
};

inline spacing parse_spacing(const std::string& s, const std::string& where) {
    if (s == "log") return spacing::log;
    if (s == "lin") return spacing::linear;
    throw usage_error(where + ": spacing must be 'log' or 'lin', got '" + s + "'");
}

inline double parse_real(const std::string& s, const std::string& where) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != s.size()) throw usage_error(where + ": '" + s + "' is not a number");
    return v;
}

/// Parses "delta,x_max,n,log|lin".
inline GridSpec parse_grid_env(const std::string& text) {
    const std::string where = "CM_ATLAS_GRID";
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) parts.push_back(item);
    if (parts.size() != 4) throw usage_error(where + ": expected 'delta,x_max,n,log|lin', got '" + text + "'");
    GridSpec g;
    g.delta = parse_real(parts[0], where);
    g.x_max = parse_real(parts[1], where);
    const double n = parse_real(parts[2], where);
    if (n != std::floor(n) || n < 2 || n > 1e7) throw usage_error(where + ": n must be an integer >= 2");
    g.n_points = static_cast<int>(n);
    g.spacing_law = parse_spacing(parts[3], where);
    return g;
}

inline GridSpec resolve_grid(const GridFlags& flags, const std::optional<std::string>& env) {
    GridSpec g = env && !env->empty() ? parse_grid_env(*env) : GridSpec{};
    if (flags.delta) g.delta = *flags.delta;
    if (flags.x_max) g.x_max = *flags.x_max;
    if (flags.n_points) g.n_points = *flags.n_points;
    if (flags.spacing_law) g.spacing_law = parse_spacing(*flags.spacing_law, "--spacing");
    return g;
}

struct Rendered {
    std::string text;
    int code = exit_ok;
};

// --- shared renderers ----------------------------------------------------------

namespace detail {

using cm_atlas::detail::fmt_num;

inline std::string human_num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

inline void write_verdict(io::json_writer& w, const InequalityVerdict& v) {
    w.begin_object()
        .field("name", v.name)
        .field("domain_swept", v.domain_swept)
        .field("holds", v.holds)
        .field("worst_margin", v.worst_margin);
    w.key("witness").begin_object();
    w.field("point", v.witness.point).field("lhs", v.witness.lhs).field("rhs", v.witness.rhs);
    w.end_object();
    w.end_object();
}

inline std::vector<std::string> verdict_row(const InequalityVerdict& v) {
    return {v.name,
            v.holds ? "true" : "false",
            io::format_double(v.worst_margin),
            io::format_double(v.witness.point),
            io::format_double(v.witness.lhs),
            io::format_double(v.witness.rhs)};
}

inline std::string human_verdict(const InequalityVerdict& v) {
    char buf[512];
    std::snprintf(buf, sizeof buf, "%-48s %-5s margin %-14s at %-14s lhs %-14s rhs %s\n", v.name.c_str(),
                  v.holds ? "holds" : "FAILS", human_num(v.worst_margin).c_str(), human_num(v.witness.point).c_str(),
                  human_num(v.witness.lhs).c_str(), human_num(v.witness.rhs).c_str());
    return buf;
}

}  // namespace detail

// --- eval ----------------------------------------------------------------------

struct EvalConfig {
    std::string family;
    double s = 0.0;
    double t = 0.0;
    double lambda = 1.0;
    std::optional<double> x;
    std::optional<double> u;
    std::optional<int> k;
    std::optional<int> order;
    GridSpec grid;
    out_format format = out_format::human;
};

inline const std::vector<std::string>& eval_families() {
    static const std::vector<std::string> names = {"delta", "theta", "h",      "ln_h", "phi",
                                                   "z",     "lambda_fn", "kernel", "psi",  "polygamma"};
    return names;
}

inline Rendered cmd_eval(const EvalConfig& cfg) {
    const std::string& fam = cfg.family;
    const bool two_param = fam == "delta" || fam == "theta" || fam == "h" || fam == "ln_h" || fam == "z" ||
                           fam == "lambda_fn" || fam == "kernel";
    const bool has_lambda = fam == "delta" || fam == "theta" || fam == "h" || fam == "ln_h";
    const bool is_kernel = fam == "kernel";
    const bool is_poly = fam == "psi" || fam == "polygamma";
    if (cfg.order && fam != "delta" && fam != "theta") throw usage_error("--order applies only to delta and theta");
    if (cfg.k && !is_poly) throw usage_error("--k applies only to psi and polygamma");
    if (cfg.u && !is_kernel) throw usage_error("--u applies only to kernel");
    if (cfg.x && is_kernel) throw usage_error("kernel is evaluated at --u, not --x");
    if (fam == "polygamma" && !cfg.k) throw usage_error("polygamma requires --k (1..16)");
    const int k = cfg.k.value_or(0);
    const int order = cfg.order.value_or(0);

    const ParamTriple p(cfg.s, cfg.t, cfg.lambda);
    if (fam == "delta" || fam == "theta") cm_atlas::detail::require_order(order, max_family_order, "eval");
    if (is_poly && (k < 0 || k > max_polygamma_order || (fam == "polygamma" && k < 1))) {
        throw order_error("eval: order k out of range");
    }
    const double alpha = two_param && !is_kernel ? p.alpha() : 0.0;
    const std::string var = is_kernel ? "u" : "x";
    std::vector<double> pts;
    if (cfg.x) {
        pts = {*cfg.x};
    } else if (cfg.u) {
        pts = {*cfg.u};
    } else {
        pts = make_grid(cfg.grid, alpha);
    }

    struct row {
        double arg;
        double value;
        std::optional<PolyEval> poly;
    };
    std::vector<row> rows;
    rows.reserve(pts.size());
    for (double a : pts) {
        if (fam == "delta") {
            rows.push_back({a, order == 0 ? delta(p, a) : delta_deriv(p, order, a), {}});
        } else if (fam == "theta") {
            rows.push_back({a, order == 0 ? theta(p, a) : theta_deriv(p, order, a), {}});
        } else if (fam == "h") {
            rows.push_back({a, h_func(p, a), {}});
        } else if (fam == "ln_h") {
            rows.push_back({a, ln_h(p, a), {}});
        } else if (fam == "phi") {
            rows.push_back({a, phi(a), {}});
        } else if (fam == "z") {
            rows.push_back({a, z_func(cfg.s, cfg.t, a), {}});
        } else if (fam == "lambda_fn") {
            rows.push_back({a, capital_lambda(cfg.s, cfg.t, a), {}});
        } else if (fam == "kernel") {
            rows.push_back({a, kernel_g(cfg.s, cfg.t, a), {}});
        } else {
            const PolyEval e = k == 0 ? digamma(a) : polygamma(k, a);
            rows.push_back({a, e.value, e});
        }
    }

    Rendered r;
    if (cfg.format == out_format::json) {
        io::json_writer w;
        w.begin_object().field("schema", schema_version).field("command", "eval").field("family", fam);
        w.key("params").begin_object();
        if (two_param) w.field("s", cfg.s).field("t", cfg.t);
        if (has_lambda) w.field("lambda", cfg.lambda);
        if (fam == "delta" || fam == "theta") w.field("order", order);
        if (is_poly) w.field("k", k);
        w.end_object();
        w.key("points").begin_array();
        for (const auto& rw : rows) {
            w.begin_object().field(var, rw.arg).field("value", rw.value);
            if (rw.poly) w.field("abs_err_est", rw.poly->abs_err_est).field("method", to_string(rw.poly->method));
            w.end_object();
        }
        w.end_array().end_object();
        r.text = w.str();
    } else if (cfg.format == out_format::csv) {
        std::vector<std::string> header = {var, "value"};
        if (is_poly) {
            header.push_back("abs_err_est");
            header.push_back("method");
        }
        io::csv_writer c(header);
        for (const auto& rw : rows) {
            std::vector<std::string> f = {io::format_double(rw.arg), io::format_double(rw.value)};
            if (rw.poly) {
                f.push_back(io::format_double(rw.poly->abs_err_est));
                f.push_back(to_string(rw.poly->method));
            }
            c.row(f);
        }
        r.text = c.str();
    } else {
        std::string out = fam;
        if (two_param) out += "  s=" + detail::human_num(cfg.s) + " t=" + detail::human_num(cfg.t);
        if (has_lambda) out += " lambda=" + detail::human_num(cfg.lambda);
        if (order) out += " order=" + std::to_string(order);
        if (is_poly) out += "  k=" + std::to_string(k);
        out += "\n";
        for (const auto& rw : rows) {
            char buf[128];
            std::snprintf(buf, sizeof buf, "%s = %-24.17g value = %.17g\n", var.c_str(), rw.arg, rw.value);
            out += buf;
        }
        r.text = out;
    }
    return r;
}

// --- cm-check ------------------------------------------------------------------

struct CmCheckConfig {
    family fam = family::delta;
    double s = 0.0;
    double t = 0.0;
    double lambda = 1.0;
    int max_order = default_max_order;
    GridSpec grid;
    out_format format = out_format::human;
};

inline Rendered cmd_cm_check(const CmCheckConfig& cfg) {
    const ParamTriple p(cfg.s, cfg.t, cfg.lambda);
    make_grid(cfg.grid, p.alpha());  // validates before any evaluation
    const CmReport rep = cm_verify(cfg.fam, p, cfg.max_order, cfg.grid);
    Rendered r;
    r.code = rep.agree ? exit_ok : exit_violation;
    const std::string predicted = predicted_label(rep.predicted);
    if (cfg.format == out_format::json) {
        io::json_writer w;
        w.begin_object()
            .field("schema", schema_version)
            .field("command", "cm-check")
            .field("family", to_string(rep.fam))
            .field("s", cfg.s)
            .field("t", cfg.t)
            .field("lambda", cfg.lambda)
            .field("regime", to_string(p.gap_regime()))
            .field("max_order", rep.max_order);
        w.key("grid").begin_object();
        w.field("delta", cfg.grid.delta)
            .field("x_max", cfg.grid.x_max)
            .field("n_points", cfg.grid.n_points)
            .field("spacing", cfg.grid.spacing_law == spacing::log ? "log" : "lin");
        w.end_object();
        w.field("verdict", to_string(rep.verdict)).field("predicted", predicted);
        w.field("predicted_delta_cm", to_string(rep.predicted.delta_cm))
            .field("predicted_neg_delta_cm", to_string(rep.predicted.neg_delta_cm))
            .field("agree", rep.agree);
        w.key("per_order").begin_array();
        for (const auto& m : rep.per_order_min) {
            w.begin_object().field("order", m.order).field("min_value", m.min_value).field("argmin_x", m.argmin_x);
            w.end_object();
        }
        w.end_array();
        w.key("witnesses").begin_array();
        for (const auto& v : rep.witnesses) {
            w.begin_object()
                .field("order", v.order)
                .field("x", v.x)
                .field("value", v.value)
                .field("sign", to_string(v.sign))
                .field("relative", v.relative);
            w.end_object();
        }
        w.end_array().end_object();
        r.text = w.str();
    } else if (cfg.format == out_format::csv) {
        io::csv_writer c({"family", "s", "t", "lambda", "max_order", "verdict", "predicted", "agree", "witnesses"});
        c.row({to_string(rep.fam), io::format_double(cfg.s), io::format_double(cfg.t), io::format_double(cfg.lambda),
               std::to_string(rep.max_order), to_string(rep.verdict), predicted, rep.agree ? "true" : "false",
               std::to_string(rep.witnesses.size())});
        r.text = c.str();
    } else {
        std::string out = std::string(to_string(rep.fam)) + "  s=" + detail::human_num(cfg.s) +
                          " t=" + detail::human_num(cfg.t) + " lambda=" + detail::human_num(cfg.lambda) +
                          "  (max order " + std::to_string(rep.max_order) + ")\n";
        out += "verdict:   " + std::string(to_string(rep.verdict)) + "\n";
        out += "predicted: " + predicted + "\n";
        out += std::string("agree:     ") + (rep.agree ? "yes" : "NO") + "\n";
        for (const auto& m : rep.per_order_min) {
            out += "  n=" + std::to_string(m.order) + "  min (-1)^n f^(n) = " + detail::human_num(m.min_value) +
                   " at x = " + detail::human_num(m.argmin_x) + "\n";
        }
        for (const auto& v : rep.witnesses) {
            out += "  witness " + std::string(to_string(v.sign)) + " n=" + std::to_string(v.order) +
                   " x=" + detail::human_num(v.x) + " value=" + detail::human_num(v.value) + "\n";
        }
        r.text = out;
    }
    return r;
}

// --- sharp ---------------------------------------------------------------------

struct SharpConfig {
    family fam = family::delta;
    double s = 0.0;
    double t = 0.0;
    sharp_direction dir = sharp_direction::cm_upper;
    int max_order = default_max_order;
    GridSpec grid;
    LambdaBracket bracket;
    out_format format = out_format::human;
};

inline Rendered cmd_sharp(const SharpConfig& cfg) {
    make_grid(cfg.grid, std::min(cfg.s, cfg.t));
    const double est = sharp_lambda_estimate(cfg.fam, cfg.s, cfg.t, cfg.dir, cfg.max_order, cfg.grid, cfg.bracket);
    const double theory = sharp_lambda_theory(cfg.s, cfg.t, cfg.dir);
    const double gap = std::abs(est - theory);
    const bool ok = gap <= suite::sharp_tolerance;
    Rendered r;
    r.code = ok ? exit_ok : exit_violation;
    if (cfg.format == out_format::json) {
        io::json_writer w;
        w.begin_object()
            .field("schema", schema_version)
            .field("command", "sharp")
            .field("family", to_string(cfg.fam))
            .field("s", cfg.s)
            .field("t", cfg.t)
            .field("direction", to_string(cfg.dir))
            .field("max_order", cfg.max_order)
            .field("estimate", est)
            .field("theory", theory)
            .field("abs_gap", gap)
            .field("tolerance", suite::sharp_tolerance)
            .field("within_tolerance", ok)
            .end_object();
        r.text = w.str();
    } else if (cfg.format == out_format::csv) {
        io::csv_writer c({"family", "s", "t", "direction", "estimate", "theory", "abs_gap", "within_tolerance"});
        c.row({to_string(cfg.fam), io::format_double(cfg.s), io::format_double(cfg.t), to_string(cfg.dir),
               io::format_double(est), io::format_double(theory), io::format_double(gap), ok ? "true" : "false"});
        r.text = c.str();
    } else {
        char buf[256];
        std::snprintf(buf, sizeof buf, "%s %s  s=%g t=%g\nestimate  %.6f\ntheory    %.6f\nabs gap   %.3g (%s)\n",
                      to_string(cfg.fam), to_string(cfg.dir), cfg.s, cfg.t, est, theory, gap,
                      ok ? "within 1e-2" : "OUTSIDE 1e-2");
        r.text = buf;
    }
    return r;
}

// --- inequalities --------------------------------------------------------------

struct IneqArgs {
    std::optional<double> a, b, beta, gamma, x, alpha, gap;
    std::optional<int> k, n;
    std::optional<double> sweep_lo, sweep_hi;
    std::optional<int> sweep_n;
};

struct IneqEntry {
    std::set<std::string> options;  // per-check options it accepts
    std::function<std::vector<InequalityVerdict>(const IneqArgs&)> run;
};

namespace detail {

inline std::vector<double> sweep_points(const IneqArgs& a, double lo, double hi, double n = 400) {
    return log_points(a.sweep_lo.value_or(lo), a.sweep_hi.value_or(hi), a.sweep_n.value_or(static_cast<int>(n)));
}

inline std::vector<InequalityVerdict> one(InequalityVerdict v) { return {std::move(v)}; }

template <class F>
std::vector<InequalityVerdict> for_orders(std::optional<int> given, int lo, int hi, F&& f) {
    std::vector<InequalityVerdict> out;
    if (given) return {f(*given)};
    for (int k = lo; k <= hi; ++k) out.push_back(f(k));
    return out;
}

inline InequalityVerdict thm3_run(const IneqArgs& a) {
    const int k = a.k.value_or(1);
    if (a.a || a.b) {
        if (!a.a || !a.b) throw usage_error("thm3: --a and --b must be given together");
        const auto [beta, gamma] = thm3_sharp_constants(*a.b - *a.a);
        return check_thm3_divided_diff(*a.a, *a.b, k, a.beta.value_or(beta), a.gamma.value_or(gamma));
    }
    const double gap = a.gap.value_or(0.5);
    if (!(gap > 0.0)) throw domain_error("thm3: --gap must be > 0");
    const auto [beta, gamma] = thm3_sharp_constants(gap);
    return sweep_thm3(gap, k, a.beta.value_or(beta), a.gamma.value_or(gamma), sweep_points(a, 1e-3, 1e4));
}

inline InequalityVerdict gamma_ratio_run(const IneqArgs& a) {
    if (a.a || a.b) {
        if (!a.a || !a.b) throw usage_error("gamma-ratio: --a and --b must be given together");
        return check_gamma_ratio(*a.a, *a.b);
    }
    const double gap = a.gap.value_or(0.5);
    if (!(gap > 0.0) || gap == 1.0) throw degenerate_error("gamma-ratio: --gap must be > 0 and != 1");
    const auto as = sweep_points(a, 1e-3, 1e4);
    return sweep("gamma-ratio[gap=" + fmt_num(gap) + "]", "a: " + sweep_label(as) + ", b = a + gap", as,
                 [gap](double x) { return check_gamma_ratio(x, x + gap); });
}

template <class F>
InequalityVerdict point_or_sweep(const IneqArgs& a, const std::string& name, double lo, double hi, double shift,
                                 F&& check) {
    if (a.x) return check(*a.x);
    auto offs = sweep_points(a, lo, hi);
    const std::string dom = (shift != 0.0 ? "x - (" + fmt_num(shift) + ") on " : "x on ") + sweep_label(offs);
    for (double& v : offs) v += shift;
    return sweep(name, dom, offs, check);
}

}  // namespace detail

inline const std::map<std::string, IneqEntry>& inequality_registry() {
    using detail::one;
    using detail::point_or_sweep;
    static const std::map<std::string, IneqEntry> reg = {
        {"thm3", {{"a", "b", "k", "beta", "gamma", "gap"}, [](const IneqArgs& a) { return one(detail::thm3_run(a)); }}},
        {"gamma-ratio", {{"a", "b", "gap"}, [](const IneqArgs& a) { return one(detail::gamma_ratio_run(a)); }}},
        {"watson",
         {{"x"},
          [](const IneqArgs& a) {
              return one(point_or_sweep(a, "watson", 1e-3, 1e4, -0.5, [](double x) { return check_watson(x); }));
          }}},
        {"p-polynomial",
         {{"x"},
          [](const IneqArgs& a) {
              return one(point_or_sweep(a, "p-polynomial", 1e-3, 1e4, 0.0, [](double x) { return check_p_polynomial(x); }));
          }}},
        {"positivity",
         {{"x"},
          [](const IneqArgs& a) {
              return one(point_or_sweep(a, "positivity", 1e-3, 1e4, 0.0, [](double x) { return check_positivity(x); }));
          }}},
        {"qi-sandwich",
         {{"k", "x"},
          [](const IneqArgs& a) {
              return detail::for_orders(a.k, 1, 8, [&](int k) {
                  return point_or_sweep(a, "qi-sandwich[k=" + std::to_string(k) + "]", 1e-3, 1e4, 0.0,
                                        [k](double x) { return check_qi_psi_bounds(k, x); });
              });
          }}},
        {"batir",
         {{"x", "a", "b"},
          [](const IneqArgs& a) {
              const double lo = a.a.value_or(-euler_gamma);
              const double hi = a.b.value_or(0.0);
              return one(point_or_sweep(a, "batir[a=" + detail::fmt_num(lo) + ",b=" + detail::fmt_num(hi) + "]", 1e-4,
                                        1e4, 0.0, [=](double x) { return check_batir_psi(x, lo, hi); }));
          }}},
        {"batir-one-sided",
         {{"x"},
          [](const IneqArgs& a) {
              return one(point_or_sweep(a, "batir-one-sided", 2.0, 1e4, 0.0,
                                        [](double x) { return check_batir_one_sided(x); }));
          }}},
        {"exp-psi-bound",
         {{"n", "x", "alpha", "beta"},
          [](const IneqArgs& a) {
              return detail::for_orders(a.n, 1, 6, [&](int n) {
                  const double al = a.alpha.value_or(-static_cast<double>(n));
                  const double be = a.beta.value_or(0.0);
                  return point_or_sweep(a,
                                        "exp-psi-bound[n=" + std::to_string(n) + ",alpha=" + detail::fmt_num(al) +
                                            ",beta=" + detail::fmt_num(be) + "]",
                                        1e-4, 1e4, 0.0, [=](double x) { return check_exp_psi_bound(n, x, al, be); });
              });
          }}},
        {"alzer-ratio",
         {{"n", "x"},
          [](const IneqArgs& a) {
              return detail::for_orders(a.n, 1, 6, [&](int n) {
                  return point_or_sweep(a, "alzer-ratio[n=" + std::to_string(n) + "]", 1e-3, 1e4, 0.0,
                                        [n](double x) { return check_alzer_ratio(n, x); });
              });
          }}},
        {"q-bounds",
         {{"x", "alpha", "beta"},
          [](const IneqArgs& a) {
              const double al = a.alpha.value_or(1.0);
              const double be = a.beta.value_or(6.0 * std::exp(euler_gamma) / (pi * pi));
              // Sweep offsets sit above the root c.
              return one(point_or_sweep(a, "q-bounds", 1e-3, 1e4, psi_positive_root(),
                                        [=](double x) { return check_q_bounds(x, al, be); }));
          }}},
        {"limits", {{}, [](const IneqArgs&) { return check_limits_suite(); }}},
    };
    return reg;
}

/// The registry at default settings, in a fixed order.
inline std::vector<InequalityVerdict> run_all_inequalities() {
    std::vector<InequalityVerdict> out;
    auto add = [&](const std::vector<InequalityVerdict>& vs) { out.insert(out.end(), vs.begin(), vs.end()); };
    const auto& reg = inequality_registry();
    for (double gap : {0.5, 2.0}) {
        for (int k = 1; k <= 3; ++k) {
            IneqArgs a;
            a.gap = gap;
            a.k = k;
            add(reg.at("thm3").run(a));
        }
        IneqArgs a;
        a.gap = gap;
        add(reg.at("gamma-ratio").run(a));
    }
    for (const char* name : {"watson", "p-polynomial", "positivity", "qi-sandwich", "batir", "batir-one-sided",
                             "exp-psi-bound", "alzer-ratio", "q-bounds", "limits"}) {
        add(reg.at(name).run(IneqArgs{}));
    }
    return out;
}

inline Rendered render_verdicts(const std::string& command, const std::vector<InequalityVerdict>& vs,
                                out_format format) {
    bool all = !vs.empty();
    for (const auto& v : vs) all = all && v.holds;
    Rendered r;
    r.code = all ? exit_ok : exit_violation;
    if (format == out_format::json) {
        io::json_writer w;
        w.begin_object().field("schema", schema_version).field("command", command).field("all_hold", all);
        w.key("verdicts").begin_array();
        for (const auto& v : vs) detail::write_verdict(w, v);
        w.end_array().end_object();
        r.text = w.str();
    } else if (format == out_format::csv) {
        io::csv_writer c({"name", "holds", "worst_margin", "witness_x", "lhs", "rhs"});
        for (const auto& v : vs) c.row(detail::verdict_row(v));
        r.text = c.str();
    } else {
        for (const auto& v : vs) r.text += detail::human_verdict(v);
        r.text += all ? "all hold\n" : "VIOLATIONS FOUND\n";
    }
    return r;
}

// --- report --------------------------------------------------------------------

inline Rendered cmd_report(out_format format) {
    const auto results = suite::run_all();
    bool all = true;
    for (const auto& c : results) all = all && c.pass;
    Rendered r;
    r.code = all ? exit_ok : exit_violation;
    if (format == out_format::json) {
        io::json_writer w;
        w.begin_object().field("schema", schema_version).field("command", "report").field("all_pass", all);
        w.key("criteria").begin_array();
        for (const auto& c : results) {
            w.begin_object().field("id", c.id).field("title", c.title).field("pass", c.pass);
            w.key("metrics").begin_object();
            for (const auto& [k, v] : c.metrics) w.field(k, v);
            w.end_object();
            w.key("failures").begin_array();
            for (const auto& f : c.failures) w.value(f);
            w.end_array();
            w.key("checks").begin_array();
            for (const auto& chk : c.checks) {
                w.begin_object().field("expected_holds", chk.expected_holds).field("ok", chk.ok());
                w.key("verdict");
                detail::write_verdict(w, chk.verdict);
                w.end_object();
            }
            w.end_array();
            w.end_object();
        }
        w.end_array().end_object();
        r.text = w.str();
    } else if (format == out_format::csv) {
        io::csv_writer c({"id", "title", "pass", "failures"});
        for (const auto& res : results) {
            c.row({std::to_string(res.id), res.title, res.pass ? "true" : "false", std::to_string(res.failures.size())});
        }
        r.text = c.str();
    } else {
        for (const auto& res : results) {
            r.text += "[" + std::to_string(res.id) + "] " + (res.pass ? "PASS  " : "FAIL  ") + res.title + "\n";
            for (const auto& f : res.failures) r.text += "      " + f + "\n";
        }
    }
    return r;
}

// --- entry point ---------------------------------------------------------------

namespace detail {

inline void add_grid_flags(CLI::App* cmd, GridFlags& g) {
    cmd->add_option("--delta", g.delta, "grid: offset of the first point above -min(s,t)");
    cmd->add_option("--x-max", g.x_max, "grid: last point");
    cmd->add_option("--n-points", g.n_points, "grid: number of points");
    cmd->add_option("--spacing", g.spacing_law, "grid: log or lin")->check(CLI::IsMember({"log", "lin"}));
}

inline void add_format(CLI::App* cmd, std::string& fmt, std::optional<std::string>& path) {
    cmd->add_option("--format", fmt, "output format")->check(CLI::IsMember({"json", "csv", "human"}))->capture_default_str();
    cmd->add_option("--output", path, "write output to this file instead of stdout");
}

inline family parse_family(const std::string& s) { return s == "theta" ? family::theta : family::delta; }

}  // namespace detail

/// Runs the command line.  `env_grid` stands in for CM_ATLAS_GRID.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
                   const std::optional<std::string>& env_grid = std::nullopt) {
    CLI::App app{"Divided-difference polygamma families: evaluation, CM checks and inequality certification",
                 "cm_atlas"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "expand all help");

    GridFlags grid_flags;
    std::string fmt = "human";
    std::optional<std::string> out_path;

    // eval
    EvalConfig ev;
    auto* eval = app.add_subcommand("eval", "evaluate a family at a point or over a grid");
    eval->add_option("--family", ev.family, "family")->required()->check(CLI::IsMember(eval_families()));
    eval->add_option("--s", ev.s, "parameter s");
    eval->add_option("--t", ev.t, "parameter t");
    eval->add_option("--lambda", ev.lambda, "parameter lambda");
    eval->add_option("--x", ev.x, "single evaluation point");
    eval->add_option("--u", ev.u, "kernel argument u > 0");
    eval->add_option("--k", ev.k, "polygamma order");
    eval->add_option("--order", ev.order, "derivative order for delta/theta");
    detail::add_grid_flags(eval, grid_flags);
    detail::add_format(eval, fmt, out_path);

    // cm-check
    CmCheckConfig cc;
    std::string cc_family;
    auto* cm = app.add_subcommand("cm-check", "verify complete monotonicity against the classification");
    cm->add_option("--family", cc_family, "delta or theta")->required()->check(CLI::IsMember({"delta", "theta"}));
    cm->add_option("--s", cc.s, "parameter s")->required();
    cm->add_option("--t", cc.t, "parameter t")->required();
    cm->add_option("--lambda", cc.lambda, "parameter lambda")->required();
    cm->add_option("--max-order", cc.max_order, "highest derivative order (<= 8)")->capture_default_str();
    detail::add_grid_flags(cm, grid_flags);
    detail::add_format(cm, fmt, out_path);

    // sharp
    SharpConfig sc;
    std::string sc_family = "delta";
    std::string sc_dir;
    auto* sharp = app.add_subcommand("sharp", "recover the sharp lambda threshold by bisection");
    sharp->add_option("--family", sc_family, "delta or theta")->check(CLI::IsMember({"delta", "theta"}))->capture_default_str();
    sharp->add_option("--s", sc.s, "parameter s");
    sharp->add_option("--t", sc.t, "parameter t")->required();
    sharp->add_option("--direction", sc_dir, "cm-upper or negcm-lower")
        ->required()
        ->check(CLI::IsMember({"cm-upper", "negcm-lower"}));
    sharp->add_option("--max-order", sc.max_order, "highest derivative order (<= 8)")->capture_default_str();
    sharp->add_option("--bracket-lo", sc.bracket.lo, "bisection bracket lower end")->capture_default_str();
    sharp->add_option("--bracket-hi", sc.bracket.hi, "bisection bracket upper end")->capture_default_str();
    detail::add_grid_flags(sharp, grid_flags);
    detail::add_format(sharp, fmt, out_path);

    // inequalities
    IneqArgs ia;
    std::optional<std::string> ineq_name;
    bool ineq_all = false;
    auto* ineq = app.add_subcommand("inequalities", "run inequality and limit checks");
    auto* name_opt = ineq->add_option("--name", ineq_name, "check name");
    auto* all_opt = ineq->add_flag("--all", ineq_all, "run the full registry");
    name_opt->excludes(all_opt);
    std::map<std::string, CLI::Option*> ineq_opts = {
        {"a", ineq->add_option("--a", ia.a, "a (point, or lower constant for batir)")},
        {"b", ineq->add_option("--b", ia.b, "b (point, or upper constant for batir)")},
        {"k", ineq->add_option("--k", ia.k, "order k")},
        {"n", ineq->add_option("--n", ia.n, "order n")},
        {"beta", ineq->add_option("--beta", ia.beta, "constant beta")},
        {"gamma", ineq->add_option("--gamma", ia.gamma, "constant gamma")},
        {"alpha", ineq->add_option("--alpha", ia.alpha, "constant alpha")},
        {"x", ineq->add_option("--x", ia.x, "single point instead of a sweep")},
        {"gap", ineq->add_option("--gap", ia.gap, "b - a for swept two-point checks")},
    };
    ineq->add_option("--sweep-lo", ia.sweep_lo, "sweep lower end");
    ineq->add_option("--sweep-hi", ia.sweep_hi, "sweep upper end");
    ineq->add_option("--sweep-n", ia.sweep_n, "sweep points");
    detail::add_format(ineq, fmt, out_path);

    // report
    auto* report = app.add_subcommand("report", "run the acceptance suite and write a combined report");
    fmt = "json";
    detail::add_format(report, fmt, out_path);
    fmt = "human";

    std::vector<const char*> argv = {"cm_atlas"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_usage;
    }
    if (report->parsed() && report->count("--format") == 0) fmt = "json";

    try {
        Rendered r;
        const out_format format = parse_format(fmt);
        if (eval->parsed()) {
            ev.grid = resolve_grid(grid_flags, env_grid);
            ev.format = format;
            r = cmd_eval(ev);
        } else if (cm->parsed()) {
            cc.fam = detail::parse_family(cc_family);
            cc.grid = resolve_grid(grid_flags, env_grid);
            cc.format = format;
            r = cmd_cm_check(cc);
        } else if (sharp->parsed()) {
            sc.fam = detail::parse_family(sc_family);
            sc.dir = sc_dir == "cm-upper" ? sharp_direction::cm_upper : sharp_direction::negcm_lower;
            sc.grid = resolve_grid(grid_flags, env_grid);
            sc.format = format;
            r = cmd_sharp(sc);
        } else if (ineq->parsed()) {
            const auto& reg = inequality_registry();
            if (!ineq_all && !ineq_name) throw usage_error("inequalities: give --name <check> or --all");
            std::set<std::string> allowed;
            if (ineq_name) {
                const auto it = reg.find(*ineq_name);
                if (it == reg.end()) {
                    std::string names;
                    for (const auto& [n, e] : reg) names += (names.empty() ? "" : ", ") + n;
                    throw usage_error("inequalities: unknown check '" + *ineq_name + "' (known: " + names + ")");
                }
                allowed = it->second.options;
            }
            for (const auto& [opt, ptr] : ineq_opts) {
                if (ptr->count() > 0 && !allowed.count(opt)) {
                    throw usage_error("inequalities: --" + opt + " does not apply to " +
                                      (ineq_all ? std::string("--all") : *ineq_name));
                }
            }
            const auto verdicts = ineq_all ? run_all_inequalities() : reg.at(*ineq_name).run(ia);
            r = render_verdicts("inequalities", verdicts, format);
        } else {
            r = cmd_report(format);
        }
        if (out_path) {
            std::ofstream f(*out_path, std::ios::binary);
            if (!f) throw usage_error("cannot open output file '" + *out_path + "'");
            f << r.text;
            if (!f) throw usage_error("failed writing '" + *out_path + "'");
        } else {
            out << r.text;
        }
        return r.code;
    } catch (const numerical_error& e) {
        err << "numerical failure: " << e.what() << "\n";
        return exit_violation;
    } catch (const bracket_error& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const cm_atlas::overflow_error& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::logic_error& e) {
        // domain, order, degenerate and usage errors
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return exit_violation;
    }
}

}  // namespace cm_atlas::cli
