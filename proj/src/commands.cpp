#include "hypterp/commands.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <initializer_list>
#include <iostream>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "hypterp/analysis.hpp"
#include "hypterp/contfrac.hpp"
#include "hypterp/errors.hpp"
#include "hypterp/interp.hpp"

namespace hypterp::cli {

using specfun::ParameterTriple;

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmtg(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

std::string fmt4(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.4f", round4(v));
    return buf;
}

const double kTableXs[] = {0.0, 0.25, 0.5, 0.75, 1.0};

TableBlock linear_block(const ParameterTriple& p) {
    auto poly = interp::linear_interpolant(p);
    double bound = interp::linear_error_bound(p).bound;
    TableBlock blk{p.a, p.b, p.c, {}};
    for (double x : kTableXs) {
        double f = specfun::hyp2f1(p, x);
        double v = poly(x);
        blk.rows.push_back({x, f, v, std::fabs(f - v), bound});
    }
    return blk;
}

TableBlock q1_block(double a, double c) {
    ParameterTriple p{a, 1.0 - a, c};
    auto poly = interp::quadratic_interpolant_q1(a, c);
    double bound = interp::error_bound_q1(a, c).bound;
    TableBlock blk{p.a, p.b, p.c, {}};
    for (double x : kTableXs) {
        double f = specfun::hyp2f1(p, x);
        double v = poly(x);
        blk.rows.push_back({x, f, v, std::fabs(f - v), bound});
    }
    return blk;
}

// Quotient 2F1[a+1,b;c+1;x] / 2F1[a,b;c;x], the function the fraction converges to.
double cf_target(const ParameterTriple& p, double x) {
    ParameterTriple up{p.a + 1.0, p.b, p.c + 1.0};
    return specfun::hyp2f1(up, x) / specfun::hyp2f1(p, x);
}

void figure_rows(std::ostream& os, int grid, const ParameterTriple& p,
                 const std::function<double(double)>& approx,
                 const std::function<double(double)>& target) {
    for (int i = 0; i < grid; ++i) {
        double x = static_cast<double>(i) / (grid - 1);
        double f = target ? target(x) : specfun::hyp2f1(p, x);
        double v = approx(x);
        os << fmt17(x) << ',' << fmt17(f) << ',' << fmt17(v) << ','
           << fmt17(std::fabs(f - v)) << '\n';
    }
}

void q1_family_rows(std::ostream& os, int grid, double a,
                    std::initializer_list<double> cs) {
    for (double c : cs) {
        ParameterTriple p{a, 1.0 - a, c};
        auto poly = interp::quadratic_interpolant_q1(a, c);
        for (int i = 0; i < grid; ++i) {
            double x = static_cast<double>(i) / (grid - 1);
            double f = specfun::hyp2f1(p, x);
            double v = poly(x);
            os << fmtg(c) << ',' << fmt17(x) << ',' << fmt17(f) << ','
               << fmt17(v) << ',' << fmt17(std::fabs(f - v)) << '\n';
        }
    }
}

std::vector<double> step_grid(double lo, double hi, double step) {
    std::vector<double> g;
    for (int i = 0;; ++i) {
        double v = lo + i * step;
        if (v > hi + step * 1e-9) break;
        g.push_back(v);
    }
    return g;
}

void emit_poly(std::ostream& os, const interp::Poly2& poly) {
    os << "c0," << fmt17(poly.c0) << '\n'
       << "c1," << fmt17(poly.c1) << '\n'
       << "c2," << fmt17(poly.c2) << '\n';
}

void emit_bound(std::ostream& os, const interp::ErrorBound& b) {
    os << "bound," << fmt17(b.bound) << '\n'
       << "vanishes," << (b.vanishes ? 1 : 0) << '\n';
}

} // namespace

double round4(double v) { return std::nearbyint(v * 1e4) / 1e4; }

std::vector<TableBlock> table_blocks(int which) {
    switch (which) {
    case 1:
        return {linear_block({1.0, 2.0, 6.0})};
    case 2:
        return {q1_block(3.9, 5.0), q1_block(3.9, 6.0)};
    case 3:
        return {q1_block(0.9, 5.0), q1_block(0.9, 6.0)};
    default:
        throw constraint_error("table number must be 1, 2, or 3");
    }
}

void write_table(int which, std::ostream& os) {
    auto blocks = table_blocks(which);
    // The printed error column is the difference of the printed cells, so the
    // three value columns stay mutually consistent at 4 decimals.
    if (which == 1) {
        os << "x,actual,approx,abs_error,bound\n";
        for (const auto& r : blocks[0].rows)
            os << fmtg(r.x) << ',' << fmt4(r.actual) << ',' << fmt4(r.approx) << ','
               << fmt4(std::fabs(round4(r.actual) - round4(r.approx))) << ','
               << fmt4(r.bound) << '\n';
        return;
    }
    os << "a,c,x,actual,approx,abs_error,bound\n";
    for (const auto& blk : blocks)
        for (const auto& r : blk.rows)
            os << fmtg(blk.a) << ',' << fmtg(blk.c) << ',' << fmtg(r.x) << ','
               << fmt4(r.actual) << ',' << fmt4(r.approx) << ','
               << fmt4(std::fabs(round4(r.actual) - round4(r.approx))) << ','
               << fmt4(r.bound) << '\n';
}

std::vector<std::string> figure_kinds() {
    return {"pl", "pq1", "pq2", "rl", "rr", "eq1a", "eq1b"};
}

void write_figure(const std::string& which, int grid, std::ostream& os) {
    if (grid < 2) throw constraint_error("figure grid needs at least 2 points");

    if (which == "pl") {
        ParameterTriple p{1.0, 2.0, 6.0};
        os << "x,f,approx,abs_error\n";
        figure_rows(os, grid, p, interp::linear_interpolant(p), nullptr);
    } else if (which == "pq1") {
        double a = 0.9, c = 1.5;
        ParameterTriple p{a, 1.0 - a, c};
        os << "x,f,approx,abs_error\n";
        figure_rows(os, grid, p, interp::quadratic_interpolant_q1(a, c), nullptr);
    } else if (which == "pq2") {
        double a = 0.1, b = 0.3;
        ParameterTriple p{a, b, (a + b + 1.0) / 2.0};
        os << "x,f,approx,abs_error\n";
        figure_rows(os, grid, p, interp::quadratic_interpolant_q2(a, b), nullptr);
    } else if (which == "rl" || which == "rr") {
        ParameterTriple p{1.0, 2.0, 6.0};
        std::function<double(double)> approx;
        if (which == "rl")
            approx = contfrac::cf_linear_interpolant(p);
        else
            approx = contfrac::cf_rational_interpolant(p);
        os << "x,f,approx,abs_error\n";
        figure_rows(os, grid, p, approx, [&p](double x) { return cf_target(p, x); });
    } else if (which == "eq1a") {
        os << "c,x,f,approx,abs_error\n";
        q1_family_rows(os, grid, 3.9, {4.5, 6.5});
    } else if (which == "eq1b") {
        os << "c,x,f,approx,abs_error\n";
        q1_family_rows(os, grid, 0.9, {4.1, 6.1});
    } else {
        std::string known;
        for (const auto& k : figure_kinds()) known += (known.empty() ? "" : ", ") + k;
        throw constraint_error("unknown figure '" + which + "' (expected one of: " + known + ")");
    }
}

void write_cf_compare(double a, double b, double c, int depth, int grid, std::ostream& os) {
    if (depth < 1) throw constraint_error("cf-compare depth must be at least 1");
    ParameterTriple p{a, b, c};
    auto rep = contfrac::cf_compare(p, depth, grid);
    auto lin = contfrac::cf_linear_interpolant(p);
    auto rat = contfrac::cf_rational_interpolant(p);
    os << "x,cf,linear,rational,err_linear,err_rational\n";
    for (std::size_t i = 0; i < rep.xs.size(); ++i)
        os << fmt17(rep.xs[i]) << ',' << fmt17(rep.cf_values[i]) << ','
           << fmt17(lin(rep.xs[i])) << ',' << fmt17(rat(rep.xs[i])) << ','
           << fmt17(rep.err_linear[i]) << ',' << fmt17(rep.err_rational[i]) << '\n';
    os << "sup_linear," << fmt17(rep.sup_linear) << '\n'
       << "sup_rational," << fmt17(rep.sup_rational) << '\n'
       << "winner," << contfrac::to_string(rep.winner) << '\n';
}

int write_scan(double a_min, double a_max, double a_step,
               double c_min, double c_max, double c_step, std::ostream& os) {
    if (!(a_step > 0.0) || !(c_step > 0.0))
        throw constraint_error("scan steps must be positive");
    if (!(a_min <= a_max) || !(c_min <= c_max))
        throw constraint_error("scan ranges must be nondecreasing");
    auto rep = analysis::conjecture_scan(step_grid(a_min, a_max, a_step),
                                         step_grid(c_min, c_max, c_step));
    os << "a,c,g,fd_slope_sign,digamma_sign\n";
    for (std::size_t i = 0; i < rep.a_grid.size(); ++i)
        for (std::size_t j = 0; j < rep.c_grid.size(); ++j)
            os << fmtg(rep.a_grid[i]) << ',' << fmtg(rep.c_grid[j]) << ','
               << fmt17(rep.g[i][j]) << ',' << rep.fd_sign[i][j] << ','
               << rep.psi_sign[i][j] << '\n';
    for (const auto& v : rep.violations)
        os << "anomaly," << fmtg(rep.a_grid[v.ai]) << ',' << fmtg(rep.c_grid[v.cj])
           << ',' << (v.proved_range ? "established" : "conjectured") << '\n';
    if (rep.clean()) {
        os << "verdict,monotone-decreasing everywhere\n";
        return 0;
    }
    os << "verdict,anomalies detected\n";
    return rep.has_proved_range_violation() ? 1 : 10;
}

void write_interp(const std::string& kind, const std::vector<double>& params,
                  std::ostream& os) {
    auto need = [&](std::size_t n, const char* names) {
        if (params.size() != n)
            throw constraint_error("interp kind '" + kind + "' expects " +
                                   std::to_string(n) + " parameters: " + names);
    };
    os << "key,value\n"
       << "kind," << kind << '\n';
    if (kind == "pl") {
        need(3, "a b c");
        ParameterTriple p{params[0], params[1], params[2]};
        os << "a," << fmtg(p.a) << "\nb," << fmtg(p.b) << "\nc," << fmtg(p.c) << '\n';
        emit_poly(os, interp::linear_interpolant(p));
        emit_bound(os, interp::linear_error_bound(p));
    } else if (kind == "pq") {
        need(3, "a b c");
        ParameterTriple p{params[0], params[1], params[2]};
        os << "a," << fmtg(p.a) << "\nb," << fmtg(p.b) << "\nc," << fmtg(p.c) << '\n';
        emit_poly(os, interp::quadratic_interpolant(p));
        emit_bound(os, interp::quadratic_error_bound(p));
    } else if (kind == "pq1") {
        need(2, "a c");
        os << "a," << fmtg(params[0]) << "\nc," << fmtg(params[1]) << '\n';
        emit_poly(os, interp::quadratic_interpolant_q1(params[0], params[1]));
        emit_bound(os, interp::error_bound_q1(params[0], params[1]));
    } else if (kind == "pq2") {
        need(2, "a b");
        os << "a," << fmtg(params[0]) << "\nb," << fmtg(params[1]) << '\n';
        emit_poly(os, interp::quadratic_interpolant_q2(params[0], params[1]));
        emit_bound(os, interp::error_bound_q2(params[0], params[1]));
    } else if (kind == "rl") {
        need(3, "a b c");
        ParameterTriple p{params[0], params[1], params[2]};
        os << "a," << fmtg(p.a) << "\nb," << fmtg(p.b) << "\nc," << fmtg(p.c) << '\n';
        emit_poly(os, contfrac::cf_linear_interpolant(p));
    } else if (kind == "rr") {
        need(3, "a b c");
        ParameterTriple p{params[0], params[1], params[2]};
        auto r = contfrac::cf_rational_interpolant(p);
        os << "a," << fmtg(p.a) << "\nb," << fmtg(p.b) << "\nc," << fmtg(p.c) << '\n'
           << "num_c0," << fmt17(r.numerator.c0) << '\n'
           << "num_c1," << fmt17(r.numerator.c1) << '\n'
           << "den_c0," << fmt17(r.denominator.c0) << '\n'
           << "den_c1," << fmt17(r.denominator.c1) << '\n';
    } else {
        throw constraint_error("unknown interp kind '" + kind +
                               "' (expected pl, pq, pq1, pq2, rl, or rr)");
    }
}

double eval_value(double a, double b, double c, double x, const std::string& method,
                  const specfun::EvalOptions& opts) {
    ParameterTriple p{a, b, c};
    if (method == "series") return specfun::hyp2f1(p, x, opts);
    if (method == "pfaff") return specfun::pfaff_transform(p, x, opts);
    if (method == "gauss-one") {
        if (x != 1.0)
            throw constraint_error("method gauss-one evaluates the point x = 1 only");
        return specfun::gauss_value_at_one(p);
    }
    throw constraint_error("unknown method '" + method +
                           "' (expected series, pfaff, or gauss-one)");
}

int run_cli(int argc, char** argv) {
    CLI::App app{"Gauss hypergeometric function on [0,1]: evaluation, interpolants "
                 "with a-priori error bounds, continued-fraction approximants, and "
                 "a gamma-quotient monotonicity scan"};
    app.require_subcommand(1);

    std::string out_path;
    double a = 0, b = 0, c = 0, x = 0;
    std::string method = "series";
    specfun::EvalOptions opts;
    std::string kind;
    std::vector<double> params;
    int table_which = 1;
    std::string figure_which;
    int grid = 1001;
    int depth = 40;
    double a_min = 0.0, a_max = 1.0, a_step = 0.05;
    double c_min = 4.05, c_max = 30.0, c_step = 0.05;

    auto* eval_cmd = app.add_subcommand("eval", "Evaluate 2F1[a,b;c;x], x in [0,1]");
    eval_cmd->add_option("a", a, "numerator parameter a")->required();
    eval_cmd->add_option("b", b, "numerator parameter b")->required();
    eval_cmd->add_option("c", c, "denominator parameter c")->required();
    eval_cmd->add_option("x", x, "evaluation point in [0,1]")->required();
    eval_cmd->add_option("--method", method, "series, pfaff, or gauss-one")
        ->capture_default_str();
    eval_cmd->add_option("--tol", opts.tol, "relative termination tolerance")
        ->capture_default_str();
    eval_cmd->add_option("--max-terms", opts.max_terms, "series cutoff")
        ->capture_default_str();
    eval_cmd->add_option("--out", out_path, "write to file instead of stdout");

    auto* interp_cmd = app.add_subcommand(
        "interp", "Print interpolant coefficients (and bound where one exists)");
    interp_cmd->add_option("kind", kind, "pl, pq, pq1, pq2, rl, or rr")->required();
    interp_cmd->add_option("params", params,
                           "pl/pq/rl/rr: a b c;  pq1: a c;  pq2: a b");
    interp_cmd->add_option("--out", out_path, "write to file instead of stdout");

    auto* table_cmd = app.add_subcommand("table", "Reproduce a worked table (1-3)");
    table_cmd->add_option("which", table_which, "table number")->required();
    table_cmd->add_option("--out", out_path, "write to file instead of stdout");

    auto* figure_cmd = app.add_subcommand("figure", "Dump curve data for a figure");
    figure_cmd->add_option("which", figure_which, "pl, pq1, pq2, rl, rr, eq1a, eq1b")
        ->required();
    figure_cmd->add_option("--grid", grid, "points across [0,1]")->capture_default_str();
    figure_cmd->add_option("--out", out_path, "write to file instead of stdout");

    auto* cf_cmd = app.add_subcommand(
        "cf-compare", "Compare both interpolants against the continued fraction");
    cf_cmd->add_option("a", a, "numerator parameter a")->required();
    cf_cmd->add_option("b", b, "numerator parameter b")->required();
    cf_cmd->add_option("c", c, "denominator parameter c")->required();
    cf_cmd->add_option("--depth", depth, "partial quotients kept")->capture_default_str();
    cf_cmd->add_option("--grid", grid, "points across [0,0.99]")->capture_default_str();
    cf_cmd->add_option("--out", out_path, "write to file instead of stdout");

    auto* scan_cmd = app.add_subcommand(
        "scan", "Audit monotone decrease of the gamma quotient over an (a,c) grid");
    scan_cmd->add_option("a_min", a_min)->capture_default_str();
    scan_cmd->add_option("a_max", a_max)->capture_default_str();
    scan_cmd->add_option("a_step", a_step)->capture_default_str();
    scan_cmd->add_option("c_min", c_min)->capture_default_str();
    scan_cmd->add_option("c_max", c_max)->capture_default_str();
    scan_cmd->add_option("c_step", c_step)->capture_default_str();
    scan_cmd->add_option("--out", out_path, "write to file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2; // malformed usage is a constraint violation
    }

    std::ofstream ofs;
    std::ostream* os = &std::cout;
    if (!out_path.empty()) {
        ofs.open(out_path);
        if (!ofs) {
            std::cerr << "error: cannot open output file: " << out_path << '\n';
            return 1;
        }
        os = &ofs;
    }

    try {
        if (*eval_cmd) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.10g", eval_value(a, b, c, x, method, opts));
            *os << buf << '\n';
        } else if (*interp_cmd) {
            write_interp(kind, params, *os);
        } else if (*table_cmd) {
            write_table(table_which, *os);
        } else if (*figure_cmd) {
            write_figure(figure_which, grid, *os);
        } else if (*cf_cmd) {
            write_cf_compare(a, b, c, depth, grid, *os);
        } else if (*scan_cmd) {
            return write_scan(a_min, a_max, a_step, c_min, c_max, c_step, *os);
        }
    } catch (const constraint_error& e) {
        std::cerr << "constraint error: " << e.what() << '\n';
        return 2;
    } catch (const convergence_error& e) {
        std::cerr << "convergence error: " << e.what() << '\n';
        return 3;
    } catch (const pole_error& e) {
        std::cerr << "pole error: " << e.what() << '\n';
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

} // namespace hypterp::cli
