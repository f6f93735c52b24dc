#include "hypterp/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "hypterp/errors.hpp"
#include "hypterp/specfun.hpp"

namespace hypterp::analysis {

using specfun::digamma;
using specfun::log_gamma;

namespace {

void check_domain(double a, double c) {
    if (!(c > 4.0)) throw constraint_error("quotient requires c > 4");
    if (!(c - a > 0.0 && c + a - 1.0 > 0.0))
        throw constraint_error("quotient requires c - a > 0 and c + a - 1 > 0");
}

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

std::vector<double> make_grid(double lo, double hi, double step) {
    std::vector<double> g;
    for (int i = 0;; ++i) {
        double v = lo + i * step;
        if (v > hi + 0.5 * step) break;
        g.push_back(std::min(v, hi));
    }
    return g;
}

} // namespace

double gamma_quotient_g(double a, double c) {
    check_domain(a, c);
    return std::exp(log_gamma(c) + log_gamma(c - 4.0) -
                    log_gamma(c - a) - log_gamma(c + a - 1.0));
}

int log_derivative_sign(double a, double c) {
    check_domain(a, c);
    return sign_of(digamma(c) + digamma(c - 4.0) -
                   digamma(c - a) - digamma(c + a - 1.0));
}

bool in_proved_monotone_range(double a) {
    return (a > -3.0 && a < 0.0) || (a > 1.0 && a < 4.0);
}

bool in_conjectured_range(double a) { return a >= 0.0 && a <= 1.0; }

bool ScanReport::has_proved_range_violation() const {
    for (const auto& v : violations)
        if (v.proved_range) return true;
    return false;
}

ScanReport conjecture_scan(const std::vector<double>& a_grid,
                           const std::vector<double>& c_grid) {
    if (a_grid.empty() || c_grid.empty())
        throw constraint_error("scan grids must be nonempty");
    for (std::size_t i = 0; i + 1 < a_grid.size(); ++i)
        if (!(a_grid[i] < a_grid[i + 1]))
            throw constraint_error("a grid must be strictly increasing");
    for (std::size_t j = 0; j + 1 < c_grid.size(); ++j)
        if (!(c_grid[j] < c_grid[j + 1]))
            throw constraint_error("c grid must be strictly increasing");
    for (double a : a_grid)
        if (!(a >= -3.0 && a <= 4.0))
            throw constraint_error("scan expects a within [-3, 4]");
    for (double c : c_grid)
        if (!(c > 4.0))
            throw constraint_error("scan expects c > 4");

    std::size_t na = a_grid.size(), nc = c_grid.size();
    ScanReport rep;
    rep.a_grid = a_grid;
    rep.c_grid = c_grid;
    rep.g.assign(na, std::vector<double>(nc));
    rep.fd_sign.assign(na, std::vector<int>(nc, 0));
    rep.psi_sign.assign(na, std::vector<int>(nc, 0));

    for (std::size_t i = 0; i < na; ++i) {
        double a = a_grid[i];
        bool proved = in_proved_monotone_range(a);
        bool claimed = proved || in_conjectured_range(a);
        for (std::size_t j = 0; j < nc; ++j) {
            rep.g[i][j] = gamma_quotient_g(a, c_grid[j]);
            rep.psi_sign[i][j] = log_derivative_sign(a, c_grid[j]);
        }
        for (std::size_t j = 0; j < nc; ++j) {
            if (j + 1 < nc)
                rep.fd_sign[i][j] = sign_of(rep.g[i][j + 1] - rep.g[i][j]);
            else if (nc >= 2)
                rep.fd_sign[i][j] = sign_of(rep.g[i][j] - rep.g[i][j - 1]);
        }
        if (!claimed) continue; // outside every claimed range: data only
        for (std::size_t j = 0; j < nc; ++j) {
            bool fd_bad = j + 1 < nc && rep.g[i][j + 1] >= rep.g[i][j];
            bool psi_bad = rep.psi_sign[i][j] >= 0;
            if (fd_bad || psi_bad) rep.violations.push_back({i, j, proved});
        }
    }
    return rep;
}

std::vector<double> default_a_grid() { return make_grid(0.0, 1.0, 0.05); }
std::vector<double> default_c_grid() { return make_grid(4.05, 30.0, 0.05); }

DecayReport error_decay_report(double a, const std::vector<double>& c_grid) {
    if (!(a > -3.0 && a < 4.0))
        throw constraint_error("decay report requires -3 < a < 4");
    for (std::size_t j = 0; j + 1 < c_grid.size(); ++j)
        if (!(c_grid[j] < c_grid[j + 1]))
            throw constraint_error("c grid must be strictly increasing");
    DecayReport rep;
    rep.a = a;
    rep.rows.reserve(c_grid.size());
    for (double c : c_grid) rep.rows.push_back({c, interp::error_bound_q1(a, c)});
    for (std::size_t j = 0; j + 1 < rep.rows.size(); ++j) {
        double cur = rep.rows[j].bound.bound, nxt = rep.rows[j + 1].bound.bound;
        if (nxt > cur * (1.0 + 1e-12)) {
            rep.nonincreasing = false;
            break;
        }
    }
    return rep;
}

} // namespace hypterp::analysis
