#include "hypterp/contfrac.hpp"

#include <cmath>

#include "hypterp/errors.hpp"

namespace hypterp::contfrac {

using specfun::gamma_signed;
using specfun::gauss_value_at_one;
using specfun::SignedLog;

namespace {
constexpr double kTiny = 1e-300;
constexpr double kCoincidenceLogTol = 1e-12;
constexpr double kTieTol = 1e-10;
} // namespace

const char* to_string(Winner w) {
    switch (w) {
        case Winner::linear: return "linear";
        case Winner::rational: return "rational";
        case Winner::tie: return "tie";
    }
    return "unknown";
}

double cf_partial_coefficient(const ParameterTriple& p, int k) {
    if (k < 1) throw constraint_error("partial-quotient index must be >= 1");
    double num, den;
    if (k % 2 == 1) {
        double m = (k + 1) / 2;
        num = (p.a - p.c - (m - 1.0)) * (p.b + m - 1.0);
        den = (p.c + 2.0 * m - 2.0) * (p.c + 2.0 * m - 1.0);
    } else {
        double m = k / 2;
        num = (p.b - p.c - m) * (p.a + m);
        den = (p.c + 2.0 * m - 1.0) * (p.c + 2.0 * m);
    }
    if (den == 0.0)
        throw pole_error("partial-quotient denominator vanishes at index " + std::to_string(k));
    return num / den;
}

double cf_eval(const CFSpec& spec, double x) {
    if (spec.depth < 1) throw constraint_error("depth must be >= 1");
    if (!(std::abs(x) < 1.0)) throw constraint_error("fraction requires |x| < 1");
    double r = cf_partial_coefficient(spec.p, spec.depth) * x;
    for (int j = spec.depth - 1; j >= 1; --j) {
        double den = 1.0 + r;
        if (den == 0.0) den = kTiny;
        r = cf_partial_coefficient(spec.p, j) * x / den;
    }
    double den = 1.0 + r;
    if (den == 0.0) den = kTiny;
    return 1.0 / den;
}

ForwardResult cf_eval_forward(const CFSpec& spec, double x) {
    if (spec.depth < 1) throw constraint_error("depth must be >= 1");
    if (!(std::abs(x) < 1.0)) throw constraint_error("fraction requires |x| < 1");
    // Lentz recurrence for w = 1 + u1 x/(1 + u2 x/(...)); result is 1/w.
    ForwardResult res;
    double f = 1.0, C = 1.0, D = 0.0;
    for (int j = 1; j <= spec.depth; ++j) {
        double aj = cf_partial_coefficient(spec.p, j) * x;
        D = 1.0 + aj * D;
        if (D == 0.0) {
            D = kTiny;
            res.tiny_substituted = true;
        }
        D = 1.0 / D;
        C = 1.0 + aj / C;
        if (C == 0.0) {
            C = kTiny;
            res.tiny_substituted = true;
        }
        f *= C * D;
    }
    res.value = 1.0 / f;
    return res;
}

Poly2 cf_linear_interpolant(const ParameterTriple& p) {
    if (p.c == p.b) throw constraint_error("endpoint value needs c != b");
    if (!(p.c - p.b > p.a))
        throw constraint_error("quotient interpolation requires c - b > a");
    return {1.0, p.b / (p.c - p.b), 0.0};
}

RationalApprox cf_rational_interpolant(const ParameterTriple& p) {
    if (!p.gauss_summable())
        throw constraint_error("quotient interpolation requires c - a - b > 0");
    double G = gauss_value_at_one(p); // also rejects gamma poles, incl. c == b
    RationalApprox r;
    r.numerator = {1.0, p.c * G / (p.c - p.b) - 1.0, 0.0};
    r.denominator = {1.0, G - 1.0, 0.0};
    return r;
}

bool coincidence_check(const ParameterTriple& p) {
    if (!p.gauss_summable())
        throw constraint_error("coincidence test requires c - a - b > 0");
    SignedLog l1 = gamma_signed(p.c);
    SignedLog l2 = gamma_signed(p.c - p.a - p.b);
    SignedLog r1 = gamma_signed(p.c - p.a);
    SignedLog r2 = gamma_signed(p.c - p.b);
    if (l1.sign * l2.sign != r1.sign * r2.sign) return false;
    return std::abs(l1.log_abs + l2.log_abs - r1.log_abs - r2.log_abs) <=
           kCoincidenceLogTol;
}

CompareReport cf_compare(const ParameterTriple& p, int depth, int grid_size) {
    if (grid_size < 2) throw constraint_error("comparison grid needs >= 2 points");
    Poly2 rl = cf_linear_interpolant(p);
    RationalApprox rr = cf_rational_interpolant(p);
    CFSpec spec{p, depth};

    CompareReport rep;
    rep.xs.reserve(grid_size);
    for (int i = 0; i < grid_size; ++i) {
        // the truncated fraction needs |x| < 1, so the grid stops at 0.99
        double x = 0.99 * i / (grid_size - 1);
        double g = cf_eval(spec, x);
        double el = std::abs(rl(x) - g);
        double er = std::abs(rr(x) - g);
        rep.xs.push_back(x);
        rep.cf_values.push_back(g);
        rep.err_linear.push_back(el);
        rep.err_rational.push_back(er);
        if (el > rep.sup_linear) rep.sup_linear = el;
        if (er > rep.sup_rational) rep.sup_rational = er;
    }
    if (std::abs(rep.sup_linear - rep.sup_rational) <= kTieTol)
        rep.winner = Winner::tie;
    else
        rep.winner = rep.sup_linear < rep.sup_rational ? Winner::linear : Winner::rational;
    return rep;
}

} // namespace hypterp::contfrac
