#pragma once

#include <vector>

#include "hypterp/interp.hpp"
#include "hypterp/specfun.hpp"

namespace hypterp::contfrac {

using interp::Poly2;
using specfun::ParameterTriple;

// Truncation spec for the continued fraction of
// 2F1[a+1,b;c+1;x] / 2F1[a,b;c;x].
struct CFSpec {
    ParameterTriple p;
    int depth = 40; // number of partial quotients kept
};

struct ForwardResult {
    double value{};
    bool tiny_substituted = false; // a vanishing denominator was patched
};

// Ratio of two linear polynomials, normalized so numerator(0)=denominator(0)=1.
struct RationalApprox {
    Poly2 numerator;
    Poly2 denominator;

    double operator()(double x) const { return numerator(x) / denominator(x); }
};

enum class Winner { linear, rational, tie };

const char* to_string(Winner w);

struct CompareReport {
    std::vector<double> xs;
    std::vector<double> cf_values;
    std::vector<double> err_linear;
    std::vector<double> err_rational;
    double sup_linear{};
    double sup_rational{};
    Winner winner = Winner::tie;
};

// k-th partial-quotient coefficient u_k, k >= 1.
double cf_partial_coefficient(const ParameterTriple& p, int k);

// Truncated fraction 1/(1 + u1 x/(1 + u2 x/(...))), evaluated bottom-up.
double cf_eval(const CFSpec& spec, double x);

// Same value by a forward (Lentz-style) recurrence, usable incrementally;
// vanishing denominators are replaced by 1e-300 and flagged.
ForwardResult cf_eval_forward(const CFSpec& spec, double x);

// Line through the quotient's endpoint values 1 and c/(c-b).
Poly2 cf_linear_interpolant(const ParameterTriple& p);

// Ratio of the endpoint lines of numerator and denominator series.
RationalApprox cf_rational_interpolant(const ParameterTriple& p);

// True iff Gamma(c)Gamma(c-a-b) = Gamma(c-a)Gamma(c-b), the exact condition
// under which the two interpolants coincide.
bool coincidence_check(const ParameterTriple& p);

// Pointwise errors of both interpolants against the depth-truncated fraction
// on a uniform grid over [0, 0.99], plus the sup-norm winner.
CompareReport cf_compare(const ParameterTriple& p, int depth = 40, int grid_size = 1001);

} // namespace hypterp::contfrac
