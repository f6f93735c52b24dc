#include "hypterp/interp.hpp"

#include <cmath>
#include <cstddef>

#include "hypterp/errors.hpp"

namespace hypterp::interp {

using specfun::bailey_half;
using specfun::cos_pi;
using specfun::gamma_signed;
using specfun::gauss_value_at_one;
using specfun::hyp2f1;
using specfun::log_gamma;
using specfun::quadratic_transform_half;
using specfun::SignedLog;

namespace {

// When the cosine form of f(1) degenerates we fall back to the gamma-ratio
// form, which remains finite on a wider parameter set.
constexpr double kCosineFloor = 1e-10;

double q2_value_one(double a, double b) {
    if (std::abs(cos_pi(0.5 * (a + b))) < kCosineFloor)
        return q2_value_one_gamma(a, b);
    return q2_value_one_cosine(a, b);
}

// |Gamma(n1) Gamma(n2) / (Gamma(d1) Gamma(d2))| through signed logs.
double abs_gamma_quotient(double n1, double n2, double d1, double d2) {
    SignedLog g1 = gamma_signed(n1);
    SignedLog g2 = gamma_signed(n2);
    SignedLog g3 = gamma_signed(d1);
    SignedLog g4 = gamma_signed(d2);
    return std::exp(g1.log_abs + g2.log_abs - g3.log_abs - g4.log_abs);
}

bool any_of3(double v, double x0, double x1, double x2) {
    return v == x0 || v == x1 || v == x2;
}

} // namespace

const char* to_string(NodeIdentity id) {
    switch (id) {
        case NodeIdentity::series: return "series";
        case NodeIdentity::gauss_one: return "gauss_one";
        case NodeIdentity::bailey: return "bailey";
        case NodeIdentity::quad_transform: return "quad_transform";
        case NodeIdentity::reflection_form: return "reflection_form";
    }
    return "unknown";
}

double node_cubic_max() { return 1.0 / (12.0 * std::sqrt(3.0)); }

std::vector<double> lagrange_basis(const std::vector<double>& nodes, double x) {
    std::size_t n = nodes.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (nodes[i] == nodes[j])
                throw constraint_error("interpolation nodes must be pairwise distinct");
    std::vector<double> w(n, 1.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) w[i] *= (x - nodes[j]) / (nodes[i] - nodes[j]);
    return w;
}

Poly2 poly_from_nodes(const NodeSet& ns) {
    std::size_t n = ns.nodes.size();
    if (n != ns.values.size() || (n != 2 && n != 3))
        throw constraint_error("node set must carry 2 or 3 nodes with values");
    lagrange_basis(ns.nodes, 0.0); // distinctness check
    if (n == 2) {
        double slope = (ns.values[1] - ns.values[0]) / (ns.nodes[1] - ns.nodes[0]);
        return {ns.values[0] - slope * ns.nodes[0], slope, 0.0};
    }
    // expand sum_i y_i (x - xj)(x - xk) / ((xi - xj)(xi - xk)) in monomials
    Poly2 p{};
    for (std::size_t i = 0; i < 3; ++i) {
        double xj = ns.nodes[(i + 1) % 3], xk = ns.nodes[(i + 2) % 3];
        double den = (ns.nodes[i] - xj) * (ns.nodes[i] - xk);
        double w = ns.values[i] / den;
        p.c2 += w;
        p.c1 -= w * (xj + xk);
        p.c0 += w * xj * xk;
    }
    return p;
}

NodeSet linear_nodes(const ParameterTriple& p) {
    NodeSet ns;
    ns.nodes = {0.0, 1.0};
    ns.values = {1.0, gauss_value_at_one(p)};
    ns.provenance = {NodeIdentity::series, NodeIdentity::gauss_one};
    return ns;
}

NodeSet quadratic_nodes(const ParameterTriple& p, const EvalOptions& opts) {
    NodeSet ns;
    ns.nodes = {0.0, 0.5, 1.0};
    ns.values = {1.0, hyp2f1(p, 0.5, opts), gauss_value_at_one(p)};
    ns.provenance = {NodeIdentity::series, NodeIdentity::series, NodeIdentity::gauss_one};
    return ns;
}

NodeSet quadratic_nodes_q1(double a, double c) {
    if (!(c > 1.0)) throw constraint_error("the a,1-a family requires c > 1");
    NodeSet ns;
    ns.nodes = {0.0, 0.5, 1.0};
    ns.values = {1.0, bailey_half(a, c), gauss_value_at_one({a, 1.0 - a, c})};
    ns.provenance = {NodeIdentity::series, NodeIdentity::bailey, NodeIdentity::gauss_one};
    return ns;
}

NodeSet quadratic_nodes_q2(double a, double b) {
    if (!(a + b < 1.0)) throw constraint_error("the (a+b+1)/2 family requires a + b < 1");
    NodeSet ns;
    ns.nodes = {0.0, 0.5, 1.0};
    ns.values = {1.0, quadratic_transform_half(a, b), q2_value_one(a, b)};
    ns.provenance = {NodeIdentity::series, NodeIdentity::quad_transform,
                     NodeIdentity::reflection_form};
    return ns;
}

Poly2 linear_interpolant(const ParameterTriple& p) {
    return {1.0, gauss_value_at_one(p) - 1.0, 0.0};
}

Poly2 quadratic_interpolant(const ParameterTriple& p, const EvalOptions& opts) {
    return poly_from_nodes(quadratic_nodes(p, opts));
}

Poly2 quadratic_interpolant_q1(double a, double c) {
    if (!(c > 1.0)) throw constraint_error("the a,1-a family requires c > 1");
    double B = bailey_half(a, c);
    double G = gauss_value_at_one({a, 1.0 - a, c});
    return {1.0, 4.0 * B - G - 3.0, 2.0 - 4.0 * B + 2.0 * G};
}

Poly2 quadratic_interpolant_q2(double a, double b) {
    if (!(a + b < 1.0)) throw constraint_error("the (a+b+1)/2 family requires a + b < 1");
    double H = quadratic_transform_half(a, b);
    double V = q2_value_one(a, b);
    return {1.0, 4.0 * H - V - 3.0, 2.0 - 4.0 * H + 2.0 * V};
}

double q2_value_one_cosine(double a, double b) {
    double den = cos_pi(0.5 * (a + b));
    if (std::abs(den) < kCosineFloor)
        throw pole_error("cosine form of f(1) degenerates: cos(pi (a+b)/2) ~ 0");
    return cos_pi(0.5 * (b - a)) / den;
}

double q2_value_one_gamma(double a, double b) {
    return gauss_value_at_one({a, b, 0.5 * (a + b + 1.0)});
}

ErrorBound linear_error_bound(const ParameterTriple& p) {
    if (!(p.a > -2.0 && p.b > -2.0 && p.c > -2.0))
        throw constraint_error("linear bound requires a, b, c > -2");
    if (!(p.c - p.a - p.b > 2.0))
        throw constraint_error("linear bound requires c - a - b > 2");
    ErrorBound eb;
    eb.constraints = {"a > -2", "b > -2", "c > -2", "c - a - b > 2"};
    eb.vanishes = (p.a == 0.0 || p.a == -1.0 || p.b == 0.0 || p.b == -1.0);
    if (eb.vanishes) return eb;
    double pre = std::abs(p.a * (p.a + 1.0) * p.b * (p.b + 1.0)) / 8.0;
    eb.bound = pre * abs_gamma_quotient(p.c, p.c - p.a - p.b - 2.0,
                                        p.c - p.a, p.c - p.b);
    return eb;
}

ErrorBound quadratic_error_bound(const ParameterTriple& p) {
    if (!(p.a > -3.0 && p.b > -3.0 && p.c > -3.0))
        throw constraint_error("quadratic bound requires a, b, c > -3");
    if (!(p.c - p.a - p.b > 3.0))
        throw constraint_error("quadratic bound requires c - a - b > 3");
    ErrorBound eb;
    eb.constraints = {"a > -3", "b > -3", "c > -3", "c - a - b > 3"};
    eb.vanishes = any_of3(p.a, 0.0, -1.0, -2.0) || any_of3(p.b, 0.0, -1.0, -2.0);
    if (eb.vanishes) return eb;
    double pre = node_cubic_max() / 6.0 *
                 std::abs(p.a * (p.a + 1.0) * (p.a + 2.0) *
                          p.b * (p.b + 1.0) * (p.b + 2.0));
    eb.bound = pre * abs_gamma_quotient(p.c, p.c - p.a - p.b - 3.0,
                                        p.c - p.a, p.c - p.b);
    return eb;
}

ErrorBound error_bound_q1(double a, double c) {
    if (!(a > -3.0 && a < 4.0))
        throw constraint_error("the a,1-a bound requires -3 < a < 4");
    if (!(c > 4.0))
        throw constraint_error("the a,1-a bound requires c > 4");
    ErrorBound eb;
    eb.constraints = {"-3 < a < 4", "c > 4"};
    eb.vanishes = a == -2.0 || a == -1.0 || a == 0.0 ||
                  a == 1.0 || a == 2.0 || a == 3.0;
    if (eb.vanishes) return eb;
    double pre = node_cubic_max() / 6.0 *
                 std::abs(a * (a + 1.0) * (a + 2.0) *
                          (1.0 - a) * (2.0 - a) * (3.0 - a));
    double lg = log_gamma(c) + log_gamma(c - 4.0) -
                log_gamma(c - a) - log_gamma(c + a - 1.0);
    eb.bound = pre * std::exp(lg);
    return eb;
}

ErrorBound error_bound_q2(double a, double b) {
    if (!(a + b > -7.0 && a + b < -5.0))
        throw constraint_error("the (a+b+1)/2 bound requires -7 < a + b < -5");
    ErrorBound eb;
    eb.constraints = {"-7 < a + b < -5"};
    eb.vanishes = any_of3(a, 0.0, -1.0, -2.0) || any_of3(b, 0.0, -1.0, -2.0);
    if (eb.vanishes) return eb;
    double pre = node_cubic_max() / 6.0 *
                 std::abs(a * (a + 1.0) * (a + 2.0) *
                          b * (b + 1.0) * (b + 2.0));
    eb.bound = pre * abs_gamma_quotient(0.5 * (a + b + 1.0), 0.5 * (-a - b - 5.0),
                                        0.5 * (b - a + 1.0), 0.5 * (a - b + 1.0));
    return eb;
}

} // namespace hypterp::interp
