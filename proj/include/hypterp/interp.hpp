#pragma once

#include <string>
#include <vector>

#include "hypterp/specfun.hpp"

namespace hypterp::interp {

using specfun::EvalOptions;
using specfun::ParameterTriple;

// Polynomial of degree <= 2 in monomial form; c2 == 0 encodes a line.
struct Poly2 {
    double c0{};
    double c1{};
    double c2{};

    double operator()(double x) const { return c0 + x * (c1 + x * c2); }
};

enum class NodeIdentity { series, gauss_one, bailey, quad_transform, reflection_form };

const char* to_string(NodeIdentity id);

// Interpolation nodes with function values and the identity each value came from.
struct NodeSet {
    std::vector<double> nodes;
    std::vector<double> values;
    std::vector<NodeIdentity> provenance;
};

// A-priori bound on max |f - P| over [0,1]. `constraints` records the
// preconditions that were verified before the formula was applied.
struct ErrorBound {
    double bound{};
    bool vanishes{};
    std::vector<std::string> constraints;
};

// max over [0,1] of |x (x - 1/2) (x - 1)| = 1/(12 sqrt(3)); the envelope
// constant of the three-node remainder term.
double node_cubic_max();

// Cardinal weights L_i(x) for the given pairwise-distinct nodes.
std::vector<double> lagrange_basis(const std::vector<double>& nodes, double x);

Poly2 poly_from_nodes(const NodeSet& ns);

NodeSet linear_nodes(const ParameterTriple& p);
NodeSet quadratic_nodes(const ParameterTriple& p, const EvalOptions& opts = {});
NodeSet quadratic_nodes_q1(double a, double c);
NodeSet quadratic_nodes_q2(double a, double b);

// Line through (0, 1) and (1, f(1)).
Poly2 linear_interpolant(const ParameterTriple& p);

// Quadratic through {0, 1/2, 1} with f(1/2) from the series.
Poly2 quadratic_interpolant(const ParameterTriple& p, const EvalOptions& opts = {});

// Quadratic for the family 2F1[a,1-a;c;x], c > 1; node values in closed form.
Poly2 quadratic_interpolant_q1(double a, double c);

// Quadratic for the family 2F1[a,b;(a+b+1)/2;x], a+b < 1.
Poly2 quadratic_interpolant_q2(double a, double b);

// f(1) for the q2 family, in both available closed forms.
double q2_value_one_cosine(double a, double b);
double q2_value_one_gamma(double a, double b);

ErrorBound linear_error_bound(const ParameterTriple& p);
ErrorBound quadratic_error_bound(const ParameterTriple& p);
ErrorBound error_bound_q1(double a, double c);
ErrorBound error_bound_q2(double a, double b);

} // namespace hypterp::interp
