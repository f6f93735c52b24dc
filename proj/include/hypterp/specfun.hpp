#pragma once

#include <cstdint>

namespace hypterp::specfun {

// Parameters (a,b,c) of the Gauss series sum_n (a)_n (b)_n / ((c)_n n!) x^n.
// The series is undefined when c is zero or a negative integer.
struct ParameterTriple {
    double a{};
    double b{};
    double c{};

    bool c_is_pole() const;
    bool gauss_summable() const { return c - a - b > 0.0; }
};

struct EvalOptions {
    double tol = 1e-14;               // relative series-termination tolerance
    std::int64_t max_terms = 1000000; // summation cutoff before giving up
};

// sign * exp(log_abs) reconstructs a gamma value that may be negative.
struct SignedLog {
    double log_abs{};
    int sign = 1;
};

bool is_nonpositive_integer(double x);

// sin(pi*x) / cos(pi*x) with argument reduction so integer and half-integer
// points stay exact to rounding.
double sin_pi(double x);
double cos_pi(double x);

double log_gamma(double x);        // x > 0
SignedLog gamma_signed(double x);  // x not in {0, -1, -2, ...}
double digamma(double x);          // x > 0
double pochhammer(double a, int n);

double hyp2f1(const ParameterTriple& p, double x, const EvalOptions& opts = {});
double gauss_value_at_one(const ParameterTriple& p);

// Closed form for 2F1[a,1-a;c;1/2].
double bailey_half(double a, double c);

// Relative residual of Gamma(c/2)Gamma((1+c)/2) = 2^(1-c) sqrt(pi) Gamma(c),
// evaluated in log space; a self-test of the gamma kernel.
double legendre_duplication_check(double c);

// Closed form for 2F1[a,b;(a+b+1)/2;1/2].
double quadratic_transform_half(double a, double b);

// Closed form for 2F1[a1,b1;a1-b1+1;-1].
double kummer_minus_one(double a1, double b1);

// 2F1[a,b;c;x] computed through (1-x)^(-a) 2F1[a,c-b;c;-x/(1-x)], x in [0,1/2].
double pfaff_transform(const ParameterTriple& p, double x, const EvalOptions& opts = {});

// k-th derivative via the parameter-shift rule, k in {1,2,3}.
double hyp2f1_derivative(const ParameterTriple& p, double x, int order,
                         const EvalOptions& opts = {});

} // namespace hypterp::specfun
