#pragma once

#include <cstddef>
#include <vector>

#include "hypterp/interp.hpp"

namespace hypterp::analysis {

// Quotient g(a,c) = Gamma(c)Gamma(c-4) / (Gamma(c-a)Gamma(c+a-1)), c > 4.
double gamma_quotient_g(double a, double c);

// Sign of d/dc log g = psi(c) + psi(c-4) - psi(c-a) - psi(c+a-1).
int log_derivative_sign(double a, double c);

// Ranges of a where the decrease of g in c is established vs. only conjectured.
bool in_proved_monotone_range(double a); // (-3,0) or (1,4)
bool in_conjectured_range(double a);     // [0,1]

struct ScanReport {
    std::vector<double> a_grid;
    std::vector<double> c_grid;
    std::vector<std::vector<double>> g;      // g[ai][cj]
    std::vector<std::vector<int>> fd_sign;   // forward-difference sign in c (last: backward)
    std::vector<std::vector<int>> psi_sign;  // digamma-expression sign

    struct Violation {
        std::size_t ai{};
        std::size_t cj{};
        bool proved_range{}; // true: established range (kernel bug); false: conjectured range
    };
    std::vector<Violation> violations;

    bool clean() const { return violations.empty(); }
    bool has_proved_range_violation() const;
};

// Evaluates g over the grid and checks monotone decrease in c by finite
// differences and by the digamma sign, wherever a lies in a range with an
// established or conjectured claim. Violations are data, not errors.
ScanReport conjecture_scan(const std::vector<double>& a_grid,
                           const std::vector<double>& c_grid);

std::vector<double> default_a_grid(); // 0 : 0.05 : 1
std::vector<double> default_c_grid(); // 4.05 : 0.05 : 30

struct DecayRow {
    double c{};
    interp::ErrorBound bound;
};

struct DecayReport {
    double a{};
    std::vector<DecayRow> rows;
    bool nonincreasing = true;
};

// Quadratic-family bound as a function of c; flags whether the sequence
// decays along the given increasing c grid.
DecayReport error_decay_report(double a, const std::vector<double>& c_grid);

} // namespace hypterp::analysis
