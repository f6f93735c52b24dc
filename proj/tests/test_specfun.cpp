#include <doctest.h>

#include <cmath>

#include "hypterp/errors.hpp"
#include "hypterp/specfun.hpp"

using namespace hypterp;
using specfun::EvalOptions;
using specfun::ParameterTriple;

namespace {

double rel(double x, double ref) {
    return std::abs(x - ref) / std::max(1.0, std::abs(ref));
}

} // namespace

TEST_SUITE("specfun") {

TEST_CASE("log_gamma reference values") {
    const struct { double x, lg; } refs[] = {
        {0.1, 2.2527126517342059599},
        {0.2, 1.5240638224307845249},
        {0.5, 0.57236494292470008707},
        {0.75, 0.20328095143129537148},
        {1.0, 0.0},
        {1.5, -0.12078223763524522235},
        {2.0, 0.0},
        {2.5, 0.28468287047291915963},
        {3.25, 0.93580193110872535826},
        {5.0, 3.1780538303479456196},
        {6.0, 4.7874917427820459942},
        {7.5, 7.5343642367587329552},
        {10.0, 12.801827480081469611},
        {13.7, 21.774645173034634279},
        {20.25, 40.084110597917348984},
        {31.5, 76.371197867782774263},
        {40.0, 106.63176026064345913},
        {45.75, 128.17018857322422185},
        {50.0, 144.56574394634488601},
    };
    for (const auto& r : refs) {
        CAPTURE(r.x);
        CHECK(std::abs(specfun::log_gamma(r.x) - r.lg) <=
              1e-13 * std::max(1.0, std::abs(r.lg)));
    }
}

TEST_CASE("log_gamma recurrence and domain") {
    for (double x : {0.05, 0.3, 0.9, 1.7, 4.2, 9.9}) {
        CAPTURE(x);
        double lhs = specfun::log_gamma(x + 1.0);
        double rhs = specfun::log_gamma(x) + std::log(x);
        CHECK(std::abs(lhs - rhs) <= 1e-13 * std::max(1.0, std::abs(lhs)));
    }
    CHECK_THROWS_AS(specfun::log_gamma(0.0), constraint_error);
    CHECK_THROWS_AS(specfun::log_gamma(-1.5), constraint_error);
}

TEST_CASE("gamma_signed handles the negative axis") {
    auto g = specfun::gamma_signed(-2.5);
    CHECK(g.sign == -1);
    CHECK(rel(std::exp(g.log_abs), 0.94530872048294188123) <= 1e-13);

    auto h = specfun::gamma_signed(-0.5);
    CHECK(h.sign == -1);
    CHECK(std::abs(h.log_abs - 1.2655121234846453965) <= 1e-13);

    auto pos = specfun::gamma_signed(2.5);
    CHECK(pos.sign == 1);
    CHECK(std::abs(pos.log_abs - 0.28468287047291915963) <= 1e-13);

    // sign alternates between consecutive poles
    CHECK(specfun::gamma_signed(-0.5).sign == -1);
    CHECK(specfun::gamma_signed(-1.5).sign == 1);
    CHECK(specfun::gamma_signed(-3.5).sign == 1);

    CHECK_THROWS_AS(specfun::gamma_signed(0.0), pole_error);
    CHECK_THROWS_AS(specfun::gamma_signed(-1.0), pole_error);
    CHECK_THROWS_AS(specfun::gamma_signed(-7.0), pole_error);
}

TEST_CASE("sin_pi and cos_pi stay exact at special points") {
    CHECK(specfun::sin_pi(0.0) == 0.0);
    CHECK(specfun::sin_pi(1.0) == 0.0);
    CHECK(specfun::sin_pi(-4.0) == 0.0);
    CHECK(specfun::sin_pi(0.5) == 1.0);
    CHECK(specfun::sin_pi(-0.5) == -1.0);
    CHECK(specfun::sin_pi(-2.5) == -1.0);
    CHECK(specfun::cos_pi(0.5) == 0.0);
    CHECK(specfun::cos_pi(1.0) == -1.0);
    CHECK(specfun::cos_pi(7.0) == -1.0);
    CHECK(specfun::cos_pi(8.0) == 1.0);
    CHECK(specfun::sin_pi(1000000.5) == 1.0);
    CHECK(std::abs(specfun::sin_pi(123456.25) - std::sqrt(0.5)) <= 1e-15);
}

TEST_CASE("digamma reference values and recurrence") {
    const struct { double x, psi; } refs[] = {
        {0.1, -10.423754940411076795},
        {0.25, -4.2274535333762654081},
        {0.5, -1.9635100260214234794},
        {1.0, -0.57721566490153286061},
        {1.5, 0.036489973978576520559},
        {2.0, 0.42278433509846713939},
        {3.0, 0.92278433509846713939},
        {4.75, 1.4492040552784628953},
        {6.5, 1.7929113303999329419},
        {10.0, 2.2517525890667211076},
        {17.25, 2.8185466769865570379},
        {25.0, 3.1987425128519740085},
        {33.3, 3.4904672385202428639},
        {50.0, 3.901989673427892197},
    };
    for (const auto& r : refs) {
        CAPTURE(r.x);
        CHECK(std::abs(specfun::digamma(r.x) - r.psi) <=
              1e-13 * std::max(1.0, std::abs(r.psi)));
    }
    for (double x : {0.2, 1.3, 7.6}) {
        CAPTURE(x);
        double lhs = specfun::digamma(x + 1.0);
        double rhs = specfun::digamma(x) + 1.0 / x;
        CHECK(std::abs(lhs - rhs) <= 1e-13 * std::max(1.0, std::abs(lhs)));
    }
    CHECK_THROWS_AS(specfun::digamma(0.0), constraint_error);
    CHECK_THROWS_AS(specfun::digamma(-2.0), constraint_error);
}

TEST_CASE("pochhammer") {
    CHECK(specfun::pochhammer(3.0, 4) == 360.0);
    CHECK(specfun::pochhammer(5.7, 0) == 1.0);
    CHECK(specfun::pochhammer(0.0, 3) == 0.0);
    CHECK(specfun::pochhammer(-2.0, 2) == 2.0);
    CHECK(specfun::pochhammer(-2.0, 5) == 0.0);
    CHECK_THROWS_AS(specfun::pochhammer(1.0, -1), constraint_error);
}

TEST_CASE("nonpositive-integer predicate") {
    CHECK(specfun::is_nonpositive_integer(0.0));
    CHECK(specfun::is_nonpositive_integer(-0.0));
    CHECK(specfun::is_nonpositive_integer(-5.0));
    CHECK_FALSE(specfun::is_nonpositive_integer(1.0));
    CHECK_FALSE(specfun::is_nonpositive_integer(-4.5));
    CHECK_FALSE(specfun::is_nonpositive_integer(-4.0000001));
}

TEST_CASE("series values at pinned points") {
    const struct { double a, b, c, x, f; } refs[] = {
        {1.0, 2.0, 6.0, 0.25, 1.09356068327945359},
        {1.0, 2.0, 6.0, 0.5, 1.21489222187104191},
        {1.0, 2.0, 6.0, 0.75, 1.38430372198203705},
        {0.9, 0.1, 5.0, 0.25, 1.00471165625886448},
        {0.9, 0.1, 5.0, 0.5, 1.00992532383242186},
        {3.9, -2.9, 5.0, 0.25, 0.537210540281487429},
        {0.1, 0.3, 0.7, 0.5, 1.02803493038078626},
    };
    for (const auto& r : refs) {
        CAPTURE(r.a);
        CAPTURE(r.x);
        CHECK(rel(specfun::hyp2f1({r.a, r.b, r.c}, r.x), r.f) <= 1e-13);
    }
}

TEST_CASE("series endpoints") {
    CHECK(specfun::hyp2f1({1.0, 2.0, 6.0}, 0.0) == 1.0);
    // x = 1 goes straight to the closed form
    double v = specfun::hyp2f1({0.9, 0.1, 6.0}, 1.0);
    CHECK(rel(v, specfun::gauss_value_at_one({0.9, 0.1, 6.0})) <= 1e-15);
    CHECK(rel(v, 1.01815208124984354) <= 1e-13);
}

TEST_CASE("terminating series are summed exactly") {
    // 2F1[-3,2;5;x] is a cubic
    CHECK(rel(specfun::hyp2f1({-3.0, 2.0, 5.0}, 0.3), 0.6909142857142857) <= 1e-15);
    // b = -1 gives a straight line 1 - (a/c) x
    CHECK(rel(specfun::hyp2f1({5.0, -1.0, 3.0}, 0.7), 1.0 - 5.0 * 0.7 / 3.0) <= 1e-15);
    // termination protects against a tiny max_terms budget
    EvalOptions tight;
    tight.max_terms = 10;
    CHECK(rel(specfun::hyp2f1({-2.0, 50.0, 3.0}, 0.99, tight), 176.27125) <= 1e-15);
}

TEST_CASE("value at one") {
    CHECK(rel(specfun::gauss_value_at_one({1.0, 2.0, 6.0}), 5.0 / 3.0) <= 1e-14);
    CHECK(rel(specfun::gauss_value_at_one({0.9, 0.1, 6.0}), 1.01815208124984354) <= 1e-13);
    CHECK(rel(specfun::gauss_value_at_one({3.9, -2.9, 5.0}), 0.0367146240735734847) <= 1e-13);
    // a negative gamma argument flips the sign of the quotient
    CHECK(rel(specfun::gauss_value_at_one({2.6, -1.2, 2.2}), -0.11557385633927820344) <= 1e-13);
    CHECK_THROWS_AS(specfun::gauss_value_at_one({5.0, 5.0, 2.0}), constraint_error);
    CHECK_THROWS_AS(specfun::gauss_value_at_one({1.0, 2.0, 3.0}), constraint_error);
}

TEST_CASE("series guards") {
    CHECK_THROWS_AS(specfun::hyp2f1({1.0, 2.0, 6.0}, 1.5), constraint_error);
    CHECK_THROWS_AS(specfun::hyp2f1({1.0, 2.0, 6.0}, -0.1), constraint_error);
    CHECK_THROWS_AS(specfun::hyp2f1({1.0, 2.0, 0.0}, 0.5), pole_error);
    CHECK_THROWS_AS(specfun::hyp2f1({1.0, 2.0, -3.0}, 0.5), pole_error);

    EvalOptions bad;
    bad.tol = 0.0;
    CHECK_THROWS_AS(specfun::hyp2f1({1.0, 2.0, 6.0}, 0.5, bad), constraint_error);
    bad.tol = 1e-14;
    bad.max_terms = 0;
    CHECK_THROWS_AS(specfun::hyp2f1({1.0, 2.0, 6.0}, 0.5, bad), constraint_error);
    bad.max_terms = 20;
    CHECK_THROWS_AS(specfun::hyp2f1({1.0, 2.0, 6.0}, 0.9, bad), convergence_error);
}

TEST_CASE("parameter predicates") {
    CHECK(ParameterTriple{1.0, 2.0, 6.0}.gauss_summable());
    CHECK_FALSE(ParameterTriple{5.0, 5.0, 2.0}.gauss_summable());
    CHECK(ParameterTriple{1.0, 2.0, 0.0}.c_is_pole());
    CHECK(ParameterTriple{1.0, 2.0, -3.0}.c_is_pole());
    CHECK_FALSE(ParameterTriple{1.0, 2.0, 0.5}.c_is_pole());
}

TEST_CASE("closed form at one half") {
    CHECK(rel(specfun::bailey_half(0.9, 1.5), 1.03906734444363357) <= 1e-13);
    CHECK(rel(specfun::bailey_half(-1.3, 2.4), 0.42909525776973668334) <= 1e-13);
    CHECK(rel(specfun::bailey_half(0.9, 1.5),
              specfun::hyp2f1({0.9, 0.1, 1.5}, 0.5)) <= 1e-12);
    CHECK(rel(specfun::bailey_half(-1.3, 2.4),
              specfun::hyp2f1({-1.3, 2.3, 2.4}, 0.5)) <= 1e-12);
}

TEST_CASE("gamma duplication residual") {
    for (double c : {0.3, 0.7, 1.0, 1.5, 6.0, 10.0}) {
        CAPTURE(c);
        CHECK(specfun::legendre_duplication_check(c) <= 1e-13);
    }
    CHECK_THROWS_AS(specfun::legendre_duplication_check(0.0), constraint_error);
}

TEST_CASE("transform value at one half") {
    CHECK(rel(specfun::quadratic_transform_half(0.1, 0.3), 1.02803493038078626) <= 1e-13);
    CHECK(rel(specfun::quadratic_transform_half(0.1, 0.3),
              specfun::hyp2f1({0.1, 0.3, 0.7}, 0.5)) <= 1e-12);
    CHECK_THROWS_AS(specfun::quadratic_transform_half(0.6, 0.4), constraint_error);
}

TEST_CASE("value at minus one") {
    CHECK(rel(specfun::kummer_minus_one(0.1, 0.4), 0.959190506497518551) <= 1e-13);
    CHECK(rel(specfun::kummer_minus_one(0.5, 0.25), 0.927037338650685959) <= 1e-13);
    // the same number reached through the half-argument transform
    for (auto ab : {std::pair{0.1, 0.3}, std::pair{0.5, 0.25}, std::pair{-0.7, 0.2}}) {
        double a = ab.first, b = ab.second;
        double b1 = 0.5 * (a - b + 1.0);
        CAPTURE(a);
        CHECK(rel(std::pow(2.0, a) * specfun::kummer_minus_one(a, b1),
                  specfun::quadratic_transform_half(a, b)) <= 1e-12);
    }
    CHECK_THROWS_AS(specfun::kummer_minus_one(0.3, 1.0), constraint_error);
    CHECK_THROWS_AS(specfun::kummer_minus_one(-2.5, 0.5), constraint_error);
}

TEST_CASE("transformed evaluation agrees with the series") {
    for (double x : {0.1, 0.3, 0.5}) {
        CAPTURE(x);
        CHECK(rel(specfun::pfaff_transform({1.0, 2.0, 6.0}, x),
                  specfun::hyp2f1({1.0, 2.0, 6.0}, x)) <= 1e-12);
    }
    // x = 1/2 exercises the second application of the transform
    CHECK(rel(specfun::pfaff_transform({0.9, 0.1, 5.0}, 0.5), 1.00992532383242186) <= 1e-13);
    CHECK(specfun::pfaff_transform({1.0, 2.0, 6.0}, 0.0) == 1.0);
    CHECK_THROWS_AS(specfun::pfaff_transform({1.0, 2.0, 6.0}, 0.6), constraint_error);
    CHECK_THROWS_AS(specfun::pfaff_transform({1.0, 2.0, 6.0}, -0.1), constraint_error);
}

TEST_CASE("derivatives via parameter shift") {
    // at x = 0 the k-th derivative is a product of parameter ratios
    CHECK(rel(specfun::hyp2f1_derivative({1.0, 2.0, 6.0}, 0.0, 1), 1.0 / 3.0) <= 1e-15);
    CHECK(rel(specfun::hyp2f1_derivative({1.0, 2.0, 6.0}, 0.0, 2), 2.0 / 7.0) <= 1e-15);
    // degree exhausted: third derivative of a quadratic in disguise
    CHECK(specfun::hyp2f1_derivative({-1.0, 2.0, 5.0}, 0.4, 2) == 0.0);
    CHECK_THROWS_AS(specfun::hyp2f1_derivative({1.0, 2.0, 6.0}, 0.5, 0), constraint_error);
    CHECK_THROWS_AS(specfun::hyp2f1_derivative({1.0, 2.0, 6.0}, 0.5, 4), constraint_error);
    CHECK_THROWS_AS(specfun::hyp2f1_derivative({1.0, 2.0, -1.0}, 0.5, 2), pole_error);
}

TEST_CASE("derivatives match finite differences") {
    ParameterTriple p{1.0, 2.0, 6.0};
    auto f = [&](double x) { return specfun::hyp2f1(p, x); };
    for (double x : {0.2, 0.5}) {
        CAPTURE(x);
        double h1 = 1e-5;
        double fd1 = (f(x + h1) - f(x - h1)) / (2.0 * h1);
        CHECK(rel(specfun::hyp2f1_derivative(p, x, 1), fd1) <= 1e-6);

        double h2 = 1e-4;
        double fd2 = (f(x + h2) - 2.0 * f(x) + f(x - h2)) / (h2 * h2);
        CHECK(rel(specfun::hyp2f1_derivative(p, x, 2), fd2) <= 1e-5);

        double h3 = 1e-3;
        double fd3 = (f(x + 2 * h3) - 2.0 * f(x + h3) + 2.0 * f(x - h3) - f(x - 2 * h3)) /
                     (2.0 * h3 * h3 * h3);
        CHECK(rel(specfun::hyp2f1_derivative(p, x, 3), fd3) <= 1e-4);
    }
}

TEST_CASE("series solves the defining equation") {
    for (auto pr : {ParameterTriple{1.0, 2.0, 6.0}, ParameterTriple{0.9, 0.1, 5.0}}) {
        for (double x : {0.2, 0.5, 0.8}) {
            CAPTURE(pr.a);
            CAPTURE(x);
            double f = specfun::hyp2f1(pr, x);
            double f1 = specfun::hyp2f1_derivative(pr, x, 1);
            double f2 = specfun::hyp2f1_derivative(pr, x, 2);
            double res = x * (1.0 - x) * f2 +
                         (pr.c - (pr.a + pr.b + 1.0) * x) * f1 - pr.a * pr.b * f;
            CHECK(std::abs(res) <= 1e-10 * std::max(1.0, std::abs(f)));
        }
    }
}

TEST_CASE("positive parameters give a monotone function") {
    ParameterTriple p{1.0, 2.0, 6.0};
    CHECK(specfun::hyp2f1(p, 0.2) < specfun::hyp2f1(p, 0.5));
    CHECK(specfun::hyp2f1(p, 0.5) < specfun::hyp2f1(p, 0.8));
}

} // TEST_SUITE
