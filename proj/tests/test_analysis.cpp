#include <doctest.h>

#include <cmath>
#include <vector>

#include "hypterp/analysis.hpp"
#include "hypterp/errors.hpp"

using namespace hypterp;

namespace {

double rel(double x, double ref) {
    return std::abs(x - ref) / std::max(1.0, std::abs(ref));
}

} // namespace

TEST_SUITE("analysis") {

TEST_CASE("quotient closed forms") {
    // a = 0 or 1 reduces to 1 / ((c-2)(c-3)(c-4))
    double c = 7.5;
    double expect = 1.0 / ((c - 2.0) * (c - 3.0) * (c - 4.0));
    CHECK(rel(analysis::gamma_quotient_g(0.0, c), expect) <= 1e-12);
    CHECK(rel(analysis::gamma_quotient_g(1.0, c), expect) <= 1e-12);
    CHECK(rel(analysis::gamma_quotient_g(2.0, 6.0), 1.0 / 36.0) <= 1e-12);
}

TEST_CASE("quotient symmetry under a -> 1-a") {
    for (double a : {-2.3, 0.3, 3.2}) {
        CAPTURE(a);
        CHECK(rel(analysis::gamma_quotient_g(a, 9.0),
                  analysis::gamma_quotient_g(1.0 - a, 9.0)) <= 1e-12);
    }
}

TEST_CASE("quotient domain") {
    CHECK_THROWS_AS(analysis::gamma_quotient_g(1.0, 4.0), constraint_error);
    CHECK_THROWS_AS(analysis::gamma_quotient_g(12.0, 10.0), constraint_error);
    CHECK_THROWS_AS(analysis::log_derivative_sign(1.0, 3.0), constraint_error);
}

TEST_CASE("log-derivative sign is negative on spot checks") {
    CHECK(analysis::log_derivative_sign(2.0, 5.0) == -1);
    CHECK(analysis::log_derivative_sign(-1.0, 6.0) == -1);
    CHECK(analysis::log_derivative_sign(0.5, 5.0) == -1);
}

TEST_CASE("range predicates") {
    CHECK(analysis::in_proved_monotone_range(-2.9));
    CHECK(analysis::in_proved_monotone_range(1.1));
    CHECK(analysis::in_proved_monotone_range(3.9));
    CHECK_FALSE(analysis::in_proved_monotone_range(-3.0));
    CHECK_FALSE(analysis::in_proved_monotone_range(0.0));
    CHECK_FALSE(analysis::in_proved_monotone_range(0.5));
    CHECK_FALSE(analysis::in_proved_monotone_range(1.0));
    CHECK_FALSE(analysis::in_proved_monotone_range(4.0));

    CHECK(analysis::in_conjectured_range(0.0));
    CHECK(analysis::in_conjectured_range(0.5));
    CHECK(analysis::in_conjectured_range(1.0));
    CHECK_FALSE(analysis::in_conjectured_range(-0.1));
    CHECK_FALSE(analysis::in_conjectured_range(1.0000001));
}

TEST_CASE("default grids") {
    auto ag = analysis::default_a_grid();
    REQUIRE(ag.size() == 21);
    CHECK(ag.front() == 0.0);
    CHECK(std::abs(ag.back() - 1.0) <= 1e-12);
    auto cg = analysis::default_c_grid();
    REQUIRE(cg.size() == 520);
    CHECK(std::abs(cg.front() - 4.05) <= 1e-12);
    CHECK(std::abs(cg.back() - 30.0) <= 1e-12);
}

TEST_CASE("spot scan is clean with negative signs") {
    auto rep = analysis::conjecture_scan({-2.5, 1.5}, {5.0, 6.0, 7.0});
    CHECK(rep.clean());
    CHECK_FALSE(rep.has_proved_range_violation());
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            CAPTURE(i);
            CAPTURE(j);
            CHECK(rep.g[i][j] > 0.0);
            CHECK(rep.fd_sign[i][j] == -1);
            CHECK(rep.psi_sign[i][j] == -1);
        }
}

TEST_CASE("scan outside any claimed range reports data only") {
    auto rep = analysis::conjecture_scan({-3.0}, {5.0, 6.0});
    CHECK(rep.clean());
    // g(-3,c) = 1/(c(c+1)(c+2))
    CHECK(rel(rep.g[0][0], 1.0 / (5.0 * 6.0 * 7.0)) <= 1e-12);
}

TEST_CASE("scan grid validation") {
    CHECK_THROWS_AS(analysis::conjecture_scan({}, {5.0}), constraint_error);
    CHECK_THROWS_AS(analysis::conjecture_scan({0.5, 0.5}, {5.0}), constraint_error);
    CHECK_THROWS_AS(analysis::conjecture_scan({5.0}, {5.0}), constraint_error);
    CHECK_THROWS_AS(analysis::conjecture_scan({0.5}, {4.0}), constraint_error);
}

TEST_CASE("full default scan is clean") {
    auto rep = analysis::conjecture_scan(analysis::default_a_grid(),
                                         analysis::default_c_grid());
    CHECK(rep.clean());
}

TEST_CASE("bound decays as c grows") {
    auto rep = analysis::error_decay_report(3.9, {4.5, 5.0, 5.5, 6.0, 6.5});
    CHECK(rep.nonincreasing);
    REQUIRE(rep.rows.size() == 5);
    CHECK(std::abs(rep.rows[1].bound.bound - 0.027434782) <= 1e-6);
    CHECK(std::abs(rep.rows[3].bound.bound - 0.01578526) <= 1e-6);
    for (std::size_t j = 0; j + 1 < rep.rows.size(); ++j)
        CHECK(rep.rows[j + 1].bound.bound < rep.rows[j].bound.bound);

    auto rep2 = analysis::error_decay_report(0.9, {4.1, 4.6, 5.1, 6.1});
    CHECK(rep2.nonincreasing);

    auto one = analysis::error_decay_report(2.5, {10.0});
    CHECK(one.nonincreasing);
    REQUIRE(one.rows.size() == 1);

    CHECK_THROWS_AS(analysis::error_decay_report(4.0, {5.0}), constraint_error);
    CHECK_THROWS_AS(analysis::error_decay_report(-3.0, {5.0}), constraint_error);
    CHECK_THROWS_AS(analysis::error_decay_report(1.5, {6.0, 5.0}), constraint_error);
}

} // TEST_SUITE
