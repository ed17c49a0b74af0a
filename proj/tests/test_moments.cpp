#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "symmom/moments.hpp"

using namespace symmom;

TEST_CASE("exponents as exact rationals") {
    CHECK(theta(2, 5).theta_exact == Rational(114, 115));
    CHECK(theta(1, 6).theta_exact == Rational(161, 167));
    CHECK(theta_bqf(1, 6, false).theta_exact == Rational(184, 187));
    CHECK(theta_bqf(2, 3, false).theta_exact == Rational(77, 80));
    CHECK(theta_bqf(2, 3, true).theta_exact == Rational(493, 514));

    auto r = theta(2, 3);
    CHECK(r.dim_power == 27);
    CHECK(r.k0 == 1);
    CHECK(r.k1 == 0);
    CHECK(r.k2 == 3);
}

TEST_CASE("decimal rendering rounds half up") {
    CHECK(theta(2, 6).decimal(8) == "0.99713291");
    CHECK(theta(2, 6).decimal(9) == "0.997132910");
    CHECK(theta(1, 6).decimal(9) == "0.964071856");
    ThetaReport unit;
    unit.theta_exact = 1;
    CHECK(unit.decimal(3) == "1.000");
    unit.theta_exact = Rational(1, 8);
    CHECK(unit.decimal(2) == "0.13"); // exact .125 rounds up
}

TEST_CASE("hypothesis gating") {
    CHECK_THROWS_AS(theta(1, 1), HypothesisViolated);      // l < 2
    CHECK_THROWS_AS(theta(0, 5), HypothesisViolated);      // d < 1
    CHECK_THROWS_AS(theta(2, 2), HypothesisViolated);      // dl = 4
    CHECK_NOTHROW(theta(2, 2, true));
    CHECK_THROWS_AS(theta_bqf(1, 2, false), HypothesisViolated);
    CHECK_NOTHROW(theta_bqf(1, 2, false, true));
}

TEST_CASE("main term degrees") {
    CHECK(main_term_degree(2, 4) == 2);   // K_{0,2,4} = 3
    CHECK(main_term_degree(1, 8) == 13);  // Catalan C_4 = 14
    CHECK(main_term_degree(1, 2) == 0);
    CHECK_FALSE(main_term_degree(3, 3).has_value()); // odd dl: K0 = 0
    CHECK_FALSE(main_term_degree(1, 5).has_value());
}

TEST_CASE("moment sums") {
    SymPowerSeries s;
    s.d = 1;
    s.length = 5;
    s.values = {0.0, 1.0, -0.5, 0.25, 2.0, -1.0};
    CHECK(moment_sum(s, 1, 4) == doctest::Approx(1.0 - 0.5 + 0.25 + 2.0));
    CHECK(moment_sum(s, 2, 5) == doctest::Approx(1.0 + 0.25 + 0.0625 + 4.0 + 1.0));
    CHECK(moment_sum(s, 1, 5) == doctest::Approx(1.75));
    CHECK_THROWS_AS(moment_sum(s, 1, 6), OutOfRange);
    CHECK_THROWS_AS(moment_sum(s, 1, 0), OutOfRange);
}

TEST_CASE("bqf moment sum weights by representation numbers") {
    SymPowerSeries s;
    s.d = 1;
    s.length = 10;
    s.values.assign(11, 0.0);
    for (long n = 1; n <= 10; ++n)
        s.values[n] = 1.0 / n;
    QuadForm q{1, 0, 1};
    double expect = 0.0;
    for (long n = 1; n <= 10; ++n)
        expect += count_representations(q, n) / static_cast<double>(n);
    CHECK(bqf_moment_sum(s, 1, q, 10) == doctest::Approx(expect));
}

TEST_CASE("main term fitting") {
    // synthetic S(x)/x = 3 + 2 log x for (d,l) with K0 = 2 -> degree 1
    REQUIRE(main_term_degree(1, 4) == 1);
    std::vector<std::pair<double, double>> samples;
    for (double x : {100.0, 300.0, 1000.0, 3000.0, 10000.0, 30000.0, 100000.0})
        samples.emplace_back(x, x * (3.0 + 2.0 * std::log(x)));
    auto fit = fit_main_term(1, 4, samples);
    REQUIRE(fit.fitted_coeffs.size() == 2u);
    CHECK(fit.fitted_coeffs[0] == doctest::Approx(3.0).epsilon(1e-6));
    CHECK(fit.fitted_coeffs[1] == doctest::Approx(2.0).epsilon(1e-6));
    CHECK(fit.residual_exponent < 0.5); // numerically exact fit

    CHECK_THROWS_AS(fit_main_term(1, 4, {{10.0, 1.0}, {20.0, 2.0}}), InsufficientSamples);

    // vanishing main term: no coefficients, residual slope still reported
    auto odd = fit_main_term(1, 3, samples);
    CHECK(odd.fitted_coeffs.empty());
}
