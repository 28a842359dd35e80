#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "radial/errors.hpp"
#include "radial/finite_difference.hpp"
#include "radial/min_state.hpp"
#include "radial/radial_numerics.hpp"
#include "radial/rational.hpp"

using namespace radial;
using namespace radial::numerics;
using hydrogen::QuantumNumbers;

TEST_CASE("finite differences are exact on quartics") {
    const double h = 0.05;
    std::vector<double> f(41), d1(41), d2(41);
    for (int i = 0; i < 41; ++i) {
        const double x = i * h;
        f[i] = 1.0 + x * (2.0 + x * (-3.0 + x * (0.5 + 0.25 * x)));
        d1[i] = 2.0 + x * (-6.0 + x * (1.5 + x));
        d2[i] = -6.0 + x * (3.0 + 3.0 * x);
    }
    const auto g1 = derivative_uniform(f, h);
    const auto g2 = second_derivative_uniform(f, h);
    for (int i = 0; i < 41; ++i) {
        CHECK(g1[i] == doctest::Approx(d1[i]).epsilon(1e-11));
        CHECK(g2[i] == doctest::Approx(d2[i]).epsilon(1e-9));
    }
    CHECK_THROWS_AS(derivative_uniform(std::vector<double>(4, 0.0), h), std::invalid_argument);
    CHECK_THROWS_AS(second_derivative_uniform(std::vector<double>(5, 0.0), h),
                    std::invalid_argument);
}

TEST_CASE("sample_hydrogen honors its contracts") {
    const auto f = sample_hydrogen(QuantumNumbers(1, 0));
    CHECK(f.norm_defect <= 1e-10);
    // value at the first interior point tracks 2 e^-r
    const double r1 = f.grid.points[1];
    CHECK(f.values[1] == doctest::Approx(2.0 * std::exp(-r1)).epsilon(1e-9));

    const auto big = sample_hydrogen(QuantumNumbers(20, 19));
    CHECK(big.norm_defect <= 1e-10);
    CHECK(big.grid.r_max() >= 2.0 * 20 * 20);
}

TEST_CASE("sample_hydrogen rejects a grid that truncates the state") {
    const auto tight = make_uniform_grid(0.0, 6.0, 1.0 / 256.0);
    CHECK_THROWS_AS(sample_hydrogen(QuantumNumbers(3, 0), &tight), resolution_error);
}

TEST_CASE("sample_hydrogen accepts a caller-supplied uniform grid") {
    const auto hint = make_uniform_grid(0.0, 40.0, 1.0 / 300.0);
    const auto f = sample_hydrogen(QuantumNumbers(1, 0), &hint);
    CHECK(f.norm_defect <= 1e-10);
    CHECK(mean_r(f) == doctest::Approx(1.5).epsilon(1e-8));
}

TEST_CASE("coordinate moments on the grid match the Kramers oracle") {
    const auto f10 = sample_hydrogen(QuantumNumbers(1, 0));
    CHECK(mean_r(f10) == doctest::Approx(1.5).epsilon(1e-8));
    CHECK(variance_r(f10) == doctest::Approx(0.75).epsilon(1e-8));

    const auto f21 = sample_hydrogen(QuantumNumbers(2, 1));
    CHECK(mean_r(f21) == doctest::Approx(5.0).epsilon(1e-8));
    CHECK(variance_r(f21) == doctest::Approx(5.0).epsilon(1e-8));
}

TEST_CASE("narrow test state has its own profile variance") {
    // delta-like Gaussian: variance ~ sigma^2 = 1e-4 at mean 10
    const auto build = minstate::build_min_state(10.0, 1e-4);
    CHECK(variance_r(build.function) == doctest::Approx(1e-4).epsilon(1e-6));
    CHECK(mean_r(build.function) == doctest::Approx(10.0).epsilon(1e-10));
}

TEST_CASE("radial momentum mean vanishes") {
    for (auto [n, l] : {std::pair{1, 0}, {5, 2}}) {
        const auto f = sample_hydrogen(QuantumNumbers(n, l));
        CHECK(std::abs(mean_pr(f)) <= 1e-8);
    }
    const auto min_state = minstate::build_min_state(20.0, 2.0);
    CHECK(std::abs(mean_pr(min_state.function)) <= 1e-6);
}

TEST_CASE("hermiticity proxy across all hydrogen states n <= 8") {
    for (int n = 1; n <= 8; ++n)
        for (int l = 0; l < n; ++l)
            CHECK(std::abs(mean_pr(sample_hydrogen(QuantumNumbers(n, l)))) <= 1e-8);
}

TEST_CASE("momentum variance: gradient form against closed forms") {
    CHECK(variance_pr_gradient_form(sample_hydrogen(QuantumNumbers(1, 0))) ==
          doctest::Approx(1.0).epsilon(1e-6));
    CHECK(variance_pr_gradient_form(sample_hydrogen(QuantumNumbers(3, 2))) ==
          doctest::Approx(1.0 / 45.0).epsilon(1e-6));
    CHECK(variance_pr_gradient_form(sample_hydrogen(QuantumNumbers(2, 0))) ==
          doctest::Approx(0.25).epsilon(1e-6));
}

TEST_CASE("momentum variance: the two operator forms agree") {
    CHECK(variance_pr_laplacian_form(sample_hydrogen(QuantumNumbers(1, 0))) ==
          doctest::Approx(1.0).epsilon(1e-5));
    for (int n = 1; n <= 8; ++n) {
        for (int l = 0; l < n; ++l) {
            const auto f = sample_hydrogen(QuantumNumbers(n, l));
            CHECK(std::abs(variance_pr_gradient_form(f) - variance_pr_laplacian_form(f)) <= 1e-5);
        }
    }
    const auto min_state = minstate::build_min_state(30.0, 1.0);
    CHECK(std::abs(variance_pr_gradient_form(min_state.function) -
                   variance_pr_laplacian_form(min_state.function)) <= 1e-4);
}

TEST_CASE("cross term scales linearly with alpha") {
    const auto f10 = sample_hydrogen(QuantumNumbers(1, 0));
    CHECK(weyl_cross_term(f10, 0.0) == 0.0);
    CHECK(weyl_cross_term(f10, 1.0) == doctest::Approx(1.0).epsilon(1e-6));
    const auto f41 = sample_hydrogen(QuantumNumbers(4, 1));
    CHECK(weyl_cross_term(f41, -2.5) == doctest::Approx(-2.5).epsilon(1e-6));
    // identity behind it: int r^3 R R' dr = -3/2, state independent
    for (auto [n, l] : {std::pair{2, 0}, {6, 3}, {8, 7}}) {
        const auto f = sample_hydrogen(QuantumNumbers(n, l));
        const double ratio = weyl_cross_term(f, 0.7) / 0.7;
        CHECK(ratio == doctest::Approx(1.0).epsilon(1e-5));
    }
}

TEST_CASE("scan: ground state vertex and value") {
    const auto f = sample_hydrogen(QuantumNumbers(1, 0));
    const auto alphas = default_alpha_scan(variance_r(f));
    REQUIRE(alphas.size() == 41);
    const auto scan = weyl_scan(f, alphas);

    CHECK(scan.alpha_star == doctest::Approx(-2.0 / 3.0).epsilon(1e-7));
    // I at the vertex: var_pr - 1/(4 var_r) = 1 - 1/3
    double min_direct = scan.direct.front();
    for (double v : scan.direct) min_direct = std::min(min_direct, v);
    CHECK(min_direct >= -1e-10);
    // alpha_star is in the scan (index 20); value there is 2/3
    CHECK(scan.alphas[20] == doctest::Approx(scan.alpha_star).epsilon(1e-12));
    CHECK(scan.direct[20] == doctest::Approx(2.0 / 3.0).epsilon(1e-5));
    // quadratic form at alpha = 0 is the momentum variance
    CHECK(scan.alphas[30] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(scan.quadratic[30] == doctest::Approx(1.0).epsilon(1e-6));

    CHECK(scan.linear_coeff == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(scan.fitted_vertex() == doctest::Approx(scan.alpha_star).epsilon(1e-4));
}

TEST_CASE("scan: direct integral matches the quadratic form for n <= 8") {
    for (int n = 1; n <= 8; ++n) {
        for (int l = 0; l < n; ++l) {
            const auto f = sample_hydrogen(QuantumNumbers(n, l));
            const auto scan = weyl_scan(f, default_alpha_scan(variance_r(f)));
            for (std::size_t i = 0; i < scan.alphas.size(); ++i) {
                CHECK(scan.direct[i] >= -1e-10);
                CHECK(std::abs(scan.direct[i] - scan.quadratic[i]) <= 1e-5);
            }
            const double rel =
                std::abs(scan.fitted_vertex() - scan.alpha_star) / std::abs(scan.alpha_star);
            CHECK(rel <= 1e-4);
        }
    }
}

TEST_CASE("scan rejects underdetermined alpha sets") {
    const auto f = sample_hydrogen(QuantumNumbers(1, 0));
    const std::vector<double> two{-0.5, 0.5};
    CHECK_THROWS_AS(weyl_scan(f, two), std::invalid_argument);
    CHECK_THROWS_AS(default_alpha_scan(0.75, 2), std::invalid_argument);
}

TEST_CASE("uncertainty report assembles the pipeline") {
    const auto r10 = uncertainty_report(sample_hydrogen(QuantumNumbers(1, 0)), "1s");
    CHECK(r10.product == doctest::Approx(0.75).epsilon(1e-6));
    CHECK(r10.bound_satisfied);
    CHECK(r10.label == "1s");
    CHECK(r10.pr_form_gap <= 1e-5);

    const auto r20 = uncertainty_report(sample_hydrogen(QuantumNumbers(2, 0)), "2s");
    CHECK(r20.product == doctest::Approx(1.5).epsilon(1e-6));

    const auto r109 = uncertainty_report(sample_hydrogen(QuantumNumbers(10, 9)), "10,9");
    CHECK(r109.product == doctest::Approx(21.0 / 76.0).epsilon(1e-6));
    CHECK(r109.bound_satisfied);
}

TEST_CASE("bound verdict across hydrogen states") {
    for (int n = 1; n <= 8; ++n) {
        for (int l = 0; l < n; ++l) {
            const auto report =
                uncertainty_report(sample_hydrogen(QuantumNumbers(n, l)), "state");
            CHECK(report.product >= 0.25 - 1e-9);
            CHECK(report.bound_satisfied);
            // grid values track the exact rationals
            const QuantumNumbers q(n, l);
            CHECK(report.var_r ==
                  doctest::Approx(to_double(hydrogen::coordinate_variance(q))).epsilon(1e-9));
            CHECK(report.var_pr ==
                  doctest::Approx(to_double(hydrogen::radial_momentum_variance(q)))
                      .epsilon(1e-7));
        }
    }
}

TEST_CASE("expectation operations refuse unnormalized input") {
    auto f = sample_hydrogen(QuantumNumbers(1, 0));
    f.norm_defect = 1e-3;
    CHECK_THROWS_AS(mean_r(f), std::invalid_argument);
    CHECK_THROWS_AS(mean_pr(f), std::invalid_argument);
    CHECK_THROWS_AS(variance_pr_gradient_form(f), std::invalid_argument);
}
