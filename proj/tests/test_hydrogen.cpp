#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "radial/hydrogen.hpp"
#include "radial/rational.hpp"
#include "radial/special_math.hpp"

using namespace radial;
using namespace radial::hydrogen;

namespace {

// quadrature oracle for <r^k>: the integrand r^(k+2) R^2 e^(+2r/n) is a pure
// polynomial, so a Gauss-Laguerre rule with scale n/2 is exact once the order
// covers degree 2n + k
double moment_by_quadrature(QuantumNumbers q, int k) {
    const int order = q.n + std::abs(k) / 2 + 6;
    const auto rule = special::build_gauss_laguerre(order, q.n / 2.0);
    return special::apply_rule(rule, [&](double r) {
        const double poly = radial_wavefunction_envelope_free(q, r);
        return std::pow(r, k + 2) * poly * poly;
    });
}

}  // namespace

TEST_CASE("quantum number validation") {
    CHECK_NOTHROW(QuantumNumbers(1, 0));
    CHECK_NOTHROW(QuantumNumbers(50, 49));
    CHECK_THROWS_AS(QuantumNumbers(0, 0), std::domain_error);
    CHECK_THROWS_AS(QuantumNumbers(2, 2), std::domain_error);
    CHECK_THROWS_AS(QuantumNumbers(3, -1), std::domain_error);
}

TEST_CASE("eigenenergies") {
    CHECK(energy(1) == Rational(-1, 2));
    CHECK(energy(2) == Rational(-1, 8));
    CHECK(energy(10) == Rational(-1, 200));
    CHECK_THROWS_AS(energy(0), std::domain_error);
}

TEST_CASE("ground-state radial function closed form") {
    const QuantumNumbers q(1, 0);
    CHECK(radial_wavefunction(q, 0.0) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(radial_wavefunction(q, 1.0) == doctest::Approx(2.0 * std::exp(-1.0)).epsilon(1e-14));
    CHECK_THROWS_AS(radial_wavefunction(q, -0.1), std::domain_error);
}

TEST_CASE("radial functions are positive at the origin side and normalized") {
    for (int n = 1; n <= 8; ++n) {
        for (int l = 0; l < n; ++l) {
            const QuantumNumbers q(n, l);
            CHECK(radial_wavefunction(q, 1e-6) > 0.0);
            CHECK(moment_by_quadrature(q, 0) == doctest::Approx(1.0).epsilon(1e-9));
        }
    }
}

TEST_CASE("Kramers moments: analytic seeds") {
    for (int n : {1, 2, 5, 17}) {
        for (int l = 0; l < n; l += (n > 2 ? 3 : 1)) {
            const QuantumNumbers q(n, l);
            CHECK(moment_kramers(q, 0) == Rational(1));
            CHECK(moment_kramers(q, -1) == Rational(1, BigInt(n) * n));
            CHECK(moment_kramers(q, -2) ==
                  Rational(2, BigInt(n) * n * n * (2 * l + 1)));
        }
    }
    CHECK_THROWS_AS(moment_kramers(QuantumNumbers(2, 1), -3), std::invalid_argument);
}

TEST_CASE("Kramers moments: ground state values") {
    const QuantumNumbers q(1, 0);
    CHECK(moment_kramers(q, 1) == Rational(3, 2));
    CHECK(moment_kramers(q, 2) == Rational(3));
}

TEST_CASE("Kramers moments cross-validated by quadrature, n <= 8") {
    for (int n = 1; n <= 8; ++n) {
        for (int l = 0; l < n; ++l) {
            const QuantumNumbers q(n, l);
            for (int k : {-2, -1, 1, 2, 3}) {
                const double exact = to_double(moment_kramers(q, k));
                const double quad = moment_by_quadrature(q, k);
                CHECK(std::abs(quad - exact) <= 1e-9 * std::abs(exact));
            }
        }
    }
}

TEST_CASE("moment table spans [-2, k_max]") {
    const auto table = moment_table(QuantumNumbers(3, 1), 4);
    CHECK(table.moments.size() == 7);
    CHECK(table.moments.at(0) == Rational(1));
    CHECK(table.moments.at(-1) == Rational(1, 9));
}

TEST_CASE("coordinate variance closed form") {
    CHECK(coordinate_variance(QuantumNumbers(1, 0)) == Rational(3, 4));
    CHECK(coordinate_variance(QuantumNumbers(2, 1)) == Rational(5));
    // circular value n^2 (2n+1)/4, spot check n = 3
    CHECK(coordinate_variance(QuantumNumbers(3, 2)) == Rational(63, 4));
}

TEST_CASE("coordinate variance equals the Kramers second central moment exactly") {
    for (int n = 1; n <= 50; ++n) {
        for (int l = 0; l < n; ++l) {
            const QuantumNumbers q(n, l);
            const Rational from_moments =
                moment_kramers(q, 2) - moment_kramers(q, 1) * moment_kramers(q, 1);
            CHECK(coordinate_variance(q) == from_moments);
        }
    }
}

TEST_CASE("momentum variance closed form and energy route") {
    CHECK(radial_momentum_variance(QuantumNumbers(1, 0)) == Rational(1));
    for (int n = 1; n <= 5; ++n)
        CHECK(radial_momentum_variance(QuantumNumbers(n, 0)) == Rational(1, BigInt(n) * n));
    CHECK(radial_momentum_variance(QuantumNumbers(3, 2)) == Rational(1, 45));

    // must equal 2 E_n + 2 <1/r> - l(l+1) <1/r^2> exactly
    for (int n = 1; n <= 50; ++n) {
        for (int l = 0; l < n; ++l) {
            const QuantumNumbers q(n, l);
            const Rational route = Rational(2) * energy(n) + Rational(2) * moment_kramers(q, -1) -
                                   Rational(BigInt(l) * (l + 1)) * moment_kramers(q, -2);
            CHECK(radial_momentum_variance(q) == route);
        }
    }
}

TEST_CASE("uncertainty product factorizes exactly") {
    for (int n = 1; n <= 50; ++n) {
        for (int l = 0; l < n; ++l) {
            const QuantumNumbers q(n, l);
            CHECK(uncertainty_product(q) ==
                  coordinate_variance(q) * radial_momentum_variance(q));
        }
    }
}

TEST_CASE("uncertainty product values") {
    CHECK(uncertainty_product(QuantumNumbers(1, 0)) == Rational(3, 4));
    CHECK(uncertainty_product(QuantumNumbers(2, 0)) == Rational(3, 2));
    CHECK(uncertainty_product(QuantumNumbers(2, 1)) == Rational(5, 12));
    // circular states follow (2n+1)/(4(2n-1))
    for (int n = 1; n <= 50; ++n)
        CHECK(uncertainty_product(QuantumNumbers(n, n - 1)) ==
              Rational(2 * n + 1, 4 * (2 * n - 1)));
}

TEST_CASE("exact bound: every product exceeds 1/4, equality never attained") {
    const Rational quarter(1, 4);
    for (int n = 1; n <= 50; ++n)
        for (int l = 0; l < n; ++l) CHECK(uncertainty_product(QuantumNumbers(n, l)) > quarter);
}

TEST_CASE("product bound holds for random large states") {
    std::mt19937 rng(99);
    const Rational quarter(1, 4);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 200);
        const int l = static_cast<int>(rng() % n);
        CHECK(uncertainty_product(QuantumNumbers(n, l)) > quarter);
    }
}

TEST_CASE("argmin over l sits at l = n-1") {
    CHECK(min_product_over_l(1).l_star == 0);
    CHECK(min_product_over_l(1).value == Rational(3, 4));
    CHECK(min_product_over_l(2).l_star == 1);
    CHECK(min_product_over_l(2).value == Rational(5, 12));
    CHECK(min_product_over_l(50).l_star == 49);
    CHECK(min_product_over_l(50).value == Rational(101, 396));
    for (int n = 1; n <= 50; ++n) CHECK(min_product_over_l(n).l_star == n - 1);
}

TEST_CASE("circular minimum sequence decreases strictly to 1/4") {
    Rational prev = min_product_over_l(1).value;
    for (int n = 2; n <= 50; ++n) {
        const Rational curr = min_product_over_l(n).value;
        CHECK(curr < prev);
        prev = curr;
    }
    // limit: (2n+1)/(4(2n-1)) - 1/4 = 1/(2(2n-1)) -> 0
    CHECK(to_double(min_product_over_l(4000).value) == doctest::Approx(0.25).epsilon(1e-3));
}

TEST_CASE("circular asymptotics") {
    const auto one = circular_asymptotics(1);
    CHECK(one.mean_r_squared == Rational(9, 4));
    CHECK(one.variance == Rational(3, 4));
    CHECK(one.ratio == doctest::Approx(3.0).epsilon(1e-14));

    const auto big = circular_asymptotics(100);
    const double var_scaled = to_double(big.variance) / (100.0 * 100.0 * 100.0 / 2.0);
    const double mean_sq_scaled = to_double(big.mean_r_squared) / 1e8;
    CHECK(std::abs(var_scaled - 1.0) < 0.02);
    CHECK(std::abs(mean_sq_scaled - 1.0) < 0.02);
    // ratio grows like 2n
    CHECK(big.ratio == doctest::Approx(2.0 * 100).epsilon(0.02));
}

TEST_CASE("mean radius from the recursion") {
    CHECK(mean_radius(QuantumNumbers(1, 0)) == Rational(3, 2));
    CHECK(mean_radius(QuantumNumbers(2, 1)) == Rational(5));
    // (3 n^2 - l(l+1))/2 for a large state
    CHECK(mean_radius(QuantumNumbers(20, 19)) == Rational(3 * 400 - 19 * 20, 2));
}
