#include "radial/hydrogen.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "radial/special_math.hpp"

namespace radial::hydrogen {

QuantumNumbers::QuantumNumbers(int n_, int l_) : n(n_), l(l_) {
    if (n < 1)
        throw std::domain_error("quantum numbers: n must be >= 1, got " + std::to_string(n));
    if (l < 0 || l > n - 1)
        throw std::domain_error("quantum numbers: need 0 <= l <= n-1, got n=" +
                                std::to_string(n) + " l=" + std::to_string(l));
}

Rational energy(int n) {
    if (n < 1) throw std::domain_error("energy: n must be >= 1");
    return Rational(-1, BigInt(2) * n * n);
}

namespace {

double radial_core(QuantumNumbers q, double r, bool with_envelope) {
    if (r < 0.0) throw std::domain_error("radial_wavefunction: r must be >= 0");
    const double n = q.n;
    const double x = 2.0 * r / n;
    const double lag = special::assoc_laguerre(q.n - q.l - 1, 2.0 * q.l + 1.0, x);
    // N = (2/n^2) sqrt((n-l-1)! / (n+l)!); N, (2r/n)^l and the envelope are
    // folded into one exponent so large-n states stay inside double range
    double exponent =
        std::log(2.0 / (n * n)) +
        0.5 * (special::log_factorial(q.n - q.l - 1) - special::log_factorial(q.n + q.l));
    if (q.l > 0) {
        if (r == 0.0) return 0.0;
        exponent += q.l * std::log(x);
    }
    if (with_envelope) exponent -= r / n;
    return std::exp(exponent) * lag;
}

}  // namespace

double radial_wavefunction(QuantumNumbers q, double r) { return radial_core(q, r, true); }

double radial_wavefunction_envelope_free(QuantumNumbers q, double r) {
    return radial_core(q, r, false);
}

Rational moment_kramers(QuantumNumbers q, int k) {
    if (k < -2)
        throw std::invalid_argument(
            "moment_kramers: k < -2 is outside the recursion's validity");
    const BigInt n = q.n;
    const BigInt l = q.l;
    if (k == -2) return Rational(2, n * n * n * (2 * l + 1));
    if (k == -1) return Rational(1, n * n);
    if (k == 0) return Rational(1);

    // upward: <r^k> = [ (2k+1) <r^(k-1)> - (k/4) ((2l+1)^2 - k^2) <r^(k-2)> ] n^2/(k+1)
    Rational prev2(1, n * n);  // <r^-1>
    Rational prev(1);          // <r^0>
    const Rational n_sq(n * n);
    const BigInt two_l_plus_1_sq = (2 * l + 1) * (2 * l + 1);
    for (int j = 1; j <= k; ++j) {
        const Rational coeff_prev(2 * j + 1);
        const Rational coeff_prev2 = Rational(j, 4) * Rational(two_l_plus_1_sq - BigInt(j) * j);
        const Rational next = (coeff_prev * prev - coeff_prev2 * prev2) * n_sq / (j + 1);
        prev2 = prev;
        prev = next;
    }
    return prev;
}

MomentTable moment_table(QuantumNumbers q, int k_max) {
    if (k_max < 0) throw std::invalid_argument("moment_table: k_max must be >= 0");
    MomentTable table{q, {}};
    for (int k = -2; k <= k_max; ++k) table.moments.emplace(k, moment_kramers(q, k));
    return table;
}

Rational mean_radius(QuantumNumbers q) { return moment_kramers(q, 1); }

Rational coordinate_variance(QuantumNumbers q) {
    const BigInt n = q.n;
    const BigInt l = q.l;
    return Rational(n * n * (n * n + 2) - l * l * (l + 1) * (l + 1), 4);
}

Rational radial_momentum_variance(QuantumNumbers q) {
    const BigInt n = q.n;
    const BigInt l = q.l;
    return Rational(1, n * n) - Rational(2 * l * (l + 1), n * n * n * (2 * l + 1));
}

Rational uncertainty_product(QuantumNumbers q) {
    const BigInt n = q.n;
    const BigInt l = q.l;
    const Rational coordinate_part =
        Rational(n * n + 2, 4) - Rational(l * l * (l + 1) * (l + 1), 4 * n * n);
    const Rational momentum_part =
        Rational(1) - Rational(2 * l * (l + 1), n * (2 * l + 1));
    return coordinate_part * momentum_part;
}

MinProduct min_product_over_l(int n) {
    if (n < 1) throw std::domain_error("min_product_over_l: n must be >= 1");
    MinProduct best{0, uncertainty_product(QuantumNumbers(n, 0))};
    for (int l = 1; l <= n - 1; ++l) {
        Rational value = uncertainty_product(QuantumNumbers(n, l));
        if (value < best.value) best = MinProduct{l, std::move(value)};
    }
    return best;
}

CircularAsymptotics circular_asymptotics(int n) {
    if (n < 1) throw std::domain_error("circular_asymptotics: n must be >= 1");
    const QuantumNumbers q(n, n - 1);
    const Rational mean = mean_radius(q);  // n^2 + n/2
    CircularAsymptotics result{mean * mean, coordinate_variance(q), 0.0};
    result.ratio = to_double(result.mean_r_squared / result.variance);
    return result;
}

}  // namespace radial::hydrogen
