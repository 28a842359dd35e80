#pragma once

#include <map>

#include "radial/rational.hpp"

namespace radial::hydrogen {

/// (n, l) label of a hydrogen bound state; 1 <= n, 0 <= l <= n-1.
struct QuantumNumbers {
    int n = 1;
    int l = 0;

    QuantumNumbers(int n_, int l_);
};

/// E_n = -1/(2 n^2) in hbar = m = e = 1 units.
Rational energy(int n);

/// Normalized radial function R_nl(r), sign convention R > 0 as r -> 0+.
/// Measure convention: int_0^inf r^2 R^2 dr = 1.
double radial_wavefunction(QuantumNumbers q, double r);

/// R_nl(r) with the exponential envelope removed, i.e. R * e^(r/n). Pairs
/// with a Gauss-Laguerre rule of scale n/2 to integrate r^k R^2 exactly.
double radial_wavefunction_envelope_free(QuantumNumbers q, double r);

/// Exact <r^k> from the Kramers-Pasternack three-term recursion
///   (k+1)/n^2 <r^k> - (2k+1) <r^(k-1)> + (k/4) [(2l+1)^2 - k^2] <r^(k-2)> = 0
/// seeded with <r^0> = 1 and <r^-1> = 1/n^2; <r^-2> = 2/(n^3 (2l+1)) is the
/// analytic downward seed. k < -2 is outside the recursion's validity.
Rational moment_kramers(QuantumNumbers q, int k);

/// Exact moments for k in [-2, k_max].
struct MomentTable {
    QuantumNumbers state;
    std::map<int, Rational> moments;
};
MomentTable moment_table(QuantumNumbers q, int k_max = 4);

/// <r> = (3 n^2 - l(l+1))/2, from the recursion (single source of truth).
Rational mean_radius(QuantumNumbers q);

/// <dr^2> = [n^2 (n^2+2) - l^2 (l+1)^2] / 4.
Rational coordinate_variance(QuantumNumbers q);

/// <dp_r^2> = 1/n^2 - 2 l(l+1) / (n^3 (2l+1)).
Rational radial_momentum_variance(QuantumNumbers q);

/// <dr^2><dp_r^2> = {(n^2+2)/4 - l^2 (l+1)^2/(4 n^2)} [1 - 2 l(l+1)/(n (2l+1))].
Rational uncertainty_product(QuantumNumbers q);

struct MinProduct {
    int l_star;
    Rational value;
};

/// Scans l in [0, n-1] and returns the argmin and minimum of the product.
MinProduct min_product_over_l(int n);

struct CircularAsymptotics {
    Rational mean_r_squared;  // <r>^2 for the state (n, n-1)
    Rational variance;        // <dr^2> for the state (n, n-1)
    double ratio;             // <r>^2 / <dr^2>, grows ~ 2n
};

/// Exact <r>^2 and <dr^2> for the circular state (n, n-1).
CircularAsymptotics circular_asymptotics(int n);

}  // namespace radial::hydrogen
