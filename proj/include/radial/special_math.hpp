#pragma once

#include <span>
#include <vector>

#include "radial/grid.hpp"

namespace radial::special {

enum class QuadratureKind { gauss_laguerre, composite_on_grid };

/// Nodes/weights pair for integrals over [0, inf).
/// gauss_laguerre(order m, scale s): exact for int_0^inf e^(-x/s) p(x) dx with
/// deg p <= 2m-1; weights sum to s. composite_on_grid: weights of the sampled
/// rule on a RadialGrid. Nodes strictly increasing, weights positive.
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
    QuadratureKind kind = QuadratureKind::composite_on_grid;
    int order = 0;       // gauss_laguerre only
    double scale = 1.0;  // gauss_laguerre only
};

// Above ~order 350 the unscaled Laguerre recurrence leaves double range near
// the top node (|L_m| ~ e^(x/2), x ~ 4m), so the cap sits safely below that.
inline constexpr int kMaxGaussLaguerreOrder = 320;

/// Associated Laguerre polynomial L_k^alpha(x) by the three-term recurrence
/// in the degree. Requires alpha > -1.
double assoc_laguerre(int degree, double alpha, double x);

/// ln(n!) with relative error below 1e-14.
double log_factorial(int n);

/// Gauss-Laguerre rule: nodes from Newton iteration on L_m, tolerance 1e-14.
/// `scale` rescales the rule so the implicit weight is e^(-x/scale).
/// Throws capability_error above kMaxGaussLaguerreOrder.
QuadratureRule build_gauss_laguerre(int order, double scale);

/// Composite rule for a grid: Boole panels (order 6) with Simpson / 3/8
/// closure panels at the far end on uniform grids, trapezoid otherwise.
QuadratureRule build_composite_rule(const RadialGrid& grid);

/// Integral of tabulated values over the grid span using the composite rule.
double integrate_sampled(std::span<const double> values, const RadialGrid& grid);

/// Sum w_i f(x_i) for a callable integrand.
template <class F>
double apply_rule(const QuadratureRule& rule, F&& f) {
    long double acc = 0.0L;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        acc += static_cast<long double>(rule.weights[i]) * f(rule.nodes[i]);
    return static_cast<double>(acc);
}

/// Throws std::invalid_argument if a rule invariant is violated.
void validate_rule(const QuadratureRule& rule);

}  // namespace radial::special
