#include "radial/special_math.hpp"

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>

#include "radial/errors.hpp"

namespace radial::special {

double assoc_laguerre(int degree, double alpha, double x) {
    if (degree < 0) throw std::domain_error("assoc_laguerre: degree must be >= 0");
    if (!(alpha > -1.0)) throw std::domain_error("assoc_laguerre: alpha must exceed -1");
    if (!std::isfinite(x)) throw std::domain_error("assoc_laguerre: x must be finite");

    if (degree == 0) return 1.0;
    double prev = 1.0;
    double curr = 1.0 + alpha - x;
    for (int j = 1; j < degree; ++j) {
        const double next =
            ((2.0 * j + 1.0 + alpha - x) * curr - (j + alpha) * prev) / (j + 1.0);
        prev = curr;
        curr = next;
    }
    return curr;
}

double log_factorial(int n) {
    if (n < 0) throw std::domain_error("log_factorial: n must be >= 0");
    if (n <= 20) {
        // exact in 64-bit integers up to 20!
        unsigned long long acc = 1;
        for (int i = 2; i <= n; ++i) acc *= static_cast<unsigned long long>(i);
        return std::log(static_cast<double>(acc));
    }
    return std::lgamma(static_cast<double>(n) + 1.0);
}

QuadratureRule build_gauss_laguerre(int order, double scale) {
    if (order < 1) throw std::invalid_argument("gauss_laguerre: order must be >= 1");
    if (order > kMaxGaussLaguerreOrder)
        throw capability_error("gauss_laguerre: order " + std::to_string(order) +
                               " exceeds supported maximum " +
                               std::to_string(kMaxGaussLaguerreOrder));
    if (!(scale > 0.0)) throw std::invalid_argument("gauss_laguerre: scale must be positive");

    const int m = order;
    QuadratureRule rule;
    rule.kind = QuadratureKind::gauss_laguerre;
    rule.order = order;
    rule.scale = scale;
    rule.nodes.resize(m);
    rule.weights.resize(m);

    double z = 0.0;
    for (int i = 0; i < m; ++i) {
        // standard initial guesses (Stroud & Secrest), alpha = 0
        if (i == 0) {
            z = 3.0 / (1.0 + 2.4 * m);
        } else if (i == 1) {
            z += 15.0 / (1.0 + 2.5 * m);
        } else {
            const double ai = i - 1;
            z += ((1.0 + 2.55 * ai) / (1.9 * ai)) * (z - rule.nodes[i - 2]);
        }
        double pp = 0.0;
        bool converged = false;
        for (int it = 0; it < 100; ++it) {
            const double p = assoc_laguerre(m, 0.0, z);
            const double pm1 = assoc_laguerre(m - 1, 0.0, z);
            pp = m * (p - pm1) / z;  // d/dx L_m = m (L_m - L_{m-1}) / x
            const double dz = p / pp;
            z -= dz;
            if (std::abs(dz) <= 1e-14 * std::max(1.0, std::abs(z))) {
                converged = true;
                break;
            }
        }
        if (!converged)
            throw std::runtime_error("gauss_laguerre: Newton iteration stalled at node " +
                                     std::to_string(i));
        rule.nodes[i] = z;
        const double pm1 = assoc_laguerre(m - 1, 0.0, z);
        const double inv = 1.0 / (static_cast<double>(m) * pm1);
        double w = z * inv * inv;
        // true weights ~ e^(-x_i) underflow near the top nodes of large rules;
        // keep them positive at the smallest representable value
        if (w <= 0.0) w = std::numeric_limits<double>::denorm_min();
        rule.weights[i] = w;
    }

    if (scale != 1.0) {
        for (auto& x : rule.nodes) x *= scale;
        for (auto& w : rule.weights) w *= scale;
    }
    return rule;
}

namespace {

// Composite weights on a uniform grid of n points: Boole panels over the bulk,
// Simpson or 3/8 closure at the far end for leftover intervals. All weights
// stay positive; on 4k+1 grids the rule is pure Boole (order 6).
std::vector<double> uniform_weights(std::size_t n, double h) {
    std::vector<double> w(n, 0.0);
    if (n < 2) return w;
    if (n == 2) {
        w[0] = w[1] = h / 2.0;
        return w;
    }
    if (n == 3) {
        w[0] = h / 3.0;
        w[1] = 4.0 * h / 3.0;
        w[2] = h / 3.0;
        return w;
    }
    if (n == 4) {
        const double c = 3.0 * h / 8.0;
        w[0] = c;
        w[1] = 3.0 * c;
        w[2] = 3.0 * c;
        w[3] = c;
        return w;
    }

    const std::size_t intervals = n - 1;
    std::size_t rem = intervals % 4;
    std::size_t boole_panels = intervals / 4;
    if (rem == 1) {
        // trade one Boole panel for a Simpson + 3/8 pair (5 intervals)
        --boole_panels;
        rem = 5;
    }

    std::size_t i = 0;
    const double cb = 2.0 * h / 45.0;
    for (std::size_t p = 0; p < boole_panels; ++p, i += 4) {
        w[i] += 7.0 * cb;
        w[i + 1] += 32.0 * cb;
        w[i + 2] += 12.0 * cb;
        w[i + 3] += 32.0 * cb;
        w[i + 4] += 7.0 * cb;
    }
    if (rem == 5 || rem == 2) {
        w[i] += h / 3.0;
        w[i + 1] += 4.0 * h / 3.0;
        w[i + 2] += h / 3.0;
        i += 2;
        if (rem == 5) rem = 3;
        else rem = 0;
    }
    if (rem == 3) {
        const double c = 3.0 * h / 8.0;
        w[i] += c;
        w[i + 1] += 3.0 * c;
        w[i + 2] += 3.0 * c;
        w[i + 3] += c;
    }
    return w;
}

}  // namespace

QuadratureRule build_composite_rule(const RadialGrid& grid) {
    QuadratureRule rule;
    rule.kind = QuadratureKind::composite_on_grid;
    rule.nodes = grid.points;
    const std::size_t n = grid.size();
    if (grid.scheme == GridScheme::uniform) {
        rule.weights = uniform_weights(n, grid.spacing);
    } else {
        rule.weights.assign(n, 0.0);
        for (std::size_t i = 0; i + 1 < n; ++i) {
            const double half = 0.5 * (grid.points[i + 1] - grid.points[i]);
            rule.weights[i] += half;
            rule.weights[i + 1] += half;
        }
    }
    return rule;
}

double integrate_sampled(std::span<const double> values, const RadialGrid& grid) {
    if (values.size() != grid.size())
        throw std::invalid_argument("integrate_sampled: value count " +
                                    std::to_string(values.size()) + " does not match grid size " +
                                    std::to_string(grid.size()));
    const QuadratureRule rule = build_composite_rule(grid);
    long double acc = 0.0L;
    for (std::size_t i = 0; i < values.size(); ++i)
        acc += static_cast<long double>(rule.weights[i]) * values[i];
    return static_cast<double>(acc);
}

void validate_rule(const QuadratureRule& rule) {
    if (rule.nodes.size() != rule.weights.size())
        throw std::invalid_argument("rule: node/weight count mismatch");
    if (rule.nodes.empty()) throw std::invalid_argument("rule: empty");
    if (rule.nodes.front() < 0.0) throw std::invalid_argument("rule: negative node");
    for (std::size_t i = 1; i < rule.nodes.size(); ++i)
        if (!(rule.nodes[i] > rule.nodes[i - 1]))
            throw std::invalid_argument("rule: nodes not strictly increasing");
    for (double w : rule.weights)
        if (!(w > 0.0)) throw std::invalid_argument("rule: nonpositive weight");
    if (rule.kind == QuadratureKind::gauss_laguerre) {
        if (rule.nodes.size() != static_cast<std::size_t>(rule.order))
            throw std::invalid_argument("rule: gauss_laguerre size != order");
        long double sum = 0.0L;
        for (double w : rule.weights) sum += w;
        if (std::abs(static_cast<double>(sum) - rule.scale) > 1e-12 * rule.scale)
            throw std::invalid_argument("rule: gauss_laguerre weights do not sum to scale");
    }
}

}  // namespace radial::special
