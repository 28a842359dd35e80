#include "radial/grid.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>

#include "radial/finite_difference.hpp"

namespace radial {

namespace {

constexpr std::size_t kMinGridPoints = 65;  // 4k+1 with k >= 16

}  // namespace

RadialGrid make_uniform_grid(double r_first, double r_max, double max_spacing) {
    if (!(r_first >= 0.0) || !(r_max > r_first))
        throw std::invalid_argument("uniform grid: need 0 <= r_first < r_max");
    if (!(max_spacing > 0.0))
        throw std::invalid_argument("uniform grid: spacing must be positive");

    const double span = r_max - r_first;
    std::size_t panels = static_cast<std::size_t>(std::ceil(span / (4.0 * max_spacing)));
    panels = std::max<std::size_t>(panels, (kMinGridPoints - 1) / 4);
    const std::size_t n = 4 * panels + 1;

    RadialGrid grid;
    grid.scheme = GridScheme::uniform;
    grid.spacing = span / static_cast<double>(n - 1);
    grid.points.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        grid.points[i] = r_first + static_cast<double>(i) * grid.spacing;
    grid.points.back() = r_max;  // pin the endpoint exactly
    return grid;
}

RadialGrid make_geometric_grid(double r_first, double r_max, std::size_t count) {
    if (!(r_first > 0.0) || !(r_max > r_first))
        throw std::invalid_argument("geometric grid: need 0 < r_first < r_max");
    if (count < kMinGridPoints)
        throw std::invalid_argument("geometric grid: need at least 65 points");

    RadialGrid grid;
    grid.scheme = GridScheme::geometric;
    grid.ratio = std::pow(r_max / r_first, 1.0 / static_cast<double>(count - 1));
    grid.points.resize(count);
    for (std::size_t i = 0; i < count; ++i)
        grid.points[i] = r_first * std::pow(grid.ratio, static_cast<double>(i));
    grid.points.back() = r_max;
    return grid;
}

void validate_grid(const RadialGrid& grid) {
    const auto& p = grid.points;
    if (p.size() < 64) throw std::invalid_argument("grid: fewer than 64 points");
    if (p.front() < 0.0) throw std::invalid_argument("grid: negative first point");
    for (std::size_t i = 1; i < p.size(); ++i)
        if (!(p[i] > p[i - 1]))
            throw std::invalid_argument("grid: points not strictly increasing at index " +
                                        std::to_string(i));
    if (grid.scheme == GridScheme::uniform) {
        const double h = grid.spacing;
        if (!(h > 0.0)) throw std::invalid_argument("grid: uniform spacing not set");
        // positions must follow the affine law to 1e-12 of the span; comparing
        // adjacent differences directly would drown in coordinate rounding
        const double span = p.back() - p.front();
        for (std::size_t i = 1; i < p.size(); ++i) {
            const double expected = p.front() + static_cast<double>(i) * h;
            if (std::abs(p[i] - expected) > 1e-12 * span)
                throw std::invalid_argument("grid: uniform spacing violated at index " +
                                            std::to_string(i));
        }
    }
}

std::vector<double> derivative_uniform(std::span<const double> f, double h) {
    const std::size_t n = f.size();
    if (n < 5)
        throw std::invalid_argument("derivative: need at least 5 samples for the stencil");
    if (!(h > 0.0)) throw std::invalid_argument("derivative: spacing must be positive");

    std::vector<double> d(n);
    const double s = 1.0 / (12.0 * h);
    d[0] = (-25.0 * f[0] + 48.0 * f[1] - 36.0 * f[2] + 16.0 * f[3] - 3.0 * f[4]) * s;
    d[1] = (-3.0 * f[0] - 10.0 * f[1] + 18.0 * f[2] - 6.0 * f[3] + f[4]) * s;
    for (std::size_t i = 2; i + 2 < n; ++i)
        d[i] = (f[i - 2] - 8.0 * f[i - 1] + 8.0 * f[i + 1] - f[i + 2]) * s;
    d[n - 2] = (3.0 * f[n - 1] + 10.0 * f[n - 2] - 18.0 * f[n - 3] + 6.0 * f[n - 4] - f[n - 5]) * s;
    d[n - 1] =
        (25.0 * f[n - 1] - 48.0 * f[n - 2] + 36.0 * f[n - 3] - 16.0 * f[n - 4] + 3.0 * f[n - 5]) * s;
    return d;
}

std::vector<double> second_derivative_uniform(std::span<const double> f, double h) {
    const std::size_t n = f.size();
    if (n < 6)
        throw std::invalid_argument("second derivative: need at least 6 samples for the stencil");
    if (!(h > 0.0)) throw std::invalid_argument("second derivative: spacing must be positive");

    std::vector<double> d(n);
    const double s = 1.0 / (12.0 * h * h);
    d[0] = (45.0 * f[0] - 154.0 * f[1] + 214.0 * f[2] - 156.0 * f[3] + 61.0 * f[4] - 10.0 * f[5]) * s;
    d[1] = (10.0 * f[0] - 15.0 * f[1] - 4.0 * f[2] + 14.0 * f[3] - 6.0 * f[4] + f[5]) * s;
    for (std::size_t i = 2; i + 2 < n; ++i)
        d[i] = (-f[i - 2] + 16.0 * f[i - 1] - 30.0 * f[i] + 16.0 * f[i + 1] - f[i + 2]) * s;
    d[n - 2] =
        (10.0 * f[n - 1] - 15.0 * f[n - 2] - 4.0 * f[n - 3] + 14.0 * f[n - 4] - 6.0 * f[n - 5] +
         f[n - 6]) * s;
    d[n - 1] =
        (45.0 * f[n - 1] - 154.0 * f[n - 2] + 214.0 * f[n - 3] - 156.0 * f[n - 4] +
         61.0 * f[n - 5] - 10.0 * f[n - 6]) * s;
    return d;
}

}  // namespace radial
