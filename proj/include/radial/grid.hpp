#pragma once

#include <cstddef>
#include <vector>

namespace radial {

enum class GridScheme { uniform, geometric };

/// Discretization of the half line used for all sampled-function work.
/// Invariants: at least 64 strictly increasing nonnegative points, last point
/// equal to r_max; uniform grids have constant spacing to 1e-12 relative.
struct RadialGrid {
    std::vector<double> points;
    GridScheme scheme = GridScheme::uniform;
    double spacing = 0.0;  // uniform scheme
    double ratio = 1.0;    // geometric scheme: points[i+1]/points[i]

    std::size_t size() const { return points.size(); }
    double front() const { return points.front(); }
    double r_max() const { return points.back(); }
};

/// Uniform grid on [r_first, r_max] with spacing <= max_spacing. The point
/// count is rounded up to 4k+1 so the composite quadrature rule stays in its
/// all-positive-weight form, and never drops below 65.
RadialGrid make_uniform_grid(double r_first, double r_max, double max_spacing);

/// Geometric grid with count points, r_first > 0 required.
RadialGrid make_geometric_grid(double r_first, double r_max, std::size_t count);

/// Throws std::invalid_argument if any grid invariant is violated.
void validate_grid(const RadialGrid& grid);

/// Real radial function R tabulated on a grid. norm_defect is |int r^2 R^2 dr - 1|
/// measured on the grid; expectation-value operations require it <= 1e-8.
struct SampledRadialFunction {
    RadialGrid grid;
    std::vector<double> values;
    double norm_defect = 1.0;
};

}  // namespace radial
