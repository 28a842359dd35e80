#pragma once

#include <span>
#include <vector>

namespace radial {

/// First derivative of uniformly sampled values: centered 4th-order stencils
/// in the interior, one-sided 4th-order at the first/last two points.
/// Requires at least 5 samples.
std::vector<double> derivative_uniform(std::span<const double> values, double spacing);

/// Second derivative, 4th-order accurate; one-sided 6-point stencils at the
/// boundaries. Requires at least 6 samples.
std::vector<double> second_derivative_uniform(std::span<const double> values, double spacing);

}  // namespace radial
