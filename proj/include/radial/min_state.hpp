#pragma once

#include <span>
#include <string>
#include <vector>

#include "radial/grid.hpp"
#include "radial/radial_numerics.hpp"

namespace radial::minstate {

/// Minimum-uncertainty radial state R(r) = (C/r) exp[-(r - mean)^2 / (4 var)],
/// tabulated on [cutoff, mean + 12 sigma]. The 1/r singularity carries
/// exponentially small weight when mean^2 >> var.
struct GaussianRadialState {
    double mean = 0.0;
    double variance = 0.0;
    double cutoff = 0.0;
    double norm_constant = 0.0;  // C fixed by int r^2 R^2 dr = 1
};

struct MinStateBuild {
    GaussianRadialState state;
    SampledRadialFunction function;
};

/// Builds the state. Rejects mean^2/var < 4 (validity_error): below that the
/// ignored singular region carries non-negligible norm. Cutoff rule:
/// eps = max(mean - 10 sigma, mean/1000). Grid spacing resolves both the
/// Gaussian scale and, when the cutoff floor puts it on-grid, the 1/r edge.
MinStateBuild build_min_state(double mean, double variance);

/// max over the grid of |(r - mean)/(2 var) R + R' + R/r| / max|R|.
/// The state solves that equation exactly, so the residual measures
/// discretization only; contract <= 1e-6.
double defining_equation_residual(const GaussianRadialState& state,
                                  const SampledRadialFunction& f);

struct RatioEntry {
    double ratio = 0.0;
    bool ok = false;
    std::string error;  // set when the validity gate rejects the ratio
    double mean_achieved = 0.0;
    double variance_achieved = 0.0;
    double product = 0.0;
    double residual = 0.0;
    bool bound_satisfied = false;
};

/// For each ratio builds the state with sigma = 1, mean = ratio and runs the
/// uncertainty pipeline. |product - 1/4| shrinks as the ratio grows; the
/// half-line truncation puts the product slightly below 1/4 at small ratios.
std::vector<RatioEntry> product_vs_ratio(std::span<const double> ratios);

}  // namespace radial::minstate
