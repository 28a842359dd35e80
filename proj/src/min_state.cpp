#include "radial/min_state.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "radial/errors.hpp"
#include "radial/finite_difference.hpp"
#include "radial/special_math.hpp"

namespace radial::minstate {

namespace {

constexpr double kGaussPointsPerSigma = 160.0;
constexpr std::size_t kMaxPoints = 8'000'000;

// 10 sigma into the Gaussian tail, floored at mean/1000 to stay positive and
// capped at mean/12 so the cutoff always sits well below the mean.
double cutoff_for(double mean, double sigma) {
    return std::min(std::max(mean - 10.0 * sigma, mean / 1000.0), mean / 12.0);
}

// Spacing that keeps the 4th-order finite-difference residual below ~3e-7 of
// max|R| at the left edge, where R varies like 1/r once the cutoff floor is
// active. Away from that regime it falls back to the Gaussian scale.
double choose_spacing(double mean, double variance, double cutoff) {
    const double sigma = std::sqrt(variance);
    const double h_gauss = sigma / kGaussPointsPerSigma;
    // spike amplitude relative to the Gaussian peak R(mean) = C/mean
    const double spike = (mean / cutoff) * std::exp(-(mean - cutoff) * (mean - cutoff) /
                                                    (4.0 * variance));
    const double amplification = std::max(1.0, 1.0 / spike);
    const double h_spike =
        std::pow(1.25e-8 * std::pow(cutoff, 5) * amplification, 0.25);
    return std::min(h_gauss, h_spike);
}

}  // namespace

MinStateBuild build_min_state(double mean, double variance) {
    if (!(mean > 0.0)) throw std::invalid_argument("min state: mean must be positive");
    if (!(variance > 0.0)) throw std::invalid_argument("min state: variance must be positive");
    if (mean * mean / variance < 4.0)
        throw validity_error("min state: mean^2/var = " +
                             std::to_string(mean * mean / variance) +
                             " < 4; the ignored singular region would carry "
                             "non-negligible norm");

    const double sigma = std::sqrt(variance);
    const double eps = cutoff_for(mean, sigma);
    const double r_hi = mean + 12.0 * sigma;
    const double h = choose_spacing(mean, variance, eps);
    if ((r_hi - eps) / h > static_cast<double>(kMaxPoints))
        throw resolution_error("min state: grid would exceed the point budget");

    MinStateBuild build;
    build.function.grid = make_uniform_grid(eps, r_hi, h);
    auto& values = build.function.values;
    values.resize(build.function.grid.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double r = build.function.grid.points[i];
        const double d = r - mean;
        values[i] = std::exp(-d * d / (4.0 * variance)) / r;
    }
    numerics::normalize(build.function);  // rescales values; C is that scale

    build.state.mean = mean;
    build.state.variance = variance;
    build.state.cutoff = eps;
    // C = R(r) * r * e^{+(r-mean)^2/(4 var)}, read off at the node nearest the
    // peak where the inverse envelope is O(1)
    const std::size_t peak = std::min<std::size_t>(
        values.size() - 1,
        static_cast<std::size_t>(std::lround((mean - eps) / build.function.grid.spacing)));
    const double r_peak = build.function.grid.points[peak];
    const double d_peak = r_peak - mean;
    build.state.norm_constant =
        values[peak] * r_peak * std::exp(d_peak * d_peak / (4.0 * variance));
    return build;
}

double defining_equation_residual(const GaussianRadialState& state,
                                  const SampledRadialFunction& f) {
    if (f.grid.scheme != GridScheme::uniform)
        throw std::invalid_argument("residual: uniform grid required");
    const auto d = derivative_uniform(f.values, f.grid.spacing);
    double worst = 0.0;
    double peak = 0.0;
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        const double r = f.grid.points[i];
        const double lhs =
            (r - state.mean) / (2.0 * state.variance) * f.values[i] + d[i] + f.values[i] / r;
        worst = std::max(worst, std::abs(lhs));
        peak = std::max(peak, std::abs(f.values[i]));
    }
    return worst / peak;
}

std::vector<RatioEntry> product_vs_ratio(std::span<const double> ratios) {
    std::vector<RatioEntry> entries;
    entries.reserve(ratios.size());
    for (double ratio : ratios) {
        RatioEntry entry;
        entry.ratio = ratio;
        try {
            const MinStateBuild build = build_min_state(ratio, 1.0);  // sigma = 1
            const auto report = numerics::uncertainty_report(
                build.function, "min-state ratio " + std::to_string(ratio));
            entry.ok = true;
            entry.mean_achieved = report.mean_r;
            entry.variance_achieved = report.var_r;
            entry.product = report.product;
            entry.residual = defining_equation_residual(build.state, build.function);
            entry.bound_satisfied = report.bound_satisfied;
        } catch (const validity_error& err) {
            entry.ok = false;
            entry.error = err.what();
        }
        entries.push_back(std::move(entry));
    }
    return entries;
}

}  // namespace radial::minstate
