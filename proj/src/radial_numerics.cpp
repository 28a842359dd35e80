#include "radial/radial_numerics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "radial/errors.hpp"
#include "radial/finite_difference.hpp"
#include "radial/special_math.hpp"

namespace radial::numerics {

namespace {

void require_normalized(const SampledRadialFunction& f, const char* op) {
    if (!(f.norm_defect <= kNormDefectLimit))
        throw std::invalid_argument(std::string(op) + ": norm defect " +
                                    std::to_string(f.norm_defect) + " exceeds 1e-8");
}

void require_uniform(const SampledRadialFunction& f, const char* op) {
    if (f.grid.scheme != GridScheme::uniform)
        throw std::invalid_argument(std::string(op) +
                                    ": derivative stencils need a uniform grid");
    if (f.grid.size() < 6)
        throw std::invalid_argument(std::string(op) + ": grid too short for the stencils");
}

}  // namespace

RadialGrid hydrogen_grid(hydrogen::QuantumNumbers q) {
    const double n = q.n;
    // classical turning point 2n^2 plus 12 tail scale lengths; spacing n/256
    // keeps a few hundred points per lobe oscillation scale
    const double r_max = 2.0 * n * n + 12.0 * n * std::sqrt(2.0 * n + 1.0) + 10.0;
    return make_uniform_grid(0.0, r_max, n / 256.0);
}

void normalize(SampledRadialFunction& f) {
    const auto& r = f.grid.points;
    std::vector<double> density(f.values.size());
    for (std::size_t i = 0; i < density.size(); ++i) {
        const double rr = r[i] * f.values[i];
        density[i] = rr * rr;
    }
    const double integral = special::integrate_sampled(density, f.grid);
    if (!(integral > 0.0) || !std::isfinite(integral))
        throw std::invalid_argument("normalize: non-positive or non-finite norm integral");
    const double scale = 1.0 / std::sqrt(integral);
    for (auto& v : f.values) v *= scale;
    for (std::size_t i = 0; i < density.size(); ++i) density[i] *= scale * scale;
    f.norm_defect = std::abs(special::integrate_sampled(density, f.grid) - 1.0);
}

SampledRadialFunction sample_hydrogen(hydrogen::QuantumNumbers q, const RadialGrid* grid_hint) {
    SampledRadialFunction f;
    f.grid = grid_hint ? *grid_hint : hydrogen_grid(q);
    validate_grid(f.grid);

    f.values.resize(f.grid.size());
    for (std::size_t i = 0; i < f.grid.size(); ++i)
        f.values[i] = hydrogen::radial_wavefunction(q, f.grid.points[i]);

    // envelope e^(-2r/n): unresolved tail mass beyond r_max is bounded by
    // ~ r_max^2 R(r_max)^2 * n; reject grids that truncate the state
    const double r_end = f.grid.r_max();
    const double tail = r_end * r_end * f.values.back() * f.values.back() * q.n;
    if (tail > 1e-10)
        throw resolution_error("sample_hydrogen: estimated tail mass " + std::to_string(tail) +
                               " beyond r_max=" + std::to_string(r_end) + " exceeds 1e-10");

    normalize(f);
    if (!(f.norm_defect <= 1e-10))
        throw resolution_error("sample_hydrogen: norm defect " + std::to_string(f.norm_defect) +
                               " above 1e-10 after renormalization");
    return f;
}

double mean_r(const SampledRadialFunction& f) {
    require_normalized(f, "mean_r");
    const auto& r = f.grid.points;
    std::vector<double> integrand(f.values.size());
    for (std::size_t i = 0; i < integrand.size(); ++i)
        integrand[i] = r[i] * r[i] * r[i] * f.values[i] * f.values[i];
    return special::integrate_sampled(integrand, f.grid);
}

double variance_r(const SampledRadialFunction& f) {
    require_normalized(f, "variance_r");
    const double mean = mean_r(f);
    const auto& r = f.grid.points;
    std::vector<double> integrand(f.values.size());
    for (std::size_t i = 0; i < integrand.size(); ++i) {
        const double d = r[i] - mean;
        integrand[i] = r[i] * r[i] * f.values[i] * f.values[i] * d * d;
    }
    return special::integrate_sampled(integrand, f.grid);
}

double mean_pr(const SampledRadialFunction& f) {
    require_normalized(f, "mean_pr");
    require_uniform(f, "mean_pr");
    const auto& r = f.grid.points;
    const auto d = derivative_uniform(f.values, f.grid.spacing);
    // r^2 R (R' + R/r) = (rR) (rR' + R), finite at r -> 0
    std::vector<double> integrand(f.values.size());
    for (std::size_t i = 0; i < integrand.size(); ++i)
        integrand[i] = r[i] * f.values[i] * (r[i] * d[i] + f.values[i]);
    return special::integrate_sampled(integrand, f.grid);
}

double variance_pr_gradient_form(const SampledRadialFunction& f) {
    require_normalized(f, "variance_pr_gradient_form");
    require_uniform(f, "variance_pr_gradient_form");
    const auto& r = f.grid.points;
    const auto d = derivative_uniform(f.values, f.grid.spacing);
    std::vector<double> integrand(f.values.size());
    for (std::size_t i = 0; i < integrand.size(); ++i) {
        const double g = r[i] * d[i] + f.values[i];
        integrand[i] = g * g;
    }
    return special::integrate_sampled(integrand, f.grid);
}

double variance_pr_laplacian_form(const SampledRadialFunction& f) {
    require_normalized(f, "variance_pr_laplacian_form");
    require_uniform(f, "variance_pr_laplacian_form");
    const auto& r = f.grid.points;
    const auto d1 = derivative_uniform(f.values, f.grid.spacing);
    const auto d2 = second_derivative_uniform(f.values, f.grid.spacing);
    std::vector<double> integrand(f.values.size());
    for (std::size_t i = 0; i < integrand.size(); ++i)
        integrand[i] = -f.values[i] * (r[i] * r[i] * d2[i] + 2.0 * r[i] * d1[i]);
    return special::integrate_sampled(integrand, f.grid);
}

double weyl_cross_term(const SampledRadialFunction& f, double alpha) {
    require_normalized(f, "weyl_cross_term");
    require_uniform(f, "weyl_cross_term");
    const double mean = mean_r(f);
    const auto& r = f.grid.points;
    const auto d = derivative_uniform(f.values, f.grid.spacing);
    // r^2 (R' + R/r) = r (rR' + R), finite at r -> 0
    std::vector<double> integrand(f.values.size());
    for (std::size_t i = 0; i < integrand.size(); ++i)
        integrand[i] = (r[i] - mean) * f.values[i] * r[i] * (r[i] * d[i] + f.values[i]);
    return -2.0 * alpha * special::integrate_sampled(integrand, f.grid);
}

std::vector<double> default_alpha_scan(double variance_r, int count) {
    if (count < 3) throw std::invalid_argument("alpha scan: need at least 3 points");
    if (!(variance_r > 0.0)) throw std::invalid_argument("alpha scan: variance must be positive");
    const double alpha_star = -1.0 / (2.0 * variance_r);
    const double lo = 3.0 * alpha_star;
    const double hi = -alpha_star;
    std::vector<double> alphas(count);
    const double step = (hi - lo) / static_cast<double>(count - 1);
    for (int i = 0; i < count; ++i) alphas[i] = lo + step * i;
    return alphas;
}

WeylScanResult weyl_scan(const SampledRadialFunction& f, std::span<const double> alphas) {
    if (alphas.size() < 3)
        throw std::invalid_argument("weyl_scan: quadratic fit needs at least 3 alphas");
    require_normalized(f, "weyl_scan");
    require_uniform(f, "weyl_scan");

    const double mean = mean_r(f);
    const double var_r_value = variance_r(f);
    const double var_pr_value =
        0.5 * (variance_pr_gradient_form(f) + variance_pr_laplacian_form(f));

    const auto& r = f.grid.points;
    const auto d = derivative_uniform(f.values, f.grid.spacing);
    // a u dr - u' with u = rR: equals r (a R dr - R' - R/r), so the direct
    // integrand r^2 (a R dr - R' - R/r)^2 is (a u dr - u')^2
    std::vector<double> u(f.values.size());
    std::vector<double> up(f.values.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        u[i] = r[i] * f.values[i];
        up[i] = r[i] * d[i] + f.values[i];
    }

    WeylScanResult result;
    result.alphas.assign(alphas.begin(), alphas.end());
    result.direct.resize(alphas.size());
    result.quadratic.resize(alphas.size());
    result.alpha_star = -1.0 / (2.0 * var_r_value);

    std::vector<double> integrand(u.size());
    for (std::size_t k = 0; k < alphas.size(); ++k) {
        const double a = alphas[k];
        for (std::size_t i = 0; i < u.size(); ++i) {
            const double g = a * u[i] * (r[i] - mean) - up[i];
            integrand[i] = g * g;
        }
        result.direct[k] = special::integrate_sampled(integrand, f.grid);
        result.quadratic[k] = a * a * var_r_value + a + var_pr_value;
    }

    // least-squares parabola through the direct scan; fit in a centered,
    // scaled variable so the normal equations stay well conditioned even when
    // the alpha window is ~1/var_r narrow
    long double mean_a = 0.0L;
    for (double a : alphas) mean_a += a;
    mean_a /= static_cast<long double>(alphas.size());
    long double scale_a = 0.0L;
    for (double a : alphas) scale_a = std::max<long double>(scale_a, std::abs(a - mean_a));
    if (scale_a == 0.0L) throw std::invalid_argument("weyl_scan: degenerate alpha set");

    long double s0 = 0, s1 = 0, s2 = 0, s3 = 0, s4 = 0, t0 = 0, t1 = 0, t2 = 0;
    for (std::size_t k = 0; k < alphas.size(); ++k) {
        const long double b = (alphas[k] - mean_a) / scale_a;
        const long double y = result.direct[k];
        const long double b2 = b * b;
        s0 += 1;
        s1 += b;
        s2 += b2;
        s3 += b2 * b;
        s4 += b2 * b2;
        t0 += y;
        t1 += b * y;
        t2 += b2 * y;
    }
    const long double det = s0 * (s2 * s4 - s3 * s3) - s1 * (s1 * s4 - s2 * s3) +
                            s2 * (s1 * s3 - s2 * s2);
    if (det == 0.0L) throw std::invalid_argument("weyl_scan: degenerate alpha set");
    const long double a0 = (t0 * (s2 * s4 - s3 * s3) - s1 * (t1 * s4 - t2 * s3) +
                            s2 * (t1 * s3 - t2 * s2)) / det;
    const long double a1 = (s0 * (t1 * s4 - t2 * s3) - t0 * (s1 * s4 - s2 * s3) +
                            s2 * (s1 * t2 - s2 * t1)) / det;
    const long double a2 = (s0 * (s2 * t2 - s3 * t1) - s1 * (s1 * t2 - s2 * t1) +
                            t0 * (s1 * s3 - s2 * s2)) / det;
    // map y = a0 + a1 b + a2 b^2 back to the alpha variable
    result.quadratic_coeff = static_cast<double>(a2 / (scale_a * scale_a));
    result.linear_coeff = static_cast<double>(a1 / scale_a - 2.0L * a2 * mean_a / (scale_a * scale_a));
    result.constant_coeff = static_cast<double>(a0 - a1 * mean_a / scale_a +
                                                a2 * mean_a * mean_a / (scale_a * scale_a));
    return result;
}

UncertaintyReport uncertainty_report(const SampledRadialFunction& f, std::string label,
                                     double bound_tolerance) {
    UncertaintyReport report;
    report.label = std::move(label);
    report.norm_defect = f.norm_defect;
    report.mean_r = mean_r(f);
    report.var_r = variance_r(f);
    report.mean_pr = mean_pr(f);
    report.var_pr_gradient = variance_pr_gradient_form(f);
    report.var_pr_laplacian = variance_pr_laplacian_form(f);
    report.var_pr = 0.5 * (report.var_pr_gradient + report.var_pr_laplacian);
    report.pr_form_gap = std::abs(report.var_pr_gradient - report.var_pr_laplacian);
    report.product = report.var_r * report.var_pr;
    report.bound_satisfied = report.product >= 0.25 - bound_tolerance;
    return report;
}

}  // namespace radial::numerics
