#pragma once

#include <span>
#include <string>
#include <vector>

#include "radial/grid.hpp"
#include "radial/hydrogen.hpp"

namespace radial::numerics {

inline constexpr double kNormDefectLimit = 1e-8;
inline constexpr double kBoundTolerance = 1e-9;

/// Auto-sized uniform grid for a hydrogen state: r_max past the classical
/// turning point plus a 12-sigma tail, spacing n/256.
RadialGrid hydrogen_grid(hydrogen::QuantumNumbers q);

/// Tabulates R_nl on the auto-sized grid (or a caller-supplied uniform hint)
/// and renormalizes by quadrature to norm_defect <= 1e-10. Throws
/// resolution_error if the grid cannot hold the state's tail.
SampledRadialFunction sample_hydrogen(hydrogen::QuantumNumbers q,
                                      const RadialGrid* grid_hint = nullptr);

/// Renormalizes values so int r^2 R^2 dr = 1 on the grid; sets norm_defect.
void normalize(SampledRadialFunction& f);

/// <r> = int r^3 R^2 dr.
double mean_r(const SampledRadialFunction& f);

/// <dr^2> = int r^2 R^2 (r - <r>)^2 dr.
double variance_r(const SampledRadialFunction& f);

/// i<p_r> = int r^2 R (R' + R/r) dr, evaluated as int rR (rR' + R) dr.
/// Vanishes identically for admissible states; the returned number is the
/// numerical defect of that identity.
double mean_pr(const SampledRadialFunction& f);

/// <dp_r^2> as int r^2 (R' + R/r)^2 dr = int (rR' + R)^2 dr.
double variance_pr_gradient_form(const SampledRadialFunction& f);

/// <dp_r^2> as -int r^2 R (R'' + 2R'/r) dr = -int R (r^2 R'' + 2 r R') dr.
/// Equals the gradient form up to an integration-by-parts boundary term.
double variance_pr_laplacian_form(const SampledRadialFunction& f);

/// Direct quadrature of the cross term -2a int r^2 R (r - <r>) (R' + R/r) dr.
/// Returns ~ a for any normalized state (int r^3 R R' dr = -3/2).
double weyl_cross_term(const SampledRadialFunction& f, double alpha);

/// Scan of the nonnegative auxiliary integral
///   I(a) = int r^2 | a R (r - <r>) - R' - R/r |^2 dr
/// against its closed quadratic form a^2 <dr^2> + a + <dp_r^2>.
/// quadratic_coeff/linear_coeff/constant_coeff are a least-squares parabola
/// fitted to the direct scan; the linear coefficient recovers 1 and the
/// fitted vertex recovers alpha_star = -1/(2 <dr^2>).
struct WeylScanResult {
    std::vector<double> alphas;
    std::vector<double> direct;     // quadrature of the defining integral
    std::vector<double> quadratic;  // a^2 var_r + a + var_pr
    double alpha_star = 0.0;        // analytic minimizer
    double quadratic_coeff = 0.0;
    double linear_coeff = 0.0;
    double constant_coeff = 0.0;

    double fitted_vertex() const { return -linear_coeff / (2.0 * quadratic_coeff); }
};

WeylScanResult weyl_scan(const SampledRadialFunction& f, std::span<const double> alphas);

/// 41-point default scan bracketing the vertex: [3 a*, -a*], a* = -1/(2 var_r).
std::vector<double> default_alpha_scan(double variance_r, int count = 41);

/// Mean/variance summary of one state with the bound verdict.
/// var_pr is the mean of the two operator forms; pr_form_gap stores their
/// disagreement as a discretization diagnostic.
struct UncertaintyReport {
    std::string label;
    double mean_r = 0.0;
    double var_r = 0.0;
    double mean_pr = 0.0;
    double var_pr = 0.0;
    double var_pr_gradient = 0.0;
    double var_pr_laplacian = 0.0;
    double pr_form_gap = 0.0;
    double product = 0.0;
    bool bound_satisfied = false;
    double norm_defect = 0.0;
};

UncertaintyReport uncertainty_report(const SampledRadialFunction& f, std::string label,
                                     double bound_tolerance = kBoundTolerance);

}  // namespace radial::numerics
