#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "radial/grid.hpp"
#include "radial/radial_numerics.hpp"

namespace radial::solver {

struct CoulombPotential {
    double charge = 1.0;  // U(r) = -Z/r
};

struct HarmonicPotential {
    double omega = 1.0;  // U(r) = omega^2 r^2 / 2
};

/// Potential given as (r, U) samples, strictly increasing r. Evaluation uses
/// monotone cubic (Fritsch-Carlson) interpolation so no spurious oscillations
/// create fake turning points.
struct TabulatedPotential {
    std::vector<double> r;
    std::vector<double> u;
    std::vector<double> slopes;  // monotone cubic tangents, filled on load

    double operator()(double x) const;  // throws std::domain_error outside [r.front(), r.back()]
};

TabulatedPotential make_tabulated(std::vector<double> r, std::vector<double> u);

/// Two-column text format: "r U" per line, '#' starts a comment. Parse errors
/// carry 1-based line numbers.
TabulatedPotential load_potential_file(const std::filesystem::path& path);
TabulatedPotential parse_potential_stream(std::istream& in, const std::string& name);

/// Central potential plus the angular momentum channel it is solved in.
struct PotentialSpec {
    std::variant<CoulombPotential, HarmonicPotential, TabulatedPotential> potential;
    int l = 0;
    std::string description;
};

/// U_eff(r) = U(r) + l(l+1)/(2 r^2).
double effective_potential(const PotentialSpec& spec, double r);

struct SolverConvergence {
    int iterations = 0;
    double bracket_width = 0.0;
};

struct BoundStateSolution {
    double energy = 0.0;
    int nodes = 0;
    SampledRadialFunction wavefunction;  // normalized R = u/r
    SolverConvergence convergence;
};

/// Numerov integration of u'' = 2 [U_eff - E] u from both ends in u = rR form,
/// matched at the outermost classical turning point; bisection on the
/// derivative-mismatch sign until the bracket is narrower than 1e-11.
/// The bracket must contain exactly one eigenvalue with the requested node
/// count (use scan_spectrum to find brackets).
BoundStateSolution solve_bound_state(const PotentialSpec& spec, int radial_nodes,
                                     std::pair<double, double> energy_bracket);

struct EnergyBracket {
    double lo = 0.0;
    double hi = 0.0;
    int nodes = 0;  // radial node count of the eigenstate inside
};

/// Samples the shooting mismatch over the energy range and returns every
/// sign-change bracket, annotated with the node count at its lower edge.
std::vector<EnergyBracket> scan_spectrum(const PotentialSpec& spec,
                                         std::pair<double, double> energy_range,
                                         int samples);

struct AuditResult {
    numerics::UncertaintyReport report;
    double pr_variance_energy_route = 0.0;  // 2 [E - <U_eff>]
    double cross_check_gap = 0.0;           // |var_pr - energy route|
};

/// Runs the uncertainty pipeline on a solved state and cross-checks
/// <p_r^2> against 2 [E - <U_eff>].
AuditResult audit_uncertainty(const PotentialSpec& spec, const BoundStateSolution& solution);

}  // namespace radial::solver
