#include "radial/central_solver.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>

#include "radial/errors.hpp"
#include "radial/finite_difference.hpp"
#include "radial/special_math.hpp"

namespace radial::solver {

namespace {

constexpr double kBracketTolerance = 1e-11;
constexpr double kTailAction = 13.0;        // integrated decay exponent past the turning point
constexpr std::size_t kMinPoints = 64'000;  // keeps l=0 Coulomb eigenvalues inside 1e-8
constexpr std::size_t kMaxPoints = 2'500'000;
constexpr double kRescaleLimit = 1e250;

double eval_bare(const PotentialSpec& spec, double r, bool clamp_to_table) {
    return std::visit(
        [&](const auto& pot) -> double {
            using T = std::decay_t<decltype(pot)>;
            if constexpr (std::is_same_v<T, CoulombPotential>) {
                return -pot.charge / r;
            } else if constexpr (std::is_same_v<T, HarmonicPotential>) {
                return 0.5 * pot.omega * pot.omega * r * r;
            } else {
                if (clamp_to_table) {
                    const double x = std::clamp(r, pot.r.front(), pot.r.back());
                    return pot(x);
                }
                return pot(r);
            }
        },
        spec.potential);
}

double coulomb_charge(const PotentialSpec& spec) {
    if (const auto* c = std::get_if<CoulombPotential>(&spec.potential)) return c->charge;
    return 0.0;
}

double u_eff(const PotentialSpec& spec, double r, bool clamp_to_table) {
    double value = eval_bare(spec, r, clamp_to_table);
    if (spec.l > 0) value += spec.l * (spec.l + 1) / (2.0 * r * r);
    return value;
}

struct ShootingWorkspace {
    RadialGrid grid;
    std::vector<double> ueff;  // ueff[0] unused (grid starts at r = 0)
    int l = 0;
    // u ~ r^(l+1) (1 + a r + b r^2) near the origin with
    // a = -Z/(l+1) and b = (Z^2/(l+1) + U(0) - E)/(2l+3)
    double series_slope = 0.0;
    double series_b_const = 0.0;  // Z^2/(l+1) + U(0), energy enters per shot
};

ShootingWorkspace build_workspace(const PotentialSpec& spec, double energy_hi) {
    if (spec.l < 0) throw std::invalid_argument("solver: l must be >= 0");

    // outermost classical turning point at the top of the bracket
    double r_tp = -1.0;
    double r_probe_prev = 0.0;
    const int probes = 4000;
    for (int k = probes; k >= 0; --k) {
        const double r = 1e-4 * std::pow(1e10, k / static_cast<double>(probes));
        if (u_eff(spec, r, true) <= energy_hi) {
            r_tp = r;
            break;
        }
        r_probe_prev = r;
    }
    if (r_tp < 0.0)
        throw no_eigenvalue_error("solver: no classically allowed region below E = " +
                                  std::to_string(energy_hi));
    if (r_probe_prev > r_tp) {
        // refine between the last allowed and first forbidden probe
        double lo = r_tp, hi = r_probe_prev;
        for (int it = 0; it < 80; ++it) {
            const double mid = 0.5 * (lo + hi);
            (u_eff(spec, mid, true) <= energy_hi ? lo : hi) = mid;
        }
        r_tp = lo;
    }

    // extend past the turning point until the WKB decay exponent reaches ~13
    double r_max = r_tp;
    double action = 0.0;
    const double dr = std::max(r_tp, 1.0) / 512.0;
    while (action < kTailAction && r_max < 1e7) {
        r_max += dr;
        const double gap = u_eff(spec, r_max, true) - energy_hi;
        action += std::sqrt(std::max(2.0 * gap, 0.0)) * dr;
    }
    r_max *= 1.05;

    // spacing: >= 80 points per shortest local de Broglie wavelength, floor on
    // the total point count
    double u_min = u_eff(spec, r_max, true);
    const double r_floor = std::max(1e-3 * r_tp, 1e-3);
    for (int k = 0; k <= 400; ++k) {
        const double r = r_floor * std::pow(r_max / r_floor, k / 400.0);
        u_min = std::min(u_min, u_eff(spec, r, true));
    }
    const double k_max = std::sqrt(std::max(2.0 * (energy_hi - u_min), 1e-12));
    const double h_wave = 2.0 * std::acos(-1.0) / (80.0 * k_max);
    const double h = std::min(h_wave, r_max / static_cast<double>(kMinPoints));
    if (r_max / h > static_cast<double>(kMaxPoints))
        throw resolution_error("solver: grid would exceed the point budget");

    ShootingWorkspace ws;
    ws.grid = make_uniform_grid(0.0, r_max, h);
    ws.l = spec.l;
    const double charge = coulomb_charge(spec);
    ws.series_slope = -charge / (spec.l + 1.0);
    const double u_origin = charge > 0.0 ? 0.0 : eval_bare(spec, 1e-12, true);
    ws.series_b_const = charge * charge / (spec.l + 1.0) + u_origin;
    ws.ueff.resize(ws.grid.size());
    ws.ueff[0] = 0.0;
    for (std::size_t i = 1; i < ws.grid.size(); ++i)
        ws.ueff[i] = u_eff(spec, ws.grid.points[i], true);
    return ws;
}

struct Mismatch {
    double value = std::numeric_limits<double>::quiet_NaN();
    int nodes_to_match = 0;
    bool valid = false;
};

// Numerov sweep from both ends, matched at the outermost turning point.
// If `full_u` is given, the stitched normalized-shape u is written there.
Mismatch shoot(const ShootingWorkspace& ws, double energy, std::vector<double>* full_u = nullptr) {
    const std::size_t n = ws.grid.size();
    const double h = ws.grid.spacing;
    const double h2_12 = h * h / 12.0;
    const auto& r = ws.grid.points;

    std::vector<double> c(n);
    c[0] = 1.0;
    std::size_t match = 0;
    for (std::size_t i = 1; i < n; ++i) {
        const double f = 2.0 * (ws.ueff[i] - energy);
        c[i] = 1.0 - h2_12 * f;
        if (ws.ueff[i] <= energy) match = i;
    }
    Mismatch result;
    if (match == 0) return result;  // no classically allowed region at this energy
    match = std::clamp<std::size_t>(match, 4, n - 5);

    // outward: series start u ~ r^(l+1) (1 + a r + b r^2)
    const double series_b = (ws.series_b_const - energy) / (2.0 * ws.l + 3.0);
    std::vector<double> ul(match + 3, 0.0);
    ul[1] = std::pow(r[1], ws.l + 1) *
            (1.0 + (ws.series_slope + series_b * r[1]) * r[1]);
    ul[2] = std::pow(r[2], ws.l + 1) *
            (1.0 + (ws.series_slope + series_b * r[2]) * r[2]);
    for (std::size_t i = 2; i + 1 <= match + 2; ++i) {
        ul[i + 1] = ((12.0 - 10.0 * c[i]) * ul[i] - c[i - 1] * ul[i - 1]) / c[i + 1];
        if (std::abs(ul[i + 1]) > kRescaleLimit)
            for (std::size_t j = 0; j <= i + 1; ++j) ul[j] *= 1e-250;
    }
    int nodes = 0;
    for (std::size_t i = 1; i < match; ++i)
        if (ul[i] != 0.0 && ul[i + 1] != 0.0 && (ul[i] > 0.0) != (ul[i + 1] > 0.0)) ++nodes;

    // inward: exponential decay seed at r_max
    std::vector<double> ur(n, 0.0);
    const double kappa = std::sqrt(std::max(2.0 * (ws.ueff[n - 1] - energy), 1e-12));
    ur[n - 1] = 1e-250;
    ur[n - 2] = ur[n - 1] * std::exp(kappa * h);
    for (std::size_t i = n - 2; i >= match - 1; --i) {
        ur[i - 1] = ((12.0 - 10.0 * c[i]) * ur[i] - c[i + 1] * ur[i + 1]) / c[i - 1];
        if (std::abs(ur[i - 1]) > kRescaleLimit)
            for (std::size_t j = i - 1; j < n; ++j) ur[j] *= 1e-250;
    }

    const double inv12h = 1.0 / (12.0 * h);
    const double dl =
        (ul[match - 2] - 8.0 * ul[match - 1] + 8.0 * ul[match + 1] - ul[match + 2]) * inv12h;
    const double dr_ =
        (ur[match - 2] - 8.0 * ur[match - 1] + 8.0 * ur[match + 1] - ur[match + 2]) * inv12h;
    double sl = 0.0, sr = 0.0;
    for (std::size_t i = match - 2; i <= match + 2; ++i) {
        sl = std::max(sl, std::abs(ul[i]));
        sr = std::max(sr, std::abs(ur[i]));
    }
    if (sl == 0.0 || sr == 0.0) return result;

    result.value = (dl * ur[match] - dr_ * ul[match]) / (sl * sr);
    result.nodes_to_match = nodes;
    result.valid = true;

    if (full_u) {
        full_u->assign(n, 0.0);
        // stitch the two branches where both have healthy amplitude
        std::size_t join = match;
        for (std::size_t cand = match - 2; cand <= match + 2; ++cand)
            if (std::abs(ul[cand] * ur[cand]) > std::abs(ul[join] * ur[join])) join = cand;
        if (ur[join] == 0.0 || ul[join] == 0.0)
            throw no_eigenvalue_error("solver: node at the matching point, shift the bracket");
        const double scale = ul[join] / ur[join];
        for (std::size_t i = 0; i <= join; ++i) (*full_u)[i] = ul[i];
        for (std::size_t i = join + 1; i < n; ++i) (*full_u)[i] = ur[i] * scale;
    }
    return result;
}

int count_interior_nodes(const std::vector<double>& u) {
    int nodes = 0;
    for (std::size_t i = 1; i + 2 < u.size(); ++i)
        if (u[i] != 0.0 && u[i + 1] != 0.0 && (u[i] > 0.0) != (u[i + 1] > 0.0)) ++nodes;
    return nodes;
}

}  // namespace

double TabulatedPotential::operator()(double x) const {
    if (x < r.front() || x > r.back())
        throw std::domain_error("tabulated potential: r = " + std::to_string(x) +
                                " outside table range [" + std::to_string(r.front()) + ", " +
                                std::to_string(r.back()) + "]");
    const auto it = std::upper_bound(r.begin(), r.end(), x);
    const std::size_t i = (it == r.begin()) ? 0 : static_cast<std::size_t>(it - r.begin()) - 1;
    const std::size_t j = std::min(i, r.size() - 2);
    const double hseg = r[j + 1] - r[j];
    const double t = (x - r[j]) / hseg;
    const double t2 = t * t;
    const double t3 = t2 * t;
    return (2.0 * t3 - 3.0 * t2 + 1.0) * u[j] + (t3 - 2.0 * t2 + t) * hseg * slopes[j] +
           (-2.0 * t3 + 3.0 * t2) * u[j + 1] + (t3 - t2) * hseg * slopes[j + 1];
}

TabulatedPotential make_tabulated(std::vector<double> r, std::vector<double> u) {
    if (r.size() != u.size())
        throw std::invalid_argument("tabulated potential: r/U size mismatch");
    if (r.size() < 4)
        throw std::invalid_argument("tabulated potential: need at least 4 samples");
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (!std::isfinite(r[i]) || !std::isfinite(u[i]))
            throw std::invalid_argument("tabulated potential: non-finite entry");
        if (i > 0 && !(r[i] > r[i - 1]))
            throw std::invalid_argument("tabulated potential: r not strictly increasing");
    }
    if (!(r.front() > 0.0))
        throw std::invalid_argument("tabulated potential: r must be positive");

    TabulatedPotential pot;
    pot.r = std::move(r);
    pot.u = std::move(u);

    // Fritsch-Carlson monotone tangents
    const std::size_t n = pot.r.size();
    std::vector<double> hseg(n - 1), secant(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        hseg[i] = pot.r[i + 1] - pot.r[i];
        secant[i] = (pot.u[i + 1] - pot.u[i]) / hseg[i];
    }
    pot.slopes.assign(n, 0.0);
    pot.slopes[0] = secant[0];
    pot.slopes[n - 1] = secant[n - 2];
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (secant[i - 1] * secant[i] <= 0.0) {
            pot.slopes[i] = 0.0;
        } else {
            const double w1 = 2.0 * hseg[i] + hseg[i - 1];
            const double w2 = hseg[i] + 2.0 * hseg[i - 1];
            pot.slopes[i] = (w1 + w2) / (w1 / secant[i - 1] + w2 / secant[i]);
        }
    }
    return pot;
}

TabulatedPotential parse_potential_stream(std::istream& in, const std::string& name) {
    std::vector<double> r, u;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
        std::istringstream fields(line);
        double rv = 0.0, uv = 0.0;
        if (!(fields >> rv >> uv))
            throw std::invalid_argument(name + ":" + std::to_string(line_no) +
                                        ": expected two columns 'r U'");
        std::string extra;
        if (fields >> extra)
            throw std::invalid_argument(name + ":" + std::to_string(line_no) +
                                        ": unexpected trailing field '" + extra + "'");
        if (!r.empty() && !(rv > r.back()))
            throw std::invalid_argument(name + ":" + std::to_string(line_no) +
                                        ": r values must be strictly increasing");
        r.push_back(rv);
        u.push_back(uv);
    }
    if (r.size() < 4)
        throw std::invalid_argument(name + ": need at least 4 data lines, got " +
                                    std::to_string(r.size()));
    return make_tabulated(std::move(r), std::move(u));
}

TabulatedPotential load_potential_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open potential file " + path.string());
    return parse_potential_stream(in, path.filename().string());
}

double effective_potential(const PotentialSpec& spec, double r) {
    if (!(r > 0.0)) throw std::domain_error("effective_potential: r must be positive");
    if (spec.l < 0) throw std::invalid_argument("effective_potential: l must be >= 0");
    return u_eff(spec, r, /*clamp_to_table=*/false);
}

BoundStateSolution solve_bound_state(const PotentialSpec& spec, int radial_nodes,
                                     std::pair<double, double> energy_bracket) {
    if (radial_nodes < 0) throw std::invalid_argument("solver: node count must be >= 0");
    auto [lo, hi] = energy_bracket;
    if (!(lo < hi)) throw std::invalid_argument("solver: bracket must satisfy lo < hi");

    const ShootingWorkspace ws = build_workspace(spec, hi);
    Mismatch mlo = shoot(ws, lo);
    Mismatch mhi = shoot(ws, hi);
    if (!mlo.valid || !mhi.valid)
        throw no_eigenvalue_error("solver: no classically allowed region inside the bracket");
    if ((mlo.value > 0.0) == (mhi.value > 0.0))
        throw no_eigenvalue_error("solver: mismatch does not change sign over [" +
                                  std::to_string(lo) + ", " + std::to_string(hi) + "]");

    int iterations = 0;
    while (hi - lo > kBracketTolerance && iterations < 200) {
        const double mid = 0.5 * (lo + hi);
        const Mismatch mm = shoot(ws, mid);
        if (!mm.valid)
            throw no_eigenvalue_error("solver: lost the allowed region during bisection");
        if ((mm.value > 0.0) == (mlo.value > 0.0)) {
            lo = mid;
            mlo = mm;
        } else {
            hi = mid;
        }
        ++iterations;
    }

    BoundStateSolution solution;
    solution.energy = 0.5 * (lo + hi);
    solution.convergence = {iterations, hi - lo};

    std::vector<double> u;
    shoot(ws, solution.energy, &u);
    solution.nodes = count_interior_nodes(u);
    if (solution.nodes != radial_nodes)
        throw bracket_error("solver: converged state has " + std::to_string(solution.nodes) +
                            " nodes, requested " + std::to_string(radial_nodes));

    solution.wavefunction.grid = ws.grid;
    auto& values = solution.wavefunction.values;
    values.resize(u.size());
    const auto& r = ws.grid.points;
    for (std::size_t i = 1; i < u.size(); ++i) values[i] = u[i] / r[i];
    // R(0) = u'(0) by l'Hopital; one-sided 4th-order stencil with u(0) = 0
    values[0] =
        (48.0 * u[1] - 36.0 * u[2] + 16.0 * u[3] - 3.0 * u[4]) / (12.0 * ws.grid.spacing);
    numerics::normalize(solution.wavefunction);
    return solution;
}

std::vector<EnergyBracket> scan_spectrum(const PotentialSpec& spec,
                                         std::pair<double, double> energy_range, int samples) {
    if (samples < 2) throw std::invalid_argument("scan_spectrum: need at least 2 samples");
    const auto [e_lo, e_hi] = energy_range;
    if (!(e_lo < e_hi)) throw std::invalid_argument("scan_spectrum: range must satisfy lo < hi");

    ShootingWorkspace ws;
    try {
        ws = build_workspace(spec, e_hi);
    } catch (const no_eigenvalue_error&) {
        return {};  // nothing classically allowed anywhere in the range
    }

    std::vector<EnergyBracket> brackets;
    const double step = (e_hi - e_lo) / static_cast<double>(samples - 1);
    Mismatch prev = shoot(ws, e_lo);
    double prev_e = e_lo;
    for (int k = 1; k < samples; ++k) {
        const double e = (k == samples - 1) ? e_hi : e_lo + step * k;
        const Mismatch curr = shoot(ws, e);
        if (prev.valid && curr.valid && (prev.value > 0.0) != (curr.value > 0.0))
            brackets.push_back({prev_e, e, prev.nodes_to_match});
        prev = curr;
        prev_e = e;
    }
    return brackets;
}

AuditResult audit_uncertainty(const PotentialSpec& spec, const BoundStateSolution& solution) {
    const auto& f = solution.wavefunction;
    AuditResult audit;
    audit.report = numerics::uncertainty_report(
        f, spec.description.empty() ? "solved state" : spec.description);

    // <U_eff> with the u^2 U_eff form; the integrand vanishes at r = 0 for
    // every admissible channel (u ~ r^(l+1))
    const auto& r = f.grid.points;
    std::vector<double> integrand(f.values.size(), 0.0);
    for (std::size_t i = 1; i < integrand.size(); ++i) {
        const double u = r[i] * f.values[i];
        integrand[i] = u * u * u_eff(spec, r[i], true);
    }
    const double mean_ueff = special::integrate_sampled(integrand, f.grid);
    audit.pr_variance_energy_route = 2.0 * (solution.energy - mean_ueff);
    audit.cross_check_gap = std::abs(audit.report.var_pr - audit.pr_variance_energy_route);
    return audit;
}

}  // namespace radial::solver
