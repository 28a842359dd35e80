#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "radial/output.hpp"

namespace radial::cli {

/// Check thresholds the CLI applies, overridable with --tol name=value.
/// Unknown names are rejected when the command line is parsed.
struct Tolerances {
    std::map<std::string, double> values{
        {"bound", 1e-9},        // uncertainty bound verdict
        {"exact-vs-grid", 1e-6},  // closed form vs quadrature deltas
        {"mean-pr", 1e-8},      // |<p_r>| hermiticity proxy
        {"pr-forms", 1e-5},     // gradient vs laplacian momentum variance
        {"energy-cross", 1e-5},  // <p_r^2> vs 2[E - <U_eff>]
        {"residual", 1e-6},     // minimum-state defining-equation residual
    };

    double at(const std::string& name) const { return values.at(name); }
    bool known(const std::string& name) const { return values.count(name) != 0; }
};

struct RunConfig {
    std::string command;
    OutputFormat format = OutputFormat::text;
    std::string out_path;  // empty -> stdout
    unsigned workers = 1;
    Tolerances tolerances;

    int n_max = 10;                       // table
    int n = 1, l = 0;                     // verify/weyl
    int alpha_count = 41;                 // weyl
    std::vector<double> ratios;           // minstate
    std::string potential;               // solve: coulomb | harmonic | file path
    double charge = 1.0, omega = 1.0;     // solve builtins
    int nodes = 0;                        // solve
    std::vector<double> bracket;          // solve: LO,HI
};

OutputDoc make_table_doc(const RunConfig& cfg);
OutputDoc make_verify_doc(const RunConfig& cfg);
OutputDoc make_weyl_doc(const RunConfig& cfg);
OutputDoc make_minstate_doc(const RunConfig& cfg);
OutputDoc make_solve_doc(const RunConfig& cfg);

/// Renders the command's document to --out or stdout. Exit code 0 only when
/// every embedded check passes; library/parse failures report on stderr and
/// exit nonzero.
int run_config(const RunConfig& cfg);

/// Full command-line entry point.
int run_cli(int argc, const char* const* argv);

}  // namespace radial::cli
