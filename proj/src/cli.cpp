#include "radial/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <stdexcept>

#include "CLI11.hpp"

#include "radial/central_solver.hpp"
#include "radial/hydrogen.hpp"
#include "radial/min_state.hpp"
#include "radial/parallel.hpp"
#include "radial/radial_numerics.hpp"
#include "radial/rational.hpp"

namespace radial::cli {

namespace {

Json rational_cell(const Rational& value) { return fraction_string(value); }

struct TableRow {
    int n, l;
    Rational var_r, var_pr, product;
    bool is_min;
};

}  // namespace

OutputDoc make_table_doc(const RunConfig& cfg) {
    OutputDoc doc;
    doc.command = "table";
    doc.parameters = {{"n_max", cfg.n_max}, {"workers", cfg.workers}};
    doc.columns = {"n", "l", "var_r", "var_pr", "product", "product_decimal", "min_product"};

    std::vector<std::pair<int, int>> states;
    for (int n = 1; n <= cfg.n_max; ++n)
        for (int l = 0; l < n; ++l) states.emplace_back(n, l);

    std::vector<int> argmin(cfg.n_max + 1, 0);
    for (int n = 1; n <= cfg.n_max; ++n) argmin[n] = hydrogen::min_product_over_l(n).l_star;

    std::vector<TableRow> rows(states.size());
    parallel_for(states.size(), cfg.workers, [&](std::size_t i) {
        const auto [n, l] = states[i];
        const hydrogen::QuantumNumbers q(n, l);
        rows[i] = TableRow{n,
                           l,
                           hydrogen::coordinate_variance(q),
                           hydrogen::radial_momentum_variance(q),
                           hydrogen::uncertainty_product(q),
                           l == argmin[n]};
    });

    bool argmin_at_top = true;
    bool bound_exceeded = true;
    const Rational quarter(1, 4);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& row = rows[i];
        doc.rows.push_back(Json{{"n", row.n},
                                {"l", row.l},
                                {"var_r", rational_cell(row.var_r)},
                                {"var_pr", rational_cell(row.var_pr)},
                                {"product", rational_cell(row.product)},
                                {"product_decimal", to_double(row.product)},
                                {"min_product", row.is_min}});
        if (!(row.product > quarter)) bound_exceeded = false;
    }
    for (int n = 1; n <= cfg.n_max; ++n)
        if (argmin[n] != n - 1) argmin_at_top = false;

    doc.checks.push_back({"argmin_at_l_max", argmin_at_top,
                          "product minimized at l = n-1 for every n"});
    doc.checks.push_back({"bound_exceeded", bound_exceeded,
                          "every exact product exceeds 1/4"});
    return doc;
}

OutputDoc make_verify_doc(const RunConfig& cfg) {
    const hydrogen::QuantumNumbers q(cfg.n, cfg.l);
    const auto f = numerics::sample_hydrogen(q);
    const auto report = numerics::uncertainty_report(
        f, "hydrogen", cfg.tolerances.at("bound"));

    OutputDoc doc;
    doc.command = "verify";
    doc.parameters = {{"n", cfg.n}, {"l", cfg.l}, {"grid_points", f.grid.size()},
                      {"r_max", f.grid.r_max()}};
    doc.columns = {"quantity", "exact", "exact_decimal", "grid", "delta", "tolerance", "pass"};

    const double tol_grid = cfg.tolerances.at("exact-vs-grid");
    const auto add_row = [&](const std::string& name, const Rational& exact, double grid,
                             double tol) {
        const double exact_d = to_double(exact);
        const double delta = std::abs(grid - exact_d);
        doc.rows.push_back(Json{{"quantity", name},
                                {"exact", rational_cell(exact)},
                                {"exact_decimal", exact_d},
                                {"grid", grid},
                                {"delta", delta},
                                {"tolerance", tol},
                                {"pass", delta <= tol}});
        doc.checks.push_back({name + "_delta", delta <= tol,
                              "delta " + format_double(delta) + " vs " + format_double(tol)});
    };

    add_row("mean_r", hydrogen::mean_radius(q), report.mean_r, tol_grid);
    add_row("var_r", hydrogen::coordinate_variance(q), report.var_r, tol_grid);
    add_row("var_pr", hydrogen::radial_momentum_variance(q), report.var_pr, tol_grid);
    add_row("product", hydrogen::uncertainty_product(q), report.product, tol_grid);
    add_row("mean_pr", Rational(0), report.mean_pr, cfg.tolerances.at("mean-pr"));
    add_row("pr_form_gap", Rational(0), report.pr_form_gap, cfg.tolerances.at("pr-forms"));
    add_row("norm_defect", Rational(0), report.norm_defect, numerics::kNormDefectLimit);

    doc.checks.push_back({"bound_satisfied", report.bound_satisfied,
                          "product " + format_double(report.product) + " >= 1/4 - " +
                              format_double(cfg.tolerances.at("bound"))});
    return doc;
}

OutputDoc make_weyl_doc(const RunConfig& cfg) {
    const hydrogen::QuantumNumbers q(cfg.n, cfg.l);
    const auto f = numerics::sample_hydrogen(q);
    const double var_r = numerics::variance_r(f);
    const auto alphas = numerics::default_alpha_scan(var_r, cfg.alpha_count);
    const auto scan = numerics::weyl_scan(f, alphas);

    OutputDoc doc;
    doc.command = "weyl";
    doc.parameters = {{"n", cfg.n},
                      {"l", cfg.l},
                      {"alpha_count", cfg.alpha_count},
                      {"alpha_star", scan.alpha_star},
                      {"fitted_vertex", scan.fitted_vertex()},
                      {"quadratic_coeff", scan.quadratic_coeff},
                      {"linear_coeff", scan.linear_coeff},
                      {"constant_coeff", scan.constant_coeff}};
    doc.columns = {"alpha", "direct", "quadratic", "gap"};

    double min_direct = scan.direct.front();
    double max_gap = 0.0;
    for (std::size_t i = 0; i < scan.alphas.size(); ++i) {
        const double gap = std::abs(scan.direct[i] - scan.quadratic[i]);
        min_direct = std::min(min_direct, scan.direct[i]);
        max_gap = std::max(max_gap, gap);
        doc.rows.push_back(Json{{"alpha", scan.alphas[i]},
                                {"direct", scan.direct[i]},
                                {"quadratic", scan.quadratic[i]},
                                {"gap", gap}});
    }

    const double vertex_rel =
        std::abs(scan.fitted_vertex() - scan.alpha_star) / std::abs(scan.alpha_star);
    doc.checks.push_back({"nonnegative_scan", min_direct >= -1e-10,
                          "min direct integral " + format_double(min_direct)});
    doc.checks.push_back({"direct_matches_quadratic", max_gap <= 1e-5,
                          "max gap " + format_double(max_gap)});
    doc.checks.push_back({"linear_coeff_is_one", std::abs(scan.linear_coeff - 1.0) <= 1e-5,
                          "fitted linear coefficient " + format_double(scan.linear_coeff)});
    doc.checks.push_back({"vertex_matches_variance", vertex_rel <= 1e-4,
                          "relative vertex error " + format_double(vertex_rel)});
    return doc;
}

OutputDoc make_minstate_doc(const RunConfig& cfg) {
    const auto entries = minstate::product_vs_ratio(cfg.ratios);

    OutputDoc doc;
    doc.command = "minstate";
    doc.parameters = {{"ratios", cfg.ratios}, {"sigma", 1.0}};
    doc.columns = {"ratio", "status", "mean", "variance", "product",
                   "residual", "bound_satisfied", "error"};

    bool any_ok = false;
    bool residual_ok = true;
    const double tol_residual = cfg.tolerances.at("residual");
    for (const auto& entry : entries) {
        if (entry.ok) {
            any_ok = true;
            if (entry.residual > tol_residual) residual_ok = false;
            doc.rows.push_back(Json{{"ratio", entry.ratio},
                                    {"status", "ok"},
                                    {"mean", entry.mean_achieved},
                                    {"variance", entry.variance_achieved},
                                    {"product", entry.product},
                                    {"residual", entry.residual},
                                    {"bound_satisfied", entry.bound_satisfied},
                                    {"error", ""}});
        } else {
            doc.rows.push_back(Json{{"ratio", entry.ratio},
                                    {"status", "rejected"},
                                    {"mean", nullptr},
                                    {"variance", nullptr},
                                    {"product", nullptr},
                                    {"residual", nullptr},
                                    {"bound_satisfied", nullptr},
                                    {"error", entry.error}});
        }
    }
    doc.checks.push_back({"any_ratio_accepted", any_ok, "at least one ratio passed the gate"});
    doc.checks.push_back({"residual_within_contract", residual_ok,
                          "defining-equation residual <= " + format_double(tol_residual) +
                              " on accepted rows"});
    return doc;
}

OutputDoc make_solve_doc(const RunConfig& cfg) {
    solver::PotentialSpec spec;
    spec.l = cfg.l;
    if (cfg.potential == "coulomb") {
        spec.potential = solver::CoulombPotential{cfg.charge};
        spec.description = "coulomb Z=" + format_double(cfg.charge);
    } else if (cfg.potential == "harmonic") {
        spec.potential = solver::HarmonicPotential{cfg.omega};
        spec.description = "harmonic omega=" + format_double(cfg.omega);
    } else {
        spec.potential = solver::load_potential_file(cfg.potential);
        spec.description = "tabulated " + cfg.potential;
    }

    const auto solution =
        solver::solve_bound_state(spec, cfg.nodes, {cfg.bracket[0], cfg.bracket[1]});
    const auto audit = solver::audit_uncertainty(spec, solution);
    const auto& report = audit.report;

    OutputDoc doc;
    doc.command = "solve";
    doc.parameters = {{"potential", spec.description},
                      {"l", cfg.l},
                      {"nodes_requested", cfg.nodes},
                      {"bracket_lo", cfg.bracket[0]},
                      {"bracket_hi", cfg.bracket[1]},
                      {"grid_points", solution.wavefunction.grid.size()},
                      {"r_max", solution.wavefunction.grid.r_max()}};
    doc.columns = {"energy", "nodes", "iterations", "bracket_width", "mean_r", "var_r",
                   "mean_pr", "var_pr", "product", "bound_satisfied", "energy_route",
                   "cross_gap"};
    doc.rows.push_back(Json{{"energy", solution.energy},
                            {"nodes", solution.nodes},
                            {"iterations", solution.convergence.iterations},
                            {"bracket_width", solution.convergence.bracket_width},
                            {"mean_r", report.mean_r},
                            {"var_r", report.var_r},
                            {"mean_pr", report.mean_pr},
                            {"var_pr", report.var_pr},
                            {"product", report.product},
                            {"bound_satisfied", report.bound_satisfied},
                            {"energy_route", audit.pr_variance_energy_route},
                            {"cross_gap", audit.cross_check_gap}});

    doc.checks.push_back({"converged", solution.convergence.bracket_width <= 1e-11,
                          "bracket width " + format_double(solution.convergence.bracket_width)});
    doc.checks.push_back({"node_count", solution.nodes == cfg.nodes,
                          "found " + std::to_string(solution.nodes) + " nodes"});
    doc.checks.push_back({"bound_satisfied", report.bound_satisfied,
                          "product " + format_double(report.product)});
    doc.checks.push_back(
        {"energy_cross_check", audit.cross_check_gap <= cfg.tolerances.at("energy-cross"),
         "var_pr vs 2[E - <U_eff>] gap " + format_double(audit.cross_check_gap)});
    doc.checks.push_back({"normalized", report.norm_defect <= numerics::kNormDefectLimit,
                          "norm defect " + format_double(report.norm_defect)});
    return doc;
}

int run_config(const RunConfig& cfg) {
    OutputDoc doc;
    try {
        if (cfg.command == "table") doc = make_table_doc(cfg);
        else if (cfg.command == "verify") doc = make_verify_doc(cfg);
        else if (cfg.command == "weyl") doc = make_weyl_doc(cfg);
        else if (cfg.command == "minstate") doc = make_minstate_doc(cfg);
        else if (cfg.command == "solve") doc = make_solve_doc(cfg);
        else throw std::invalid_argument("unknown command " + cfg.command);
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << '\n';
        return 1;
    }

    const std::string text = render(doc, cfg.format);
    if (cfg.out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(cfg.out_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot open output file " << cfg.out_path << '\n';
            return 1;
        }
        out << text;
    }
    return all_checks_pass(doc) ? 0 : 1;
}

int run_cli(int argc, const char* const* argv) {
    RunConfig cfg;
    CLI::App app{"radial coordinate/momentum uncertainty toolkit for central-potential "
                 "bound states"};
    app.require_subcommand(1);

    const std::map<std::string, OutputFormat> format_names{
        {"text", OutputFormat::text}, {"csv", OutputFormat::csv}, {"json", OutputFormat::json}};

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", cfg.format, "output format")
            ->transform(CLI::CheckedTransformer(format_names, CLI::ignore_case));
        cmd->add_option("--out", cfg.out_path, "write output to a file instead of stdout");
        cmd->add_option("--workers", cfg.workers, "parallel workers across independent rows")
            ->check(CLI::Range(1u, 256u));
        cmd->add_option_function<std::vector<std::string>>(
               "--tol",
               [&cfg](const std::vector<std::string>& items) {
                   for (const auto& item : items) {
                       const auto eq = item.find('=');
                       if (eq == std::string::npos)
                           throw CLI::ValidationError("--tol", "expected name=value");
                       const std::string name = item.substr(0, eq);
                       if (!cfg.tolerances.known(name))
                           throw CLI::ValidationError("--tol", "unknown tolerance '" + name + "'");
                       try {
                           cfg.tolerances.values[name] = std::stod(item.substr(eq + 1));
                       } catch (const std::exception&) {
                           throw CLI::ValidationError("--tol", "bad value in '" + item + "'");
                       }
                   }
               },
               "override a check tolerance (name=value)");
    };

    auto* table = app.add_subcommand("table", "exact uncertainty products for all (n, l)");
    table->add_option("--n-max", cfg.n_max, "highest principal quantum number")
        ->required()
        ->check(CLI::Range(1, 200));
    add_common(table);

    auto* verify = app.add_subcommand("verify", "closed forms vs quadrature for one state");
    verify->add_option("--n", cfg.n, "principal quantum number")->required()->check(CLI::Range(1, 60));
    verify->add_option("--l", cfg.l, "orbital quantum number")->required()->check(CLI::Range(0, 59));
    add_common(verify);

    auto* weyl = app.add_subcommand("weyl", "auxiliary-integral scan for one state");
    weyl->add_option("--n", cfg.n, "principal quantum number")->required()->check(CLI::Range(1, 60));
    weyl->add_option("--l", cfg.l, "orbital quantum number")->required()->check(CLI::Range(0, 59));
    weyl->add_option("--alphas", cfg.alpha_count, "scan point count")->check(CLI::Range(3, 100000));
    add_common(weyl);

    auto* mins = app.add_subcommand("minstate", "minimum-uncertainty states vs mean/sigma ratio");
    mins->add_option("--ratios", cfg.ratios, "comma-separated mean/sigma ratios")
        ->required()
        ->delimiter(',');
    add_common(mins);

    auto* solve = app.add_subcommand("solve", "bound state of a central potential");
    solve->add_option("--potential", cfg.potential, "coulomb | harmonic | potential file")
        ->required();
    solve->add_option("--l", cfg.l, "orbital quantum number")->check(CLI::Range(0, 60));
    solve->add_option("--nodes", cfg.nodes, "radial node count")->check(CLI::Range(0, 100));
    solve->add_option("--bracket", cfg.bracket, "energy bracket LO,HI")
        ->required()
        ->delimiter(',')
        ->expected(2);
    solve->add_option("--charge", cfg.charge, "coulomb charge Z")->check(CLI::PositiveNumber);
    solve->add_option("--omega", cfg.omega, "harmonic frequency")->check(CLI::PositiveNumber);
    add_common(solve);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    if (verify->parsed() || weyl->parsed()) {
        if (cfg.l > cfg.n - 1) {
            std::cerr << "error: need l <= n-1, got n=" << cfg.n << " l=" << cfg.l << '\n';
            return 2;
        }
    }
    cfg.command = app.get_subcommands().front()->get_name();
    return run_config(cfg);
}

}  // namespace radial::cli
