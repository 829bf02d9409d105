// cognet: experiment runner for the cognitive-network simulator.
//
// Subcommands cover placement sampling, interference estimation (Monte Carlo,
// lattice, closed form), the analytical bound sweeps, the exclusive-region
// radius solvers, and the throughput scaling/concentration experiments. Every
// run writes its outputs as CSV plus a manifest that `replay` can reproduce
// byte-for-byte.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cognet/bounds.hpp"
#include "cognet/channel.hpp"
#include "cognet/config.hpp"
#include "cognet/csv.hpp"
#include "cognet/errors.hpp"
#include "cognet/geometry.hpp"
#include "cognet/interference.hpp"
#include "cognet/manifest.hpp"
#include "cognet/per_design.hpp"
#include "cognet/throughput.hpp"
#include "cognet/version.hpp"

namespace {

using namespace cognet;

struct RunContext {
    NetworkConfig config;
    std::uint64_t seed = 12345;
    int workers = 1;
    std::string out_dir = ".";
    bool dump_raw = false;
    std::string path; // e.g. "interference mc"
    std::map<std::string, std::string> args;
    std::vector<std::string> outputs;
};

std::string arg_or(const RunContext& ctx, const std::string& key,
                   const std::string& fallback) {
    const auto it = ctx.args.find(key);
    return it == ctx.args.end() || it->second.empty() ? fallback : it->second;
}

double arg_num(const RunContext& ctx, const std::string& key, double fallback) {
    const auto it = ctx.args.find(key);
    if (it == ctx.args.end() || it->second.empty()) return fallback;
    return std::stod(it->second);
}

long arg_long(const RunContext& ctx, const std::string& key, long fallback) {
    return static_cast<long>(arg_num(ctx, key, static_cast<double>(fallback)));
}

template <typename T>
std::vector<T> parse_list(const std::string& text) {
    std::vector<T> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        values.push_back(static_cast<T>(std::stod(item)));
    }
    if (values.empty()) throw ConfigError("empty list argument: '" + text + "'");
    return values;
}

std::string out_path(RunContext& ctx, const std::string& name) {
    std::filesystem::create_directories(ctx.out_dir);
    const std::string path = (std::filesystem::path(ctx.out_dir) / name).string();
    ctx.outputs.push_back(path);
    return path;
}

// ---------------------------------------------------------------- runners

int run_validate(RunContext& ctx) {
    const ValidationReport report = validate(ctx.config);
    std::cout << report.to_string();
    if (report.ok()) {
        const DerivedQuantities d = derived_quantities(ctx.config);
        std::cout << "expected_n = " << d.expected_n << "\n"
                  << "capacity_C = " << d.capacity_C << "\n"
                  << "outage_C0 = " << d.outage_C0 << "\n";
    }
    return report.ok() ? 0 : 2;
}

int run_place(RunContext& ctx) {
    const std::string mode = arg_or(ctx, "n_mode", "poisson");
    geometry::NMode n_mode;
    if (mode == "poisson") n_mode = geometry::NMode::poisson();
    else if (mode == "fixed") n_mode = geometry::NMode::fixed(arg_long(ctx, "n", 0));
    else throw ConfigError("place: --n-mode must be poisson|fixed");

    const bool fill_pers = arg_or(ctx, "fill_pers", "0") == "1";
    geometry::PlacementStats stats;
    const auto placement =
        geometry::place_network(ctx.config, n_mode, ctx.seed, &stats, fill_pers);
    if (fill_pers)
        std::cout << "fill-pers mode: exclusive regions filled (bound-validation field)\n";
    const std::string path = out_path(ctx, "placement.csv");
    std::ofstream out(path, std::ios::binary);
    out << geometry::placement_to_csv(placement);
    std::cout << "pairs = " << placement.cognitive_tx.size()
              << ", tx acceptance ratio = " << stats.tx_acceptance_ratio << "\n";
    return 0;
}

int run_interference_mc(RunContext& ctx) {
    const long trials = arg_long(ctx, "trials", 2000);
    std::vector<double> raw;
    interference::McOptions opts;
    opts.workers = ctx.workers;
    if (ctx.dump_raw) opts.raw_sink = &raw;
    const auto est =
        interference::mc_primary_rx_interference(ctx.config, trials, ctx.seed, opts);

    CsvWriter csv(out_path(ctx, "interference_mc.csv"),
                  {"mean", "variance", "stderr", "n_trials"});
    csv.row({csv_num(est.mean), csv_num(est.variance), csv_num(est.stderr_of_mean),
             csv_int(est.n_trials)});
    if (ctx.dump_raw) {
        CsvWriter rawcsv(out_path(ctx, "interference_mc_raw.csv"), {"trial", "I0"});
        for (std::size_t t = 0; t < raw.size(); ++t)
            rawcsv.row({csv_int(static_cast<long long>(t)), csv_num(raw[t], 17)});
    }
    std::cout << "E[I0] ~= " << est.mean << " (stderr " << est.stderr_of_mean << ")\n";
    if (std::fabs(ctx.config.alpha_eff() - 4.0) <= 1e-12) {
        const double exact = bounds::exact_interference_alpha4(
            ctx.config, OuterRadius(ctx.config.network_radius_R));
        std::cout << "exact closed form = " << exact << "\n";
    }
    return 0;
}

int run_interference_lattice(RunContext& ctx) {
    const double eps_c = arg_num(ctx, "eps_c",
                                 ctx.config.rx_protect_eps_c / ctx.config.per_radius_R0);
    const double alpha = arg_num(ctx, "alpha", ctx.config.path_loss_alpha);
    const int K = static_cast<int>(arg_long(ctx, "K", 200));
    const int grid = static_cast<int>(arg_long(ctx, "theta_grid", 720));
    interference::LatticeOptions opts;
    opts.include_origin = arg_or(ctx, "exclude_origin", "0") != "1";

    CsvWriter csv(out_path(ctx, "lattice_scan.csv"), {"theta", "value", "tail_bound"});
    interference::WorstCaseInterference worst;
    for (int i = 0; i < grid; ++i) {
        const double theta = 2.0 * M_PI * i / grid;
        const auto r = interference::lattice_interference(theta, eps_c, alpha, K, opts);
        csv.row({csv_num(theta), csv_num(r.value), csv_num(r.tail_bound)});
        if (i == 0 || r.value > worst.value) {
            worst.value = r.value;
            worst.theta_at_max = theta;
        }
        worst.tail_bound = std::max(worst.tail_bound, r.tail_bound);
    }
    std::cout << "I_P = " << worst.value << " at theta = " << worst.theta_at_max
              << " (tail bound " << worst.tail_bound << ")\n";
    return 0;
}

int run_interference_avg(RunContext& ctx) {
    const double R = arg_num(ctx, "R", ctx.config.network_radius_R);
    const double finite = interference::avg_cog_interference(ctx.config, OuterRadius(R));
    const double limit =
        interference::avg_cog_interference(ctx.config, OuterRadius::infinity());
    CsvWriter csv(out_path(ctx, "avg_interference.csv"),
                  {"R", "I_avg", "I_avg_db", "I_infinity", "I_infinity_db"});
    csv.row({csv_num(R), csv_num(finite), csv_num(channel::to_db(finite)),
             csv_num(limit), csv_num(channel::to_db(limit))});
    std::cout << "I_avg(R=" << R << ") = " << finite << ", I_infinity = " << limit << "\n";
    return 0;
}

int run_bounds_grid(RunContext& ctx) {
    const auto r0_list = parse_list<double>(arg_or(ctx, "r0_list", "1,2,5,10,20"));
    const std::string r_text = arg_or(ctx, "R", "inf");
    CsvWriter csv(out_path(ctx, "bounds_grid.csv"), {"R0", "lb1", "lb2", "ub", "exact"});
    for (double r0 : r0_list) {
        NetworkConfig c = ctx.config;
        c.per_radius_R0 = r0;
        const OuterRadius R =
            r_text == "inf" ? OuterRadius::infinity() : OuterRadius(std::stod(r_text));
        const auto set = bounds::evaluate_bounds(c, R);
        csv.row({csv_num(r0), csv_num(set.lb1), csv_num(set.lb2), csv_num(set.ub),
                 set.exact_alpha4 ? csv_num(*set.exact_alpha4) : ""});
    }
    return 0;
}

int run_bounds_figure(RunContext& ctx, int figure) {
    const double oracle_R = arg_num(ctx, "oracle_R", 10000.0);
    const double alpha = figure == 7 ? 3.0 : figure == 8 ? 4.0 : 5.0;
    const auto rows = bounds::figure_sweep(alpha, oracle_R);
    const std::string name = "figure" + std::to_string(figure) + ".csv";
    if (figure == 8) {
        CsvWriter csv(out_path(ctx, name), {"R0", "lb1", "lb2", "ub", "exact"});
        for (const auto& row : rows)
            csv.row({csv_num(row.r0), csv_num(row.lb1), csv_num(row.lb2),
                     csv_num(row.ub), csv_num(row.exact_alpha4)});
    } else {
        CsvWriter csv(out_path(ctx, name),
                      {"R0", "lb1", "lb2", "ub", "exact_alpha4", "oracle"});
        for (const auto& row : rows)
            csv.row({csv_num(row.r0), csv_num(row.lb1), csv_num(row.lb2),
                     csv_num(row.ub), csv_num(row.exact_alpha4),
                     row.oracle ? csv_num(*row.oracle) : ""});
    }
    return 0;
}

int run_per_solve(RunContext& ctx) {
    const auto sol = per_design::solve(ctx.config);
    const char* binding =
        sol.binding_constraint == per_design::BindingConstraint::Noise ? "noise"
        : sol.binding_constraint == per_design::BindingConstraint::Implicit ? "implicit"
                                                                            : "markov";
    CsvWriter csv(out_path(ctx, "per_radius.csv"),
                  {"r0_interference_free", "r0_markov", "r0_implicit", "binding"});
    csv.row({csv_num(sol.r0_interference_free), csv_num(sol.r0_markov),
             sol.r0_implicit ? csv_num(*sol.r0_implicit) : "", binding});
    std::cout << "interference-free R0 <= " << sol.r0_interference_free << "\n"
              << "markov R0 <= " << sol.r0_markov << "\n";
    if (sol.r0_implicit) std::cout << "implicit (alpha=4) R0 <= " << *sol.r0_implicit << "\n";
    std::cout << "binding constraint: " << binding << "\n";
    if (sol.multiple_roots_warning)
        std::cerr << "warning: multiple crossings of the implicit equation; "
                     "returned the largest root\n";
    return 0;
}

int run_per_fig10(RunContext& ctx) {
    const auto c0_list = parse_list<double>(arg_or(ctx, "c0_list", "1,2,3"));
    const auto eps_grid =
        parse_list<double>(arg_or(ctx, "eps_grid", "0.5,1,1.5,2,3,4,5"));
    const auto rows = per_design::tradeoff_r0_vs_eps(ctx.config, c0_list, eps_grid);
    CsvWriter csv(out_path(ctx, "fig10_r0_vs_eps.csv"),
                  {"C0", "eps_p", "r0_markov", "r0_implicit"});
    for (const auto& row : rows) {
        csv.row({csv_num(row.c0), csv_num(row.eps_p), csv_num(row.r0_markov),
                 row.r0_implicit ? csv_num(*row.r0_implicit) : ""});
        std::cout << "C0=" << row.c0 << " eps_p=" << row.eps_p
                  << " binding=" << (row.r0_implicit ? "implicit" : "markov") << "\n";
    }
    return 0;
}

int run_per_fig11(RunContext& ctx) {
    const auto eps_list = parse_list<double>(arg_or(ctx, "eps_list", "2,8,20"));
    const auto r0_grid = parse_list<double>(arg_or(ctx, "r0_grid", "0.5,1,2,4"));
    const auto rows = per_design::tradeoff_p0_vs_r0(ctx.config, eps_list, r0_grid);
    CsvWriter csv(out_path(ctx, "fig11_p0_vs_r0.csv"),
                  {"eps_p", "R0", "p0_markov", "p0_implicit"});
    for (const auto& row : rows) {
        csv.row({csv_num(row.eps_p), csv_num(row.r0), csv_num(row.p0_markov),
                 row.p0_implicit ? csv_num(*row.p0_implicit) : ""});
        std::cout << "eps_p=" << row.eps_p << " R0=" << row.r0
                  << " binding=" << (row.p0_implicit ? "implicit" : "markov") << "\n";
    }
    return 0;
}

// --mode/--gamma override the config's power law for the throughput runs.
void apply_power_overrides(RunContext& ctx) {
    const std::string mode = arg_or(ctx, "mode", "");
    if (mode == "constant") ctx.config.mode = PowerMode::ConstantPower;
    else if (mode == "scaled") ctx.config.mode = PowerMode::DistanceScaledPower;
    else if (!mode.empty()) throw ConfigError("--mode must be constant|scaled");
    const auto it = ctx.args.find("gamma");
    if (it != ctx.args.end() && !it->second.empty())
        ctx.config.power_exponent_gamma = std::stod(it->second);
}

int run_scaling(RunContext& ctx) {
    apply_power_overrides(ctx);
    const auto n_grid =
        parse_list<long>(arg_or(ctx, "n_grid", "50,100,200,400,800,1600"));
    const int seeds = static_cast<int>(arg_long(ctx, "seeds", 20));
    throughput::ExperimentOptions opts;
    opts.workers = ctx.workers;
    opts.lattice_K = static_cast<int>(arg_long(ctx, "lattice_K", 200));
    opts.theta_grid = static_cast<int>(arg_long(ctx, "theta_grid", 720));
    const auto run = throughput::scaling_experiment(ctx.config, n_grid, seeds,
                                                    ctx.seed, opts);
    CsvWriter csv(out_path(ctx, "scaling.csv"), {"n", "T_n", "S_n", "std", "C1bar"});
    for (const auto& p : run.per_n)
        csv.row({csv_int(p.n), csv_num(p.mean_per_user_rate), csv_num(p.sum_rate),
                 csv_num(p.std_across_seeds), csv_num(p.lower_bound_c1bar)});
    for (const auto& p : run.per_n)
        std::cout << "n = " << p.n << ": T_n = " << p.mean_per_user_rate
                  << " (C1bar = " << p.lower_bound_c1bar << ")\n";
    return 0;
}

int run_concentration(RunContext& ctx) {
    apply_power_overrides(ctx);
    const auto n_grid =
        parse_list<long>(arg_or(ctx, "n_grid", "50,100,200,400,800,1600"));
    const int trials = static_cast<int>(arg_long(ctx, "trials", 200));
    double delta = arg_num(ctx, "delta", 0.0);
    throughput::ExperimentOptions opts;
    opts.workers = ctx.workers;
    if (delta <= 0.0) {
        // Default delta = 0.1 * T_n at the smallest n, from a short seeded probe.
        const long n_min = *std::min_element(n_grid.begin(), n_grid.end());
        const auto probe = throughput::scaling_experiment(
            ctx.config, {n_min}, std::min(trials, 20), ctx.seed, opts);
        delta = 0.1 * probe.per_n.front().mean_per_user_rate;
    }
    const auto points = throughput::concentration_experiment(ctx.config, n_grid,
                                                             trials, delta, ctx.seed, opts);
    CsvWriter csv(out_path(ctx, "concentration.csv"),
                  {"n", "delta", "p_delta", "p_delta_stderr", "std_sn_over_n",
                   "var_per_user", "trials"});
    for (const auto& p : points)
        csv.row({csv_int(p.n), csv_num(p.delta), csv_num(p.p_delta),
                 csv_num(p.p_delta_std_error), csv_num(p.std_sn_over_n),
                 csv_num(p.var_per_user), csv_int(p.trials)});
    return 0;
}

using Runner = int (*)(RunContext&);

int dispatch(RunContext& ctx);

int run_replay(RunContext& ctx) {
    const std::string manifest_path = arg_or(ctx, "manifest", "");
    if (manifest_path.empty()) throw ConfigError("replay: manifest path required");
    const RunManifest m = read_manifest(manifest_path);
    RunContext replay_ctx;
    replay_ctx.config = config_from_pairs(m.config_values);
    replay_ctx.seed = m.seed;
    replay_ctx.workers = m.workers;
    replay_ctx.out_dir = ctx.out_dir;
    std::string path;
    for (const auto& part : m.subcommand) {
        if (!path.empty()) path += ' ';
        path += part;
    }
    replay_ctx.path = path;
    for (const auto& [k, v] : m.args) {
        if (k == "dump_raw") replay_ctx.dump_raw = v == "1";
        else replay_ctx.args[k] = v;
    }
    return dispatch(replay_ctx);
}

int dispatch_inner(RunContext& ctx) {
    if (ctx.path == "validate") return run_validate(ctx);
    if (ctx.path == "place") return run_place(ctx);
    if (ctx.path == "interference mc") return run_interference_mc(ctx);
    if (ctx.path == "interference lattice") return run_interference_lattice(ctx);
    if (ctx.path == "interference avg") return run_interference_avg(ctx);
    if (ctx.path == "bounds grid") return run_bounds_grid(ctx);
    if (ctx.path == "bounds figure7") return run_bounds_figure(ctx, 7);
    if (ctx.path == "bounds figure8") return run_bounds_figure(ctx, 8);
    if (ctx.path == "bounds figure9") return run_bounds_figure(ctx, 9);
    if (ctx.path == "per-radius solve") return run_per_solve(ctx);
    if (ctx.path == "per-radius curve-fig10") return run_per_fig10(ctx);
    if (ctx.path == "per-radius curve-fig11") return run_per_fig11(ctx);
    if (ctx.path == "scaling") return run_scaling(ctx);
    if (ctx.path == "concentration") return run_concentration(ctx);
    if (ctx.path == "replay") return run_replay(ctx);
    throw ConfigError("unknown subcommand: " + ctx.path);
}

int dispatch(RunContext& ctx) {
    const auto start = std::chrono::steady_clock::now();
    const int code = dispatch_inner(ctx);
    const double duration =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    if (ctx.path != "replay") {
        RunManifest m;
        std::stringstream ss(ctx.path);
        std::string part;
        while (ss >> part) m.subcommand.push_back(part);
        m.seed = ctx.seed;
        m.workers = ctx.workers;
        m.config_values = config_to_pairs(ctx.config);
        m.args = std::vector<std::pair<std::string, std::string>>(ctx.args.begin(),
                                                                  ctx.args.end());
        m.args.emplace_back("dump_raw", ctx.dump_raw ? "1" : "0");
        m.outputs = ctx.outputs;
        m.duration_seconds = duration;
        std::string name = "manifest";
        for (const auto& p : m.subcommand) name += "_" + p;
        write_manifest(out_path(ctx, name + ".json"), m);
    }
    return code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"stochastic-geometry simulator and analytical-bounds toolkit "
                 "for cognitive networks"};
    app.set_version_flag("--version", std::string(cognet::kToolName) + " " +
                                          cognet::kToolVersion);

    RunContext ctx;
    if (const char* env = std::getenv("COGNET_OUT_DIR")) ctx.out_dir = env;
    std::string config_path;
    app.add_option("--config", config_path, "key = value config file");
    app.add_option("--seed", ctx.seed, "master seed (64-bit)");
    app.add_option("--workers", ctx.workers, "worker threads (results are identical "
                                             "for any count)");
    app.add_option("--out", ctx.out_dir, "output directory (default $COGNET_OUT_DIR or .)");
    app.add_flag("--dump-raw", ctx.dump_raw, "also write raw per-trial draws");
    app.require_subcommand(1);

    auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help,
                    const std::string& path) {
        CLI::App* sub = parent->add_subcommand(name, help);
        sub->callback([&ctx, path] { ctx.path = path; });
        return sub;
    };

    auto opt = [&](CLI::App* sub, const std::string& flag, const std::string& key,
                   const std::string& help) {
        sub->add_option_function<std::string>(
            flag, [&ctx, key](const std::string& v) { ctx.args[key] = v; }, help);
    };

    leaf(&app, "validate", "check the config against every admissibility rule",
         "validate");

    CLI::App* place = leaf(&app, "place", "sample a node placement", "place");
    opt(place, "--n-mode", "n_mode", "poisson|fixed");
    opt(place, "--n", "n", "pair count in fixed mode");
    place->add_flag_callback(
        "--fill-pers", [&ctx] { ctx.args["fill_pers"] = "1"; },
        "fill the exclusive regions too (worst-case bound-validation field)");

    CLI::App* interf = app.add_subcommand("interference", "interference estimators");
    interf->require_subcommand(1);
    CLI::App* mc = leaf(interf, "mc", "Monte Carlo E[I0] at the primary receiver",
                        "interference mc");
    opt(mc, "--trials", "trials", "number of placement draws (default 2000)");
    CLI::App* lattice = leaf(interf, "lattice", "hexagonal primary-lattice scan",
                             "interference lattice");
    opt(lattice, "--eps-c", "eps_c", "normalized receiver protection radius (0,1)");
    opt(lattice, "--alpha", "alpha", "path loss exponent");
    opt(lattice, "--K", "K", "lattice truncation (default 200)");
    opt(lattice, "--theta-grid", "theta_grid", "angle grid size (default 720)");
    opt(lattice, "--exclude-origin", "exclude_origin", "1 to drop the origin tx term");
    CLI::App* avg = leaf(interf, "avg", "closed-form average cognitive interference",
                         "interference avg");
    opt(avg, "--R", "R", "outer radius (default config R)");

    CLI::App* bounds_cmd = app.add_subcommand("bounds", "analytical bounds on E[I0]");
    bounds_cmd->require_subcommand(1);
    CLI::App* grid = leaf(bounds_cmd, "grid", "bound set over an R0 list", "bounds grid");
    opt(grid, "--r0-list", "r0_list", "comma-separated R0 values");
    opt(grid, "--R", "R", "outer radius or 'inf' (default inf)");
    for (int fig : {7, 8, 9}) {
        CLI::App* f = leaf(bounds_cmd, "figure" + std::to_string(fig),
                           "bound-comparison sweep, alpha = " +
                               std::to_string(fig == 7 ? 3 : fig == 8 ? 4 : 5),
                           "bounds figure" + std::to_string(fig));
        opt(f, "--oracle-R", "oracle_R", "finite radius for the oracle column");
    }

    CLI::App* per = app.add_subcommand("per-radius", "primary exclusive region design");
    per->require_subcommand(1);
    leaf(per, "solve", "all radius bounds for the config", "per-radius solve");
    CLI::App* fig10 = leaf(per, "curve-fig10", "R0 against guard band width",
                           "per-radius curve-fig10");
    opt(fig10, "--c0-list", "c0_list", "outage capacities (default 1,2,3)");
    opt(fig10, "--eps-grid", "eps_grid", "guard band grid");
    CLI::App* fig11 = leaf(per, "curve-fig11", "required P0 against R0",
                           "per-radius curve-fig11");
    opt(fig11, "--eps-list", "eps_list", "guard band list (default 2,8,20)");
    opt(fig11, "--r0-grid", "r0_grid", "R0 grid");

    CLI::App* scaling = leaf(&app, "scaling", "linear throughput scaling experiment",
                             "scaling");
    opt(scaling, "--n-grid", "n_grid", "user counts (default 50,...,1600)");
    opt(scaling, "--seeds", "seeds", "placements per n (default 20)");
    opt(scaling, "--mode", "mode", "constant|scaled power law override");
    opt(scaling, "--gamma", "gamma", "power exponent override");
    opt(scaling, "--lattice-K", "lattice_K", "lattice truncation for C1bar");
    opt(scaling, "--theta-grid", "theta_grid", "angle grid for C1bar");

    CLI::App* conc = leaf(&app, "concentration", "deviation of S_n around its mean",
                          "concentration");
    opt(conc, "--n-grid", "n_grid", "user counts");
    opt(conc, "--trials", "trials", "placements per n (default 200)");
    opt(conc, "--mode", "mode", "constant|scaled power law override");
    opt(conc, "--gamma", "gamma", "power exponent override");
    opt(conc, "--delta", "delta", "per-user deviation (default 0.1 * T_nmin)");

    CLI::App* replay = leaf(&app, "replay", "re-run a manifest", "replay");
    replay->add_option_function<std::string>(
        "manifest", [&ctx](const std::string& v) { ctx.args["manifest"] = v; },
        "path to a manifest json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (!config_path.empty()) ctx.config = load_config_file(config_path);
        return dispatch(ctx);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const PlacementError& e) {
        std::cerr << "placement error: " << e.what() << "\n";
        return 4;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const NumericError& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return 3;
    } catch (const InfeasibleError& e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
