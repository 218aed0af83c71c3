// Command-line front end: single runs, the mesh-refinement table, the
// wavenumber sweep, and the normal-mode report.

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "nlsabc/nlsabc.hpp"

namespace {

using namespace nlsabc;

int code(ExitCode c) { return static_cast<int>(c); }

struct GridFlags {
    std::vector<std::string> overrides;
    std::optional<double> dx;
    std::optional<double> dt;
    std::optional<double> k0;
    std::optional<std::string> order;
    std::optional<double> t_final;

    void add_to(CLI::App* cmd) {
        cmd->add_option("--override", overrides, "section.key=value, applied in order")->take_all();
        cmd->add_option("--dx", dx, "spatial step");
        cmd->add_option("--dt", dt, "time step");
        cmd->add_option("--k0", k0, "wavenumber parameter on both sides");
        cmd->add_option("--order", order, "boundary condition: 1, 2, 3, dirichlet or neumann");
        cmd->add_option("--t-final", t_final, "final time");
    }

    std::vector<std::string> all_overrides() const {
        std::vector<std::string> out = overrides;
        auto num = [](double v) { return config_detail::format_double(v); };
        if (dx) out.push_back("grid.dx=" + num(*dx));
        if (dt) out.push_back("grid.dt=" + num(*dt));
        if (t_final) out.push_back("grid.t_final=" + num(*t_final));
        if (k0) out.push_back("boundary.k0=" + num(*k0));
        if (order) {
            std::string o = *order;
            if (o == "1" || o == "2" || o == "3") o = "abc" + o;
            out.push_back("boundary.order=" + o);
        }
        return out;
    }
};

/// Preset name or path to a YAML file.
std::pair<SimulationConfig, std::string> load(const std::string& source, const std::vector<std::string>& overrides) {
    if (const auto p = preset_from_name(source)) return {preset_config(*p, overrides), source};
    return {parse_config(source, overrides), std::filesystem::path(source).stem().string()};
}

std::vector<double> or_default(const std::vector<double>& v, std::vector<double> fallback) {
    return v.empty() ? fallback : v;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Nonlinear Schroedinger solver with split absorbing boundary conditions"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string out_dir = "out";
    std::optional<long> seed;  // reserved; every run is deterministic
    app.add_option("--out-dir", out_dir, "directory for CSV output")->capture_default_str();
    app.add_option("--seed", seed, "reserved, unused");

    // run
    auto* run = app.add_subcommand("run", "run a preset or a YAML configuration");
    std::string source;
    GridFlags run_flags;
    std::vector<double> snapshots;
    run->add_option("source", source, "example1 | example2 | example3 | path/to/config.yaml")->required();
    run_flags.add_to(run);
    run->add_option("--snapshots", snapshots, "snapshot times")->delimiter(',');
    bool print_config = false;
    run->add_flag("--print-config", print_config, "print the resolved configuration and exit");

    // energy
    auto* energy = app.add_subcommand("energy", "blow-up energy of the initial data");
    std::string energy_source;
    GridFlags energy_flags;
    energy->add_option("source", energy_source, "preset or YAML configuration")->required();
    energy_flags.add_to(energy);

    // converge
    auto* converge = app.add_subcommand("converge", "L1 errors and orders for example1 with dt = dx^2");
    std::vector<double> dx_list;
    std::vector<double> times;
    converge->add_option("--dx-list", dx_list, "spacings, each half the previous")->delimiter(',');
    converge->add_option("--times", times, "sample times")->delimiter(',');

    // sweep-k0
    auto* sweep = app.add_subcommand("sweep-k0", "reflection ratio of example1 against k0 and g");
    std::vector<double> k0_list;
    std::vector<double> g_list;
    GridFlags sweep_flags;
    sweep->add_option("--k0-list", k0_list, "wavenumber parameters")->delimiter(',');
    sweep->add_option("--g-list", g_list, "nonlinearity strengths")->delimiter(',');
    sweep_flags.add_to(sweep);

    // stability-check
    auto* stability = app.add_subcommand("stability-check", "normal-mode roots at the right boundary");
    int nm_order = 3;
    double nm_k0 = 1.0;
    PotentialDecomposition decomp;
    PhysicalParams nm_phys;
    stability->add_option("--order", nm_order, "2 or 3")->check(CLI::IsMember({2, 3}));
    stability->add_option("--k0", nm_k0, "wavenumber parameter");
    stability->add_option("--v1", decomp.v1);
    stability->add_option("--v2", decomp.v2);
    stability->add_option("--f1", decomp.f1);
    stability->add_option("--f2", decomp.f2);
    stability->add_option("--hbar", nm_phys.hbar);
    stability->add_option("--mass", nm_phys.mass);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return code(ExitCode::config_error);
    }

    try {
        if (*run) {
            auto [config, label] = load(source, run_flags.all_overrides());
            if (print_config) {
                std::cout << serialize_config(config);
                return 0;
            }
            const auto out = run_example(config, "run_" + label, snapshots, out_dir);
            const auto& obs = out.run.observables;
            const int max_iter = *std::max_element(obs.picard_iterations.begin(), obs.picard_iterations.end());
            std::cout << "t_final " << obs.times.back() << "\n"
                      << "reflection " << obs.reflection.back() << "\n"
                      << "reflection_amplitude " << obs.reflection_amplitude.back() << "\n"
                      << "mass_ratio " << obs.mass.back() / obs.mass.front() << "\n"
                      << "max_picard_iterations " << max_iter << "\n";
            for (const auto& f : out.files) std::cout << "wrote " << f << "\n";
        } else if (*energy) {
            auto [config, label] = load(energy_source, energy_flags.all_overrides());
            const double e = initial_energy(eval_initial(config.initial, config.grid), config.grid);
            std::cout << "E(psi0) " << e << (e < 0 ? "  (negative: blow-up predicted)" : "") << "\n";
        } else if (*converge) {
            const auto rows = convergence_table(make_preset(Preset::example1), or_default(dx_list, {0.2, 0.1, 0.05}),
                                                or_default(times, {2, 3, 4, 5, 6}));
            std::filesystem::create_directories(out_dir);
            const auto path = (std::filesystem::path(out_dir) / "converge_example1.csv").string();
            const auto table = convergence_csv(rows);
            emit_csv(table, path);
            std::cout << to_csv(table) << "wrote " << path << "\n";
        } else if (*sweep) {
            SimulationConfig base = sweep_base();
            const auto overrides = sweep_flags.all_overrides();
            if (!overrides.empty()) {
                ConfigLayers layers;
                layers.merge(YAML::Load(serialize_config(base)), false);
                for (const auto& o : overrides) layers.apply_override(o);
                base = layers.build();
            }
            std::vector<double> default_k0;
            for (double k = 0.5; k <= 6.75 + 1e-9; k += 0.25) default_k0.push_back(k);
            default_k0.insert(std::upper_bound(default_k0.begin(), default_k0.end(), 2.125), 2.125);
            const auto rows = k0_sweep(base, or_default(k0_list, default_k0), or_default(g_list, {-2.0, -10.0}));
            std::filesystem::create_directories(out_dir);
            const auto path = (std::filesystem::path(out_dir) / "sweep-k0_example1.csv").string();
            const auto table = sweep_csv(rows);
            emit_csv(table, path);
            std::cout << to_csv(table) << "wrote " << path << "\n";
        } else if (*stability) {
            const auto r = normal_mode_roots(nm_order, nm_k0, decomp, nm_phys);
            std::cout << "order " << r.order << "\n"
                      << "k " << r.k.real() << (r.k.imag() < 0 ? " - " : " + ") << std::abs(r.k.imag()) << "i\n"
                      << "s " << r.s.real() << (r.s.imag() < 0 ? " - " : " + ") << std::abs(r.s.imag()) << "i\n"
                      << "wellposed " << (r.wellposed ? "yes" : "no") << "\n";
        }
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return code(ExitCode::config_error);
    } catch (const DomainError& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return code(ExitCode::config_error);
    } catch (const BlowUpError& e) {
        std::cerr << "blow-up: " << e.what() << "\n";
        return code(ExitCode::blow_up);
    } catch (const ConvergenceError& e) {
        std::cerr << "solver: " << e.what() << "\n";
        return code(ExitCode::no_convergence);
    } catch (const SingularPivotError& e) {
        std::cerr << "solver: " << e.what() << "\n";
        return code(ExitCode::no_convergence);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return code(ExitCode::failure);
    }
    return 0;
}
