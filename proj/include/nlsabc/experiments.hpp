#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <future>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "nlsabc/analysis.hpp"
#include "nlsabc/csv.hpp"
#include "nlsabc/presets.hpp"
#include "nlsabc/solver.hpp"

namespace nlsabc {

/// Applies fn to every input, several at a time; results keep input order.
template <typename In, typename Fn>
auto parallel_map(const std::vector<In>& inputs, Fn fn) {
    using Out = decltype(fn(inputs.front()));
    std::vector<Out> results;
    results.reserve(inputs.size());
    const std::size_t width = std::max(1u, std::thread::hardware_concurrency());
    for (std::size_t first = 0; first < inputs.size(); first += width) {
        std::vector<std::future<Out>> batch;
        const std::size_t last = std::min(inputs.size(), first + width);
        for (std::size_t i = first; i < last; ++i)
            batch.push_back(std::async(std::launch::async, fn, std::cref(inputs[i])));
        for (auto& f : batch) results.push_back(f.get());
    }
    return results;
}

// ---------------------------------------------------------------------------
// Mesh-refinement study

struct ConvergenceRow {
    double t = 0.0;
    double dx = 0.0;
    double error = 0.0;            // E1 over levels 0..t/dt
    std::optional<double> order;   // against the next coarser dx at the same t
};

/**
 * L1 errors of a soliton configuration against its exact solution for each
 * spacing in dx_list (successive halvings, dt = dx^2), sampled at `times`.
 * Rows come out grouped by t, spacings in list order.
 */
inline std::vector<ConvergenceRow> convergence_table(const SimulationConfig& base, const std::vector<double>& dx_list,
                                                     const std::vector<double>& times) {
    if (dx_list.empty() || times.empty()) throw DomainError("convergence: empty dx or time list");
    for (std::size_t i = 1; i < dx_list.size(); ++i)
        if (std::abs(dx_list[i - 1] / dx_list[i] - 2.0) > 1e-9)
            throw DomainError("convergence: dx list must halve successively");
    const Oracle oracle = soliton_oracle(base.initial);
    const double t_max = *std::max_element(times.begin(), times.end());

    auto errors_for = [&](const double& dx) {
        SimulationConfig c = base;
        const double dt = dx * dx;
        c.grid = make_grid(base.grid.x_left, base.grid.x_right,
                           intervals_for_spacing(base.grid.x_left, base.grid.x_right, dx), dt,
                           steps_for_time(t_max, dt));
        std::vector<long> sample_steps;
        for (double t : times) sample_steps.push_back(steps_for_time(t, dt));

        L1Accumulator acc(c.grid, oracle);
        std::vector<double> errors(times.size(), 0.0);
        Probes probes;
        probes.record_stride = c.grid.steps;
        probes.on_level = [&](const WaveField& psi) {
            acc.add(psi);
            for (std::size_t k = 0; k < sample_steps.size(); ++k)
                if (sample_steps[k] == psi.time_index()) errors[k] = acc.value();
        };
        run_simulation(c, probes);
        return errors;
    };
    const auto errors = parallel_map(dx_list, errors_for);

    std::vector<ConvergenceRow> rows;
    for (std::size_t k = 0; k < times.size(); ++k)
        for (std::size_t i = 0; i < dx_list.size(); ++i) {
            ConvergenceRow row{times[k], dx_list[i], errors[i][k], std::nullopt};
            if (i > 0) row.order = convergence_order(errors[i - 1][k], errors[i][k]);
            rows.push_back(row);
        }
    return rows;
}

inline CsvTable convergence_csv(const std::vector<ConvergenceRow>& rows) {
    CsvTable t;
    t.header = {"t", "dx", "E1", "order"};
    for (const auto& r : rows)
        t.rows.push_back({r.t, r.dx, r.error, r.order ? CsvCell(*r.order) : CsvCell(std::string())});
    return t;
}

// ---------------------------------------------------------------------------
// Wavenumber sweep

struct SweepRow {
    double g = 0.0;
    double k0 = 0.0;
    double reflection = 0.0;            // density measure at the final time
    double reflection_amplitude = 0.0;  // amplitude measure at the final time
};

/// example1 as used for the wavenumber sweep: dt = 0.05, T = 6.
inline SimulationConfig sweep_base() {
    SimulationConfig c = make_preset(Preset::example1);
    c.grid = make_grid(c.grid.x_left, c.grid.x_right, c.grid.intervals, 0.05, 120);
    return c;
}

/// One run per (g, k0), both sides sharing k0. A soliton initial condition is
/// rescaled with g so it stays the exact soliton. Rows are g-major.
inline std::vector<SweepRow> k0_sweep(const SimulationConfig& base, const std::vector<double>& k0_list,
                                      const std::vector<double>& g_list) {
    std::vector<SimulationConfig> configs;
    for (double g : g_list)
        for (double k0 : k0_list) {
            if (!(k0 > 0.0)) throw DomainError("sweep: k0 must be positive");
            SimulationConfig c = base;
            c.physics.g = g;
            if (c.initial.kind == InitialKind::bright_soliton) c.initial.g = g;
            c.boundary.k0_left = c.boundary.k0_right = k0;
            configs.push_back(c);
        }
    auto one = [](const SimulationConfig& c) {
        Probes probes;
        probes.record_stride = c.grid.steps;
        const auto run = run_simulation(c, probes);
        return SweepRow{c.physics.g, c.boundary.k0_right, run.observables.reflection.back(),
                        run.observables.reflection_amplitude.back()};
    };
    return parallel_map(configs, one);
}

inline CsvTable sweep_csv(const std::vector<SweepRow>& rows) {
    CsvTable t;
    t.header = {"g", "k0", "r", "r_amplitude"};
    for (const auto& r : rows) t.rows.push_back({r.g, r.k0, r.reflection, r.reflection_amplitude});
    return t;
}

// ---------------------------------------------------------------------------
// Single runs with file output

struct ExampleOutput {
    RunResult run;
    std::vector<std::string> files;
};

inline std::string time_tag(double t) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", t);
    return buf;
}

/**
 * Runs `config` and writes <out_dir>/<label>_observables.csv plus, per
 * snapshot time, <label>_snapshot_t<time>.csv (x, |psi|) and
 * <label>_snapshot_t<time>_full.csv (x, re, im, |psi|).
 */
inline ExampleOutput run_example(const SimulationConfig& config, const std::string& label,
                                 const std::vector<double>& snapshot_times, const std::string& out_dir) {
    Probes probes;
    probes.snapshot_times = snapshot_times;
    if (config.initial.kind == InitialKind::bright_soliton && config.nonlinearity.kind == NonlinearityKind::cubic &&
        config.potential.kind == PotentialKind::zero && config.initial.g == config.physics.g &&
        config.physics.hbar == 1.0 && config.physics.mass == 0.5)
        probes.oracle = soliton_oracle(config.initial);

    ExampleOutput out;
    out.run = run_simulation(config, probes);

    std::filesystem::create_directories(out_dir);
    const std::filesystem::path dir(out_dir);
    auto write = [&](const CsvTable& table, const std::string& name) {
        const auto path = (dir / name).string();
        emit_csv(table, path);
        out.files.push_back(path);
    };
    write(observables_table(out.run.observables), label + "_observables.csv");
    for (const auto& snap : out.run.observables.snapshots) {
        const std::string stem = label + "_snapshot_t" + time_tag(snap.time);
        write(snapshot_table(snap.field, config.grid, false), stem + ".csv");
        write(snapshot_table(snap.field, config.grid, true), stem + "_full.csv");
    }
    return out;
}

}  // namespace nlsabc
