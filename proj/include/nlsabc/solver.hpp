#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nlsabc/analysis.hpp"
#include "nlsabc/boundary.hpp"
#include "nlsabc/errors.hpp"
#include "nlsabc/grid.hpp"
#include "nlsabc/initial.hpp"
#include "nlsabc/physics.hpp"
#include "nlsabc/tridiagonal.hpp"

namespace nlsabc {

struct SolverSettings {
    double picard_tol = 1e-12;  // relative max-norm change between iterates
    int picard_max_iter = 50;
    double blowup_factor = 1e6;  // abort when max|psi| exceeds this times the initial max

    void validate() const {
        if (!(picard_tol > 0.0)) throw DomainError("solver: picard_tol must be positive");
        if (picard_max_iter < 1) throw DomainError("solver: picard_max_iter must be >= 1");
        if (!(blowup_factor > 1.0)) throw DomainError("solver: blowup_factor must exceed 1");
    }

    bool operator==(const SolverSettings&) const = default;
};

struct SimulationConfig {
    PhysicalParams physics;
    Grid grid;
    NonlinearitySpec nonlinearity;
    PotentialSpec potential;
    InitialCondition initial;
    BoundarySpec boundary;
    SolverSettings solver;

    void validate() const {
        physics.validate();
        make_grid(grid.x_left, grid.x_right, grid.intervals, grid.dt, grid.steps);
        if (std::abs(grid.dx * grid.intervals - (grid.x_right - grid.x_left)) >
            4.0 * std::numeric_limits<double>::epsilon() * std::abs(grid.x_right - grid.x_left) + 1e-300)
            throw DomainError("grid: dx inconsistent with domain and J");
        if (!std::isfinite(grid.t_final())) throw DomainError("grid: final time is not finite");
        potential.validate();
        initial.validate();
        boundary.validate();
        solver.validate();
    }

    /// True when the frozen coefficient cannot depend on the iterate.
    bool linear() const { return nonlinearity.kind == NonlinearityKind::none || physics.g == 0.0; }

    bool operator==(const SimulationConfig&) const = default;
};

namespace detail {

inline void require_same_shape(const WaveField& a, const WaveField& b, const Grid& grid) {
    if (a.intervals() != grid.intervals || b.intervals() != grid.intervals)
        throw DomainError("assemble: field size does not match grid");
}

inline void place_row(BandedSystem& sys, std::size_t r, const StencilRow& row) {
    if (r > 0) sys.lower[r] = row.lo;
    sys.diag[r] = row.mid;
    if (r + 1 < sys.size()) sys.upper[r] = row.hi;
    sys.rhs[r] = row.rhs;
}

// u_{s+1} - u_{s-1} = 0
inline StencilRow neumann_row() { return {Complex(-1.0), Complex(0.0), Complex(1.0), Complex(0.0)}; }

}  // namespace detail

/**
 * Time stepper for one configuration. Caches the potential on the grid.
 *
 * Unknown layout is u[r] = psi_{r-1}^{n+1}, r = 0 .. J+2. Rows 1 .. J+1 carry
 * the interior Crank-Nicolson equations at j = 0 .. J. The two boundary
 * equations live on the ghost rows: each one spans (s-1, s, s+1) like the
 * interior row at s, so it is combined with that row to cancel the far
 * neighbour and the whole matrix stays tridiagonal.
 */
class Propagator {
public:
    explicit Propagator(SimulationConfig config) : config_(std::move(config)) {
        config_.validate();
        const int J = config_.grid.intervals;
        potential_.resize(static_cast<std::size_t>(J) + 1);
        for (int j = 0; j <= J; ++j) potential_[static_cast<std::size_t>(j)] =
            eval_potential(config_.potential, config_.grid.x(j));
    }

    const SimulationConfig& config() const { return config_; }

    /// V_j + g f(|(iterate_j + old_j)/2|^2)
    double coupling(int j, const WaveField& old_level, const WaveField& iterate) const {
        double w = potential_[static_cast<std::size_t>(j)];
        if (!config_.linear()) {
            const double rho = std::norm(0.5 * (iterate(j) + old_level(j)));
            w += config_.physics.g * eval_nonlinearity(config_.nonlinearity, rho);
        }
        return w;
    }

    BandedSystem assemble(const WaveField& old_level, const WaveField& iterate) const {
        const Grid& grid = config_.grid;
        detail::require_same_shape(old_level, iterate, grid);
        if (!old_level.all_finite() || !iterate.all_finite())
            throw DomainError("assemble: non-finite input field");

        const int J = grid.intervals;
        const std::size_t n = grid.storage_size();
        BandedSystem sys(n);

        auto old_around = [&](int s) { return OldValues{old_level(s - 1), old_level(s), old_level(s + 1)}; };

        std::vector<StencilRow> interior(static_cast<std::size_t>(J) + 1);
        for (int j = 0; j <= J; ++j) {
            interior[static_cast<std::size_t>(j)] =
                interior_row(config_.physics, grid, coupling(j, old_level, iterate), old_around(j));
            detail::place_row(sys, static_cast<std::size_t>(j) + 1, interior[static_cast<std::size_t>(j)]);
        }

        const BoundarySpec& bc = config_.boundary;
        if (bc.order == BoundaryOrder::dirichlet_zero) {
            // psi_{-1} = psi_0 = 0 and psi_J = psi_{J+1} = 0
            for (std::size_t r : {std::size_t{0}, std::size_t{1}, n - 2, n - 1})
                detail::place_row(sys, r, {Complex{}, Complex(1.0), Complex{}, Complex{}});
            return sys;
        }

        auto edge_row = [&](Side side) {
            const int s = side == Side::left ? 0 : J;
            if (bc.order == BoundaryOrder::neumann_zero) return detail::neumann_row();
            return boundary_row(bc.order, side, bc.k0(side), config_.physics, grid,
                                coupling(s, old_level, iterate), old_around(s));
        };

        {
            const StencilRow b = edge_row(Side::left);
            const StencilRow& c = interior.front();
            // c.hi * b - b.hi * c has no u_1 term
            sys.diag[0] = c.hi * b.lo - b.hi * c.lo;
            sys.upper[0] = c.hi * b.mid - b.hi * c.mid;
            sys.rhs[0] = c.hi * b.rhs - b.hi * c.rhs;
        }
        {
            const StencilRow b = edge_row(Side::right);
            const StencilRow& c = interior.back();
            // c.lo * b - b.lo * c has no u_{J-1} term
            sys.lower[n - 1] = c.lo * b.mid - b.lo * c.mid;
            sys.diag[n - 1] = c.lo * b.hi - b.lo * c.hi;
            sys.rhs[n - 1] = c.lo * b.rhs - b.lo * c.rhs;
        }
        return sys;
    }

    struct StepResult {
        WaveField field;
        int iterations = 0;
    };

    /// One time level by Picard iteration started from the old level.
    StepResult step(const WaveField& old_level) const {
        const long next = old_level.time_index() + 1;
        if (!old_level.all_finite()) throw ConvergenceError(next, "non-finite field");

        WaveField iterate = old_level;
        for (int k = 1; k <= config_.solver.picard_max_iter; ++k) {
            const BandedSystem sys = assemble(old_level, iterate);
            std::vector<Complex> u = solve_banded(sys);

            double change = 0.0;
            double size = 0.0;
            for (std::size_t r = 0; r < u.size(); ++r) {
                change = std::max(change, std::abs(u[r] - iterate.storage()[r]));
                size = std::max(size, std::abs(u[r]));
            }
            WaveField candidate(std::move(u), next);
            if (!candidate.all_finite()) throw ConvergenceError(next, "non-finite field");
            if (config_.linear() || change <= config_.solver.picard_tol * size)
                return {std::move(candidate), k};
            iterate = std::move(candidate);
        }
        throw ConvergenceError(next, "Picard iteration did not converge in " +
                                         std::to_string(config_.solver.picard_max_iter) +
                                         " iterations");
    }

    /// Initial level with the reflective baselines' constraints imposed.
    WaveField initial_level() const {
        WaveField psi = eval_initial(config_.initial, config_.grid);
        const int J = config_.grid.intervals;
        switch (config_.boundary.order) {
            case BoundaryOrder::dirichlet_zero:
                psi(-1) = psi(0) = psi(J) = psi(J + 1) = Complex{};
                break;
            case BoundaryOrder::neumann_zero:
                psi(-1) = psi(1);
                psi(J + 1) = psi(J - 1);
                break;
            default: break;
        }
        return psi;
    }

private:
    SimulationConfig config_;
    std::vector<double> potential_;
};

inline BandedSystem assemble_system(const WaveField& psi_n, const WaveField& iterate,
                                    const SimulationConfig& config) {
    return Propagator(config).assemble(psi_n, iterate);
}

struct PicardResult {
    WaveField field;
    int iterations = 0;
};

inline PicardResult picard_step(const WaveField& psi_n, const SimulationConfig& config) {
    auto r = Propagator(config).step(psi_n);
    return {std::move(r.field), r.iterations};
}

/// What run_simulation records besides the final field.
struct Probes {
    std::vector<double> snapshot_times;
    long record_stride = 1;  // time series sampled every stride steps, plus the last step
    Oracle oracle;           // optional; enables boundary_error
    std::optional<int> probe_node;  // node for boundary value/error, default J
    // Called on every level n = 0 .. N in order.
    std::function<void(const WaveField&)> on_level;
};

struct Snapshot {
    double time = 0.0;
    WaveField field;
};

/// Time series of one run. All arrays have one entry per recorded level.
struct RunObservables {
    std::vector<double> times;
    std::vector<double> mass;
    std::vector<Complex> boundary_value;
    std::vector<double> boundary_error;  // NaN when no oracle was given
    std::vector<double> reflection;            // density measure
    std::vector<double> reflection_amplitude;  // amplitude measure
    std::vector<int> picard_iterations;  // 0 for the initial level
    std::vector<Snapshot> snapshots;
    bool has_oracle = false;
};

struct RunResult {
    RunObservables observables;
    WaveField final_field;
};

inline RunResult run_simulation(const SimulationConfig& config, const Probes& probes = {}) {
    const Propagator prop(config);
    const Grid& grid = prop.config().grid;
    const int node = probes.probe_node.value_or(grid.intervals);
    if (node < 0 || node > grid.intervals) throw DomainError("probe node outside the grid");
    const long stride = std::max(1L, probes.record_stride);

    std::vector<long> snapshot_steps;
    for (double t : probes.snapshot_times) {
        if (t < 0.0 || t > grid.t_final() + 0.5 * grid.dt)
            throw DomainError("snapshot time outside the run");
        snapshot_steps.push_back(std::lround(t / grid.dt));
    }

    RunResult result;
    RunObservables& obs = result.observables;
    obs.has_oracle = static_cast<bool>(probes.oracle);

    const WaveField psi0 = prop.initial_level();
    const double initial_max = psi0.max_abs();
    const bool have_reference = amplitude_sum(psi0) > 0.0;

    auto record = [&](const WaveField& psi, int iterations) {
        const long n = psi.time_index();
        if (probes.on_level) probes.on_level(psi);
        for (long s : snapshot_steps)
            if (s == n) obs.snapshots.push_back({grid.t(n), psi});
        if (n % stride != 0 && n != grid.steps) return;
        const double t = grid.t(n);
        obs.times.push_back(t);
        obs.mass.push_back(mass(psi, grid));
        obs.boundary_value.push_back(psi(node));
        obs.boundary_error.push_back(obs.has_oracle
                                         ? std::abs(probes.oracle(grid.x(node), t) - psi(node))
                                         : std::numeric_limits<double>::quiet_NaN());
        obs.reflection.push_back(have_reference ? reflection_ratio(psi, psi0) : 0.0);
        obs.reflection_amplitude.push_back(
            have_reference ? reflection_ratio(psi, psi0, ReflectionMeasure::amplitude) : 0.0);
        obs.picard_iterations.push_back(iterations);
    };

    record(psi0, 0);
    WaveField psi = psi0;
    for (long n = 0; n < grid.steps; ++n) {
        auto next = prop.step(psi);
        psi = std::move(next.field);
        const double amp = psi.max_abs();
        if (initial_max > 0.0 && amp > config.solver.blowup_factor * initial_max)
            throw BlowUpError(psi.time_index(), amp);
        record(psi, next.iterations);
    }
    result.final_field = std::move(psi);
    return result;
}

}  // namespace nlsabc
