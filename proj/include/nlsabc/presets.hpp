#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "nlsabc/solver.hpp"

namespace nlsabc {

enum class Preset { example1, example2, example3 };

inline constexpr std::array<std::string_view, 3> preset_names{"example1", "example2", "example3"};

inline std::string_view to_string(Preset p) { return preset_names[static_cast<std::size_t>(p)]; }

inline std::optional<Preset> preset_from_name(std::string_view name) {
    for (std::size_t i = 0; i < preset_names.size(); ++i)
        if (preset_names[i] == name) return static_cast<Preset>(i);
    return std::nullopt;
}

/**
 * The three reference experiments, all with hbar = 1, m = 1/2 and the
 * third-order nonlinear boundary condition.
 *
 *  example1  cubic focusing (g = -2) bright soliton sech(x-15) e^{2i(x-15)} on
 *            [0, 30], dx = 0.1, dt = 0.01, k0 = 2, T = 6.
 *  example2  quintic focusing (g = -2) chirped Gaussian e^{-x^2 + 8ix} on
 *            [-5, 5], dx = 0.01, dt = 0.001, k0 = 8, T = 0.7.
 *  example3  cubic repulsive (g = 2) Gaussian e^{-0.1(x-15)^2} in the
 *            potential e^{-0.5(x-15)^2} on [0, 30], dx = 0.1, dt = 0.0375,
 *            k0 = 1.75, T = 6.
 */
inline SimulationConfig make_preset(Preset p) {
    SimulationConfig c;
    switch (p) {
        case Preset::example1:
            c.physics = {1.0, 0.5, -2.0};
            c.grid = make_grid(0.0, 30.0, 300, 0.01, 600);
            c.nonlinearity.kind = NonlinearityKind::cubic;
            c.potential = PotentialSpec::zero();
            c.initial = InitialCondition::bright_soliton(1.0, 2.0, 15.0, -2.0);
            c.boundary = {BoundaryOrder::abc3_nonlinear, 2.0, 2.0};
            break;
        case Preset::example2:
            c.physics = {1.0, 0.5, -2.0};
            c.grid = make_grid(-5.0, 5.0, 1000, 0.001, 700);
            c.nonlinearity.kind = NonlinearityKind::quintic;
            c.potential = PotentialSpec::zero();
            c.initial = InitialCondition::chirped_gaussian(8.0);
            c.boundary = {BoundaryOrder::abc3_nonlinear, 8.0, 8.0};
            break;
        case Preset::example3:
            c.physics = {1.0, 0.5, 2.0};
            c.grid = make_grid(0.0, 30.0, 300, 0.0375, 160);
            c.nonlinearity.kind = NonlinearityKind::cubic;
            c.potential = PotentialSpec::gaussian(1.0, 0.5, 15.0);
            c.initial = InitialCondition::gaussian(0.1, 15.0);
            c.boundary = {BoundaryOrder::abc3_nonlinear, 1.75, 1.75};
            break;
    }
    return c;
}

/// Exact solution of example1 (and of any bright-soliton configuration).
inline Oracle soliton_oracle(const InitialCondition& ic) {
    if (ic.kind != InitialKind::bright_soliton) throw DomainError("oracle: initial data is not a soliton");
    return [ic](double x, double t) { return exact_soliton(x, t, ic.A, ic.B, ic.g, ic.x0); };
}

}  // namespace nlsabc
