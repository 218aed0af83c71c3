#pragma once

#include <cmath>
#include <string_view>

#include "nlsabc/errors.hpp"
#include "nlsabc/grid.hpp"
#include "nlsabc/physics.hpp"

namespace nlsabc {

enum class BoundaryOrder { abc1_linear, abc2_nonlinear, abc3_nonlinear, dirichlet_zero, neumann_zero };

enum class Side { left, right };

/// -1 at the left boundary, +1 at the right one.
constexpr double branch_sign(Side side) { return side == Side::left ? -1.0 : 1.0; }

struct BoundarySpec {
    BoundaryOrder order = BoundaryOrder::abc3_nonlinear;
    double k0_left = 1.0;
    double k0_right = 1.0;

    double k0(Side side) const { return side == Side::left ? k0_left : k0_right; }

    bool absorbing() const {
        return order == BoundaryOrder::abc1_linear || order == BoundaryOrder::abc2_nonlinear ||
               order == BoundaryOrder::abc3_nonlinear;
    }

    void validate() const {
        if (absorbing() && !(k0_left > 0.0 && k0_right > 0.0))
            throw DomainError("boundary: wavenumber parameter k0 must be positive");
    }

    bool operator==(const BoundarySpec&) const = default;
};

/// One equation in the three consecutive unknowns u_{s-1}, u_s, u_{s+1} of
/// the new time level.
struct StencilRow {
    Complex lo;
    Complex mid;
    Complex hi;
    Complex rhs;
};

/// Old-level values around the row's centre node.
struct OldValues {
    Complex lo;
    Complex mid;
    Complex hi;
};

/**
 * Crank-Nicolson row at an interior node with the potential-plus-nonlinear
 * coefficient frozen at `coupling`:
 *
 *   i hbar (u - p)/dt = -hbar^2/(2m) D2 h + coupling h,  h = (u + p)/2
 *
 * written as  -K/(2dx^2) D2 u + (coupling/2 - i hbar/dt) u = rhs.
 */
inline StencilRow interior_row(const PhysicalParams& phys, const Grid& grid, double coupling,
                               const OldValues& p) {
    const double c = phys.kinetic() / (2.0 * grid.dx * grid.dx);
    const Complex iht(0.0, phys.hbar / grid.dt);
    StencilRow row;
    row.lo = -c;
    row.hi = -c;
    row.mid = 2.0 * c + 0.5 * coupling - iht;
    row.rhs = c * (p.hi - 2.0 * p.mid + p.lo) - (0.5 * coupling + iht) * p.mid;
    return row;
}

/**
 * Discrete absorbing boundary equation centred on the boundary node s.
 *
 * Spatial derivatives are centred differences across the ghost node, and
 * every term except the time differences is evaluated at the half level
 * h = (u + p)/2. `coupling` is V_s + g f(rho*) frozen at the Picard point.
 *
 *  abc1: i sqrt(hbar/2m) h_x + sign k0 h = 0
 *  abc2: i hbar u_t + sign i hbar sqrt(2hbar/m) k0 h_x + (hbar k0^2 - W) h = 0
 *  abc3: (3i hbar^2 k0^2/m - 2iW) h_x - 2 hbar u_xt
 *        + sign 6i hbar k0 u_t + sign (hbar^2 k0^3/m - 6 k0 W) h = 0
 *
 * Only the absorbing orders have a boundary equation of this form.
 */
inline StencilRow boundary_row(BoundaryOrder order, Side side, double k0, const PhysicalParams& phys,
                               const Grid& grid, double coupling, const OldValues& p) {
    const double sign = branch_sign(side);
    const double dx = grid.dx;
    const double dt = grid.dt;
    const double hbar = phys.hbar;
    const double m = phys.mass;
    const Complex I(0.0, 1.0);

    // Generic form: a * (h_{s+1} - h_{s-1})/(2dx) + e * (u - p)_x,t-difference
    //             + q * (u_s - p_s)/dt + b * h_s = 0
    Complex a{};  // coefficient of the centred first derivative of h
    Complex e{};  // coefficient of (D u - D p)/(2 dx dt), the mixed derivative
    Complex q{};  // coefficient of (u_s - p_s)/dt
    Complex b{};  // coefficient of h_s

    switch (order) {
        case BoundaryOrder::abc1_linear:
            a = I * std::sqrt(hbar / (2.0 * m));
            b = sign * k0;
            break;
        case BoundaryOrder::abc2_nonlinear:
            q = I * hbar;
            a = sign * I * hbar * std::sqrt(2.0 * hbar / m) * k0;
            b = hbar * k0 * k0 - coupling;
            break;
        case BoundaryOrder::abc3_nonlinear:
            a = 3.0 * I * hbar * hbar * k0 * k0 / m - 2.0 * I * coupling;
            e = -2.0 * hbar;
            q = sign * 6.0 * I * hbar * k0;
            b = sign * (hbar * hbar * k0 * k0 * k0 / m - 6.0 * k0 * coupling);
            break;
        default:
            throw DomainError("boundary: reflective baselines have no absorbing row");
    }

    const Complex da = a / (4.0 * dx);   // h_x -> (u_{s+1} - u_{s-1} + p_{s+1} - p_{s-1})/(4dx)
    const Complex de = e / (2.0 * dx * dt);
    StencilRow row;
    row.hi = da + de;
    row.lo = -da - de;
    row.mid = q / dt + 0.5 * b;
    row.rhs = -(da - de) * (p.hi - p.lo) + (q / dt - 0.5 * b) * p.mid;
    return row;
}

inline std::string_view to_string(BoundaryOrder o) {
    switch (o) {
        case BoundaryOrder::abc1_linear: return "abc1";
        case BoundaryOrder::abc2_nonlinear: return "abc2";
        case BoundaryOrder::abc3_nonlinear: return "abc3";
        case BoundaryOrder::dirichlet_zero: return "dirichlet";
        case BoundaryOrder::neumann_zero: return "neumann";
    }
    return "?";
}

}  // namespace nlsabc
