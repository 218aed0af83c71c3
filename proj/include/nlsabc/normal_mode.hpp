#pragma once

#include <cmath>

#include "nlsabc/errors.hpp"
#include "nlsabc/grid.hpp"
#include "nlsabc/physics.hpp"

namespace nlsabc {

/// V + f = (v1 + f1) + i (v2 + f2), linearised at the boundary.
struct PotentialDecomposition {
    double v1 = 0.0;
    double v2 = 0.0;
    double f1 = 0.0;
    double f2 = 0.0;

    Complex value() const { return {v1 + f1, v2 + f2}; }
};

struct NormalModeResult {
    int order = 2;
    Complex k;  // spatial root
    Complex s;  // temporal root
    bool wellposed = false;
};

/// Slack on Re(s) <= 0.
inline constexpr double wellposed_slack = 1e-12;

/**
 * Plane-wave roots e^{st + kx} shared by the interior equation and the
 * right-boundary condition of the given order (2 or 3).
 *
 *   order 2: k = i sqrt(2m/hbar) k0,  s = -i k0^2 - i(v1+f1)/hbar + (v2+f2)/hbar
 *   order 3: k = i k0,                s = -i hbar k0^2/(2m) - i(v1+f1)/hbar + (v2+f2)/hbar
 *
 * The boundary is well posed when Re(s) <= 0.
 */
inline NormalModeResult normal_mode_roots(int order, double k0, const PotentialDecomposition& decomp,
                                          const PhysicalParams& phys) {
    if (order != 2 && order != 3) throw DomainError("normal mode: order must be 2 or 3");
    if (!(k0 > 0.0)) throw DomainError("normal mode: k0 must be positive");
    phys.validate();

    const double hbar = phys.hbar;
    const double m = phys.mass;
    const Complex I(0.0, 1.0);
    const Complex potential_part = -I * (decomp.v1 + decomp.f1) / hbar + (decomp.v2 + decomp.f2) / hbar;

    NormalModeResult r;
    r.order = order;
    if (order == 2) {
        r.k = I * std::sqrt(2.0 * m / hbar) * k0;
        r.s = -I * k0 * k0 + potential_part;
    } else {
        r.k = I * k0;
        r.s = -I * hbar / (2.0 * m) * k0 * k0 + potential_part;
    }
    r.wellposed = r.s.real() <= wellposed_slack;
    return r;
}

/// Interior dispersion relation i hbar s + hbar^2 k^2/(2m) - (V + f).
inline Complex interior_dispersion_residual(Complex k, Complex s, const PotentialDecomposition& d,
                                            const PhysicalParams& phys) {
    const Complex I(0.0, 1.0);
    return I * phys.hbar * s + phys.kinetic() * k * k - d.value();
}

/// Right-boundary dispersion relation of the given order, written as a residual.
inline Complex boundary_dispersion_residual(int order, double k0, Complex k, Complex s,
                                            const PotentialDecomposition& d, const PhysicalParams& phys) {
    const Complex I(0.0, 1.0);
    const double hbar = phys.hbar;
    const double m = phys.mass;
    if (order == 2)
        return I * hbar * s + I * hbar * std::sqrt(2.0 * hbar / m) * k0 * k + hbar * k0 * k0 - d.value();
    if (order == 3)
        return I * hbar * s +
               hbar * hbar * k0 * k0 / (2.0 * m) * (3.0 * I * k + k0) / (I * k + 3.0 * k0) - d.value();
    throw DomainError("normal mode: order must be 2 or 3");
}

/// hbar^2 k^2/(2m) - hbar^2 k0^2/(2m) (3ik + k0)/(ik + 3k0): the third-order
/// spatial relation after eliminating s. Vanishes at k = i k0.
inline Complex third_order_spatial_residual(Complex k, double k0, const PhysicalParams& phys) {
    const Complex I(0.0, 1.0);
    const double c = phys.kinetic();
    return c * k * k - c * k0 * k0 * (3.0 * I * k + k0) / (I * k + 3.0 * k0);
}

}  // namespace nlsabc
