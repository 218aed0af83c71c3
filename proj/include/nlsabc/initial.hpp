#pragma once

#include <cmath>
#include <string_view>

#include "nlsabc/errors.hpp"
#include "nlsabc/grid.hpp"

namespace nlsabc {

/**
 * Bright soliton of the focusing cubic equation i psi_t = -psi_xx + g |psi|^2 psi
 * (hbar = 1, m = 1/2), translated so the envelope peak sits at x0 when t = 0:
 *
 *   A sqrt(-2/g) sech(A(x-x0) - 2ABt) exp(iB(x-x0) + i(A^2-B^2)t)
 *
 * The envelope moves with speed 2B. Requires g < 0.
 */
inline Complex exact_soliton(double x, double t, double A, double B, double g, double x0) {
    if (!(g < 0.0)) throw DomainError("soliton: requires focusing nonlinearity g < 0");
    const double xi = x - x0;
    const double envelope = A * std::sqrt(-2.0 / g) / std::cosh(A * xi - 2.0 * A * B * t);
    const double phase = B * xi + (A * A - B * B) * t;
    return std::polar(envelope, phase);
}

enum class InitialKind { bright_soliton, chirped_gaussian, gaussian };

struct InitialCondition {
    InitialKind kind = InitialKind::gaussian;
    // bright_soliton: exact_soliton(x, 0, A, B, g, x0)
    double A = 1.0;
    double B = 0.0;
    double g = -2.0;
    // bright_soliton and gaussian centre
    double x0 = 0.0;
    // chirped_gaussian: exp(-x^2 + i k0 x)
    double k0 = 0.0;
    // gaussian: exp(-alpha (x - x0)^2)
    double alpha = 1.0;

    static InitialCondition bright_soliton(double A, double B, double x0, double g = -2.0) {
        InitialCondition ic;
        ic.kind = InitialKind::bright_soliton;
        ic.A = A;
        ic.B = B;
        ic.x0 = x0;
        ic.g = g;
        return ic;
    }
    static InitialCondition chirped_gaussian(double k0) {
        InitialCondition ic;
        ic.kind = InitialKind::chirped_gaussian;
        ic.k0 = k0;
        return ic;
    }
    static InitialCondition gaussian(double alpha, double x0) {
        InitialCondition ic;
        ic.kind = InitialKind::gaussian;
        ic.alpha = alpha;
        ic.x0 = x0;
        return ic;
    }

    void validate() const {
        if (kind == InitialKind::gaussian && !(alpha > 0.0))
            throw DomainError("initial: gaussian alpha must be positive");
        if (kind == InitialKind::bright_soliton && !(g < 0.0))
            throw DomainError("initial: soliton requires g < 0");
    }

    Complex operator()(double x) const {
        switch (kind) {
            case InitialKind::bright_soliton: return exact_soliton(x, 0.0, A, B, g, x0);
            case InitialKind::chirped_gaussian: return std::exp(Complex(-x * x, k0 * x));
            case InitialKind::gaussian: {
                const double d = x - x0;
                return {std::exp(-alpha * d * d), 0.0};
            }
        }
        return {};
    }

    bool operator==(const InitialCondition&) const = default;
};

/// Samples the initial data on every node, ghosts included.
inline WaveField eval_initial(const InitialCondition& ic, const Grid& grid) {
    ic.validate();
    WaveField field(grid.intervals, 0);
    for (int j = -1; j <= grid.intervals + 1; ++j) field(j) = ic(grid.x(j));
    return field;
}

inline std::string_view to_string(InitialKind k) {
    switch (k) {
        case InitialKind::bright_soliton: return "bright_soliton";
        case InitialKind::chirped_gaussian: return "chirped_gaussian";
        case InitialKind::gaussian: return "gaussian";
    }
    return "?";
}

}  // namespace nlsabc
