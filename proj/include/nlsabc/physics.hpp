#pragma once

#include <algorithm>
#include <functional>
#include <cmath>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nlsabc/errors.hpp"

namespace nlsabc {

/**
 * Constants of i*hbar*psi_t = -hbar^2/(2m) psi_xx + (V + g f(|psi|^2)) psi.
 *
 * The default profile hbar = 1, mass = 1/2 turns the kinetic prefactor into
 * one, i.e. i psi_t = -psi_xx + g f psi + V psi.
 */
struct PhysicalParams {
    double hbar = 1.0;
    double mass = 0.5;
    double g = 0.0;

    /// hbar^2 / (2m), the coefficient of -psi_xx.
    double kinetic() const { return hbar * hbar / (2.0 * mass); }

    void validate() const {
        if (!(hbar > 0.0)) throw DomainError("physics: hbar must be positive");
        if (!(mass > 0.0)) throw DomainError("physics: mass must be positive");
        if (!std::isfinite(g)) throw DomainError("physics: g must be finite");
    }

    bool operator==(const PhysicalParams&) const = default;
};

enum class NonlinearityKind { none, cubic, quintic };

struct NonlinearitySpec {
    NonlinearityKind kind = NonlinearityKind::none;
    bool operator==(const NonlinearitySpec&) const = default;
};

/// f(rho) with rho = |psi|^2: none -> 0, cubic -> rho, quintic -> rho^2.
inline double eval_nonlinearity(const NonlinearitySpec& f, double rho) {
    if (rho < 0.0) throw DomainError("nonlinearity: density must be non-negative");
    switch (f.kind) {
        case NonlinearityKind::none: return 0.0;
        case NonlinearityKind::cubic: return rho;
        case NonlinearityKind::quintic: return rho * rho;
    }
    return 0.0;
}

enum class PotentialKind { zero, gaussian, tabulated };

struct PotentialSpec {
    PotentialKind kind = PotentialKind::zero;
    // gaussian: amplitude * exp(-width * (x - center)^2)
    double amplitude = 0.0;
    double width = 0.0;
    double center = 0.0;
    // tabulated: piecewise linear through (sample_x[i], sample_v[i]), sample_x increasing
    std::vector<double> sample_x;
    std::vector<double> sample_v;

    static PotentialSpec zero() { return {}; }
    static PotentialSpec gaussian(double amplitude, double width, double center) {
        PotentialSpec v;
        v.kind = PotentialKind::gaussian;
        v.amplitude = amplitude;
        v.width = width;
        v.center = center;
        return v;
    }
    static PotentialSpec tabulated(std::vector<double> xs, std::vector<double> vs) {
        PotentialSpec v;
        v.kind = PotentialKind::tabulated;
        v.sample_x = std::move(xs);
        v.sample_v = std::move(vs);
        v.validate();
        return v;
    }

    void validate() const {
        if (kind == PotentialKind::gaussian && !(width >= 0.0))
            throw DomainError("potential: gaussian width must be non-negative");
        if (kind == PotentialKind::tabulated) {
            if (sample_x.size() < 2 || sample_x.size() != sample_v.size())
                throw DomainError("potential: tabulated needs matching x/v arrays of length >= 2");
            if (!std::is_sorted(sample_x.begin(), sample_x.end(), std::less_equal<>()))
                throw DomainError("potential: tabulated x must be strictly increasing");
        }
    }

    bool operator==(const PotentialSpec&) const = default;
};

inline double eval_potential(const PotentialSpec& v, double x) {
    switch (v.kind) {
        case PotentialKind::zero: return 0.0;
        case PotentialKind::gaussian: {
            const double d = x - v.center;
            return v.amplitude * std::exp(-v.width * d * d);
        }
        case PotentialKind::tabulated: {
            const auto& xs = v.sample_x;
            // one rounding unit of slack so grid endpoints computed as x_l + J*dx still hit
            const double slack = 1e-12 * std::max(1.0, std::abs(xs.back() - xs.front()));
            if (x < xs.front() - slack || x > xs.back() + slack)
                throw DomainError("potential: x = " + std::to_string(x) +
                                  " outside tabulated range");
            const double xc = std::clamp(x, xs.front(), xs.back());
            auto hi = std::upper_bound(xs.begin(), xs.end(), xc);
            if (hi == xs.end()) return v.sample_v.back();
            const auto i = static_cast<std::size_t>(hi - xs.begin());
            const double w = (xc - xs[i - 1]) / (xs[i] - xs[i - 1]);
            return (1.0 - w) * v.sample_v[i - 1] + w * v.sample_v[i];
        }
    }
    return 0.0;
}

inline std::string_view to_string(NonlinearityKind k) {
    switch (k) {
        case NonlinearityKind::none: return "none";
        case NonlinearityKind::cubic: return "cubic";
        case NonlinearityKind::quintic: return "quintic";
    }
    return "?";
}

inline std::string_view to_string(PotentialKind k) {
    switch (k) {
        case PotentialKind::zero: return "zero";
        case PotentialKind::gaussian: return "gaussian";
        case PotentialKind::tabulated: return "tabulated";
    }
    return "?";
}

}  // namespace nlsabc
