#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nlsabc/errors.hpp"

namespace nlsabc {

using Complex = std::complex<double>;

/**
 * Uniform space-time grid on [x_left, x_right].
 *
 * Physical nodes are x_0 = x_left .. x_J = x_right; the ghost nodes x_{-1}
 * and x_{J+1} sit one spacing outside and are closed by the boundary rows.
 */
struct Grid {
    double x_left = 0.0;
    double x_right = 1.0;
    int intervals = 4;  // J
    double dx = 0.25;
    double dt = 0.1;
    long steps = 1;  // N

    double x(int j) const { return x_left + j * dx; }
    double t(long n) const { return static_cast<double>(n) * dt; }
    double t_final() const { return t(steps); }

    /// Number of stored values per time level, ghosts included.
    std::size_t storage_size() const { return static_cast<std::size_t>(intervals) + 3; }

    bool operator==(const Grid&) const = default;
};

/// Smallest J for which the three-point boundary stencil stays clear of the
/// opposite boundary.
inline constexpr int min_intervals = 4;

inline Grid make_grid(double x_left, double x_right, int intervals, double dt, long steps) {
    if (!(std::isfinite(x_left) && std::isfinite(x_right)) || !(x_right > x_left))
        throw DomainError("grid: degenerate domain, need x_right > x_left");
    if (intervals < min_intervals)
        throw DomainError("grid: need at least " + std::to_string(min_intervals) + " intervals");
    if (!(dt > 0.0) || !std::isfinite(dt)) throw DomainError("grid: dt must be positive");
    if (steps < 1) throw DomainError("grid: need at least one time step");
    return Grid{x_left, x_right, intervals, (x_right - x_left) / intervals, dt, steps};
}

/// Number of intervals that realises spacing dx on [x_left, x_right]. Rejects
/// spacings that do not divide the domain.
inline int intervals_for_spacing(double x_left, double x_right, double dx) {
    if (!(dx > 0.0)) throw DomainError("grid: dx must be positive");
    const double ratio = (x_right - x_left) / dx;
    const double rounded = std::round(ratio);
    if (rounded < 1.0 || std::abs(ratio - rounded) > 1e-6 * std::max(1.0, ratio))
        throw DomainError("grid: dx does not divide the domain length");
    return static_cast<int>(rounded);
}

/// Number of steps of size dt that reaches t_final. Rejects non-commensurate
/// final times.
inline long steps_for_time(double t_final, double dt) {
    if (!(dt > 0.0)) throw DomainError("grid: dt must be positive");
    const double ratio = t_final / dt;
    const double rounded = std::round(ratio);
    if (rounded < 1.0 || std::abs(ratio - rounded) > 1e-6 * std::max(1.0, ratio))
        throw DomainError("grid: t_final is not a multiple of dt");
    return static_cast<long>(rounded);
}

/// Complex grid function at one time level, indexed j = -1 .. J+1.
class WaveField {
public:
    WaveField() = default;
    explicit WaveField(int intervals, long time_index = 0)
        : values_(static_cast<std::size_t>(intervals) + 3), time_index_(time_index) {}
    WaveField(std::vector<Complex> values, long time_index)
        : values_(std::move(values)), time_index_(time_index) {
        if (values_.size() < min_intervals + 3) throw DomainError("field: too few values");
    }

    int intervals() const { return static_cast<int>(values_.size()) - 3; }
    long time_index() const { return time_index_; }
    void set_time_index(long n) { time_index_ = n; }

    Complex& operator()(int j) { return values_[static_cast<std::size_t>(j + 1)]; }
    const Complex& operator()(int j) const { return values_[static_cast<std::size_t>(j + 1)]; }

    /// All stored values, ghosts first and last.
    std::span<Complex> storage() { return values_; }
    std::span<const Complex> storage() const { return values_; }

    /// Physical nodes j = 0 .. J.
    std::span<const Complex> interior() const {
        return std::span<const Complex>(values_).subspan(1, values_.size() - 2);
    }

    bool all_finite() const {
        return std::all_of(values_.begin(), values_.end(), [](const Complex& z) {
            return std::isfinite(z.real()) && std::isfinite(z.imag());
        });
    }

    double max_abs() const {
        double m = 0.0;
        for (const auto& z : values_) m = std::max(m, std::abs(z));
        return m;
    }

    bool operator==(const WaveField&) const = default;

private:
    std::vector<Complex> values_;
    long time_index_ = 0;
};

}  // namespace nlsabc
