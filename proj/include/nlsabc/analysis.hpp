#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <span>
#include <utility>

#include "nlsabc/errors.hpp"
#include "nlsabc/grid.hpp"

namespace nlsabc {

/// Reference solution sampled as psi(x, t).
using Oracle = std::function<Complex(double x, double t)>;

/// Discrete mass sum_{j=0..J} |psi_j|^2 dx.
inline double mass(const WaveField& psi, const Grid& grid) {
    double sum = 0.0;
    for (const auto& z : psi.interior()) sum += std::norm(z);
    return sum * grid.dx;
}

/// Sum over physical nodes of |psi_j|.
inline double amplitude_sum(const WaveField& psi) {
    double sum = 0.0;
    for (const auto& z : psi.interior()) sum += std::abs(z);
    return sum;
}

/// Sum over physical nodes of |psi_j|^2.
inline double density_sum(const WaveField& psi) {
    double sum = 0.0;
    for (const auto& z : psi.interior()) sum += std::norm(z);
    return sum;
}

/// How reflection_ratio weighs what is left in the domain.
enum class ReflectionMeasure {
    density,    // sum_j |psi_j^n|^2 / sum_j |psi_j^0|^2
    amplitude,  // sum_j |psi_j^n|   / sum_j |psi_j^0|
};

/**
 * Fraction of the initial wave still inside the domain, summed over the
 * physical nodes j = 0..J. r = 0 means the wave left completely, r = 1 that
 * it was fully reflected. Invariant under psi -> c psi for both measures.
 */
inline double reflection_ratio(const WaveField& psi_n, const WaveField& psi_0,
                               ReflectionMeasure measure = ReflectionMeasure::density) {
    if (psi_n.intervals() != psi_0.intervals())
        throw DomainError("reflection ratio: fields on different grids");
    const auto sum = measure == ReflectionMeasure::density ? density_sum : amplitude_sum;
    const double reference = sum(psi_0);
    if (!(reference > 0.0)) throw DomainError("reflection ratio: initial field is identically zero");
    return sum(psi_n) / reference;
}

/// Order of accuracy from errors on meshes refined by a factor of two.
inline double convergence_order(double error_coarse, double error_fine) {
    if (!(error_coarse > 0.0) || !(error_fine > 0.0))
        throw DomainError("convergence order: errors must be positive");
    return std::log2(error_coarse / error_fine);
}

/**
 * Streaming form of the space-time L1 error
 *
 *   E1 = 1/((J+1)(N+1)) sum_{j=0..J} sum_{n=0..N} |psi_j^n - psi_exa(x_j, t^n)|
 *
 * Feed levels n = 0, 1, ... in order; value() is E1 over the levels seen.
 */
class L1Accumulator {
public:
    L1Accumulator(const Grid& grid, Oracle oracle) : grid_(grid), oracle_(std::move(oracle)) {}

    void add(const WaveField& psi) {
        if (psi.intervals() != grid_.intervals) throw DomainError("l1 error: shape mismatch");
        const double t = grid_.t(psi.time_index());
        for (int j = 0; j <= grid_.intervals; ++j)
            sum_ += std::abs(psi(j) - oracle_(grid_.x(j), t));
        ++levels_;
    }

    long levels() const { return levels_; }

    double value() const {
        if (levels_ == 0) throw DomainError("l1 error: no levels");
        return sum_ / (static_cast<double>(grid_.intervals + 1) * static_cast<double>(levels_));
    }

private:
    Grid grid_;
    Oracle oracle_;
    double sum_ = 0.0;
    long levels_ = 0;
};

/// E1 over a complete sequence of levels (each level's time_index gives t^n).
inline double l1_error(std::span<const WaveField> levels, const Grid& grid, const Oracle& oracle) {
    L1Accumulator acc(grid, oracle);
    for (const auto& level : levels) acc.add(level);
    return acc.value();
}

/// E1 between two sampled sequences of equal shape.
inline double l1_error(std::span<const WaveField> numeric, std::span<const WaveField> reference) {
    if (numeric.size() != reference.size() || numeric.empty())
        throw DomainError("l1 error: shape mismatch");
    double sum = 0.0;
    const int J = numeric.front().intervals();
    for (std::size_t n = 0; n < numeric.size(); ++n) {
        if (numeric[n].intervals() != J || reference[n].intervals() != J)
            throw DomainError("l1 error: shape mismatch");
        for (int j = 0; j <= J; ++j) sum += std::abs(numeric[n](j) - reference[n](j));
    }
    return sum / (static_cast<double>(J + 1) * static_cast<double>(numeric.size()));
}

/**
 * Energy functional of the focusing quintic problem,
 *
 *   E = ||psi_x||^2 - (2/3) ||psi||_6^6,
 *
 * by rectangle sums over physical nodes. Derivatives are centred inside and
 * second-order one-sided at the two end nodes. E < 0 predicts blow-up.
 */
inline double initial_energy(const WaveField& psi, const Grid& grid) {
    const int J = grid.intervals;
    if (psi.intervals() != J) throw DomainError("energy: field/grid mismatch");
    const double dx = grid.dx;
    double gradient = 0.0;
    double sixth = 0.0;
    for (int j = 0; j <= J; ++j) {
        Complex d;
        if (j == 0)
            d = (-3.0 * psi(0) + 4.0 * psi(1) - psi(2)) / (2.0 * dx);
        else if (j == J)
            d = (3.0 * psi(J) - 4.0 * psi(J - 1) + psi(J - 2)) / (2.0 * dx);
        else
            d = (psi(j + 1) - psi(j - 1)) / (2.0 * dx);
        gradient += std::norm(d);
        const double rho = std::norm(psi(j));
        sixth += rho * rho * rho;
    }
    return (gradient - 2.0 / 3.0 * sixth) * dx;
}

}  // namespace nlsabc
