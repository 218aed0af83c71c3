#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include "nlsabc/errors.hpp"
#include "nlsabc/grid.hpp"

namespace nlsabc {

/**
 * Square complex tridiagonal system A u = rhs.
 *
 * Row i reads lower[i]*u[i-1] + diag[i]*u[i] + upper[i]*u[i+1]; lower[0] and
 * upper[n-1] are stored but never referenced.
 */
struct BandedSystem {
    std::vector<Complex> lower;
    std::vector<Complex> diag;
    std::vector<Complex> upper;
    std::vector<Complex> rhs;

    BandedSystem() = default;
    explicit BandedSystem(std::size_t n) : lower(n), diag(n), upper(n), rhs(n) {}

    std::size_t size() const { return diag.size(); }

    /// Largest entry modulus of the matrix.
    double max_norm() const {
        double m = 0.0;
        for (std::size_t i = 0; i < size(); ++i) {
            m = std::max(m, std::abs(diag[i]));
            if (i > 0) m = std::max(m, std::abs(lower[i]));
            if (i + 1 < size()) m = std::max(m, std::abs(upper[i]));
        }
        return m;
    }

    bool all_finite() const {
        auto finite = [](const std::vector<Complex>& v) {
            return std::all_of(v.begin(), v.end(), [](const Complex& z) {
                return std::isfinite(z.real()) && std::isfinite(z.imag());
            });
        };
        return finite(lower) && finite(diag) && finite(upper) && finite(rhs);
    }

    /// Max-norm of A u - rhs.
    double residual(const std::vector<Complex>& u) const {
        double r = 0.0;
        const std::size_t n = size();
        for (std::size_t i = 0; i < n; ++i) {
            Complex row = diag[i] * u[i] - rhs[i];
            if (i > 0) row += lower[i] * u[i - 1];
            if (i + 1 < n) row += upper[i] * u[i + 1];
            r = std::max(r, std::abs(row));
        }
        return r;
    }
};

// Gaussian elimination with partial (row) pivoting restricted to the band, as
// in LAPACK's gtsv. Row swaps introduce one extra super-diagonal.
inline std::vector<Complex> solve_banded(const BandedSystem& system) {
    const std::size_t n = system.size();
    if (n < 3 || system.lower.size() != n || system.upper.size() != n || system.rhs.size() != n)
        throw DomainError("tridiagonal: inconsistent system size");

    std::vector<Complex> dl(system.lower.begin() + 1, system.lower.end());
    std::vector<Complex> d = system.diag;
    std::vector<Complex> du(system.upper.begin(), system.upper.end() - 1);
    std::vector<Complex> du2(n, Complex{});
    std::vector<Complex> b = system.rhs;

    const double tiny = std::numeric_limits<double>::epsilon() * static_cast<double>(n) *
                        std::max(system.max_norm(), std::numeric_limits<double>::min());

    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (std::abs(d[i]) >= std::abs(dl[i])) {
            if (std::abs(d[i]) <= tiny) throw SingularPivotError(i);
            const Complex mult = dl[i] / d[i];
            d[i + 1] -= mult * du[i];
            b[i + 1] -= mult * b[i];
            dl[i] = Complex{};
        } else {
            const Complex mult = d[i] / dl[i];
            d[i] = dl[i];
            const Complex tmp = d[i + 1];
            d[i + 1] = du[i] - mult * tmp;
            if (i + 2 < n) {
                du2[i] = du[i + 1];
                du[i + 1] = -mult * du2[i];
            }
            du[i] = tmp;
            std::swap(b[i], b[i + 1]);
            b[i + 1] -= mult * b[i];
        }
    }
    if (std::abs(d[n - 1]) <= tiny) throw SingularPivotError(n - 1);

    std::vector<Complex> x(n);
    x[n - 1] = b[n - 1] / d[n - 1];
    x[n - 2] = (b[n - 2] - du[n - 2] * x[n - 1]) / d[n - 2];
    for (std::size_t k = n - 2; k-- > 0;)
        x[k] = (b[k] - du[k] * x[k + 1] - du2[k] * x[k + 2]) / d[k];
    return x;
}

}  // namespace nlsabc
