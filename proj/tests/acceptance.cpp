// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Tolerances are fixed here.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "nlsabc/nlsabc.hpp"

using namespace nlsabc;

namespace {

int failures = 0;

void report(const std::string& id, bool pass, const std::string& detail) {
    std::printf("%s [%s] %s\n", pass ? "PASS" : "FAIL", id.c_str(), detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

void info(const std::string& detail) {
    std::printf("     %s\n", detail.c_str());
    std::fflush(stdout);
}

std::string fmt(const char* f, double a) {
    char buf[128];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

using Dense = std::vector<std::vector<Complex>>;

std::vector<Complex> dense_solve(Dense a, std::vector<Complex> b) {
    const std::size_t n = b.size();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(a[i][k]) > std::abs(a[p][k])) p = i;
        std::swap(a[k], a[p]);
        std::swap(b[k], b[p]);
        for (std::size_t i = k + 1; i < n; ++i) {
            const Complex f = a[i][k] / a[k][k];
            for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
            b[i] -= f * b[k];
        }
    }
    std::vector<Complex> x(n);
    for (std::size_t k = n; k-- > 0;) {
        Complex s = b[k];
        for (std::size_t j = k + 1; j < n; ++j) s -= a[k][j] * x[j];
        x[k] = s / a[k][k];
    }
    return x;
}

// ---------------------------------------------------------------------------
// 7. properties

bool property_dense_oracle() {
    SimulationConfig c;
    c.physics = {1.0, 0.5, 0.0};
    c.grid = make_grid(0.0, 4.0, 8, 0.05, 3);
    c.nonlinearity.kind = NonlinearityKind::none;
    c.potential = PotentialSpec::zero();
    c.initial = InitialCondition::gaussian(1.0, 2.5);
    c.boundary.order = BoundaryOrder::dirichlet_zero;
    const int J = 8;
    const double K = 1.0 / (c.grid.dx * c.grid.dx);
    const Complex I(0.0, 1.0);

    std::vector<Complex> p(J + 1);
    for (int j = 1; j < J; ++j) p[j] = c.initial(c.grid.x(j));
    const Propagator prop(c);
    WaveField psi = prop.initial_level();
    double worst = 0.0;
    for (int n = 0; n < c.grid.steps; ++n) {
        Dense a(J - 1, std::vector<Complex>(J - 1));
        std::vector<Complex> b(J - 1);
        for (int r = 0; r < J - 1; ++r) {
            const int j = r + 1;
            a[r][r] = I / c.grid.dt - K;
            if (r > 0) a[r][r - 1] = 0.5 * K;
            if (r + 2 < J) a[r][r + 1] = 0.5 * K;
            b[r] = I / c.grid.dt * p[j] - 0.5 * K * (p[j + 1] - 2.0 * p[j] + p[j - 1]);
        }
        const auto u = dense_solve(a, b);
        for (int r = 0; r < J - 1; ++r) p[r + 1] = u[r];
        psi = prop.step(psi).field;
        for (int j = 0; j <= J; ++j) worst = std::max(worst, std::abs(psi(j) - p[j]));
    }
    report("7a", worst < 1e-10, "dense CN oracle, J=8, N=3: max difference " + fmt("%.2e", worst) + " (< 1e-10)");
    return worst < 1e-10;
}

bool property_mass() {
    bool ok = true;
    double worst_margin = 0.0;
    for (Preset p : {Preset::example1, Preset::example3}) {
        SimulationConfig c = make_preset(p);
        c.boundary.order = BoundaryOrder::dirichlet_zero;
        const auto m = run_simulation(c).observables.mass;
        for (std::size_t n = 1; n < m.size(); ++n) {
            const double drift = std::abs(m[n] - m[0]) / m[0];
            const double bound = 10.0 * c.solver.picard_tol * static_cast<double>(n);
            worst_margin = std::max(worst_margin, drift / bound);
            ok = ok && drift <= bound;
        }
    }
    report("7b", ok, "mass drift with dirichlet walls, examples 1 and 3: worst drift / (10 tol n) = " +
                         fmt("%.2e", worst_margin) + " (<= 1)");
    return ok;
}

bool property_mirror() {
    SimulationConfig a = make_preset(Preset::example1);
    a.initial = InitialCondition::bright_soliton(1.0, 2.0, 12.0, -2.0);
    SimulationConfig b = a;
    b.initial = InitialCondition::bright_soliton(1.0, -2.0, 18.0, -2.0);
    const auto ra = run_simulation(a).final_field;
    const auto rb = run_simulation(b).final_field;
    const int J = a.grid.intervals;
    double diff = 0.0;
    for (int j = -1; j <= J + 1; ++j) diff = std::max(diff, std::abs(ra(j) - rb(J - j)));
    report("7c", diff < 1e-10, "mirror symmetry of the two boundary branches, T=6: " + fmt("%.2e", diff) +
                                   " (< 1e-10)");
    return diff < 1e-10;
}

bool property_zero() {
    bool ok = true;
    for (Preset p : {Preset::example1, Preset::example2, Preset::example3}) {
        SimulationConfig c = make_preset(p);
        const Propagator prop(c);
        WaveField psi(c.grid.intervals, 0);
        for (int n = 0; n < 5; ++n) psi = prop.step(psi).field;
        ok = ok && psi.max_abs() == 0.0;
    }
    report("7d", ok, "zero field stays zero under every preset");
    return ok;
}

// ---------------------------------------------------------------------------
// 1, 2. mesh refinement

void refinement() {
    const auto rows = convergence_table(make_preset(Preset::example1), {0.2, 0.1, 0.05}, {3.0, 4.0, 5.0, 6.0});
    bool orders_ok = true;
    std::string orders;
    for (const auto& r : rows)
        if (r.order) {
            orders_ok = orders_ok && *r.order >= 1.85 && *r.order <= 2.30;
            char buf[64];
            std::snprintf(buf, sizeof buf, " t=%g dx=%g:%.3f", r.t, r.dx, *r.order);
            orders += buf;
        }
    report("1", orders_ok, "orders in [1.85, 2.30]:" + orders);

    double e01 = 0.0, e005 = 0.0;
    for (const auto& r : rows)
        if (r.t == 4.0) {
            if (std::abs(r.dx - 0.1) < 1e-12) e01 = r.error;
            if (std::abs(r.dx - 0.05) < 1e-12) e005 = r.error;
        }
    const bool ok01 = std::abs(e01 - 8.091e-3) <= 0.3 * 8.091e-3;
    const bool ok005 = std::abs(e005 - 1.955e-3) <= 0.3 * 1.955e-3;
    report("2", ok01 && ok005,
           "E1(t=4): dx=0.1 " + fmt("%.4e", e01) + " vs 8.091e-3, dx=0.05 " + fmt("%.4e", e005) +
               " vs 1.955e-3 (+-30%)");
}

// ---------------------------------------------------------------------------
// 3, 4. wavenumber sweep

void sweep() {
    std::vector<double> k0s;
    for (double k = 0.5; k <= 6.75 + 1e-9; k += 0.25) k0s.push_back(k);
    k0s.insert(std::upper_bound(k0s.begin(), k0s.end(), 2.125), 2.125);
    const auto rows = k0_sweep(sweep_base(), k0s, {-2.0});

    const SweepRow* best = &rows.front();
    bool band_ok = true;
    double band_max = 0.0;
    double r05 = 0.0;
    for (const auto& r : rows) {
        if (r.reflection < best->reflection) best = &r;
        if (r.k0 >= 1.0 && r.k0 <= 5.0) {
            band_max = std::max(band_max, r.reflection);
            band_ok = band_ok && r.reflection < 1e-2;
        }
        if (r.k0 == 0.5) r05 = r.reflection;
    }
    // "near 2.125": within one sweep step of it
    const bool argmin_ok = std::abs(best->k0 - 2.125) <= 0.25;
    const bool min_ok = best->reflection < 5e-4;
    char buf[256];
    std::snprintf(buf, sizeof buf, "argmin k0=%.3f (|k0-2.125|<=0.25), min r=%.3e (<5e-4), max r on [1,5]=%.3e (<1e-2), r(0.5)=%.3e (>1e-2)",
                  best->k0, best->reflection, band_max, r05);
    report("3", argmin_ok && min_ok && band_ok && r05 > 1e-2, buf);

    const std::vector<double> probe{1.0, 2.0, 3.0, 5.0};
    const auto both = k0_sweep(sweep_base(), probe, {-2.0, -10.0});
    bool same = true;
    std::string detail;
    for (std::size_t i = 0; i < probe.size(); ++i) {
        const double a = both[i].reflection, b = both[i + probe.size()].reflection;
        const double rel = std::abs(a - b) / a;
        same = same && rel <= 0.02;
        std::snprintf(buf, sizeof buf, " k0=%g: %.3e/%.3e", probe[i], a, b);
        detail += buf;
    }
    report("4", same, "r(g=-2)/r(g=-10) within 2%:" + detail);
}

// ---------------------------------------------------------------------------
// 5. quintic case

void quintic() {
    const SimulationConfig c = make_preset(Preset::example2);
    const Grid fine = make_grid(-5.0, 5.0, 10000, 0.001, 1);
    const double e = initial_energy(eval_initial(c.initial, fine), fine);
    const auto run = run_simulation(c);
    const double r = run.observables.reflection.back();
    char buf[200];
    std::snprintf(buf, sizeof buf, "E(psi0)=%.4f (80.5 +-1%%, dx=0.001); r(T=%.2f)=%.3e (<1e-3, dx=0.01, dt=0.001)", e,
                  run.observables.times.back(), r);
    report("5", std::abs(e - 80.5) <= 0.01 * 80.5 && r < 1e-3, buf);
}

// ---------------------------------------------------------------------------
// 6. normal modes

void wellposedness() {
    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> k0d(0.01, 20.0), u(-10.0, 10.0);
    std::bernoulli_distribution on_axis(0.2);
    int wrong = 0;
    double worst_axis = 0.0;
    double worst_root = 0.0;
    const PhysicalParams phys;
    for (int trial = 0; trial < 1000; ++trial) {
        PotentialDecomposition d{u(rng), u(rng), u(rng), u(rng)};
        if (on_axis(rng)) d.f2 = -d.v2;
        const double k0 = k0d(rng);
        for (int order : {2, 3}) {
            const auto r = normal_mode_roots(order, k0, d, phys);
            if (r.wellposed != (d.v2 + d.f2 <= 0.0)) ++wrong;
            if (d.v2 + d.f2 == 0.0) worst_axis = std::max(worst_axis, std::abs(r.s.real()));
            if (order == 3) worst_root = std::max(worst_root, std::abs(third_order_spatial_residual(r.k, k0, phys)));
        }
    }
    char buf[200];
    std::snprintf(buf, sizeof buf, "1000 samples x 2 orders: %d misclassified, max |Re s| on axis %.1e, max root residual %.1e",
                  wrong, worst_axis, worst_root);
    report("6", wrong == 0 && worst_axis < 1e-12 && worst_root < 1e-12, buf);
}

// ---------------------------------------------------------------------------
// Example 3

void example3() {
    bool ok = true;
    std::string detail;
    char buf[96];
    for (double k0 : {1.25, 1.5, 1.75, 2.0}) {
        SimulationConfig c = make_preset(Preset::example3);
        c.boundary.k0_left = c.boundary.k0_right = k0;
        const double r = run_simulation(c).observables.reflection.back();
        ok = ok && r < 5e-2;
        std::snprintf(buf, sizeof buf, " k0=%g:%.3f", k0, r);
        detail += buf;
    }
    SimulationConfig wall = make_preset(Preset::example3);
    wall.boundary.order = BoundaryOrder::dirichlet_zero;
    const double rw = run_simulation(wall).observables.reflection.back();
    std::snprintf(buf, sizeof buf, "; dirichlet r=%.3f (>0.5)", rw);
    report("8", ok && rw > 0.5, "example 3 at t=6, abc3 r < 5e-2:" + detail + buf);

    // Same data on a domain wide enough that nothing reaches its walls by
    // t = 6: the share of mass a perfect boundary would leave in [0, 30].
    SimulationConfig wide = make_preset(Preset::example3);
    wide.grid = make_grid(-150.0, 180.0, 3300, wide.grid.dt, wide.grid.steps);
    wide.boundary.order = BoundaryOrder::dirichlet_zero;
    const auto ref = run_simulation(wide).final_field;
    double inside = 0.0, total = 0.0;
    for (int j = 0; j <= 3300; ++j) {
        const double x = wide.grid.x(j), rho = std::norm(ref(j));
        total += rho;
        if (x >= -1e-9 && x <= 30.0 + 1e-9) inside += rho;
    }
    info("reference on [-150, 180]: " + fmt("%.4f", inside / total) +
         " of the mass is still inside [0, 30] at t=6, so r for an exact boundary is about that value");
}

}  // namespace

int main() {
    const auto start = std::chrono::steady_clock::now();
    std::printf("property suite\n");
    const bool props = property_dense_oracle() & property_mass() & property_mirror() & property_zero();
    if (!props) {
        for (const char* id : {"1", "2", "3", "4", "5", "6", "8"}) report(id, false, "not attempted: property suite failed");
        return 1;
    }
    std::printf("table-level criteria\n");
    refinement();
    sweep();
    quintic();
    wellposedness();
    example3();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%d criteria failed, %.1f s\n", failures, secs);
    return failures == 0 ? 0 : 1;
}
