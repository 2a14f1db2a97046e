// Timing comparison of the OpenMP kernels against their serial reference
// implementations.  Results must agree bit for bit; the point of the run is
// the wall-clock ratio.

#include <algorithm>
#include <cstdio>
#include <functional>
#include <omp.h>

#include "eddy/closed_form.hpp"
#include "eddy/quadrature.hpp"
#include "eddy/sweep.hpp"

namespace {

using namespace eddy;

double best_time(const std::function<void()>& work, int reps) {
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        const double t0 = omp_get_wtime();
        work();
        best = std::min(best, omp_get_wtime() - t0);
    }
    return best;
}

void report(const char* name, double t_serial, double t_parallel, bool identical) {
    std::printf("%-28s %10.3f ms %10.3f ms   x%.2f   identical: %s\n", name,
                1e3 * t_serial, 1e3 * t_parallel, t_serial / t_parallel,
                identical ? "yes" : "NO");
}

}  // namespace

int main() {
    const PhysicalParams params{};  // defaults
    const CylinderGeometry geom{};
    const auto d = derive_quantities(params);
    const auto global = solve_global(params, geom);

    std::printf("threads: %d\n", omp_get_max_threads());
    std::printf("%-28s %13s %13s\n", "kernel", "serial", "openmp");

    {
        RadialFunction ref = [&](double r) { return eval_global(global, d, geom, r); };
        const QuadratureRule rule{8, 20000};
        double vs = 0.0, vp = 0.0;
        const double ts = best_time(
            [&] { vs = l21_norm(ref, geom.r1, geom.r2, rule, Execution::Serial); }, 3);
        const double tp = best_time(
            [&] { vp = l21_norm(ref, geom.r1, geom.r2, rule, Execution::Parallel); }, 3);
        report("l21_norm (20000 panels)", ts, tp, vs == vp);
    }
    {
        const auto grid = geometric_grid(250.0, 16000.0, 64);
        std::vector<SweepRecord> rs, rp;
        const double ts =
            best_time([&] { rs = sweep_mu(params, geom, grid, Execution::Serial); }, 3);
        const double tp =
            best_time([&] { rp = sweep_mu(params, geom, grid, Execution::Parallel); }, 3);
        bool identical = rs.size() == rp.size();
        for (size_t i = 0; identical && i < rs.size(); ++i) {
            identical = rs[i].err_order1 == rp[i].err_order1 &&
                        rs[i].err_order2 == rp[i].err_order2 &&
                        rs[i].err_impedance == rp[i].err_impedance;
        }
        report("sweep_mu (64 points)", ts, tp, identical);
    }
    return 0;
}
