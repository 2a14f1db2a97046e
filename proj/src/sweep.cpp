#include "eddy/sweep.hpp"

#include <cmath>
#include <limits>

#include "eddy/closed_form.hpp"
#include "eddy/errors.hpp"

namespace eddy {

namespace {

SweepRecord run_point(const PhysicalParams& params, const CylinderGeometry& geom) {
    SweepRecord rec;
    rec.mu_r = params.mu_r;
    rec.frequency = params.frequency;
    try {
        const auto d = derive_quantities(params);
        rec.epsilon = d.epsilon;
        rec.delta = d.delta;
        rec.in_regime = d.epsilon < 1.0;

        const auto global = solve_global(params, geom);
        const auto asym = solve_asymptotics(geom);
        const auto imp = solve_impedance(d, geom);

        RadialFunction reference = [&](double r) { return eval_global(global, d, geom, r); };
        RadialFunction order1 = [&](double r) { return eval_asymptotic(1, asym, d, geom, r); };
        RadialFunction order2 = [&](double r) { return eval_asymptotic(2, asym, d, geom, r); };
        RadialFunction imped = [&](double r) { return eval_impedance(imp, geom, r); };

        rec.err_order1 = relative_l21_error(reference, order1, geom.r1, geom.r2);
        rec.err_order2 = relative_l21_error(reference, order2, geom.r1, geom.r2);
        rec.err_impedance = relative_l21_error(reference, imped, geom.r1, geom.r2);
    } catch (const std::exception& e) {
        rec.failed = true;
        rec.error = e.what();
        rec.err_order1 = rec.err_order2 = rec.err_impedance =
            std::numeric_limits<double>::quiet_NaN();
    }
    return rec;
}

std::vector<SweepRecord> run_sweep(const PhysicalParams& base, const CylinderGeometry& geom,
                                   std::span<const double> values, bool vary_mu,
                                   Execution exec) {
    validate(base, geom);
    const int n = static_cast<int>(values.size());
    std::vector<SweepRecord> records(n);
    auto point_params = [&](int i) {
        PhysicalParams p = base;
        (vary_mu ? p.mu_r : p.frequency) = values[i];
        return p;
    };
    if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(static)
        for (int i = 0; i < n; ++i) {
            records[i] = run_point(point_params(i), geom);
        }
    } else {
        for (int i = 0; i < n; ++i) {
            records[i] = run_point(point_params(i), geom);
        }
    }
    return records;
}

}  // namespace

std::vector<SweepRecord> sweep_mu(const PhysicalParams& base, const CylinderGeometry& geom,
                                  std::span<const double> mu_values, Execution exec) {
    for (size_t i = 0; i < mu_values.size(); ++i) {
        if (!(mu_values[i] > 0.0)) throw DomainError("sweep_mu: mu values must be positive");
        if (i > 0 && !(mu_values[i] > mu_values[i - 1])) {
            throw DomainError("sweep_mu: mu values must be ascending");
        }
    }
    return run_sweep(base, geom, mu_values, true, exec);
}

std::vector<SweepRecord> sweep_freq(const PhysicalParams& base, const CylinderGeometry& geom,
                                    std::span<const double> f_values, Execution exec) {
    for (const double f : f_values) {
        if (!(f > 0.0)) throw DomainError("sweep_freq: frequencies must be positive");
    }
    return run_sweep(base, geom, f_values, false, exec);
}

SlopeFit fit_loglog_slope(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size()) throw DomainError("fit_loglog_slope: length mismatch");
    if (xs.size() < 3) throw DomainError("fit_loglog_slope: needs at least 3 points");
    const int n = static_cast<int>(xs.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    std::vector<double> lx(n), ly(n);
    for (int i = 0; i < n; ++i) {
        if (!(xs[i] > 0.0) || !(ys[i] > 0.0)) {
            throw DomainError("fit_loglog_slope: data must be positive");
        }
        lx[i] = std::log10(xs[i]);
        ly[i] = std::log10(ys[i]);
        sx += lx[i];
        sy += ly[i];
        sxx += lx[i] * lx[i];
        sxy += lx[i] * ly[i];
    }
    const double det = n * sxx - sx * sx;
    if (det == 0.0) throw DomainError("fit_loglog_slope: degenerate abscissae");
    SlopeFit fit;
    fit.n_points = n;
    fit.slope = (n * sxy - sx * sy) / det;
    fit.intercept = (sy - fit.slope * sx) / n;
    double ss_res = 0.0, ss_tot = 0.0;
    const double mean_y = sy / n;
    for (int i = 0; i < n; ++i) {
        const double p = fit.slope * lx[i] + fit.intercept;
        ss_res += (ly[i] - p) * (ly[i] - p);
        ss_tot += (ly[i] - mean_y) * (ly[i] - mean_y);
    }
    fit.r_squared = (ss_tot == 0.0) ? (ss_res == 0.0 ? 1.0 : 0.0) : 1.0 - ss_res / ss_tot;
    return fit;
}

SlopeFit fit_error_slope(std::span<const SweepRecord> records, ErrorModel model,
                         FitWindow window) {
    std::vector<double> xs, ys;
    for (const auto& rec : records) {
        if (rec.failed || !rec.in_regime) continue;
        if (window == FitWindow::LowFreq && rec.frequency > 100.0) continue;
        const double err = model == ErrorModel::Order1    ? rec.err_order1
                           : model == ErrorModel::Order2 ? rec.err_order2
                                                         : rec.err_impedance;
        xs.push_back(rec.epsilon);
        ys.push_back(err);
    }
    return fit_loglog_slope(xs, ys);
}

std::vector<double> geometric_grid(double lo, double hi, int n) {
    if (!(lo > 0.0) || !(hi > lo) || n < 2) {
        throw DomainError("geometric_grid: needs 0 < lo < hi and n >= 2");
    }
    std::vector<double> g(n);
    const double ratio = std::log(hi / lo) / (n - 1);
    for (int i = 0; i < n; ++i) g[i] = lo * std::exp(ratio * i);
    g.front() = lo;
    g.back() = hi;
    return g;
}

}  // namespace eddy
