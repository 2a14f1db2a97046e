#include "eddy/quadrature.hpp"

#include <cmath>
#include <exception>
#include <vector>

#include "eddy/errors.hpp"

namespace eddy {

namespace {

// Gauss-Legendre nodes (positive half) and weights, 2/4/8 points.
struct GaussTable {
    const double* x;
    const double* w;
    int half;
};

constexpr double kX2[] = {0.57735026918962576451};
constexpr double kW2[] = {1.0};
constexpr double kX4[] = {0.33998104358485626480, 0.86113631159405257522};
constexpr double kW4[] = {0.65214515486254614263, 0.34785484513745385737};
constexpr double kX8[] = {0.18343464249564980494, 0.52553240991632898582,
                          0.79666647741362673959, 0.96028985649753623168};
constexpr double kW8[] = {0.36268378337836198297, 0.31370664587788728734,
                          0.22238103445337447054, 0.10122853629037625915};

GaussTable table_for(int points) {
    switch (points) {
        case 2: return {kX2, kW2, 1};
        case 4: return {kX4, kW4, 2};
        case 8: return {kX8, kW8, 4};
        default: throw DomainError("quadrature: supported points per panel are 2, 4, 8");
    }
}

double panel_sum(const std::function<double(double)>& f, double a, double b,
                 const GaussTable& t) {
    const double mid = 0.5 * (a + b);
    const double halfw = 0.5 * (b - a);
    double acc = 0.0;
    for (int j = 0; j < t.half; ++j) {
        const double dx = halfw * t.x[j];
        acc += t.w[j] * (f(mid - dx) + f(mid + dx));
    }
    return acc * halfw;
}

}  // namespace

double integrate(const std::function<double(double)>& f, double lo, double hi,
                 const QuadratureRule& rule, Execution exec) {
    if (!(lo < hi)) throw DomainError("integrate: requires lo < hi");
    if (rule.panels < 1) throw DomainError("integrate: panels must be >= 1");
    const GaussTable t = table_for(rule.points);
    const double width = (hi - lo) / rule.panels;

    std::vector<double> partial(rule.panels);
    if (exec == Execution::Parallel) {
        std::exception_ptr error;
#pragma omp parallel for schedule(static)
        for (int p = 0; p < rule.panels; ++p) {
            try {
                partial[p] = panel_sum(f, lo + p * width, lo + (p + 1) * width, t);
            } catch (...) {
#pragma omp critical
                if (!error) error = std::current_exception();
            }
        }
        if (error) std::rethrow_exception(error);
    } else {
        for (int p = 0; p < rule.panels; ++p) {
            partial[p] = panel_sum(f, lo + p * width, lo + (p + 1) * width, t);
        }
    }
    // Fixed accumulation order keeps results identical across thread counts.
    double acc = 0.0;
    for (int p = 0; p < rule.panels; ++p) acc += partial[p];
    return acc;
}

double l21_norm(const RadialFunction& f, double r_lo, double r_hi,
                const QuadratureRule& rule, Execution exec) {
    auto integrand = [&f](double r) {
        const std::complex<double> v = f(r);
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            throw NumericalError("l21_norm: non-finite sample");
        }
        return std::norm(v) * r;
    };
    return std::sqrt(integrate(integrand, r_lo, r_hi, rule, exec));
}

double relative_l21_error(const RadialFunction& reference, const RadialFunction& model,
                          double r_lo, double r_hi, const QuadratureRule& rule,
                          Execution exec) {
    const double ref_norm = l21_norm(reference, r_lo, r_hi, rule, exec);
    if (ref_norm == 0.0) {
        throw DomainError("relative_l21_error: zero reference norm");
    }
    auto diff = [&](double r) { return reference(r) - model(r); };
    return l21_norm(diff, r_lo, r_hi, rule, exec) / ref_norm;
}

}  // namespace eddy
