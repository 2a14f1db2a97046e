#pragma once

#include <complex>
#include <functional>

namespace eddy {

// Whether a kernel runs its OpenMP path or the plain serial loop.  Both are
// kept; results are bit-identical (per-panel partial sums are accumulated in
// fixed panel order either way).
enum class Execution { Serial, Parallel };

using RadialFunction = std::function<std::complex<double>(double)>;

// Composite Gauss-Legendre rule: `points` nodes per panel over `panels`
// equal panels.  Exact for polynomials up to degree 2*points - 1 per panel.
struct QuadratureRule {
    int points = 8;
    int panels = 64;
};

// Integral of a real integrand over [lo, hi].
double integrate(const std::function<double(double)>& f, double lo, double hi,
                 const QuadratureRule& rule = {}, Execution exec = Execution::Parallel);

// Weighted norm (integral of |f|^2 r dr)^(1/2) over [lo, hi].
double l21_norm(const RadialFunction& f, double r_lo, double r_hi,
                const QuadratureRule& rule = {}, Execution exec = Execution::Parallel);

// ||reference - model|| / ||reference|| in the weighted norm.
double relative_l21_error(const RadialFunction& reference, const RadialFunction& model,
                          double r_lo, double r_hi, const QuadratureRule& rule = {},
                          Execution exec = Execution::Parallel);

}  // namespace eddy
