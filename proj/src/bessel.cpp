// Complex modified Bessel functions I0, I1 for Re z >= 0.
//
// Evaluation strategy: ascending power series for |z| <= 30, exponentially
// scaled Hankel-type asymptotic expansion beyond.  The switchover keeps the
// series free of destructive cancellation on the arg z = pi/4 ray (the only
// ray the solvers use, z = gamma*r) while the asymptotic series is already
// converged to ~1e-14 at |z| = 30.  Both orders are produced together since
// every caller needs the pair or their ratio.

#include "eddy/bessel.hpp"

#include <cmath>
#include <limits>

#include "eddy/errors.hpp"

namespace eddy::bessel {

namespace {

constexpr int kMaxSeriesTerms = 500;
constexpr double kSeriesTailTol = 1e-17;

struct Pair {
    Complex i0, i1;
};

// Ascending series: I0 = sum (z^2/4)^k / (k!)^2, I1 = (z/2) sum (z^2/4)^k / (k!(k+1)!).
Pair series_unscaled(Complex z) {
    const Complex q = 0.25 * z * z;
    Complex t0 = 1.0, t1 = 1.0;
    Complex s0 = 1.0, s1 = 1.0;
    for (int k = 1; k <= kMaxSeriesTerms; ++k) {
        t0 *= q / static_cast<double>(k * k);
        t1 *= q / static_cast<double>(k * (k + 1));
        s0 += t0;
        s1 += t1;
        if (std::abs(t0) < kSeriesTailTol * std::abs(s0) &&
            std::abs(t1) < kSeriesTailTol * std::abs(s1)) {
            return {s0, 0.5 * z * s1};
        }
    }
    throw NumericalError("bessel: power series did not converge");
}

// Scaled asymptotic expansion I_nu(z) e^{-Re z} for large |z|.  Both
// exponentials of the full expansion are kept; the recessive one carries
// e^{-2 Re z} and matters only near the imaginary axis.
Complex asymptotic_scaled(int nu, Complex z) {
    const bool conj = z.imag() < 0.0;
    if (conj) z = std::conj(z);

    const double mu4 = 4.0 * nu * nu;
    Complex s1 = 1.0, s2 = 1.0;
    Complex term = 1.0;
    double prev_mag = std::numeric_limits<double>::max();
    const Complex inv_z = 1.0 / z;
    double sign = 1.0;
    bool converged = false;
    for (int k = 1; k <= 60; ++k) {
        const double odd = 2.0 * k - 1.0;
        term *= (mu4 - odd * odd) / (8.0 * k) * inv_z;
        const double mag = std::abs(term);
        if (mag > prev_mag) break;  // divergent tail reached
        prev_mag = mag;
        sign = -sign;
        s1 += sign * term;
        s2 += term;
        if (mag < 1e-18 * std::abs(s1)) {
            converged = true;
            break;
        }
    }
    if (!converged && prev_mag > 1e-13 * std::abs(s1)) {
        throw NumericalError("bessel: asymptotic expansion stalled before target accuracy");
    }

    const Complex root = std::sqrt(2.0 * M_PI * z);
    // e^{z - Re z} = e^{i Im z};  e^{-z - Re z} = e^{-2 Re z} e^{-i Im z}
    const Complex dominant = std::polar(1.0, z.imag());
    const Complex recessive = std::exp(-2.0 * z.real()) * std::polar(1.0, -z.imag());
    // Branch factor e^{(nu+1/2) pi i} for Im z >= 0.
    const Complex branch = (nu % 2 == 0) ? Complex(0.0, 1.0) : Complex(0.0, -1.0);
    Complex val = (dominant * s1 + branch * recessive * s2) / root;
    return conj ? std::conj(val) : val;
}

void check_finite(Complex z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw DomainError("bessel: non-finite argument");
    }
}

Pair scaled_pair(Complex z) {
    check_finite(z);
    if (std::abs(z) <= 30.0) {
        Pair p = series_unscaled(z);
        const double sc = std::exp(-z.real());
        return {p.i0 * sc, p.i1 * sc};
    }
    return {asymptotic_scaled(0, z), asymptotic_scaled(1, z)};
}

Complex unscale(Complex scaled, double re) {
    if (re > 705.0) {
        throw NumericalError("bessel: unscaled value overflows, use the scaled variant");
    }
    return scaled * std::exp(re);
}

}  // namespace

Complex i0_scaled(Complex z) { return scaled_pair(z).i0; }
Complex i1_scaled(Complex z) { return scaled_pair(z).i1; }

Complex i0(Complex z) {
    check_finite(z);
    if (std::abs(z) <= 30.0) return series_unscaled(z).i0;
    return unscale(asymptotic_scaled(0, z), z.real());
}

Complex i1(Complex z) {
    check_finite(z);
    if (std::abs(z) <= 30.0) return series_unscaled(z).i1;
    return unscale(asymptotic_scaled(1, z), z.real());
}

Complex i1_log_derivative(Complex z) {
    check_finite(z);
    if (z == Complex(0.0, 0.0)) {
        throw DomainError("i1_log_derivative: z = 0");
    }
    if (z.real() <= 0.0) {
        throw DomainError("i1_log_derivative: requires Re z > 0");
    }
    // Modified Lentz on I1/I0 = 1/(2/z + 1/(4/z + 1/(6/z + ...))), then
    // L = I0/I1 - 1/z.  Iteration count grows like 7.5 sqrt(|z|); the cap
    // covers |z| up to ~4e8 and turns anything wilder into a fast failure.
    const double tiny = 1e-300;
    const int max_iter =
        static_cast<int>(std::min(1000.0 + 10.0 * std::sqrt(std::abs(z)), 200000.0));
    Complex f = tiny, c = tiny, d = 0.0;
    bool converged = false;
    for (int k = 1; k <= max_iter; ++k) {
        const Complex b = 2.0 * static_cast<double>(k) / z;
        d = b + d;
        if (d == Complex(0.0, 0.0)) d = tiny;
        c = b + 1.0 / c;
        if (c == Complex(0.0, 0.0)) c = tiny;
        d = 1.0 / d;
        const Complex delta = c * d;
        f *= delta;
        if (std::abs(delta - 1.0) < 1e-16) {
            converged = true;
            break;
        }
    }
    if (!converged) {
        throw NumericalError("i1_log_derivative: continued fraction did not converge");
    }
    return 1.0 / f - 1.0 / z;
}

Complex i1_ratio(Complex num, Complex den) {
    check_finite(num);
    check_finite(den);
    if (num.real() < 0.0 || den.real() <= 0.0) {
        throw DomainError("i1_ratio: requires Re num >= 0 and Re den > 0");
    }
    if (num == den) return 1.0;
    if (num.real() - den.real() > 700.0) {
        throw NumericalError("i1_ratio: quotient overflows; expected |num| <= |den|");
    }
    const Complex n = i1_scaled(num);
    if (n == Complex(0.0, 0.0)) return 0.0;
    const Complex d = i1_scaled(den);
    if (std::abs(d) < 1e-280) {
        throw SingularityError("i1_ratio: I1 vanishes at the denominator argument");
    }
    return (n / d) * std::exp(num.real() - den.real());
}

}  // namespace eddy::bessel
