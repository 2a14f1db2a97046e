#pragma once

#include <complex>

namespace eddy::bessel {

using Complex = std::complex<double>;

// Modified Bessel functions of the first kind, orders 0 and 1, for complex
// arguments with Re z >= 0.  The *_scaled variants return I_nu(z) e^{-Re z},
// which stays representable for |z| up to ~1e5 where the plain values
// overflow double precision.
Complex i0(Complex z);
Complex i1(Complex z);
Complex i0_scaled(Complex z);
Complex i1_scaled(Complex z);

// Logarithmic derivative L(z) = I1'(z)/I1(z) = I0(z)/I1(z) - 1/z, evaluated
// through the Gauss continued fraction for I-function ratios (Re z > 0).
// L(z) -> 1 as |z| -> infinity.
Complex i1_log_derivative(Complex z);

// Overflow-safe quotient I1(num)/I1(den) for Re num >= 0, Re den > 0 and
// |num| <= |den|, formed from scaled values and one real exponential.
Complex i1_ratio(Complex num, Complex den);

}  // namespace eddy::bessel
