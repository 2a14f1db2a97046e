#pragma once

#include <complex>

#include "eddy/physics.hpp"

namespace eddy {

using Complex = std::complex<double>;

// Exact solution: A(r) = a r/2 + b/r in the dielectric, while the conductor
// part is carried by interface_value = A(r1) together with a Bessel ratio
// (the raw Bessel coefficient would overflow for thin skin depths).
struct GlobalCoefficients {
    Complex a;                // [Wb/m^3]
    Complex b;                // [Wb m]
    Complex interface_value;  // A(r1)
};

// Dielectric asymptotic models: order 1 is a0 r/2 + b0/r, the order-2
// correction is a1 r/2 + b1/r weighted by epsilon (1+i).
struct AsymptoticCoefficients {
    double a0, b0;
    double a1, b1;
};

// Impedance (Leontovich) model A(r) = a2 r/2 + b2/r on [r1, r2].
struct ImpedanceCoefficients {
    Complex a2, b2;
    Complex zeta;  // epsilon (1+i) (r2^2 - r1^2) + 2 r1
};

// Constants of the conductor boundary-layer profiles.
struct ProfileTerms {
    double surface_value;      // order-0 interface trace, k/r1
    Complex correction_coeff;  // (1+i)/delta0^2 times the order-2 trace at r1
    double curvature_factor;   // 1/r1 on the cylinder
};

GlobalCoefficients solve_global(const PhysicalParams& params, const CylinderGeometry& geom);

// A(r) on [0, r2]: dielectric branch for r > r1, Bessel-ratio branch for r <= r1.
Complex eval_global(const GlobalCoefficients& coeffs, const DerivedQuantities& derived,
                    const CylinderGeometry& geom, double r);

// Flux (1/r) d(r A)/dr of the global solution; constant and equal to `a` in
// the dielectric, gamma-scaled I0 ratio in the conductor.
Complex eval_global_flux(const GlobalCoefficients& coeffs, const DerivedQuantities& derived,
                         const CylinderGeometry& geom, double r);

AsymptoticCoefficients solve_asymptotics(const CylinderGeometry& geom);

// order 1 or 2, on [r1, r2] only.
Complex eval_asymptotic(int order, const AsymptoticCoefficients& coeffs,
                        const DerivedQuantities& derived, const CylinderGeometry& geom,
                        double r);

ImpedanceCoefficients solve_impedance(const DerivedQuantities& derived,
                                      const CylinderGeometry& geom);

Complex eval_impedance(const ImpedanceCoefficients& coeffs, const CylinderGeometry& geom,
                       double r);

ProfileTerms profile_terms(const AsymptoticCoefficients& coeffs,
                           const DerivedQuantities& derived, const CylinderGeometry& geom);

// Boundary-layer profile at depth h below the interface (radius r1 - h),
// order 0 or 1.  The decay factor is e^{-(1+i) h/delta}.
Complex eval_profile_interior(int order, const ProfileTerms& terms,
                              const DerivedQuantities& derived, const CylinderGeometry& geom,
                              double depth);

}  // namespace eddy
