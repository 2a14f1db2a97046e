#pragma once

#include <complex>
#include <string>
#include <vector>

namespace eddy {

// Permeability of free space [H/m].
inline constexpr double kMu0 = 4.0e-7 * 3.14159265358979323846;

// Material and excitation inputs.  mu0 is a fixed physical constant, not a
// parameter.
struct PhysicalParams {
    double mu_r = 4000.0;      // relative permeability, dimensionless
    double sigma = 2.0e6;      // conductivity [S/m]
    double frequency = 10.0;   // [Hz]
};

// Conductor of radius r1 inside a dielectric shell truncated at r2, where the
// orthoradial potential is pinned to k/r.
struct CylinderGeometry {
    double r1 = 0.03;   // interface radius [m]
    double r2 = 0.04;   // outer radius [m]
    double k = 1.0;     // Dirichlet constant [Wb/m]
};

// Scalars derived from PhysicalParams and used by every solver.
struct DerivedQuantities {
    double omega;                      // angular frequency [rad/s]
    double delta;                      // skin depth sqrt(2/(omega sigma mu_r mu0)) [m]
    double delta0;                     // nonmagnetic depth sqrt(2/(omega sigma mu0)) [m]
    double epsilon;                    // 1/(mu_r delta), the expansion parameter
    std::complex<double> gamma;        // (1+i)/delta, wavenumber in the conductor [1/m]
    std::complex<double> alpha_hat;    // (1-i)/2; note 1/alpha_hat = 1+i
};

// Collects one message per violated constraint; empty means valid.
std::vector<std::string> validation_errors(const PhysicalParams& params,
                                           const CylinderGeometry& geom);

// Throws DomainError listing every violated constraint.
void validate(const PhysicalParams& params, const CylinderGeometry& geom);

DerivedQuantities derive_quantities(const PhysicalParams& params);

// Frequency at which epsilon crosses 1 for the given material, located by
// bisection on derive_quantities (the asymptotic models are meaningful below
// this crossing).
double epsilon_unity_frequency(double mu_r, double sigma);

}  // namespace eddy
