#pragma once

#include <complex>
#include <vector>

#include "eddy/physics.hpp"

namespace eddy {

// Solution of the finite-volume discretization on [0, r2].  Nodes include
// r = 0 and land exactly on r1 and r2; values are A at the nodes.
struct GridSolution {
    std::vector<double> nodes;
    std::vector<std::complex<double>> values;
    int n_core = 0;
    int n_diel = 0;
    int interface_index = 0;
};

// Node positions: core mesh graded geometrically toward r1 (first cell at the
// interface <= delta/4), dielectric mesh uniform.
std::vector<double> build_mesh(const CylinderGeometry& geom, double delta, int n_core,
                               int n_diel);

// Independent second-order solve of the transmission problem: conservative
// control volumes on u = r A with flux (kappa/r) du/dr, kappa jumping from 1
// to mu_r at r1, A(0) = 0 and A(r2) = k/r2.  Complex tridiagonal system by
// direct elimination.
GridSolution solve_fd(const PhysicalParams& params, const CylinderGeometry& geom,
                      int n_core, int n_diel);

// Piecewise-linear interpolation of the grid solution.
std::complex<double> interpolate(const GridSolution& grid, double r);

// Relative weighted-L2 difference between the interpolated grid solution and
// the closed-form solution over [0, r2]; n_total splits evenly between core
// and dielectric.
double oracle_error_vs_analytic(const PhysicalParams& params, const CylinderGeometry& geom,
                                int n_total);

// |F- - mu_r F+| / |F-| at r1, with one-sided quadratic derivatives of r A.
double transmission_residual(const GridSolution& grid, const PhysicalParams& params);

// Max relative deviation of the face fluxes across the dielectric cells
// (zero in exact arithmetic: the discrete equations there are flux equality).
double dielectric_flux_deviation(const GridSolution& grid, const PhysicalParams& params);

// Truncation check: inject closed-form nodal values into the discrete
// operator and return the largest interior row residual per unit cell volume
// (interface row excluded).  Scales as h^2.
double discrete_residual_measure(const PhysicalParams& params, const CylinderGeometry& geom,
                                 int n_core, int n_diel);

}  // namespace eddy
