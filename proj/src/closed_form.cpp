// Closed-form solutions of the orthoradial transmission problem on the
// infinite two-layer cylinder: the exact (global) solution, the order-1/2
// asymptotic models in the dielectric, the impedance model, and the
// conductor boundary-layer profiles.

#include "eddy/closed_form.hpp"

#include <cmath>

#include "eddy/bessel.hpp"
#include "eddy/errors.hpp"

namespace eddy {

GlobalCoefficients solve_global(const PhysicalParams& params, const CylinderGeometry& geom) {
    validate(params, geom);
    const auto d = derive_quantities(params);
    const Complex z = d.gamma * geom.r1;

    // g1 = I1 + z I1' and g2 = r1 mu_r I1 - g1 (r1^2-r2^2)/(2 r1), both divided
    // through by I1(z) so only the log-derivative enters: g1/I1 = 1 + z L(z)
    // (algebraically z I0/I1).
    const Complex g1 = 1.0 + z * bessel::i1_log_derivative(z);
    const Complex g2 =
        geom.r1 * params.mu_r - g1 * (geom.r1 * geom.r1 - geom.r2 * geom.r2) / (2.0 * geom.r1);
    if (std::abs(g2) < 1e-14 * std::abs(geom.r1 * params.mu_r)) {
        throw SingularityError("solve_global: boundary system is numerically singular");
    }

    GlobalCoefficients c{};
    c.a = (geom.k / geom.r1) * g1 / g2;
    c.b = geom.k - c.a * geom.r2 * geom.r2 / 2.0;
    c.interface_value = c.a * geom.r1 / 2.0 + c.b / geom.r1;
    return c;
}

Complex eval_global(const GlobalCoefficients& coeffs, const DerivedQuantities& derived,
                    const CylinderGeometry& geom, double r) {
    if (!(r >= 0.0 && r <= geom.r2)) {
        throw DomainError("eval_global: r outside [0, r2]");
    }
    if (r > geom.r1) {
        return coeffs.a * r / 2.0 + coeffs.b / r;
    }
    if (r == 0.0) return 0.0;
    return coeffs.interface_value * bessel::i1_ratio(derived.gamma * r, derived.gamma * geom.r1);
}

Complex eval_global_flux(const GlobalCoefficients& coeffs, const DerivedQuantities& derived,
                         const CylinderGeometry& geom, double r) {
    if (!(r >= 0.0 && r <= geom.r2)) {
        throw DomainError("eval_global_flux: r outside [0, r2]");
    }
    if (r > geom.r1) {
        return coeffs.a;
    }
    // (1/r) d(r I1(gamma r))/dr = gamma I0(gamma r)
    const Complex zr = derived.gamma * r;
    const Complex zi = derived.gamma * geom.r1;
    const Complex ratio = bessel::i0_scaled(zr) / bessel::i1_scaled(zi) *
                          std::exp(zr.real() - zi.real());
    return coeffs.interface_value * derived.gamma * ratio;
}

AsymptoticCoefficients solve_asymptotics(const CylinderGeometry& geom) {
    if (!(geom.r1 > 0.0 && geom.r1 < geom.r2)) {
        throw DomainError("solve_asymptotics: invalid geometry");
    }
    AsymptoticCoefficients c{};
    c.a0 = 0.0;
    c.b0 = geom.k;
    c.a1 = geom.k / geom.r1;
    c.b1 = -geom.k * geom.r2 * geom.r2 / (2.0 * geom.r1);
    return c;
}

Complex eval_asymptotic(int order, const AsymptoticCoefficients& coeffs,
                        const DerivedQuantities& derived, const CylinderGeometry& geom,
                        double r) {
    if (order != 1 && order != 2) {
        throw DomainError("eval_asymptotic: order must be 1 or 2");
    }
    if (!(r >= geom.r1 && r <= geom.r2)) {
        throw DomainError("eval_asymptotic: r outside [r1, r2]");
    }
    const double base = coeffs.a0 * r / 2.0 + coeffs.b0 / r;
    if (order == 1) return base;
    // epsilon/alpha_hat = epsilon (1+i), kept as a real scale times (1+i).
    const Complex weight = derived.epsilon * Complex(1.0, 1.0);
    return base + weight * (coeffs.a1 * r / 2.0 + coeffs.b1 / r);
}

ImpedanceCoefficients solve_impedance(const DerivedQuantities& derived,
                                      const CylinderGeometry& geom) {
    if (!(geom.r1 > 0.0 && geom.r1 < geom.r2)) {
        throw DomainError("solve_impedance: invalid geometry");
    }
    const Complex weight = derived.epsilon * Complex(1.0, 1.0);
    ImpedanceCoefficients c{};
    c.zeta = weight * (geom.r2 * geom.r2 - geom.r1 * geom.r1) + 2.0 * geom.r1;
    if (std::abs(c.zeta) < 1e-14 * geom.r1) {
        throw SingularityError("solve_impedance: zeta numerically zero");
    }
    c.a2 = weight * 2.0 * geom.k / c.zeta;
    c.b2 = geom.k - c.a2 * geom.r2 * geom.r2 / 2.0;
    return c;
}

Complex eval_impedance(const ImpedanceCoefficients& coeffs, const CylinderGeometry& geom,
                       double r) {
    if (!(r >= geom.r1 && r <= geom.r2)) {
        throw DomainError("eval_impedance: r outside [r1, r2]");
    }
    return coeffs.a2 * r / 2.0 + coeffs.b2 / r;
}

ProfileTerms profile_terms(const AsymptoticCoefficients& coeffs,
                           const DerivedQuantities& derived, const CylinderGeometry& geom) {
    ProfileTerms t{};
    t.surface_value = coeffs.a0 * geom.r1 / 2.0 + coeffs.b0 / geom.r1;
    const double trace1 = coeffs.a1 * geom.r1 / 2.0 + coeffs.b1 / geom.r1;
    t.correction_coeff = Complex(1.0, 1.0) / (derived.delta0 * derived.delta0) * trace1;
    // (curvature + z'/r) on the cylinder: meridian curvature 0, z' = 1.
    t.curvature_factor = 1.0 / geom.r1;
    return t;
}

Complex eval_profile_interior(int order, const ProfileTerms& terms,
                              const DerivedQuantities& derived, const CylinderGeometry& geom,
                              double depth) {
    if (order != 0 && order != 1) {
        throw DomainError("eval_profile_interior: order must be 0 or 1");
    }
    if (!(depth >= 0.0 && depth < geom.r1)) {
        throw DomainError("eval_profile_interior: depth outside [0, r1)");
    }
    const double y3 = depth / derived.delta;
    const Complex decay = std::exp(Complex(-y3, -y3));  // e^{-(1+i) Y3}
    if (order == 0) {
        return terms.surface_value * decay;
    }
    const Complex first =
        terms.correction_coeff + 0.5 * y3 * terms.curvature_factor * terms.surface_value;
    return (terms.surface_value + derived.delta * first) * decay;
}

}  // namespace eddy
