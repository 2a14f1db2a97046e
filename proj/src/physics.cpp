#include "eddy/physics.hpp"

#include <cmath>
#include <sstream>

#include "eddy/errors.hpp"

namespace eddy {

namespace {

bool positive_finite(double v) { return std::isfinite(v) && v > 0.0; }

}  // namespace

std::vector<std::string> validation_errors(const PhysicalParams& params,
                                           const CylinderGeometry& geom) {
    std::vector<std::string> errs;
    if (!positive_finite(params.mu_r)) {
        errs.push_back("mu_r must be positive and finite");
    }
    if (!positive_finite(params.sigma)) {
        errs.push_back("sigma must be positive and finite (non-conducting core)");
    }
    if (!positive_finite(params.frequency)) {
        errs.push_back("frequency must be positive and finite");
    }
    if (!positive_finite(geom.r1)) {
        errs.push_back("r1 must be positive and finite");
    }
    if (!std::isfinite(geom.r2) || !(geom.r1 < geom.r2)) {
        errs.push_back("r1 < r2 is required (degenerate annulus)");
    }
    if (!std::isfinite(geom.k)) {
        errs.push_back("k must be finite");
    }
    return errs;
}

void validate(const PhysicalParams& params, const CylinderGeometry& geom) {
    const auto errs = validation_errors(params, geom);
    if (errs.empty()) return;
    std::ostringstream msg;
    msg << "invalid parameters:";
    for (const auto& e : errs) msg << " [" << e << "]";
    throw DomainError(msg.str());
}

DerivedQuantities derive_quantities(const PhysicalParams& params) {
    if (!positive_finite(params.mu_r) || !positive_finite(params.sigma) ||
        !positive_finite(params.frequency)) {
        throw DomainError("derive_quantities: mu_r, sigma, frequency must be positive");
    }
    DerivedQuantities d{};
    d.omega = 2.0 * M_PI * params.frequency;
    d.delta = std::sqrt(2.0 / (d.omega * params.sigma * params.mu_r * kMu0));
    d.delta0 = std::sqrt(2.0 / (d.omega * params.sigma * kMu0));
    d.epsilon = 1.0 / (params.mu_r * d.delta);
    // Built from equal parts so arg(gamma) = pi/4 holds exactly.
    d.gamma = std::complex<double>(1.0 / d.delta, 1.0 / d.delta);
    d.alpha_hat = std::complex<double>(0.5, -0.5);
    return d;
}

double epsilon_unity_frequency(double mu_r, double sigma) {
    if (!positive_finite(mu_r) || !positive_finite(sigma)) {
        throw DomainError("epsilon_unity_frequency: mu_r, sigma must be positive");
    }
    auto eps_at = [&](double f) {
        return derive_quantities({mu_r, sigma, f}).epsilon;
    };
    double lo = 1e-9, hi = 1e15;
    if (eps_at(lo) >= 1.0 || eps_at(hi) <= 1.0) {
        throw NumericalError("epsilon_unity_frequency: crossing not bracketed");
    }
    for (int it = 0; it < 200; ++it) {
        const double mid = std::sqrt(lo * hi);  // epsilon is a power law in f
        (eps_at(mid) < 1.0 ? lo : hi) = mid;
    }
    return std::sqrt(lo * hi);
}

}  // namespace eddy
