#pragma once

#include <span>
#include <string>
#include <vector>

#include "eddy/physics.hpp"
#include "eddy/quadrature.hpp"

namespace eddy {

// One point of a parameter study: the three model errors against the global
// solution on [r1, r2].
struct SweepRecord {
    double mu_r = 0.0;
    double frequency = 0.0;
    double epsilon = 0.0;
    double delta = 0.0;
    double err_order1 = 0.0;
    double err_order2 = 0.0;
    double err_impedance = 0.0;
    bool in_regime = false;  // epsilon < 1
    bool failed = false;
    std::string error;
};

struct SlopeFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    int n_points = 0;
};

enum class ErrorModel { Order1, Order2, Impedance };
enum class FitWindow { All, LowFreq };  // LowFreq keeps f <= 100 Hz

// Vary mu_r at fixed frequency (values must be positive and ascending) or
// frequency at fixed mu_r.  Points are independent; per-point failures land
// in the record and the sweep continues.  Output order is input order.
std::vector<SweepRecord> sweep_mu(const PhysicalParams& base, const CylinderGeometry& geom,
                                  std::span<const double> mu_values,
                                  Execution exec = Execution::Parallel);
std::vector<SweepRecord> sweep_freq(const PhysicalParams& base, const CylinderGeometry& geom,
                                    std::span<const double> f_values,
                                    Execution exec = Execution::Parallel);

// Ordinary least squares on (log10 x, log10 y).  Requires >= 3 points, all
// positive.
SlopeFit fit_loglog_slope(std::span<const double> xs, std::span<const double> ys);

// Slope of one error column against epsilon over the in-regime records of a
// sweep (optionally restricted to the low-frequency window).
SlopeFit fit_error_slope(std::span<const SweepRecord> records, ErrorModel model,
                         FitWindow window = FitWindow::All);

// Log-spaced grid with n points from lo to hi inclusive.
std::vector<double> geometric_grid(double lo, double hi, int n);

}  // namespace eddy
