#pragma once

#include <cmath>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "morrey/constants.hpp"
#include "morrey/specfun.hpp"

namespace morrey {

enum class CurvatureClass { Flat, CartanHadamard, NonnegativeRicci };

/// Rotationally symmetric model manifold dr^2 + psi(r)^2 * (round sphere).
/// psi must be positive on (0, r_max) with psi(r)/r -> 1 at the origin.
/// Geodesic sphere area is n*omega_n*psi(r)^{n-1}; ball volume its integral.
struct WarpedModel {
    int n = 0;
    CurvatureClass curvature_class = CurvatureClass::Flat;
    double r_max = 0.0;  // +inf for non-compact models
    std::string label;
    std::function<double(double)> warp;        // psi
    std::function<double(double)> warp_deriv;  // psi'
    // Closed-form ball volume for the built-ins; empty => quadrature.
    std::function<double(double)> volume_closed;
    bool euclidean = false;  // exact identity shortcuts (rearrangement etc.)

    bool compact() const { return std::isfinite(r_max); }
};

/// Flat counts as a member of both comparison classes.
bool is_cartan_hadamard(const WarpedModel& m);
bool is_nonnegative_ricci(const WarpedModel& m);

WarpedModel make_euclidean(int n);
WarpedModel make_hyperbolic(int n, double kappa);
WarpedModel make_sphere(int n, double kappa);

/// Custom warp; both psi and psi' must be supplied analytically. The
/// normalization psi(r)/r -> 1 is checked numerically at r = 1e-6 and
/// positivity is spot-checked on a log grid.
WarpedModel make_custom_model(int n, std::function<double(double)> warp,
                              std::function<double(double)> warp_deriv,
                              CurvatureClass curvature_class, double r_max,
                              std::string label);

/// CLI designation grammar: euclidean:<n> | hyperbolic:<n>:<kappa> | sphere:<n>:<kappa>.
WarpedModel parse_model(std::string_view designation);

/// Area of the geodesic sphere of radius r, requires 0 < r < r_max.
double sphere_area(const WarpedModel& m, double r);

/// Volume of the geodesic ball of radius rho, requires 0 <= rho <= r_max.
/// Strictly increasing in rho.
double ball_volume(const WarpedModel& m, double rho, const QuadratureSpec& spec = {});

/// Unique rho with ball_volume(m, rho) = v, monotone bisection to absolute
/// radius tolerance 1e-12 (or better). Throws std::out_of_range when v
/// exceeds the total volume.
double inverse_ball_volume(const WarpedModel& m, double v, const QuadratureSpec& spec = {});

/// Volume comparison diagnostics: the ratio q(rho) = V(rho)/(omega_n rho^n)
/// on a grid, monotonicity verdicts in both directions, the violation
/// magnitude against the direction the curvature class predicts, and the
/// small-radius value (which should approximate 1).
struct VolumeMonotonicityReport {
    std::vector<double> radii;
    std::vector<double> ratios;
    bool nondecreasing = false;
    bool nonincreasing = false;
    bool expected_direction_holds = false;
    double max_violation = 0.0;  // against the expected direction
    double limit_at_min_radius = 0.0;
};

VolumeMonotonicityReport volume_monotonicity_report(const WarpedModel& m,
                                                    std::span<const double> grid,
                                                    const QuadratureSpec& spec = {});

/// Signed gap Area(boundary) - n*omega_n^{1/n}*Volume^{(n-1)/n} of the
/// geodesic ball of radius rho. Nonnegative on Cartan-Hadamard models.
double isoperimetric_gap(const WarpedModel& m, double rho, const QuadratureSpec& spec = {});

}  // namespace morrey
