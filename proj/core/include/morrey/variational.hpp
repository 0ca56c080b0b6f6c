#pragma once

#include <optional>
#include <span>
#include <vector>

#include "morrey/profiles.hpp"
#include "morrey/rearrangement.hpp"

namespace morrey {

/// Fixed-support minimum of the radial p-energy with phi(0)=1, phi(lambda)=0.
/// First integral of the radial p-Laplacian: |phi'|^{p-2} phi' psi^{n-1} is
/// constant, so with I(lambda) = int_0^lambda psi^{-(n-1)/(p-1)},
///   energy = (n omega_n)^{1/p} I(lambda)^{-1/p'},
///   phi(r) = (I(lambda) - I(r)) / I(lambda),
///   q1_min = ball_volume(m, lambda)^{1/n - 1/p} * energy.
struct RadialMinimum {
    double energy = 0.0;
    double q1_min = 0.0;
    RadialProfile minimizer;
};

RadialMinimum exact_radial_minimum(const WarpedModel& m, const Exponents& e, double lambda,
                                   const QuadratureSpec& spec = {});

/// Independent discrete oracle: minimizes sum_i |slope_i|^p w_i over
/// piecewise-linear profiles on a graded grid with exact per-segment volume
/// weights, by projected (Newton-scaled) descent with backtracking line
/// search on the affine constraint sum_i slope_i h_i = -1. The objective is
/// convex, so the converged iterate is the global discrete optimum; it lies
/// above the continuum energy and approaches it as the grid refines.
struct DiscreteOptions {
    int max_iterations = 500;
    double tolerance = 1e-12;  // relative Newton decrement
};

struct DiscreteMinimum {
    double energy = 0.0;
    RadialProfile minimizer;
    int iterations = 0;
    bool converged = false;
};

DiscreteMinimum discrete_optimize(const WarpedModel& m, const Exponents& e, double lambda,
                                  int grid_size, const DiscreteOptions& opts = {},
                                  const QuadratureSpec& spec = {});

enum class Attainment { AttainedEverywhere, NotAttained, Indeterminate };

/// Classification thresholds and probe controls for sharpness_scan.
struct ScanConfig {
    double attained_abs_tol = 1e-6;   // max |q - ref| for the Euclidean signature
    double lower_bound_slack = 1e-7;  // tolerated dip below the sharp reference
    double limit_rel_tol = 1e-3;      // limit-estimate closeness required for NotAttained
    double volume_probe_factor = 8.0;
    double volume_probe_cap = 50.0;
};

/// Per-lambda minimal quotient against the Euclidean sharp reference.
/// The q1 branch uses the certified exact radial minimizer; the q2 branch
/// evaluates the transplanted Talenti extremal, which is only an upper
/// bound for the true minimum on curved models (certified_minimum = false).
/// limit_estimate extrapolates the three smallest lambdas with a
/// second-order (even-power) Richardson fit. asymptotic_volume_ratio is a
/// finite-radius estimate of limsup V/(omega_n rho^n), not the limsup
/// itself; the probe radius is reported alongside.
struct ScanResult {
    std::vector<double> lambdas;
    std::vector<double> q_values;
    double sharp_reference = 0.0;
    double limit_estimate = 0.0;
    Attainment attainment = Attainment::Indeterminate;
    double asymptotic_volume_ratio = 0.0;
    double volume_probe_radius = 0.0;
    bool certified_minimum = false;
};

ScanResult sharpness_scan(const WarpedModel& m, const Exponents& e,
                          std::span<const double> lambda_grid, QuotientKind which,
                          const ScanConfig& cfg = {}, const QuadratureSpec& spec = {});

enum class VolumeBoundKind { MS1, MS2 };

/// Necessary volume lower bounds for the inequality to hold with constant C:
///   MS1: V(rho) >= (C1/C)^{pn/(p-n)}       * omega_n rho^n,
///   MS2: V(rho) >= (C2/C)^{1/(1-eta)}      * omega_n rho^n (threshold only),
/// reported as margins ratio(rho) - threshold per grid point. The MS2 branch
/// additionally evaluates the gap integral
///   G(lambda) = int_0^lambda (V(rho) - threshold * omega_n rho^n) f_lambda(rho) drho,
/// which is nonnegative whenever the L1-bound inequality holds with C on a
/// nonnegative-Ricci model.
struct VolumeBoundReport {
    std::vector<double> rhos;
    std::vector<double> ratios;
    std::vector<double> margins;
    double threshold = 0.0;
    double worst_margin = 0.0;
    std::optional<double> gap_integral;  // MS2 only
};

VolumeBoundReport volume_bound_diagnostics(const WarpedModel& m, const Exponents& e, double C,
                                           VolumeBoundKind which,
                                           std::span<const double> rho_grid,
                                           std::optional<double> lambda = std::nullopt,
                                           const QuadratureSpec& spec = {});

}  // namespace morrey
