#pragma once

#include <functional>
#include <span>

#include "morrey/errors.hpp"

namespace morrey {

/// Accumulates quadrature work across the calls of a larger computation.
/// Attach one through QuadratureSpec::stats to collect run diagnostics.
struct QuadratureStats {
    long long calls = 0;
    long long panels = 0;
    double max_error_bound = 0.0;
    int max_refinements = 0;
};

/// Controls for the adaptive Gauss-Kronrod integrator. The endpoint
/// exponents declare the power-law behavior of the integrand: |f| is assumed
/// bounded by c*(r-a)^left_exponent near a and c*(b-r)^right_exponent near b.
/// A negative exponent (must stay > -1 for integrability) triggers a
/// regularizing change of variable at that endpoint.
struct QuadratureSpec {
    double abs_tol = 1e-10;
    double rel_tol = 1e-9;
    int max_refinements = 60;
    double left_exponent = 0.0;
    double right_exponent = 0.0;
    QuadratureStats* stats = nullptr;  // optional, caller-owned

    QuadratureSpec with_exponents(double left, double right) const {
        QuadratureSpec s = *this;
        s.left_exponent = left;
        s.right_exponent = right;
        return s;
    }
};

/// Value plus convergence diagnostics of one integrate() call.
struct QuadratureOutcome {
    double value = 0.0;
    double error_bound = 0.0;
    int panels = 0;
    int refinements = 0;
};

/// ln Gamma(x) for x > 0, Lanczos approximation (g = 7, 9 terms).
/// Relative accuracy is ~1e-14 on [0.1, 100].
double ln_gamma(double x);

/// Euler beta function B(a,b) = exp(lnG(a) + lnG(b) - lnG(a+b)), a,b > 0.
double beta(double a, double b);

/// Regularized incomplete beta I_x(a,b) on [0,1], continued fraction with
/// the symmetry switch at x = (a+1)/(a+b+2).
double reg_inc_beta(double x, double a, double b);

/// Integral of f over [a,b] with the declared endpoint behavior.
/// Deterministic for fixed inputs. Throws quadrature_error (with best
/// estimate and bound) when the tolerance is not met within
/// spec.max_refinements sweeps.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureSpec& spec = {});

/// Same as integrate() but also reports the error bound and panel counts.
QuadratureOutcome integrate_full(const std::function<double(double)>& f, double a, double b,
                                 const QuadratureSpec& spec = {});

/// Integral split at interior breakpoints (quadrature restarts at each one;
/// the declared endpoint exponents apply only at a and b).
double integrate_piecewise(const std::function<double(double)>& f, double a, double b,
                           std::span<const double> interior_breakpoints,
                           const QuadratureSpec& spec = {});

}  // namespace morrey
