#pragma once

#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "morrey/constants.hpp"
#include "morrey/manifolds.hpp"

namespace morrey {

enum class ProfileKind {
    PowerExtremal,
    TalentiExtremal,
    PiecewiseLinear,
    Constant,
    Rearranged,       // produced by rearrange()
    EnergyMinimizer,  // produced by exact_radial_minimum()
};

/// A nonincreasing radial profile phi on [0, lambda]; the function on the
/// manifold is u(x) = phi(d(x0, x)). slope is phi' wherever it exists (a.e.).
/// The slope_*_exponent fields declare the power-law behavior of |phi'| at
/// the interval ends so norm quadratures can regularize singular integrands.
struct RadialProfile {
    ProfileKind kind = ProfileKind::PiecewiseLinear;
    int dimension = 0;
    double lambda = 0.0;
    double support_radius = 0.0;  // <= lambda; radius of {phi > 0} closure
    std::function<double(double)> value;
    std::function<double(double)> slope;
    double slope_left_exponent = 0.0;   // |phi'| ~ r^e near 0
    double slope_right_exponent = 0.0;  // |phi'| ~ (lambda - r)^e near lambda
    std::vector<double> knots;          // piecewise-linear kind only
    std::vector<double> knot_values;
    std::vector<double> breakpoints;  // interior quadrature split points
};

/// f_lambda(r) = r^{(1-n)/(p-1)} (lambda^n - r^n)^{1/(p-1)} on (0, lambda).
double talenti_integrand(const Exponents& e, double lambda, double r);

/// F_lambda(s) = int_0^s f_lambda, evaluated in closed form through the
/// regularized incomplete beta after the substitution t = (r/lambda)^n:
/// (lambda^{p'}/n) B((1-n)p'/n + 1, p') I_{(s/lambda)^n}((1-n)p'/n + 1, p').
double talenti_primitive(const Exponents& e, double lambda, double s);

/// phi(r) = (lambda^a - r^a)_+ with a = (p-n)/(p-1).
RadialProfile make_power_extremal(const Exponents& e, double lambda, const WarpedModel& m);

/// phi(r) = F_lambda(lambda) - F_lambda(r).
RadialProfile make_talenti_extremal(const Exponents& e, double lambda, const WarpedModel& m);

/// Piecewise-linear profile; knots must start at 0 and increase strictly,
/// values must be nonincreasing and nonnegative with a positive first value.
/// A nonzero terminal value is allowed only on compact models filling the
/// whole manifold (lambda = r_max).
RadialProfile make_piecewise_linear(std::vector<double> knots, std::vector<double> values,
                                    const WarpedModel& m);

/// Constant profile; admitted only on compact models, where its support is
/// the whole manifold (lambda = r_max). Gradient-free, so it drives both
/// quotients to zero.
RadialProfile make_constant_profile(double level, const WarpedModel& m);

/// CLI designation grammar:
///   power | talenti | linear:<k0>,<v0>;<k1>,<v1>;... | constant:<level>
RadialProfile parse_profile(std::string_view designation, const Exponents& e,
                            std::optional<double> lambda, const WarpedModel& m);

/// Norms of the induced function u(x) = phi(d(x0,x)) on the model:
///   sup_norm   = phi(0)
///   l1_norm    = n omega_n int_0^lambda phi psi^{n-1}
///   grad_lp    = (n omega_n int_0^lambda |phi'|^p psi^{n-1})^{1/p}
///   support    = ball_volume(m, support_radius)
///   q1 = support^{1/n-1/p} grad / sup,  q2 = l1^{1-eta} grad^eta / sup.
struct NormsReport {
    double sup_norm = 0.0;
    double l1_norm = 0.0;
    double grad_lp_norm = 0.0;
    double support_measure = 0.0;
    double q1 = 0.0;
    double q2 = 0.0;
};

NormsReport norms_report(const RadialProfile& u, const WarpedModel& m, const Exponents& e,
                         const QuadratureSpec& spec = {});

enum class QuotientKind { Q1, Q2 };

double quotient(const RadialProfile& u, const WarpedModel& m, const Exponents& e,
                QuotientKind which, const QuadratureSpec& spec = {});

/// Leftmost preimage radius of the level t: inf{r : phi(r) <= t}, by
/// monotone bisection (plateaus at level t map to their left edge).
double level_radius(const RadialProfile& u, double t);

}  // namespace morrey
