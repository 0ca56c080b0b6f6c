#pragma once

#include "morrey/specfun.hpp"

namespace morrey {

/// Exponent bundle for the p > n >= 2 regime. p_conj is p/(p-1) and eta is
/// the interpolation exponent np/(np+p-n) of the L1-bound inequality.
struct Exponents {
    int n = 0;
    double p = 0.0;
    double p_conj = 0.0;
    double eta = 0.0;
};

/// Validates n >= 2, p > n and fills in the derived exponents.
Exponents make_exponents(int n, double p);

/// Volume of the n-dimensional Euclidean unit ball, pi^{n/2}/Gamma(n/2+1).
double unit_ball_volume(int n);

/// Sharp constant of the support-bound inequality:
/// n^{-1/p} * omega_n^{-1/n} * ((p-1)/(p-n))^{1/p'}.
double sharp_c1(const Exponents& e);

/// Sharp constant of the L1-bound inequality, closed beta-function form.
double sharp_c2_closed(const Exponents& e);

/// The same constant evaluated operationally: the quotient
/// sup / (L1^{1-eta} * gradLp^eta) of the exact Euclidean extremal with
/// support radius lambda, all three norms by direct quadrature.
double sharp_c2_operational(const Exponents& e, double lambda, const QuadratureSpec& spec = {});

/// Returns sharp_c2_closed after cross-validating it against the
/// operational value at lambda = 1; throws consistency_error if the two
/// routes disagree by more than 1e-6 relative.
double sharp_c2(const Exponents& e, const QuadratureSpec& spec = {});

struct SharpConstants {
    double c1 = 0.0;
    double c2 = 0.0;
    double omega_n = 0.0;
};

SharpConstants sharp_constants(const Exponents& e, const QuadratureSpec& spec = {});

}  // namespace morrey
