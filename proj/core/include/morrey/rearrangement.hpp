#pragma once

#include "morrey/profiles.hpp"

namespace morrey {

/// Euclidean decreasing rearrangement of a radial profile. The star profile
/// lives on the Euclidean model of the same dimension and satisfies
/// Vol_e({u* > t}) = Vol_g({u > t}) for every level t; for radial
/// nonincreasing profiles this is realized by composing phi with the inverse
/// of the radius map s(rho) = (ball_volume(m, rho)/omega_n)^{1/n}.
struct RearrangementResult {
    RadialProfile star_profile;
    std::function<double(double)> radius_map;  // rho -> s(rho)
    double lambda_star = 0.0;
    NormsReport report_before;
    NormsReport report_after;
};

RearrangementResult rearrange(const RadialProfile& u, const WarpedModel& m, const Exponents& e,
                              const QuadratureSpec& spec = {});

/// Polya-Szego-type diagnostics: delta_grad = |grad u|_p on m minus
/// |grad u*|_p on Euclidean space (nonnegative on Cartan-Hadamard models),
/// delta_sup (exactly zero by construction), delta_l1 (zero up to
/// quadrature). Sphere models are rejected: the inequality direction relies
/// on the Euclidean isoperimetric property.
struct PolyaSzegoReport {
    double delta_grad = 0.0;
    double delta_sup = 0.0;
    double delta_l1 = 0.0;
    NormsReport before;
    NormsReport after;
};

PolyaSzegoReport polya_szego_check(const RadialProfile& u, const WarpedModel& m,
                                   const Exponents& e, const QuadratureSpec& spec = {});

}  // namespace morrey
