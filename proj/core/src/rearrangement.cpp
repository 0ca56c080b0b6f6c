#include "morrey/rearrangement.hpp"

#include <algorithm>
#include <cmath>

namespace morrey {

RearrangementResult rearrange(const RadialProfile& u, const WarpedModel& m, const Exponents& e,
                              const QuadratureSpec& spec) {
    if (u.dimension != m.n || e.n != m.n)
        throw std::invalid_argument("rearrange: profile, model, and exponent dimensions differ");

    RearrangementResult out;
    const WarpedModel target = make_euclidean(m.n);

    if (m.euclidean) {
        // s(rho) = rho exactly; the rearrangement is the identity.
        out.star_profile = u;
        out.radius_map = [](double rho) { return rho; };
        out.lambda_star = u.lambda;
        out.report_before = norms_report(u, m, e, spec);
        out.report_after = out.report_before;
        return out;
    }

    const int n = m.n;
    const double om = unit_ball_volume(n);
    auto radius_map = [m, om, n, spec](double rho) {
        return std::pow(ball_volume(m, rho, spec) / om, 1.0 / n);
    };
    const double lambda_star = radius_map(u.lambda);

    RadialProfile star;
    star.kind = ProfileKind::Rearranged;
    star.dimension = n;
    star.lambda = lambda_star;
    star.support_radius = radius_map(u.support_radius);
    star.slope_left_exponent = u.slope_left_exponent;
    star.slope_right_exponent = u.slope_right_exponent;

    // Map the base profile's split points through the radius map.
    for (double b : u.breakpoints) star.breakpoints.push_back(radius_map(b));

    auto base_value = u.value;
    auto base_slope = u.slope;
    auto warp = m.warp;
    star.value = [base_value, m, om, n, lambda_star, spec](double s) {
        if (s <= 0.0) return base_value(0.0);
        if (s >= lambda_star) return 0.0;
        const double rho = inverse_ball_volume(m, om * std::pow(s, n), spec);
        return base_value(rho);
    };
    star.slope = [base_slope, warp, m, om, n, lambda_star, spec](double s) {
        if (s <= 0.0) return base_slope(0.0);
        const double rho = inverse_ball_volume(m, om * std::pow(s, n), spec);
        // d(phi*)/ds = phi'(rho) * drho/ds with ds/drho = (psi/s)^{n-1}.
        return base_slope(rho) * std::pow(s / warp(rho), n - 1.0);
    };

    out.star_profile = std::move(star);
    out.radius_map = radius_map;
    out.lambda_star = lambda_star;
    out.report_before = norms_report(u, m, e, spec);
    out.report_after = norms_report(out.star_profile, target, e, spec);
    return out;
}

PolyaSzegoReport polya_szego_check(const RadialProfile& u, const WarpedModel& m,
                                   const Exponents& e, const QuadratureSpec& spec) {
    if (!is_cartan_hadamard(m))
        throw std::invalid_argument(
            "polya_szego_check: requires a Cartan-Hadamard or flat model (the inequality "
            "direction needs the Euclidean isoperimetric property)");

    const RearrangementResult r = rearrange(u, m, e, spec);
    PolyaSzegoReport rep;
    rep.before = r.report_before;
    rep.after = r.report_after;
    rep.delta_grad = r.report_before.grad_lp_norm - r.report_after.grad_lp_norm;
    rep.delta_sup = r.report_before.sup_norm - r.report_after.sup_norm;
    rep.delta_l1 = r.report_before.l1_norm - r.report_after.l1_norm;
    return rep;
}

}  // namespace morrey
