#include "morrey/profiles.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace morrey {

namespace {

void check_lambda(double lambda, const WarpedModel& m) {
    if (!(lambda > 0.0) || !(lambda <= m.r_max))
        throw std::domain_error("profile support radius must lie in (0, r_max]");
}

void check_match(const RadialProfile& u, const WarpedModel& m, const Exponents& e) {
    if (u.dimension != m.n || e.n != m.n)
        throw std::invalid_argument("profile, model, and exponent dimensions must agree");
    if (u.lambda > m.r_max * (1.0 + 1e-12))
        throw std::domain_error("profile support exceeds the model's valid radius");
}

// Index of the piecewise-linear segment containing r (clamped).
size_t segment_index(const std::vector<double>& knots, double r) {
    const auto it = std::upper_bound(knots.begin(), knots.end(), r);
    const size_t j = static_cast<size_t>(it - knots.begin());
    if (j == 0) return 0;
    return std::min(j - 1, knots.size() - 2);
}

}  // namespace

double talenti_integrand(const Exponents& e, double lambda, double r) {
    const double n = e.n;
    const double p = e.p;
    return std::pow(r, (1.0 - n) / (p - 1.0)) *
           std::pow(std::max(std::pow(lambda, n) - std::pow(r, n), 0.0), 1.0 / (p - 1.0));
}

double talenti_primitive(const Exponents& e, double lambda, double s) {
    if (s < 0.0 || s > lambda * (1.0 + 1e-12))
        throw std::domain_error("talenti_primitive: s must lie in [0, lambda]");
    if (s == 0.0) return 0.0;
    const double n = e.n;
    const double pc = e.p_conj;
    const double a = (1.0 - n) / n * pc + 1.0;
    const double x = std::min(std::pow(s / lambda, n), 1.0);
    return std::pow(lambda, pc) / n * beta(a, pc) * reg_inc_beta(x, a, pc);
}

RadialProfile make_power_extremal(const Exponents& e, double lambda, const WarpedModel& m) {
    check_lambda(lambda, m);
    if (e.n != m.n) throw std::invalid_argument("exponent and model dimensions must agree");
    const double alpha = (e.p - e.n) / (e.p - 1.0);
    const double top = std::pow(lambda, alpha);

    RadialProfile u;
    u.kind = ProfileKind::PowerExtremal;
    u.dimension = e.n;
    u.lambda = lambda;
    u.support_radius = lambda;
    u.value = [top, alpha](double r) { return std::max(top - std::pow(r, alpha), 0.0); };
    u.slope = [alpha](double r) { return -alpha * std::pow(r, alpha - 1.0); };
    u.slope_left_exponent = alpha - 1.0;  // (1-n)/(p-1)
    u.slope_right_exponent = 0.0;
    return u;
}

RadialProfile make_talenti_extremal(const Exponents& e, double lambda, const WarpedModel& m) {
    check_lambda(lambda, m);
    if (e.n != m.n) throw std::invalid_argument("exponent and model dimensions must agree");
    const double top = talenti_primitive(e, lambda, lambda);

    RadialProfile u;
    u.kind = ProfileKind::TalentiExtremal;
    u.dimension = e.n;
    u.lambda = lambda;
    u.support_radius = lambda;
    u.value = [e, lambda, top](double r) {
        if (r >= lambda) return 0.0;
        return std::max(top - talenti_primitive(e, lambda, r), 0.0);
    };
    u.slope = [e, lambda](double r) { return -talenti_integrand(e, lambda, r); };
    u.slope_left_exponent = (1.0 - e.n) / (e.p - 1.0);
    u.slope_right_exponent = 1.0 / (e.p - 1.0);
    return u;
}

RadialProfile make_piecewise_linear(std::vector<double> knots, std::vector<double> values,
                                    const WarpedModel& m) {
    if (knots.size() < 2 || knots.size() != values.size())
        throw std::invalid_argument("piecewise-linear profile needs matching knots/values, >= 2");
    if (knots.front() != 0.0)
        throw std::invalid_argument("piecewise-linear knots must start at 0");
    for (size_t i = 0; i + 1 < knots.size(); ++i) {
        if (!(knots[i + 1] > knots[i]))
            throw std::invalid_argument("piecewise-linear knots must increase strictly");
        if (values[i + 1] > values[i])
            throw std::invalid_argument("piecewise-linear values must be nonincreasing");
    }
    if (values.back() < 0.0)
        throw std::invalid_argument("piecewise-linear values must be nonnegative");
    if (!(values.front() > 0.0))
        throw std::invalid_argument("profile must be nonzero");
    const double lambda = knots.back();
    check_lambda(lambda, m);
    if (values.back() != 0.0 && !(m.compact() && lambda == m.r_max))
        throw std::invalid_argument(
            "nonzero terminal value requires a compact model filled to r_max");

    // Support ends where the profile becomes identically zero.
    double support = lambda;
    for (size_t i = knots.size(); i-- > 0;) {
        if (values[i] == 0.0)
            support = knots[i];
        else
            break;
    }

    RadialProfile u;
    u.kind = ProfileKind::PiecewiseLinear;
    u.dimension = m.n;
    u.lambda = lambda;
    u.support_radius = support;
    u.knots = knots;
    u.knot_values = values;
    u.breakpoints.assign(knots.begin() + 1, knots.end() - 1);
    u.value = [knots, values](double r) {
        if (r <= knots.front()) return values.front();
        if (r >= knots.back()) return values.back();
        const size_t i = segment_index(knots, r);
        const double w = (r - knots[i]) / (knots[i + 1] - knots[i]);
        return values[i] + w * (values[i + 1] - values[i]);
    };
    u.slope = [knots, values](double r) {
        const size_t i = segment_index(knots, std::clamp(r, knots.front(), knots.back()));
        return (values[i + 1] - values[i]) / (knots[i + 1] - knots[i]);
    };
    return u;
}

RadialProfile make_constant_profile(double level, const WarpedModel& m) {
    if (!(level > 0.0)) throw std::domain_error("constant profile level must be positive");
    if (!m.compact())
        throw std::invalid_argument("constant profiles are admitted only on compact models");

    RadialProfile u;
    u.kind = ProfileKind::Constant;
    u.dimension = m.n;
    u.lambda = m.r_max;
    u.support_radius = m.r_max;
    u.value = [level](double) { return level; };
    u.slope = [](double) { return 0.0; };
    return u;
}

RadialProfile parse_profile(std::string_view designation, const Exponents& e,
                            std::optional<double> lambda, const WarpedModel& m) {
    if (designation == "power") {
        if (!lambda) throw std::invalid_argument("profile 'power' requires a lambda");
        return make_power_extremal(e, *lambda, m);
    }
    if (designation == "talenti") {
        if (!lambda) throw std::invalid_argument("profile 'talenti' requires a lambda");
        return make_talenti_extremal(e, *lambda, m);
    }
    if (designation.rfind("constant:", 0) == 0) {
        const double level = std::stod(std::string(designation.substr(9)));
        return make_constant_profile(level, m);
    }
    if (designation.rfind("linear:", 0) == 0) {
        std::vector<double> knots, values;
        std::string body(designation.substr(7));
        size_t pos = 0;
        while (pos <= body.size()) {
            size_t semi = body.find(';', pos);
            if (semi == std::string::npos) semi = body.size();
            const std::string pair = body.substr(pos, semi - pos);
            const size_t comma = pair.find(',');
            if (comma == std::string::npos)
                throw std::invalid_argument("linear profile pairs must be <knot>,<value>");
            knots.push_back(std::stod(pair.substr(0, comma)));
            values.push_back(std::stod(pair.substr(comma + 1)));
            pos = semi + 1;
        }
        auto u = make_piecewise_linear(std::move(knots), std::move(values), m);
        if (lambda && std::fabs(*lambda - u.lambda) > 1e-12 * std::max(1.0, u.lambda))
            throw std::invalid_argument("explicit lambda disagrees with the last linear knot");
        return u;
    }
    throw std::invalid_argument("unrecognized profile designation: " + std::string(designation));
}

NormsReport norms_report(const RadialProfile& u, const WarpedModel& m, const Exponents& e,
                         const QuadratureSpec& spec) {
    check_match(u, m, e);
    const double n = e.n;
    const double p = e.p;
    const double om = unit_ball_volume(e.n);
    const double lambda = std::min(u.lambda, m.r_max);

    NormsReport rep;
    rep.sup_norm = u.value(0.0);
    rep.support_measure = ball_volume(m, std::min(u.support_radius, m.r_max), spec);

    switch (u.kind) {
        case ProfileKind::Constant:
            rep.grad_lp_norm = 0.0;
            rep.l1_norm = rep.sup_norm * rep.support_measure;
            break;
        case ProfileKind::PiecewiseLinear: {
            // exact p-energy: the slope is constant per segment
            double acc = 0.0;
            for (size_t i = 0; i + 1 < u.knots.size(); ++i) {
                const double s =
                    (u.knot_values[i + 1] - u.knot_values[i]) / (u.knots[i + 1] - u.knots[i]);
                if (s == 0.0) continue;
                const double w =
                    ball_volume(m, u.knots[i + 1], spec) - ball_volume(m, u.knots[i], spec);
                acc += std::pow(std::fabs(s), p) * w;
            }
            rep.grad_lp_norm = std::pow(acc, 1.0 / p);
            rep.l1_norm = integrate_piecewise(
                [&](double r) { return n * om * u.value(r) * std::pow(m.warp(r), n - 1.0); },
                0.0, lambda, u.breakpoints, spec.with_exponents(0.0, 0.0));
            break;
        }
        default: {
            const double left = p * u.slope_left_exponent + (n - 1.0);
            const double right = p * u.slope_right_exponent;
            const double grad_pow_p = integrate_piecewise(
                [&](double r) {
                    return n * om * std::pow(std::fabs(u.slope(r)), p) *
                           std::pow(m.warp(r), n - 1.0);
                },
                0.0, lambda, u.breakpoints, spec.with_exponents(left, right));
            rep.grad_lp_norm = std::pow(grad_pow_p, 1.0 / p);
            rep.l1_norm = integrate_piecewise(
                [&](double r) { return n * om * u.value(r) * std::pow(m.warp(r), n - 1.0); },
                0.0, lambda, u.breakpoints, spec.with_exponents(0.0, 0.0));
            break;
        }
    }

    rep.q1 = std::pow(rep.support_measure, 1.0 / n - 1.0 / p) * rep.grad_lp_norm / rep.sup_norm;
    rep.q2 = std::pow(rep.l1_norm, 1.0 - e.eta) * std::pow(rep.grad_lp_norm, e.eta) /
             rep.sup_norm;
    return rep;
}

double quotient(const RadialProfile& u, const WarpedModel& m, const Exponents& e,
                QuotientKind which, const QuadratureSpec& spec) {
    const NormsReport rep = norms_report(u, m, e, spec);
    return which == QuotientKind::Q1 ? rep.q1 : rep.q2;
}

double level_radius(const RadialProfile& u, double t) {
    if (u.value(0.0) <= t) return 0.0;
    if (u.value(u.lambda) > t) return u.lambda;
    double lo = 0.0, hi = u.lambda;  // value(lo) > t >= value(hi)
    for (int it = 0; it < 100 && (hi - lo) > 1e-13 * std::max(1.0, u.lambda); ++it) {
        const double mid = 0.5 * (lo + hi);
        if (u.value(mid) > t)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace morrey
