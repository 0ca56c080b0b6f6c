#include "morrey/constants.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace morrey {

Exponents make_exponents(int n, double p) {
    if (n < 2) throw std::domain_error("make_exponents: dimension must satisfy n >= 2");
    if (!(p > static_cast<double>(n)))
        throw std::domain_error("make_exponents: requires p > n");
    Exponents e;
    e.n = n;
    e.p = p;
    e.p_conj = p / (p - 1.0);
    e.eta = n * p / (n * p + p - n);
    return e;
}

double unit_ball_volume(int n) {
    if (n < 1) throw std::domain_error("unit_ball_volume: dimension must be >= 1");
    return std::pow(std::numbers::pi, 0.5 * n) / std::exp(ln_gamma(0.5 * n + 1.0));
}

double sharp_c1(const Exponents& e) {
    const double n = e.n;
    const double p = e.p;
    return std::pow(n, -1.0 / p) * std::pow(unit_ball_volume(e.n), -1.0 / n) *
           std::pow((p - 1.0) / (p - n), 1.0 / e.p_conj);
}

double sharp_c2_closed(const Exponents& e) {
    // The middle exponent applies to (1/n - 1/p) alone; with that grouping
    // the formula agrees with the operational quotient to machine precision
    // (it reduces to eta^-eta * (1-eta)^{eta-1} * (n omega^{1/n})^{-eta} *
    //  B(a, p'+1)^{n/(n+p')}).
    const double n = e.n;
    const double p = e.p;
    const double pc = e.p_conj;
    const double om = unit_ball_volume(e.n);
    const double a = (1.0 - n) / n * pc + 1.0;
    const double mid_exp = ((n - 1.0) * pc - n) / (n + pc);
    return std::pow(n * std::pow(om, 1.0 / n), -n * pc / (n + pc)) *
           (1.0 / n + 1.0 / pc) * std::pow(1.0 / n - 1.0 / p, mid_exp) *
           std::pow(beta(a, pc + 1.0), n / (n + pc));
}

double sharp_c2_operational(const Exponents& e, double lambda, const QuadratureSpec& spec) {
    if (!(lambda > 0.0)) throw std::domain_error("sharp_c2_operational: lambda must be positive");
    const double n = e.n;
    const double p = e.p;
    const double om = unit_ball_volume(e.n);
    const double sing = (1.0 - n) / (p - 1.0);  // radial weight exponent at r = 0
    const double lam_n = std::pow(lambda, n);

    auto f = [&](double r) {
        return std::pow(r, sing) * std::pow(lam_n - std::pow(r, n), 1.0 / (p - 1.0));
    };

    const double sup = integrate(f, 0.0, lambda,
                                 spec.with_exponents(sing, 1.0 / (p - 1.0)));
    const double l1 =
        om * integrate([&](double r) { return std::pow(r, n) * f(r); }, 0.0, lambda,
                       spec.with_exponents(0.0, 1.0 / (p - 1.0)));
    const double grad_pow_p =
        n * om *
        integrate([&](double r) { return std::pow(f(r), p) * std::pow(r, n - 1.0); }, 0.0,
                  lambda, spec.with_exponents(p * sing + (n - 1.0), p / (p - 1.0)));
    const double grad = std::pow(grad_pow_p, 1.0 / p);
    return sup / (std::pow(l1, 1.0 - e.eta) * std::pow(grad, e.eta));
}

double sharp_c2(const Exponents& e, const QuadratureSpec& spec) {
    const double closed = sharp_c2_closed(e);
    const double operational = sharp_c2_operational(e, 1.0, spec);
    const double rel = std::fabs(closed / operational - 1.0);
    if (rel > 1e-6) {
        throw consistency_error("sharp_c2: closed form and operational quotient disagree (" +
                                std::to_string(closed) + " vs " + std::to_string(operational) +
                                ", relative " + std::to_string(rel) + ")");
    }
    return closed;
}

SharpConstants sharp_constants(const Exponents& e, const QuadratureSpec& spec) {
    return SharpConstants{sharp_c1(e), sharp_c2(e, spec), unit_ball_volume(e.n)};
}

}  // namespace morrey
