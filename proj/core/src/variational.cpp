#include "morrey/variational.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace morrey {

namespace {

double weight_exponent(const Exponents& e) { return (e.n - 1.0) / (e.p - 1.0); }

// Fit q(l) = q0 + c2 l^2 + c4 l^4 through three points (3x3 Gaussian
// elimination); exact for even curvature expansions and for constants.
double richardson_limit(const double l[3], const double q[3]) {
    double a[3][4];
    for (int i = 0; i < 3; ++i) {
        const double l2 = l[i] * l[i];
        a[i][0] = 1.0;
        a[i][1] = l2;
        a[i][2] = l2 * l2;
        a[i][3] = q[i];
    }
    for (int col = 0; col < 3; ++col) {
        int piv = col;
        for (int r = col + 1; r < 3; ++r)
            if (std::fabs(a[r][col]) > std::fabs(a[piv][col])) piv = r;
        std::swap(a[col], a[piv]);
        if (a[col][col] == 0.0) return q[0];  // degenerate grid; fall back
        for (int r = 0; r < 3; ++r) {
            if (r == col) continue;
            const double f = a[r][col] / a[col][col];
            for (int c = col; c < 4; ++c) a[r][c] -= f * a[col][c];
        }
    }
    return a[0][3] / a[0][0];
}

}  // namespace

RadialMinimum exact_radial_minimum(const WarpedModel& m, const Exponents& e, double lambda,
                                   const QuadratureSpec& spec) {
    if (e.n != m.n) throw std::invalid_argument("exponent and model dimensions must agree");
    if (!(lambda > 0.0) || !(lambda < m.r_max))
        throw std::domain_error("exact_radial_minimum: lambda must lie in (0, r_max)");

    const double n = e.n;
    const double p = e.p;
    const double beta_w = weight_exponent(e);
    const double om = unit_ball_volume(e.n);
    auto warp = m.warp;

    auto weight_integral = [warp, beta_w, spec](double from, double to) {
        return integrate([&](double r) { return std::pow(warp(r), -beta_w); }, from, to,
                         spec.with_exponents(from == 0.0 ? -beta_w : 0.0, 0.0));
    };
    const double total = weight_integral(0.0, lambda);

    RadialMinimum out;
    out.energy = std::pow(n * om, 1.0 / p) * std::pow(total, -1.0 / e.p_conj);
    out.q1_min = std::pow(ball_volume(m, lambda, spec), 1.0 / n - 1.0 / p) * out.energy;

    RadialProfile phi;
    phi.kind = ProfileKind::EnergyMinimizer;
    phi.dimension = e.n;
    phi.lambda = lambda;
    phi.support_radius = lambda;
    phi.slope_left_exponent = -beta_w;
    phi.slope_right_exponent = 0.0;
    phi.value = [weight_integral, total, lambda](double r) {
        if (r <= 0.0) return 1.0;
        if (r >= lambda) return 0.0;
        return std::clamp(1.0 - weight_integral(0.0, r) / total, 0.0, 1.0);
    };
    phi.slope = [warp, beta_w, total](double r) {
        return -std::pow(warp(r), -beta_w) / total;
    };
    out.minimizer = std::move(phi);
    return out;
}

DiscreteMinimum discrete_optimize(const WarpedModel& m, const Exponents& e, double lambda,
                                  int grid_size, const DiscreteOptions& opts,
                                  const QuadratureSpec& spec) {
    if (e.n != m.n) throw std::invalid_argument("exponent and model dimensions must agree");
    if (grid_size < 8) throw std::domain_error("discrete_optimize: grid size must be >= 8");
    if (!(lambda > 0.0) || !(lambda < m.r_max))
        throw std::domain_error("discrete_optimize: lambda must lie in (0, r_max)");

    const int N = grid_size;
    const double p = e.p;
    // Grading concentrates knots near the derivative singularity at r = 0;
    // the exponent keeps the discretization gap at O(N^-2).
    const int grading = static_cast<int>(std::ceil(2.0 * (p - 1.0) / (p - e.n))) + 1;

    std::vector<double> r(N + 1), h(N), w(N);
    for (int i = 0; i <= N; ++i)
        r[i] = lambda * std::pow(static_cast<double>(i) / N, grading);
    double v_prev = 0.0;
    for (int i = 0; i < N; ++i) {
        h[i] = r[i + 1] - r[i];
        const double v_next = ball_volume(m, r[i + 1], spec);
        w[i] = v_next - v_prev;
        v_prev = v_next;
        if (!(w[i] > 0.0))
            throw std::runtime_error(
                "discrete_optimize: degenerate segment weight (volume not increasing)");
    }

    // Slopes of -phi; feasible iff sum t_i h_i = 1. Slopes at the optimum
    // span many decades on the graded mesh, so start from the warp-shaped
    // profile t_i ~ psi(midpoint)^{-beta}; the Newton decrement below
    // certifies optimality regardless of the start (convex objective).
    const double beta_w = weight_exponent(e);
    std::vector<double> t(N);
    for (int i = 0; i < N; ++i)
        t[i] = std::pow(m.warp(0.5 * (r[i] + r[i + 1])), -beta_w);
    auto renormalize = [&]() {
        const double s = std::inner_product(t.begin(), t.end(), h.begin(), 0.0);
        if (!(s > 0.0))
            throw std::runtime_error("discrete_optimize: iterate left the feasible cone");
        for (double& ti : t) ti /= s;
    };
    renormalize();

    auto objective = [&](const std::vector<double>& x) {
        double f = 0.0;
        for (int i = 0; i < N; ++i) f += std::pow(std::fabs(x[i]), p) * w[i];
        return f;
    };

    const double t_floor = 1e-8 / lambda;
    std::vector<double> g(N), hess(N), d(N), trial(N);
    double f_cur = objective(t);
    int iter = 0;
    bool converged = false;
    for (; iter < opts.max_iterations; ++iter) {
        for (int i = 0; i < N; ++i) {
            const double a = std::fabs(t[i]);
            g[i] = p * std::pow(a, p - 1.0) * (t[i] < 0.0 ? -1.0 : 1.0) * w[i];
            hess[i] = p * (p - 1.0) * std::pow(std::max(a, t_floor), p - 2.0) * w[i];
        }
        // Newton step restricted to the hyperplane sum d_i h_i = 0
        double num = 0.0, den = 0.0;
        for (int i = 0; i < N; ++i) {
            num += h[i] * g[i] / hess[i];
            den += h[i] * h[i] / hess[i];
        }
        const double mu = num / den;
        double decrement = 0.0;
        for (int i = 0; i < N; ++i) {
            d[i] = -(g[i] - mu * h[i]) / hess[i];
            decrement += -g[i] * d[i];
        }
        if (decrement <= opts.tolerance * std::max(f_cur, 1e-300)) {
            converged = true;
            break;
        }
        double step = 1.0;
        bool accepted = false;
        for (int back = 0; back < 60; ++back) {
            for (int i = 0; i < N; ++i) trial[i] = t[i] + step * d[i];
            const double f_new = objective(trial);
            if (f_new <= f_cur - 1e-4 * step * decrement) {
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        if (!accepted) {
            // numerical floor: no step of the descent direction improves
            converged = decrement <= 1e-8 * std::max(f_cur, 1e-300);
            break;
        }
        t.swap(trial);
        renormalize();
        f_cur = objective(t);
    }

    DiscreteMinimum out;
    out.energy = std::pow(f_cur, 1.0 / p);
    out.iterations = iter;
    out.converged = converged;

    std::vector<double> values(N + 1);
    values[0] = 1.0;
    for (int i = 0; i < N; ++i)
        values[i + 1] = std::min(values[i], std::max(0.0, values[i] - t[i] * h[i]));
    values[N] = 0.0;
    out.minimizer = make_piecewise_linear(std::move(r), std::move(values), m);
    return out;
}

ScanResult sharpness_scan(const WarpedModel& m, const Exponents& e,
                          std::span<const double> lambda_grid, QuotientKind which,
                          const ScanConfig& cfg, const QuadratureSpec& spec) {
    if (lambda_grid.empty()) throw std::invalid_argument("sharpness_scan: empty lambda grid");
    ScanResult out;
    out.lambdas.assign(lambda_grid.begin(), lambda_grid.end());
    if (!std::is_sorted(out.lambdas.begin(), out.lambdas.end()))
        throw std::invalid_argument("sharpness_scan: lambda grid must be increasing");
    for (double l : out.lambdas)
        if (!(l > 0.0) || !(l < m.r_max))
            throw std::domain_error("sharpness_scan: grid must lie in (0, r_max)");

    out.certified_minimum = (which == QuotientKind::Q1);
    out.sharp_reference =
        which == QuotientKind::Q1 ? 1.0 / sharp_c1(e) : 1.0 / sharp_c2(e, spec);

    for (double l : out.lambdas) {
        if (which == QuotientKind::Q1) {
            out.q_values.push_back(exact_radial_minimum(m, e, l, spec).q1_min);
        } else {
            // upper-bound probe: the transplanted Euclidean extremal
            const RadialProfile u = make_talenti_extremal(e, l, m);
            out.q_values.push_back(norms_report(u, m, e, spec).q2);
        }
    }

    if (out.lambdas.size() >= 3) {
        const double l[3] = {out.lambdas[0], out.lambdas[1], out.lambdas[2]};
        const double q[3] = {out.q_values[0], out.q_values[1], out.q_values[2]};
        out.limit_estimate = richardson_limit(l, q);
    } else {
        out.limit_estimate = out.q_values.front();
    }

    double max_dev = 0.0, min_q = out.q_values.front();
    for (double q : out.q_values) {
        max_dev = std::max(max_dev, std::fabs(q - out.sharp_reference));
        min_q = std::min(min_q, q);
    }
    if (max_dev < cfg.attained_abs_tol) {
        out.attainment = Attainment::AttainedEverywhere;
    } else if (min_q >= out.sharp_reference - cfg.lower_bound_slack &&
               std::fabs(out.limit_estimate - out.sharp_reference) <=
                   cfg.limit_rel_tol * out.sharp_reference) {
        out.attainment = Attainment::NotAttained;
    } else {
        out.attainment = Attainment::Indeterminate;
    }

    double probe = std::max(out.lambdas.back(),
                            cfg.volume_probe_factor * out.lambdas.back());
    probe = std::min(probe, cfg.volume_probe_cap);
    if (m.compact()) probe = std::min(probe, 0.999 * m.r_max);
    out.volume_probe_radius = probe;
    out.asymptotic_volume_ratio =
        ball_volume(m, probe, spec) / (unit_ball_volume(m.n) * std::pow(probe, m.n));
    return out;
}

VolumeBoundReport volume_bound_diagnostics(const WarpedModel& m, const Exponents& e, double C,
                                           VolumeBoundKind which,
                                           std::span<const double> rho_grid,
                                           std::optional<double> lambda,
                                           const QuadratureSpec& spec) {
    if (!(C > 0.0)) throw std::domain_error("volume_bound_diagnostics: C must be positive");
    if (e.n != m.n) throw std::invalid_argument("exponent and model dimensions must agree");

    VolumeBoundReport out;
    const double n = e.n;
    const double p = e.p;
    const double om = unit_ball_volume(e.n);

    if (which == VolumeBoundKind::MS1) {
        out.threshold = std::pow(sharp_c1(e) / C, p * n / (p - n));
    } else {
        out.threshold = std::pow(sharp_c2(e, spec) / C, 1.0 / (1.0 - e.eta));
    }

    out.worst_margin = std::numeric_limits<double>::infinity();
    for (double rho : rho_grid) {
        if (!(rho > 0.0) || !(rho < m.r_max))
            throw std::domain_error("volume_bound_diagnostics: grid must lie in (0, r_max)");
        const double ratio = ball_volume(m, rho, spec) / (om * std::pow(rho, n));
        out.rhos.push_back(rho);
        out.ratios.push_back(ratio);
        out.margins.push_back(ratio - out.threshold);
        out.worst_margin = std::min(out.worst_margin, out.margins.back());
    }

    if (which == VolumeBoundKind::MS2) {
        if (!lambda) throw std::invalid_argument("MS2 diagnostics require a lambda");
        const double lam = *lambda;
        if (!(lam > 0.0) || !(lam <= m.r_max))
            throw std::domain_error("volume_bound_diagnostics: lambda must lie in (0, r_max]");
        const double tau = out.threshold;
        out.gap_integral = integrate(
            [&](double rho) {
                return (ball_volume(m, rho, spec) - tau * om * std::pow(rho, n)) *
                       talenti_integrand(e, lam, rho);
            },
            0.0, lam,
            spec.with_exponents((1.0 - n) / (p - 1.0), 1.0 / (p - 1.0)));
    }
    return out;
}

}  // namespace morrey
