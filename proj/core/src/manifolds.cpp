#include "morrey/manifolds.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace morrey {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Cumulative integrals of powers of sinh/sin via the standard recursion
//   int sinh^m = (sinh^{m-1} cosh - (m-1) int sinh^{m-2}) / m,
//   int sin^m  = (-sin^{m-1} cos + (m-1) int sin^{m-2}) / m,
// with the m = 1 cases written through half-angle squares. The recursion
// cancels catastrophically for small x (the result is O(x^{m+1}) while the
// terms are O(x)), so below the threshold a series expansion of
// (t(1 +- t^2/6 + t^4/120))^m is integrated instead.
constexpr double kSeriesThreshold = 0.01;

double pow_integral_series(int m, double x, double sign) {
    const double x2 = x * x;
    const double c2 = sign * m / 6.0;
    const double c4 = m / 120.0 + m * (m - 1) / 72.0;
    return std::pow(x, m + 1) *
           (1.0 / (m + 1) + c2 * x2 / (m + 3) + c4 * x2 * x2 / (m + 5));
}

double sinh_pow_integral(int m, double x) {
    if (m == 0) return x;
    if (m == 1) {
        const double s = std::sinh(0.5 * x);
        return 2.0 * s * s;  // cosh(x) - 1
    }
    if (x < kSeriesThreshold) return pow_integral_series(m, x, +1.0);
    const double sh = std::sinh(x);
    const double ch = std::cosh(x);
    return (std::pow(sh, m - 1) * ch - (m - 1) * sinh_pow_integral(m - 2, x)) / m;
}

double sin_pow_integral(int m, double x) {
    if (m == 0) return x;
    if (m == 1) {
        const double s = std::sin(0.5 * x);
        return 2.0 * s * s;  // 1 - cos(x)
    }
    if (x < kSeriesThreshold) return pow_integral_series(m, x, -1.0);
    const double sn = std::sin(x);
    const double cs = std::cos(x);
    return (-std::pow(sn, m - 1) * cs + (m - 1) * sin_pow_integral(m - 2, x)) / m;
}

void check_dimension(int n) {
    if (n < 2) throw std::domain_error("model dimension must satisfy n >= 2");
}

void check_kappa(double kappa) {
    if (!(kappa > 0.0)) throw std::domain_error("curvature parameter kappa must be positive");
}

}  // namespace

bool is_cartan_hadamard(const WarpedModel& m) {
    return m.curvature_class == CurvatureClass::Flat ||
           m.curvature_class == CurvatureClass::CartanHadamard;
}

bool is_nonnegative_ricci(const WarpedModel& m) {
    return m.curvature_class == CurvatureClass::Flat ||
           m.curvature_class == CurvatureClass::NonnegativeRicci;
}

WarpedModel make_euclidean(int n) {
    check_dimension(n);
    WarpedModel m;
    m.n = n;
    m.curvature_class = CurvatureClass::Flat;
    m.r_max = kInf;
    m.label = "euclidean:" + std::to_string(n);
    m.warp = [](double r) { return r; };
    m.warp_deriv = [](double) { return 1.0; };
    const double om = unit_ball_volume(n);
    m.volume_closed = [om, n](double rho) { return om * std::pow(rho, n); };
    m.euclidean = true;
    return m;
}

WarpedModel make_hyperbolic(int n, double kappa) {
    check_dimension(n);
    check_kappa(kappa);
    WarpedModel m;
    m.n = n;
    m.curvature_class = CurvatureClass::CartanHadamard;
    m.r_max = kInf;
    m.label = "hyperbolic:" + std::to_string(n) + ":" + std::to_string(kappa);
    const double sk = std::sqrt(kappa);
    m.warp = [sk](double r) { return std::sinh(sk * r) / sk; };
    m.warp_deriv = [sk](double r) { return std::cosh(sk * r); };
    const double front = n * unit_ball_volume(n) * std::pow(kappa, -0.5 * n);
    m.volume_closed = [front, sk, n](double rho) {
        return front * sinh_pow_integral(n - 1, sk * rho);
    };
    return m;
}

WarpedModel make_sphere(int n, double kappa) {
    check_dimension(n);
    check_kappa(kappa);
    WarpedModel m;
    m.n = n;
    m.curvature_class = CurvatureClass::NonnegativeRicci;
    const double sk = std::sqrt(kappa);
    m.r_max = std::numbers::pi / sk;
    m.label = "sphere:" + std::to_string(n) + ":" + std::to_string(kappa);
    m.warp = [sk](double r) { return std::sin(sk * r) / sk; };
    m.warp_deriv = [sk](double r) { return std::cos(sk * r); };
    const double front = n * unit_ball_volume(n) * std::pow(kappa, -0.5 * n);
    m.volume_closed = [front, sk, n](double rho) {
        return front * sin_pow_integral(n - 1, sk * rho);
    };
    return m;
}

WarpedModel make_custom_model(int n, std::function<double(double)> warp,
                              std::function<double(double)> warp_deriv,
                              CurvatureClass curvature_class, double r_max,
                              std::string label) {
    check_dimension(n);
    if (!warp || !warp_deriv)
        throw std::invalid_argument("make_custom_model: warp and warp_deriv are required");
    if (!(r_max > 0.0))
        throw std::domain_error("make_custom_model: r_max must be positive (or +inf)");

    const double probe = 1e-6;
    const double ratio = warp(probe) / probe;
    if (!(std::fabs(ratio - 1.0) < 1e-3)) {
        throw std::invalid_argument(
            "make_custom_model: warp violates psi(r)/r -> 1 at the origin");
    }
    const double hi = std::isfinite(r_max) ? r_max : 1e3;
    for (int i = 0; i < 32; ++i) {
        const double r = probe * std::pow(hi / probe, (i + 0.5) / 32.0);
        if (!(warp(r) > 0.0))
            throw std::invalid_argument("make_custom_model: warp must be positive on (0, r_max)");
    }

    WarpedModel m;
    m.n = n;
    m.curvature_class = curvature_class;
    m.r_max = r_max;
    m.label = std::move(label);
    m.warp = std::move(warp);
    m.warp_deriv = std::move(warp_deriv);
    return m;
}

WarpedModel parse_model(std::string_view designation) {
    const auto split = [](std::string_view s) {
        std::vector<std::string> parts;
        size_t pos = 0;
        while (pos <= s.size()) {
            const size_t next = s.find(':', pos);
            if (next == std::string_view::npos) {
                parts.emplace_back(s.substr(pos));
                break;
            }
            parts.emplace_back(s.substr(pos, next - pos));
            pos = next + 1;
        }
        return parts;
    };
    const std::vector<std::string> parts = split(designation);
    if (parts.empty()) throw std::invalid_argument("empty model designation");

    const auto to_int = [&](const std::string& s) {
        size_t used = 0;
        const int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument("bad integer in model designation");
        return v;
    };
    const auto to_real = [&](const std::string& s) {
        size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument("bad number in model designation");
        return v;
    };

    const std::string& kind = parts[0];
    if (kind == "euclidean" && parts.size() == 2) return make_euclidean(to_int(parts[1]));
    if (kind == "hyperbolic" && parts.size() == 3)
        return make_hyperbolic(to_int(parts[1]), to_real(parts[2]));
    if (kind == "sphere" && parts.size() == 3)
        return make_sphere(to_int(parts[1]), to_real(parts[2]));
    throw std::invalid_argument("unrecognized model designation: " + std::string(designation));
}

double sphere_area(const WarpedModel& m, double r) {
    if (!(r > 0.0) || !(r < m.r_max))
        throw std::domain_error("sphere_area: radius must lie in (0, r_max)");
    return m.n * unit_ball_volume(m.n) * std::pow(m.warp(r), m.n - 1);
}

double ball_volume(const WarpedModel& m, double rho, const QuadratureSpec& spec) {
    if (rho < 0.0 || rho > m.r_max)
        throw std::domain_error("ball_volume: radius must lie in [0, r_max]");
    if (rho == 0.0) return 0.0;
    if (m.volume_closed) return m.volume_closed(rho);
    const double front = m.n * unit_ball_volume(m.n);
    return integrate([&](double r) { return front * std::pow(m.warp(r), m.n - 1); }, 0.0, rho,
                     spec.with_exponents(0.0, 0.0));
}

double inverse_ball_volume(const WarpedModel& m, double v, const QuadratureSpec& spec) {
    if (v < 0.0) throw std::out_of_range("inverse_ball_volume: volume must be nonnegative");
    if (v == 0.0) return 0.0;

    double hi;
    if (m.compact()) {
        const double total = ball_volume(m, m.r_max, spec);
        if (v > total * (1.0 + 1e-12))
            throw std::out_of_range("inverse_ball_volume: volume exceeds total model volume");
        if (v >= total) return m.r_max;
        hi = m.r_max;
    } else {
        hi = 1.0;
        while (ball_volume(m, hi, spec) < v) {
            hi *= 2.0;
            if (hi > 1e8)
                throw std::out_of_range("inverse_ball_volume: volume beyond bracketing range");
        }
    }

    double lo = 0.0;
    // Bisection well below the 1e-12 contract. The iteration cap covers
    // brackets as wide as the largest finite r_max a model can carry.
    for (int it = 0; it < 400 && (hi - lo) > 1e-13 * std::max(1.0, hi); ++it) {
        const double mid = 0.5 * (lo + hi);
        if (ball_volume(m, mid, spec) < v)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

VolumeMonotonicityReport volume_monotonicity_report(const WarpedModel& m,
                                                    std::span<const double> grid,
                                                    const QuadratureSpec& spec) {
    VolumeMonotonicityReport rep;
    rep.radii.assign(grid.begin(), grid.end());
    const double om = unit_ball_volume(m.n);
    for (double rho : rep.radii) {
        if (!(rho > 0.0) || !(rho < m.r_max))
            throw std::domain_error("volume_monotonicity_report: grid must lie in (0, r_max)");
        rep.ratios.push_back(ball_volume(m, rho, spec) / (om * std::pow(rho, m.n)));
    }

    double worst_up = 0.0;    // violation of nondecreasing
    double worst_down = 0.0;  // violation of nonincreasing
    for (size_t i = 0; i + 1 < rep.ratios.size(); ++i) {
        const double step = rep.ratios[i + 1] - rep.ratios[i];
        worst_up = std::max(worst_up, -step);
        worst_down = std::max(worst_down, step);
    }
    constexpr double kSlack = 1e-13;
    rep.nondecreasing = worst_up <= kSlack;
    rep.nonincreasing = worst_down <= kSlack;
    switch (m.curvature_class) {
        case CurvatureClass::CartanHadamard:
            rep.max_violation = worst_up;
            rep.expected_direction_holds = rep.nondecreasing;
            break;
        case CurvatureClass::NonnegativeRicci:
            rep.max_violation = worst_down;
            rep.expected_direction_holds = rep.nonincreasing;
            break;
        case CurvatureClass::Flat:
            rep.max_violation = std::max(worst_up, worst_down);
            rep.expected_direction_holds = rep.nondecreasing && rep.nonincreasing;
            break;
    }
    rep.limit_at_min_radius = rep.ratios.empty() ? 0.0 : rep.ratios.front();
    return rep;
}

double isoperimetric_gap(const WarpedModel& m, double rho, const QuadratureSpec& spec) {
    if (!(rho > 0.0) || !(rho < m.r_max))
        throw std::domain_error("isoperimetric_gap: radius must lie in (0, r_max)");
    const double area = sphere_area(m, rho);
    const double vol = ball_volume(m, rho, spec);
    const double om = unit_ball_volume(m.n);
    return area - m.n * std::pow(om, 1.0 / m.n) * std::pow(vol, (m.n - 1.0) / m.n);
}

}  // namespace morrey
