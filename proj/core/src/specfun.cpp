#include "morrey/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <vector>

namespace morrey {

namespace {

// Lanczos coefficients, g = 7.
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

constexpr double kHalfLogTwoPi = 0.91893853320467274178;  // ln(2*pi)/2

double ln_gamma_lanczos(double x) {
    // valid for x >= 0.5
    const double z = x - 1.0;
    double sum = kLanczos[0];
    for (int i = 1; i < 9; ++i) sum += kLanczos[i] / (z + i);
    const double base = z + 7.5;
    return kHalfLogTwoPi + (z + 0.5) * std::log(base) - base + std::log(sum);
}

// Continued fraction for the incomplete beta (Lentz's method).
double beta_cf(double x, double a, double b) {
    constexpr int kMaxIter = 400;
    constexpr double kEps = 1e-16;
    constexpr double kTiny = 1e-300;

    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < kTiny) d = kTiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kMaxIter; ++m) {
        const int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < kEps) return h;
    }
    return h;  // converged to machine noise in practice well before kMaxIter
}

// 15-point Kronrod rule with embedded 7-point Gauss rule.
// Column 0: |node|, column 1: Gauss weight (0 at Kronrod-only nodes),
// column 2: Kronrod weight.
constexpr double kGK15[8][3] = {
    {0.000000000000000, 0.417959183673469, 0.209482141084728},
    {0.405845151377397, 0.381830050505119, 0.190350578064785},
    {0.741531185599394, 0.279705391489277, 0.140653259715525},
    {0.949107912342759, 0.129484966168870, 0.063092092629979},
    {0.207784955007898, 0.0, 0.204432940075298},
    {0.586087235467691, 0.0, 0.169004726639267},
    {0.864864423359769, 0.0, 0.104790010322250},
    {0.991455371120813, 0.0, 0.022935322010529},
};

struct Panel {
    double a, b;
    double value;
    double error;
};

template <typename F>
Panel evaluate_panel(const F& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double f0 = f(mid);
    double g7 = kGK15[0][1] * f0;
    double k15 = kGK15[0][2] * f0;
    for (int i = 1; i < 8; ++i) {
        const double dx = half * kGK15[i][0];
        const double fi = f(mid + dx) + f(mid - dx);
        g7 += kGK15[i][1] * fi;
        k15 += kGK15[i][2] * fi;
    }
    g7 *= half;
    k15 *= half;
    return Panel{a, b, k15, std::fabs(k15 - g7)};
}

// One smooth sub-integrand on [lo, hi] after any endpoint substitution.
struct Piece {
    std::function<double(double)> g;
    double lo, hi;
};

void validate_spec(const QuadratureSpec& spec) {
    if (!(spec.abs_tol > 0.0) || !(spec.rel_tol > 0.0))
        throw std::invalid_argument("quadrature tolerances must be strictly positive");
    if (!(spec.left_exponent > -1.0) || !(spec.right_exponent > -1.0))
        throw std::invalid_argument("quadrature endpoint exponents must be > -1");
    if (spec.max_refinements < 0)
        throw std::invalid_argument("max_refinements must be nonnegative");
}

int smoothing_power(double exponent) {
    // r = a + w*t^k turns c*(r-a)^e into c*w^e * k * t^{k(1+e)-1}; the
    // choice k = ceil(2/(1+e)) makes the transformed integrand vanish at
    // the endpoint.
    return static_cast<int>(std::ceil(2.0 / (1.0 + exponent)));
}

std::vector<Piece> build_pieces(const std::function<double(double)>& f, double a, double b,
                                const QuadratureSpec& spec) {
    std::vector<Piece> pieces;
    const bool sing_left = spec.left_exponent < 0.0;
    const bool sing_right = spec.right_exponent < 0.0;

    auto raw = [&f](double lo, double hi) {
        return Piece{[&f](double r) { return f(r); }, lo, hi};
    };

    if (!sing_left && !sing_right) {
        pieces.push_back(raw(a, b));
        return pieces;
    }

    // Split at the midpoint; each singular half gets its own substitution.
    const double mid = 0.5 * (a + b);
    if (sing_left) {
        const int k = smoothing_power(spec.left_exponent);
        const double w = mid - a;
        pieces.push_back(Piece{
            [&f, a, w, k](double t) {
                return f(a + w * std::pow(t, k)) * k * w * std::pow(t, k - 1);
            },
            0.0, 1.0});
    } else {
        pieces.push_back(raw(a, mid));
    }
    if (sing_right) {
        const int k = smoothing_power(spec.right_exponent);
        const double w = b - mid;
        pieces.push_back(Piece{
            [&f, b, w, k](double t) {
                return f(b - w * std::pow(t, k)) * k * w * std::pow(t, k - 1);
            },
            0.0, 1.0});
    } else {
        pieces.push_back(raw(mid, b));
    }
    return pieces;
}

}  // namespace

double ln_gamma(double x) {
    if (!(x > 0.0)) throw std::domain_error("ln_gamma: argument must be positive");
    if (x < 0.5) return ln_gamma_lanczos(x + 1.0) - std::log(x);
    return ln_gamma_lanczos(x);
}

double beta(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0)) throw std::domain_error("beta: arguments must be positive");
    return std::exp(ln_gamma(a) + ln_gamma(b) - ln_gamma(a + b));
}

double reg_inc_beta(double x, double a, double b) {
    if (!(a > 0.0) || !(b > 0.0))
        throw std::domain_error("reg_inc_beta: shape parameters must be positive");
    if (x < 0.0 || x > 1.0) throw std::domain_error("reg_inc_beta: x must lie in [0,1]");
    if (x == 0.0) return 0.0;
    if (x == 1.0) return 1.0;

    const double ln_front = a * std::log(x) + b * std::log1p(-x) -
                            (ln_gamma(a) + ln_gamma(b) - ln_gamma(a + b));
    if (x < (a + 1.0) / (a + b + 2.0)) {
        return std::exp(ln_front) * beta_cf(x, a, b) / a;
    }
    return 1.0 - std::exp(ln_front) * beta_cf(1.0 - x, b, a) / b;
}

QuadratureOutcome integrate_full(const std::function<double(double)>& f, double a, double b,
                                 const QuadratureSpec& spec) {
    validate_spec(spec);
    if (!(a < b)) throw std::invalid_argument("integrate: requires a < b");

    constexpr int kMaxPanels = 16384;
    const std::vector<Piece> pieces = build_pieces(f, a, b, spec);

    std::vector<Panel> panels;
    std::vector<int> owner;  // which piece integrand each panel belongs to
    panels.reserve(64);
    for (int pi = 0; pi < static_cast<int>(pieces.size()); ++pi) {
        const Piece& piece = pieces[pi];
        const double m = 0.5 * (piece.lo + piece.hi);
        panels.push_back(evaluate_panel(piece.g, piece.lo, m));
        owner.push_back(pi);
        panels.push_back(evaluate_panel(piece.g, m, piece.hi));
        owner.push_back(pi);
    }

    auto totals = [&panels]() {
        double v = 0.0, e = 0.0;
        for (const Panel& p : panels) {
            v += p.value;
            e += p.error;
        }
        return std::pair<double, double>(v, e);
    };

    int sweeps = 0;
    auto [value, err] = totals();
    double tol = std::max(spec.abs_tol, spec.rel_tol * std::fabs(value));
    while (err > tol) {
        if (sweeps >= spec.max_refinements || static_cast<int>(panels.size()) >= kMaxPanels) {
            char msg[160];
            std::snprintf(msg, sizeof(msg),
                          "integrate: tolerance not met after %d refinement sweeps "
                          "(estimate %.17g, error bound %.3e)",
                          sweeps, value, err);
            throw quadrature_error(msg, value, err);
        }
        ++sweeps;
        const double split_threshold = tol / (2.0 * static_cast<double>(panels.size()));
        std::vector<Panel> next;
        std::vector<int> next_owner;
        next.reserve(panels.size() * 2);
        bool split_any = false;
        for (size_t i = 0; i < panels.size(); ++i) {
            const Panel& p = panels[i];
            if (p.error > split_threshold &&
                static_cast<int>(next.size()) + 2 < kMaxPanels) {
                const Piece& piece = pieces[owner[i]];
                const double m = 0.5 * (p.a + p.b);
                next.push_back(evaluate_panel(piece.g, p.a, m));
                next_owner.push_back(owner[i]);
                next.push_back(evaluate_panel(piece.g, m, p.b));
                next_owner.push_back(owner[i]);
                split_any = true;
            } else {
                next.push_back(p);
                next_owner.push_back(owner[i]);
            }
        }
        if (!split_any) break;  // every panel within its share; err recheck below
        panels.swap(next);
        owner.swap(next_owner);
        std::tie(value, err) = totals();
        tol = std::max(spec.abs_tol, spec.rel_tol * std::fabs(value));
    }

    if (err > tol) {
        char msg[120];
        std::snprintf(msg, sizeof(msg), "integrate: stalled with error bound %.3e", err);
        throw quadrature_error(msg, value, err);
    }
    if (spec.stats) {
        spec.stats->calls += 1;
        spec.stats->panels += static_cast<long long>(panels.size());
        spec.stats->max_error_bound = std::max(spec.stats->max_error_bound, err);
        spec.stats->max_refinements = std::max(spec.stats->max_refinements, sweeps);
    }
    return QuadratureOutcome{value, err, static_cast<int>(panels.size()), sweeps};
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureSpec& spec) {
    return integrate_full(f, a, b, spec).value;
}

double integrate_piecewise(const std::function<double(double)>& f, double a, double b,
                           std::span<const double> interior_breakpoints,
                           const QuadratureSpec& spec) {
    std::vector<double> cuts;
    cuts.push_back(a);
    for (double c : interior_breakpoints) {
        if (c > a && c < b) cuts.push_back(c);
    }
    cuts.push_back(b);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    double total = 0.0;
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
        QuadratureSpec local = spec;
        local.left_exponent = (i == 0) ? spec.left_exponent : 0.0;
        local.right_exponent = (i + 2 == cuts.size()) ? spec.right_exponent : 0.0;
        total += integrate(f, cuts[i], cuts[i + 1], local);
    }
    return total;
}

}  // namespace morrey
