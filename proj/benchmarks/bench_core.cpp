#include <benchmark/benchmark.h>

#include <cmath>

#include "morrey/constants.hpp"
#include "morrey/manifolds.hpp"
#include "morrey/profiles.hpp"
#include "morrey/rearrangement.hpp"
#include "morrey/variational.hpp"

namespace {

using namespace morrey;

void BM_ln_gamma(benchmark::State& state) {
    double x = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(ln_gamma(x));
        x = x < 90.0 ? x + 0.37 : 0.1;
    }
}
BENCHMARK(BM_ln_gamma);

void BM_reg_inc_beta(benchmark::State& state) {
    double x = 0.01;
    for (auto _ : state) {
        benchmark::DoNotOptimize(reg_inc_beta(x, 1.0 / 3.0, 4.0 / 3.0));
        x = x < 0.98 ? x + 0.013 : 0.01;
    }
}
BENCHMARK(BM_reg_inc_beta);

void BM_integrate_singular(benchmark::State& state) {
    QuadratureSpec spec;
    spec.left_exponent = -1.0 / 3.0;
    spec.right_exponent = 1.0 / 3.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(integrate(
            [](double r) {
                return std::pow(r, -1.0 / 3.0) * std::pow(std::max(1.0 - r * r, 0.0), 1.0 / 3.0);
            },
            0.0, 1.0, spec));
    }
}
BENCHMARK(BM_integrate_singular);

void BM_ball_volume_closed(benchmark::State& state) {
    const WarpedModel h3 = make_hyperbolic(3, 1.0);
    double rho = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(ball_volume(h3, rho));
        rho = rho < 5.0 ? rho + 0.17 : 0.1;
    }
}
BENCHMARK(BM_ball_volume_closed);

void BM_ball_volume_quadrature(benchmark::State& state) {
    const WarpedModel custom = make_custom_model(
        3, [](double r) { return r + 0.1 * r * r * r; },
        [](double r) { return 1.0 + 0.3 * r * r; }, CurvatureClass::CartanHadamard,
        std::numeric_limits<double>::infinity(), "cubic");
    double rho = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(ball_volume(custom, rho));
        rho = rho < 5.0 ? rho + 0.17 : 0.1;
    }
}
BENCHMARK(BM_ball_volume_quadrature);

void BM_norms_power_extremal(benchmark::State& state) {
    const Exponents e = make_exponents(2, 4.0);
    const WarpedModel h2 = make_hyperbolic(2, 1.0);
    const RadialProfile u = make_power_extremal(e, 1.0, h2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(norms_report(u, h2, e));
    }
}
BENCHMARK(BM_norms_power_extremal);

void BM_exact_radial_minimum(benchmark::State& state) {
    const Exponents e = make_exponents(2, 4.0);
    const WarpedModel h2 = make_hyperbolic(2, 1.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(exact_radial_minimum(h2, e, 1.0).q1_min);
    }
}
BENCHMARK(BM_exact_radial_minimum);

void BM_discrete_optimize(benchmark::State& state) {
    const Exponents e = make_exponents(2, 4.0);
    const WarpedModel h2 = make_hyperbolic(2, 1.0);
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(discrete_optimize(h2, e, 1.0, n).energy);
    }
}
BENCHMARK(BM_discrete_optimize)->Arg(64)->Arg(256)->Arg(1024);

void BM_rearrange(benchmark::State& state) {
    const Exponents e = make_exponents(2, 4.0);
    const WarpedModel h2 = make_hyperbolic(2, 1.0);
    const RadialProfile u = make_power_extremal(e, 1.0, h2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(rearrange(u, h2, e).report_after.grad_lp_norm);
    }
}
BENCHMARK(BM_rearrange);

}  // namespace

BENCHMARK_MAIN();
