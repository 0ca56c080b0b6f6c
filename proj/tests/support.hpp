#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "morrey/profiles.hpp"

namespace morrey::testing {

inline std::vector<double> geometric_grid(double a, double b, int k) {
    std::vector<double> g;
    for (int i = 0; i < k; ++i)
        g.push_back(a * std::pow(b / a, static_cast<double>(i) / (k - 1)));
    return g;
}

// Decreasing random staircase reaching zero at lambda, phi(0) in [0.5, 2].
inline RadialProfile random_staircase(std::mt19937& rng, double lambda, const WarpedModel& m,
                                      int max_knots = 12, int min_knots = 3) {
    std::uniform_int_distribution<int> nk(min_knots, max_knots);
    std::uniform_real_distribution<double> uni(0.05, 1.0);
    const int k = nk(rng);
    std::vector<double> knots{0.0};
    for (int i = 0; i < k; ++i) knots.push_back(uni(rng));
    std::sort(knots.begin() + 1, knots.end());
    for (size_t i = 1; i < knots.size(); ++i) knots[i] *= lambda / knots.back();
    knots.back() = lambda;

    std::vector<double> drops;
    double total = 0.0;
    for (size_t i = 0; i + 1 < knots.size(); ++i) {
        drops.push_back(uni(rng));
        total += drops.back();
    }
    const double top = 0.5 + 1.5 * uni(rng);
    std::vector<double> values{top};
    for (double d : drops) values.push_back(values.back() - top * d / total);
    values.back() = 0.0;
    return make_piecewise_linear(std::move(knots), std::move(values), m);
}

}  // namespace morrey::testing
