#pragma once

#include <stdexcept>
#include <string>

namespace morrey {

/// Adaptive quadrature failed to reach the requested tolerance. Carries the
/// best available estimate and its error bound so callers can still inspect
/// the partial result.
class quadrature_error : public std::runtime_error {
public:
    quadrature_error(const std::string& what, double best_estimate, double error_bound)
        : std::runtime_error(what), best_estimate_(best_estimate), error_bound_(error_bound) {}

    double best_estimate() const noexcept { return best_estimate_; }
    double error_bound() const noexcept { return error_bound_; }

private:
    double best_estimate_;
    double error_bound_;
};

/// Two independent evaluation routes of the same quantity disagree beyond
/// the allowed tolerance.
class consistency_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace morrey
