#pragma once

#include <cmath>
#include <functional>
#include <numbers>

namespace tiso {

struct Interval {
    double lo;
    double hi;
};

namespace numerics {

inline constexpr double deg_to_rad = std::numbers::pi / 180.0;

/// Fourth-order central second derivative, one Richardson step (h, h/2).
template <class F>
double second_derivative(F&& f, double x, double h) {
    auto stencil = [&](double s) {
        return (-f(x + 2 * s) + 16 * f(x + s) - 30 * f(x) + 16 * f(x - s) - f(x - 2 * s)) / (12 * s * s);
    };
    const double coarse = stencil(h);
    const double fine = stencil(0.5 * h);
    return (64 * fine - coarse) / 63;
}

inline constexpr double curvature_step_deg = 0.25;

/// Curvature at 90 degrees of a function of theta (degrees), taken with
/// respect to the half-angle theta/2 in radians. Positive means a local
/// minimum at 90 degrees.
template <class F>
double half_angle_curvature_at_90(F&& sigma_of_theta_deg) {
    auto g = [&](double theta_rad) { return sigma_of_theta_deg(theta_rad / deg_to_rad); };
    const double d2_theta = second_derivative(g, 0.5 * std::numbers::pi, curvature_step_deg * deg_to_rad);
    return 4 * d2_theta;
}

/// Bisection on [lo, hi] to absolute tolerance `tol` in x. Throws
/// RootNotFound when f(lo) and f(hi) share a sign.
double bisect(const std::function<double(double)>& f, Interval bracket, double tol);

} // namespace numerics
} // namespace tiso
