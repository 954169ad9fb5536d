#pragma once

#include <vector>

namespace tiso {

/// j_0..j_lmax at x > 0. Upward recurrence while l < x, Miller's downward
/// recurrence (normalized to j_0 or j_1) beyond.
std::vector<double> spherical_bessel_j_array(int l_max, double x);

/// y_0..y_lmax at x > 0 by upward recurrence.
std::vector<double> spherical_bessel_y_array(int l_max, double x);

double spherical_bessel_j(int l, double x);
double spherical_bessel_y(int l, double x);

// Derivatives from j_l' = j_{l-1} - (l+1)/x j_l (and j_0' = -j_1).
double spherical_bessel_j_derivative(int l, double x);
double spherical_bessel_y_derivative(int l, double x);

/// P_0..P_lmax at x in [-1, 1].
std::vector<double> legendre_p_array(int l_max, double x);
double legendre_p(int l, double x);

} // namespace tiso
