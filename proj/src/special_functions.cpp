#include "tiso/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tiso/errors.hpp"

namespace tiso {

namespace {

void require_args(int l, double x) {
    if (l < 0)
        throw DomainError("order l must be non-negative");
    if (!(x > 0))
        throw DomainError("spherical Bessel argument must be positive, got " + std::to_string(x));
}

} // namespace

std::vector<double> spherical_bessel_j_array(int l_max, double x) {
    require_args(l_max, x);
    std::vector<double> j(l_max + 1);
    const double j0 = std::sin(x) / x;
    const double j1 = std::sin(x) / (x * x) - std::cos(x) / x;

    if (l_max < x) {
        j[0] = j0;
        if (l_max >= 1)
            j[1] = j1;
        for (int l = 1; l < l_max; ++l)
            j[l + 1] = (2 * l + 1) / x * j[l] - j[l - 1];
        return j;
    }

    // Miller: j_l is the minimal solution for l > x, so run the recurrence
    // downward from a start far above both l_max and x, then normalize.
    const double scale = std::max<double>(l_max, x);
    const int start = static_cast<int>(scale) + 20 + static_cast<int>(std::sqrt(40.0 * scale));
    double upper = 0.0, current = 1e-300;
    for (int l = start; l > 0; --l) {
        const double lower = (2 * l + 1) / x * current - upper;
        upper = current;
        current = lower;
        if (l - 1 <= l_max)
            j[l - 1] = current;
        if (std::abs(current) > 1e250) {
            upper *= 1e-250;
            current *= 1e-250;
            for (int m = l - 1; m <= l_max; ++m)
                j[m] *= 1e-250;
        }
    }
    // Normalize against whichever closed form is larger (j_0 vanishes at n pi).
    double norm;
    if (std::abs(j0) >= std::abs(j1) || l_max == 0) {
        norm = j0 / j[0];
    } else {
        norm = j1 / j[1];
    }
    for (auto& value : j)
        value *= norm;
    return j;
}

std::vector<double> spherical_bessel_y_array(int l_max, double x) {
    require_args(l_max, x);
    std::vector<double> y(l_max + 1);
    y[0] = -std::cos(x) / x;
    if (l_max >= 1)
        y[1] = -std::cos(x) / (x * x) - std::sin(x) / x;
    for (int l = 1; l < l_max; ++l)
        y[l + 1] = (2 * l + 1) / x * y[l] - y[l - 1];
    return y;
}

double spherical_bessel_j(int l, double x) {
    return spherical_bessel_j_array(l, x)[l];
}

double spherical_bessel_y(int l, double x) {
    return spherical_bessel_y_array(l, x)[l];
}

double spherical_bessel_j_derivative(int l, double x) {
    const auto j = spherical_bessel_j_array(l + 1, x);
    if (l == 0)
        return -j[1];
    return j[l - 1] - (l + 1) / x * j[l];
}

double spherical_bessel_y_derivative(int l, double x) {
    const auto y = spherical_bessel_y_array(l + 1, x);
    if (l == 0)
        return -y[1];
    return y[l - 1] - (l + 1) / x * y[l];
}

std::vector<double> legendre_p_array(int l_max, double x) {
    if (l_max < 0)
        throw DomainError("order l must be non-negative");
    if (!(std::abs(x) <= 1))
        throw DomainError("Legendre argument must lie in [-1, 1]");
    std::vector<double> p(l_max + 1);
    p[0] = 1.0;
    if (l_max >= 1)
        p[1] = x;
    for (int l = 1; l < l_max; ++l)
        p[l + 1] = ((2 * l + 1) * x * p[l] - l * p[l - 1]) / (l + 1);
    return p;
}

double legendre_p(int l, double x) {
    return legendre_p_array(l, x)[l];
}

} // namespace tiso
