#include "tiso/hard_sphere.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "tiso/errors.hpp"
#include "tiso/mott.hpp"
#include "tiso/special_functions.hpp"

namespace tiso {

namespace {

constexpr int hs_max_extension = 200;

/// atan of the ratio keeps full relative precision for tiny shifts (an
/// atan2 result near pi would lose them when folded); y_l = 0 maps to pi/2.
double phase_from_ratio(double j, double y) {
    const double delta = std::atan(j / y);
    return delta <= -std::numbers::pi / 2 ? delta + std::numbers::pi : delta;
}

} // namespace

PhaseShiftSet hard_sphere_phase_shifts(double kR, std::optional<int> l_max, double tol) {
    if (!(kR > 0))
        throw DomainError("kR must be positive");
    if (!(tol > 0))
        throw DomainError("truncation tolerance must be positive");
    if (l_max && *l_max < 0)
        throw DomainError("l_max must be non-negative");

    const int l_ceiling = l_max ? *l_max : static_cast<int>(std::ceil(kR)) + hs_max_extension;
    const auto j = spherical_bessel_j_array(l_ceiling, kR);
    const auto y = spherical_bessel_y_array(l_ceiling, kR);

    PhaseShiftSet set{kR, 0, {}};
    set.deltas.reserve(static_cast<std::size_t>(l_ceiling) + 1);
    set.deltas.push_back(-kR);
    for (int l = 1; l <= l_ceiling; ++l) {
        const double delta = phase_from_ratio(j[l], y[l]);
        set.deltas.push_back(delta);
        if (l > kR && std::abs(std::sin(delta)) < tol)
            break;
    }
    set.l_max = static_cast<int>(set.deltas.size()) - 1;
    return set;
}

std::complex<double> hs_amplitude(double theta_deg, const PhaseShiftSet& shifts, double k) {
    if (!(theta_deg >= 0 && theta_deg <= 180))
        throw DomainError("angle must lie in [0, 180] degrees");
    if (!(k > 0))
        throw DomainError("wavenumber must be positive");
    const auto p = legendre_p_array(shifts.l_max, std::cos(theta_deg * numerics::deg_to_rad));
    std::complex<double> sum{0.0, 0.0};
    for (int l = 0; l <= shifts.l_max; ++l) {
        const double delta = shifts.deltas[l];
        sum += (2.0 * l + 1) * std::polar(std::sin(delta), delta) * p[l];
    }
    return sum / k;
}

double hs_total_cross_section(const PhaseShiftSet& shifts, double k) {
    double sum = 0;
    for (int l = 0; l <= shifts.l_max; ++l) {
        const double s = std::sin(shifts.deltas[l]);
        sum += (2.0 * l + 1) * s * s;
    }
    return 4 * std::numbers::pi / (k * k) * sum;
}

double hs_identical_cross_section(double theta_deg, const HardSphereParams& params) {
    return hs_identical_cross_section(
        theta_deg, params, hard_sphere_phase_shifts(params.kR, params.l_max, params.truncation_tol));
}

double hs_identical_cross_section(double theta_deg, const HardSphereParams& params, const PhaseShiftSet& shifts) {
    require_consistent(params.spin, params.statistics);
    if (!(theta_deg > 0 && theta_deg < 180))
        throw DomainError("angle must lie strictly inside (0, 180) degrees");
    const auto forward = hs_amplitude(theta_deg, shifts, params.kR);
    const auto backward = hs_amplitude(180.0 - theta_deg, shifts, params.kR);
    const double sigma_inc = std::norm(forward) + std::norm(backward);
    const double sigma_int = 2 * std::real(std::conj(forward) * backward);
    return combine_identical(sigma_inc, sigma_int, params.spin, params.statistics, params.polarization);
}

double hs_curvature_at_90(const HardSphereParams& params) {
    require_consistent(params.spin, params.statistics);
    const auto shifts = hard_sphere_phase_shifts(params.kR, params.l_max, params.truncation_tol);
    return numerics::half_angle_curvature_at_90(
        [&](double theta_deg) { return hs_identical_cross_section(theta_deg, params, shifts); });
}

std::optional<double> find_critical_kR(Spin spin, Statistics stat, Interval scan, double step, Polarization pol) {
    require_consistent(spin, stat);
    if (!(scan.lo > 0 && scan.hi > scan.lo && scan.hi <= 10))
        throw DomainError("kR scan must satisfy 0 < lo < hi <= 10");
    if (!(step > 0))
        throw DomainError("scan step must be positive");

    auto curvature = [&](double kR) {
        return hs_curvature_at_90(HardSphereParams{kR, spin, stat, pol, std::nullopt, 1e-12});
    };
    double prev_kR = scan.lo;
    double prev = curvature(prev_kR);
    if (prev == 0)
        return prev_kR;
    for (int i = 1;; ++i) {
        const double kR = std::min(scan.lo + i * step, scan.hi);
        const double value = curvature(kR);
        if ((value > 0) != (prev > 0) || value == 0)
            return numerics::bisect(curvature, {prev_kR, kR}, 1e-6);
        if (kR >= scan.hi)
            return std::nullopt;
        prev_kR = kR;
        prev = value;
    }
}

} // namespace tiso
