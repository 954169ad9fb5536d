#include "tiso/mott.hpp"

#include <cmath>

#include "tiso/errors.hpp"

namespace tiso {

namespace {

struct HalfAngle {
    double sin2;
    double cos2;
    double tan;
};

HalfAngle half_angle(double theta_deg) {
    if (!(theta_deg > 0 && theta_deg < 180))
        throw DivergenceError("Coulomb cross section diverges at theta = " + std::to_string(theta_deg) +
                              " deg; use angles strictly inside (0, 180)");
    const double half = 0.5 * theta_deg * numerics::deg_to_rad;
    const double s = std::sin(half), c = std::cos(half);
    return {s * s, c * c, s / c};
}

void require_positive(double value, const char* what) {
    if (!(value > 0))
        throw DomainError(std::string(what) + " must be positive");
}

} // namespace

double combine_identical(double sigma_inc, double sigma_int, Spin spin, Statistics stat, Polarization pol) {
    require_consistent(spin, stat);
    const double sign = stat == Statistics::Boson ? 1.0 : -1.0;
    const double weight = pol == Polarization::Unpolarized ? 1.0 / spin.multiplicity() : 1.0;
    return sigma_inc + sign * weight * sigma_int;
}

double sigma_inc_coulomb(double theta_deg, double a) {
    require_positive(a, "a");
    const auto h = half_angle(theta_deg);
    return 0.25 * a * a * (1 / (h.sin2 * h.sin2) + 1 / (h.cos2 * h.cos2));
}

double sigma_int_coulomb(double theta_deg, double a, double eta) {
    require_positive(a, "a");
    require_positive(eta, "eta");
    const auto h = half_angle(theta_deg);
    return 0.25 * a * a * 2 / (h.sin2 * h.cos2) * std::cos(2 * eta * std::log(h.tan));
}

double identical_cross_section(double theta_deg, const MottParams& params, Statistics stat) {
    return combine_identical(sigma_inc_coulomb(theta_deg, params.a),
                             sigma_int_coulomb(theta_deg, params.a, params.eta), params.spin, stat,
                             params.polarization);
}

double curvature_at_90(const MottParams& params, Statistics stat) {
    require_consistent(params.spin, stat);
    if (stat == Statistics::Boson && params.polarization == Polarization::Unpolarized) {
        require_positive(params.a, "a");
        require_positive(params.eta, "eta");
        const double eta2 = params.eta * params.eta;
        return 16 * params.a * params.a * ((1 - 2 * eta2) / params.spin.multiplicity() + 3);
    }
    return curvature_at_90_numeric(params, stat);
}

double curvature_at_90_numeric(const MottParams& params, Statistics stat) {
    require_consistent(params.spin, stat);
    return numerics::half_angle_curvature_at_90(
        [&](double theta_deg) { return identical_cross_section(theta_deg, params, stat); });
}

double critical_eta(Spin spin) {
    return std::sqrt(1.5 * spin.twice() + 2);
}

double critical_eta_numeric(Spin spin, Interval bracket) {
    if (!(bracket.lo > 0) || !(bracket.hi > bracket.lo))
        throw DomainError("eta bracket must satisfy 0 < lo < hi");
    const Statistics stat = spin.statistics();
    auto curvature = [&](double eta) {
        return curvature_at_90_numeric(MottParams{1.0, eta, spin, Polarization::Unpolarized}, stat);
    };
    return numerics::bisect(curvature, bracket, 1e-8);
}

} // namespace tiso
