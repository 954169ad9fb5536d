#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "tiso/numerics.hpp"
#include "tiso/spin.hpp"

namespace tiso {

/// Hard-sphere phase shifts delta_0..delta_lmax (radians).
struct PhaseShiftSet {
    double kR;
    int l_max;
    std::vector<double> deltas;
};

struct HardSphereParams {
    double kR;
    Spin spin;
    Statistics statistics;
    Polarization polarization = Polarization::Unpolarized;
    std::optional<int> l_max; ///< upper bound; empty means truncate by tolerance only
    double truncation_tol = 1e-12;
};

/// tan(delta_l) = j_l(kR) / y_l(kR); delta_0 = -kR exactly and higher
/// shifts folded into (-pi/2, pi/2]. The series stops at the first l > kR
/// with |sin delta_l| < tol (that l is kept as l_max), or at the explicit
/// l_max if given.
PhaseShiftSet hard_sphere_phase_shifts(double kR, std::optional<int> l_max = std::nullopt, double tol = 1e-12);

/// Partial-wave amplitude (1/k) sum (2l+1) e^{i delta} sin(delta) P_l(cos theta).
/// Endpoints are allowed. With k = kR the result is in units of R.
std::complex<double> hs_amplitude(double theta_deg, const PhaseShiftSet& shifts, double k);

/// (4 pi / k^2) sum (2l+1) sin^2 delta_l.
double hs_total_cross_section(const PhaseShiftSet& shifts, double k);

/// Symmetrized hard-sphere cross section in units of R^2.
double hs_identical_cross_section(double theta_deg, const HardSphereParams& params);
double hs_identical_cross_section(double theta_deg, const HardSphereParams& params, const PhaseShiftSet& shifts);

/// Half-angle curvature at 90 degrees (same convention as curvature_at_90).
double hs_curvature_at_90(const HardSphereParams& params);

inline constexpr double critical_kR_default_step = 0.05;

/// Scans the 90-degree curvature over kR in `scan` (step `step`) and
/// bisects the first sign change to 1e-6. No root is a valid result.
std::optional<double> find_critical_kR(Spin spin, Statistics stat, Interval scan,
                                       double step = critical_kR_default_step,
                                       Polarization pol = Polarization::Unpolarized);

} // namespace tiso
