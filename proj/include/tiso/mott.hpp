#pragma once

#include "tiso/numerics.hpp"
#include "tiso/spin.hpp"

namespace tiso {

/// Parameters of a Coulomb (Mott) cross section for identical particles.
struct MottParams {
    double a;   ///< half closest-approach distance, fm
    double eta; ///< Sommerfeld parameter
    Spin spin;
    Polarization polarization = Polarization::Unpolarized;
};

/// Combines incoherent and interference terms: sigma_inc +/- sigma_int/(2s+1)
/// for unpolarized beams, sigma_inc +/- sigma_int for aligned spins.
/// The sign is + for bosons.
double combine_identical(double sigma_inc, double sigma_int, Spin spin, Statistics stat, Polarization pol);

/// Incoherent Rutherford sum (a^2/4)[sin^-4(theta/2) + cos^-4(theta/2)], fm^2/sr.
double sigma_inc_coulomb(double theta_deg, double a);

/// Coulomb interference term; can be negative.
/// (a^2/4) * 2 / (sin^2 cos^2)(theta/2) * cos(2 eta ln tan(theta/2)).
double sigma_int_coulomb(double theta_deg, double a, double eta);

/// Symmetrized Coulomb cross section in fm^2/sr.
double identical_cross_section(double theta_deg, const MottParams& params, Statistics stat);

/// d^2 sigma / d(theta/2)^2 at 90 degrees. Unpolarized bosons use the closed
/// form 16a^2[(1-2eta^2)/(2s+1) + 3]; every other case is differentiated
/// numerically.
double curvature_at_90(const MottParams& params, Statistics stat);

/// Same quantity, always by finite differences of identical_cross_section.
double curvature_at_90_numeric(const MottParams& params, Statistics stat);

/// sqrt(3s+2).
double critical_eta(Spin spin);

/// Root of the finite-difference curvature (unpolarized, a = 1) in eta,
/// bisected to 1e-8. Throws RootNotFound without a sign change.
double critical_eta_numeric(Spin spin, Interval bracket);

} // namespace tiso
