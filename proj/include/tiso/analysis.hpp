#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "tiso/constants.hpp"
#include "tiso/hard_sphere.hpp"
#include "tiso/mott.hpp"
#include "tiso/species.hpp"

namespace tiso {

struct CurveMeta {
    std::string model; ///< "mott-coulomb", "mott-incoherent" or "hard-sphere"
    double a = 0;      ///< fm (Coulomb only)
    double eta = 0;    ///< Coulomb only
    double kR = 0;     ///< hard sphere only
    Spin spin;
    Statistics statistics = Statistics::Boson;
    Polarization polarization = Polarization::Unpolarized;
};

/// Sampled angular distribution. Values are fm^2/sr for Coulomb curves and
/// R^2 units for hard-sphere curves.
struct CrossSectionCurve {
    std::vector<double> thetas_deg;
    std::vector<double> values;
    CurveMeta meta;
};

/// Uniform grid from `lo` to `hi` inclusive (degrees). Throws DomainError on
/// endpoints outside (0, 180) or a non-positive step.
std::vector<double> angle_grid(double lo_deg = 1.0, double hi_deg = 179.0, double step_deg = 0.5);

CrossSectionCurve build_curve(const MottParams& params, Statistics stat, const std::vector<double>& grid);
CrossSectionCurve build_curve(const HardSphereParams& params, const std::vector<double>& grid);
/// sigma_inc only.
CrossSectionCurve build_incoherent_curve(double a, const std::vector<double>& grid);

struct PlateauReport {
    double epsilon;
    double theta_lo;
    double theta_hi;
    double width;
    double curvature_90; ///< from the samples; NaN if the grid is too coarse near 90
    double reference_value;
};

inline constexpr double default_plateau_epsilon = 0.05;

/// Widest symmetric band around 90 degrees with |sigma/sigma(90) - 1| <= epsilon.
PlateauReport plateau(const CrossSectionCurve& curve, double epsilon = default_plateau_epsilon);

enum class Shape { Minimum, Flat, Maximum };
std::string to_string(Shape shape);

/// Classifies a 90-degree curvature; |curvature| < 1e-6 a^2 counts as flat.
Shape classify_curvature(double curvature, double a);

struct SweepResult {
    double delta;
    double a;
    std::array<double, 3> etas;       ///< eta_C (1-delta), eta_C, eta_C (1+delta)
    std::array<double, 3> curvatures;
    std::array<Shape, 3> shapes;
    std::array<CrossSectionCurve, 3> curves;
    double energy_shift_first_order;  ///< 2 delta, since E ~ eta^-2
    std::array<double, 2> energy_shift_exact; ///< relative energy change at (1-delta), (1+delta)
};

SweepResult sensitivity_sweep(Spin spin, double delta, const std::vector<double>& grid, double a = 1.0);

/// Coulomb barrier q^2 / R_B in keV with R_B = 2 r0 (M/m0)^(1/3), the sum of
/// the two equal nuclear radii.
double barrier_height(const ParticleSpecies& species, const PhysicalConstants& c = PhysicalConstants::standard());
double barrier_radius(const ParticleSpecies& species, const PhysicalConstants& c = PhysicalConstants::standard());

struct Feasibility {
    double e_c_kev;
    double v_b_kev;
    bool feasible;        ///< E_C < V_B
    double condition_lhs; ///< Z^(10/3), informational
    double condition_rhs; ///< 25.4 (2s+1), informational
};

Feasibility feasibility(const ParticleSpecies& species, const PhysicalConstants& c = PhysicalConstants::standard());

inline constexpr double sigma0_barn = 33.7;
inline constexpr double fm2_per_barn = 100.0;

struct Sigma90 {
    double eq15_barn;   ///< sigma0 (3s+2)^2 / Z^6
    double direct_barn; ///< 2a^2 (1 + 1/(2s+1)) at E_C
};

Sigma90 sigma90(const ParticleSpecies& species, const PhysicalConstants& c = PhysicalConstants::standard());

/// Published reference row for a benchmark system.
struct PublishedRow {
    std::string name;
    double e_c_kev;
    double v_b_kev;
    double sigma90_barn;
};

const std::vector<PublishedRow>& published_table();

struct SystemReportRow {
    std::string name;
    Spin spin;
    double e_c_kev;
    double v_b_kev;
    double sigma90_eq15_barn;
    double sigma90_direct_barn;
    bool feasible;
    double condition_lhs;
    double condition_rhs;
    std::optional<PublishedRow> published;
    /// Set when the published sigma(90) is more than 10% from both computed values.
    bool sigma90_discrepancy = false;
};

std::vector<SystemReportRow> table_one(const std::vector<ParticleSpecies>& catalog,
                                       const PhysicalConstants& c = PhysicalConstants::standard());

} // namespace tiso
