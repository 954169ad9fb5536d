#include "tiso/analysis.hpp"

#include <cmath>
#include <limits>

#include "tiso/errors.hpp"
#include "tiso/kinematics.hpp"

namespace tiso {

namespace {

constexpr double angle_match_tol = 1e-9;

} // namespace

std::vector<double> angle_grid(double lo_deg, double hi_deg, double step_deg) {
    if (!(lo_deg > 0 && hi_deg < 180))
        throw DivergenceError("angle grid must lie strictly inside (0, 180) degrees");
    if (!(lo_deg <= hi_deg))
        throw DomainError("angle grid requires lo <= hi");
    if (!(step_deg > 0))
        throw DomainError("angle grid step must be positive");
    const auto n = static_cast<long>(std::floor((hi_deg - lo_deg) / step_deg + angle_match_tol));
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(n) + 1);
    for (long i = 0; i <= n; ++i)
        grid.push_back(lo_deg + static_cast<double>(i) * step_deg);
    return grid;
}

namespace {

void require_open_grid(const std::vector<double>& grid) {
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!(grid[i] > 0 && grid[i] < 180))
            throw DivergenceError("curve grid must lie strictly inside (0, 180) degrees");
        if (i > 0 && !(grid[i] > grid[i - 1]))
            throw DomainError("curve grid must be strictly increasing");
    }
}

} // namespace

CrossSectionCurve build_curve(const MottParams& params, Statistics stat, const std::vector<double>& grid) {
    require_open_grid(grid);
    CrossSectionCurve curve{grid, {}, {"mott-coulomb", params.a, params.eta, 0.0, params.spin, stat, params.polarization}};
    curve.values.reserve(grid.size());
    for (double theta : grid)
        curve.values.push_back(identical_cross_section(theta, params, stat));
    return curve;
}

CrossSectionCurve build_curve(const HardSphereParams& params, const std::vector<double>& grid) {
    require_open_grid(grid);
    const auto shifts = hard_sphere_phase_shifts(params.kR, params.l_max, params.truncation_tol);
    CrossSectionCurve curve{
        grid, {}, {"hard-sphere", 0.0, 0.0, params.kR, params.spin, params.statistics, params.polarization}};
    curve.values.reserve(grid.size());
    for (double theta : grid)
        curve.values.push_back(hs_identical_cross_section(theta, params, shifts));
    return curve;
}

CrossSectionCurve build_incoherent_curve(double a, const std::vector<double>& grid) {
    require_open_grid(grid);
    CrossSectionCurve curve{grid, {}, {}};
    curve.meta.model = "mott-incoherent";
    curve.meta.a = a;
    curve.values.reserve(grid.size());
    for (double theta : grid)
        curve.values.push_back(sigma_inc_coulomb(theta, a));
    return curve;
}

PlateauReport plateau(const CrossSectionCurve& curve, double epsilon) {
    if (!(epsilon >= 0))
        throw DomainError("plateau tolerance must be non-negative");
    const auto& t = curve.thetas_deg;
    const auto& v = curve.values;
    std::size_t center = t.size();
    for (std::size_t i = 0; i < t.size(); ++i)
        if (std::abs(t[i] - 90.0) < angle_match_tol)
            center = i;
    if (center == t.size())
        throw DomainError("plateau requires 90 degrees on the curve grid");

    const double ref = v[center];
    auto within = [&](std::size_t i) { return std::abs(v[i] / ref - 1) <= epsilon; };

    std::size_t reach = 0;
    while (center >= reach + 1 && center + reach + 1 < t.size()) {
        const std::size_t lo = center - reach - 1, hi = center + reach + 1;
        if (std::abs(t[lo] + t[hi] - 180.0) > angle_match_tol)
            break;
        if (!within(lo) || !within(hi))
            break;
        ++reach;
    }

    double curvature = std::numeric_limits<double>::quiet_NaN();
    if (center >= 2 && center + 2 < t.size()) {
        const double h = t[center + 1] - t[center];
        bool uniform = true;
        for (std::size_t i = center - 2; i < center + 2; ++i)
            uniform = uniform && std::abs(t[i + 1] - t[i] - h) < angle_match_tol;
        if (uniform) {
            const double h_rad = h * numerics::deg_to_rad;
            const double d2 = (-v[center + 2] + 16 * v[center + 1] - 30 * v[center] + 16 * v[center - 1] -
                               v[center - 2]) /
                              (12 * h_rad * h_rad);
            curvature = 4 * d2;
        }
    }

    const double lo = t[center - reach], hi = t[center + reach];
    return {epsilon, lo, hi, hi - lo, curvature, ref};
}

std::string to_string(Shape shape) {
    switch (shape) {
    case Shape::Minimum:
        return "min";
    case Shape::Flat:
        return "flat";
    case Shape::Maximum:
        return "max";
    }
    return "?";
}

Shape classify_curvature(double curvature, double a) {
    if (std::abs(curvature) < 1e-6 * a * a)
        return Shape::Flat;
    return curvature > 0 ? Shape::Minimum : Shape::Maximum;
}

SweepResult sensitivity_sweep(Spin spin, double delta, const std::vector<double>& grid, double a) {
    if (!(delta >= 0 && delta < 0.5))
        throw DomainError("sweep delta must lie in [0, 0.5)");
    const double eta_c = critical_eta(spin);
    const Statistics stat = spin.statistics();

    SweepResult result{};
    result.delta = delta;
    result.a = a;
    result.etas = {eta_c * (1 - delta), eta_c, eta_c * (1 + delta)};
    for (std::size_t i = 0; i < 3; ++i) {
        const MottParams params{a, result.etas[i], spin, Polarization::Unpolarized};
        result.curvatures[i] = curvature_at_90(params, stat);
        result.shapes[i] = classify_curvature(result.curvatures[i], a);
        result.curves[i] = build_curve(params, stat, grid);
    }
    result.energy_shift_first_order = 2 * delta;
    result.energy_shift_exact = {std::pow(1 - delta, -2) - 1, std::pow(1 + delta, -2) - 1};
    return result;
}

double barrier_radius(const ParticleSpecies& species, const PhysicalConstants& c) {
    return 2 * c.r0 * std::cbrt(species.mass_mev() / c.nucleon_mass);
}

double barrier_height(const ParticleSpecies& species, const PhysicalConstants& c) {
    return species.charge_squared(c) / barrier_radius(species, c) * 1000.0;
}

Feasibility feasibility(const ParticleSpecies& species, const PhysicalConstants& c) {
    const double e_c = critical_energy(species, c);
    const double v_b = barrier_height(species, c);
    return {e_c, v_b, e_c < v_b, std::pow(static_cast<double>(species.z()), 10.0 / 3.0),
            25.4 * species.spin().multiplicity()};
}

Sigma90 sigma90(const ParticleSpecies& species, const PhysicalConstants& c) {
    const double three_s_plus_2 = 1.5 * species.spin().twice() + 2;
    const double z6 = std::pow(static_cast<double>(species.z()), 6);
    const double a = half_closest_approach(CollisionSystem{species, critical_energy(species, c)}, c);
    const double direct_fm2 = 2 * a * a * (1 + 1.0 / species.spin().multiplicity());
    return {sigma0_barn * three_s_plus_2 * three_s_plus_2 / z6, direct_fm2 / fm2_per_barn};
}

const std::vector<PublishedRow>& published_table() {
    static const std::vector<PublishedRow> rows{
        {"d", 5.0, 400.0, 135.0},
        {"li6", 1200.0, 2500.0, 1.17},
        {"alpha", 400.0, 1260.0, 2.3},
    };
    return rows;
}

std::vector<SystemReportRow> table_one(const std::vector<ParticleSpecies>& catalog, const PhysicalConstants& c) {
    std::vector<SystemReportRow> rows;
    rows.reserve(catalog.size());
    for (const auto& species : catalog) {
        const auto feas = feasibility(species, c);
        const auto sig = sigma90(species, c);
        SystemReportRow row{species.name(), species.spin(),     feas.e_c_kev,       feas.v_b_kev,
                            sig.eq15_barn,  sig.direct_barn,    feas.feasible,      feas.condition_lhs,
                            feas.condition_rhs, std::nullopt,   false};
        for (const auto& ref : published_table()) {
            if (ref.name != species.name())
                continue;
            row.published = ref;
            auto off = [&](double computed) { return std::abs(computed / ref.sigma90_barn - 1) > 0.10; };
            row.sigma90_discrepancy = off(sig.eq15_barn) && off(sig.direct_barn);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace tiso
