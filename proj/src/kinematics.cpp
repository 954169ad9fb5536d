#include "tiso/kinematics.hpp"

#include <cmath>

#include "tiso/errors.hpp"

namespace tiso {

namespace {

constexpr double kev_per_mev = 1000.0;

double energy_mev(const CollisionSystem& system) {
    if (!(system.energy_kev > 0))
        throw DomainError("CM energy must be positive");
    return system.energy_kev / kev_per_mev;
}

} // namespace

double sommerfeld_eta(const CollisionSystem& system, const PhysicalConstants& c) {
    const double e = energy_mev(system);
    return system.species.charge_squared(c) / c.hbar_c * std::sqrt(system.species.mass_mev() / (4 * e));
}

double energy_from_eta(const ParticleSpecies& species, double eta, const PhysicalConstants& c) {
    if (!(eta > 0))
        throw DomainError("Sommerfeld parameter must be positive");
    const double q2 = species.charge_squared(c);
    return species.mass_mev() * q2 * q2 / (4 * c.hbar_c * c.hbar_c * eta * eta) * kev_per_mev;
}

double half_closest_approach(const CollisionSystem& system, const PhysicalConstants& c) {
    return system.species.charge_squared(c) / (2 * energy_mev(system));
}

double wavenumber(const CollisionSystem& system, const PhysicalConstants& c) {
    return std::sqrt(system.species.mass_mev() * energy_mev(system)) / c.hbar_c;
}

double critical_energy(const ParticleSpecies& species, const PhysicalConstants& c) {
    const double q2 = species.charge_squared(c);
    const double three_s_plus_2 = 1.5 * species.spin().twice() + 2;
    return species.mass_mev() * q2 * q2 / (4 * c.hbar_c * c.hbar_c * three_s_plus_2) * kev_per_mev;
}

} // namespace tiso
