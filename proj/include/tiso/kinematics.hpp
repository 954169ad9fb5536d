#pragma once

#include "tiso/constants.hpp"
#include "tiso/species.hpp"

namespace tiso {

// Non-relativistic kinematics for identical partners (reduced mass M/2).
// Energies are CM energies in keV; lengths in fm.

/// Sommerfeld parameter q^2 / (hbar v).
double sommerfeld_eta(const CollisionSystem& system, const PhysicalConstants& c = PhysicalConstants::standard());

/// CM energy (keV) at which the species reaches Sommerfeld parameter `eta`.
double energy_from_eta(const ParticleSpecies& species, double eta,
                       const PhysicalConstants& c = PhysicalConstants::standard());

/// Half the distance of closest approach in a head-on collision, q^2 / 2E.
double half_closest_approach(const CollisionSystem& system,
                             const PhysicalConstants& c = PhysicalConstants::standard());

/// Relative-motion wavenumber sqrt(2 mu E) / hbar in fm^-1.
double wavenumber(const CollisionSystem& system, const PhysicalConstants& c = PhysicalConstants::standard());

/// Energy (keV) at which eta equals sqrt(3s+2).
double critical_energy(const ParticleSpecies& species, const PhysicalConstants& c = PhysicalConstants::standard());

} // namespace tiso
