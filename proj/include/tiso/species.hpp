#pragma once

#include <istream>
#include <string>
#include <vector>

#include "tiso/constants.hpp"
#include "tiso/spin.hpp"

namespace tiso {

/// One of the two identical collision partners.
class ParticleSpecies {
  public:
    ParticleSpecies(std::string name, int z, double mass_mev, Spin spin);

    /// Mass taken as A * amu.
    static ParticleSpecies from_mass_number(std::string name, int z, int mass_number, Spin spin,
                                            const PhysicalConstants& c = PhysicalConstants::standard());

    const std::string& name() const { return name_; }
    int z() const { return z_; }
    double mass_mev() const { return mass_mev_; }
    Spin spin() const { return spin_; }

    /// q^2 = Z^2 e^2 in MeV fm.
    double charge_squared(const PhysicalConstants& c = PhysicalConstants::standard()) const;

  private:
    std::string name_;
    int z_;
    double mass_mev_;
    Spin spin_;
};

/// Identical-particle collision at a given CM energy.
struct CollisionSystem {
    ParticleSpecies species;
    double energy_kev;
};

std::vector<ParticleSpecies> built_in_catalog(const PhysicalConstants& c = PhysicalConstants::standard());

/// Catalog lines: `name Z mass twice_s`, where mass is an integer mass
/// number A or a value in MeV written with a "MeV" suffix (e.g. 3727.379MeV).
std::vector<ParticleSpecies> parse_catalog(std::istream& in,
                                           const PhysicalConstants& c = PhysicalConstants::standard());
std::vector<ParticleSpecies> load_catalog(const std::string& path,
                                          const PhysicalConstants& c = PhysicalConstants::standard());

/// Looks up "alpha" or "alpha-alpha" (case-insensitive). Throws DomainError
/// if absent or if a pair names two different species.
const ParticleSpecies& find_species(const std::vector<ParticleSpecies>& catalog, std::string_view system);

} // namespace tiso
