#include "tiso/species.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "tiso/errors.hpp"

namespace tiso {

ParticleSpecies::ParticleSpecies(std::string name, int z, double mass_mev, Spin spin)
    : name_(std::move(name)), z_(z), mass_mev_(mass_mev), spin_(spin) {
    if (z_ < 1)
        throw DomainError("species '" + name_ + "': Z must be >= 1");
    if (!(mass_mev_ > 0))
        throw DomainError("species '" + name_ + "': mass must be positive");
}

ParticleSpecies ParticleSpecies::from_mass_number(std::string name, int z, int mass_number, Spin spin,
                                                  const PhysicalConstants& c) {
    if (mass_number < 1)
        throw DomainError("mass number must be >= 1");
    return ParticleSpecies(std::move(name), z, mass_number * c.amu, spin);
}

double ParticleSpecies::charge_squared(const PhysicalConstants& c) const {
    return static_cast<double>(z_) * z_ * c.e_squared;
}

std::vector<ParticleSpecies> built_in_catalog(const PhysicalConstants& c) {
    return {
        ParticleSpecies::from_mass_number("d", 1, 2, Spin(2), c),
        ParticleSpecies::from_mass_number("li6", 3, 6, Spin(2), c),
        ParticleSpecies::from_mass_number("alpha", 2, 4, Spin(0), c),
    };
}

namespace {

template <class T>
bool parse_number(std::string_view text, T& value) {
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    return ec == std::errc{} && ptr == text.data() + text.size();
}

std::string lowercase(std::string_view text) {
    std::string out(text);
    std::ranges::transform(out, out.begin(), [](unsigned char ch) { return std::tolower(ch); });
    return out;
}

} // namespace

std::vector<ParticleSpecies> parse_catalog(std::istream& in, const PhysicalConstants& c) {
    std::vector<ParticleSpecies> catalog;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream fields(line);
        std::string name, z_text, mass_text, spin_text, extra;
        if (!(fields >> name))
            continue;
        const auto where = "catalog line " + std::to_string(line_no) + ": ";
        if (!(fields >> z_text >> mass_text >> spin_text) || (fields >> extra))
            throw ParseError(where + "expected 'name Z mass twice_s'");
        int z = 0, twice_s = 0;
        if (!parse_number(z_text, z) || !parse_number(spin_text, twice_s))
            throw ParseError(where + "Z and twice_s must be integers");
        try {
            std::string_view mass = mass_text;
            if (mass.size() > 3 && mass.ends_with("MeV")) {
                double mass_mev = 0;
                if (!parse_number(mass.substr(0, mass.size() - 3), mass_mev))
                    throw ParseError(where + "bad mass '" + mass_text + "'");
                catalog.emplace_back(name, z, mass_mev, Spin(twice_s));
            } else {
                int mass_number = 0;
                if (!parse_number(mass, mass_number))
                    throw ParseError(where + "mass must be an integer A or '<value>MeV'");
                catalog.push_back(ParticleSpecies::from_mass_number(name, z, mass_number, Spin(twice_s), c));
            }
        } catch (const DomainError& e) {
            throw ParseError(where + e.what());
        }
    }
    return catalog;
}

std::vector<ParticleSpecies> load_catalog(const std::string& path, const PhysicalConstants& c) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open catalog '" + path + "'");
    return parse_catalog(in, c);
}

const ParticleSpecies& find_species(const std::vector<ParticleSpecies>& catalog, std::string_view system) {
    std::string key = lowercase(system);
    if (auto dash = key.find('-'); dash != std::string::npos) {
        if (key.substr(0, dash) != key.substr(dash + 1))
            throw DomainError("system '" + std::string(system) + "' must pair identical species");
        key.resize(dash);
    }
    for (const auto& species : catalog)
        if (lowercase(species.name()) == key)
            return species;
    throw DomainError("unknown species '" + std::string(system) + "'");
}

} // namespace tiso
