#pragma once

#include <istream>
#include <string>

namespace tiso {

/// Physical constants in MeV / fm units.
struct PhysicalConstants {
    double hbar_c = 197.3269804;   // MeV fm
    double e_squared = 1.4399645;  // MeV fm, alpha * hbar_c
    double amu = 931.49410;        // MeV
    double nucleon_mass = 938.9187; // MeV, p/n average
    double r0 = 1.4;               // fm

    static const PhysicalConstants& standard();

    /// Throws DomainError if a constant is non-positive or the implied
    /// fine-structure constant is implausible.
    void validate() const;

    /// Stable 16-hex-digit digest of the values, for output provenance.
    std::string fingerprint() const;
};

/// Reads "key value" lines ('#' starts a comment). Unlisted keys keep their
/// standard values; unknown keys are an error.
PhysicalConstants parse_constants(std::istream& in);
PhysicalConstants load_constants(const std::string& path);

} // namespace tiso
