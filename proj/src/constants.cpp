#include "tiso/constants.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "tiso/errors.hpp"

namespace tiso {

const PhysicalConstants& PhysicalConstants::standard() {
    static const PhysicalConstants instance{};
    return instance;
}

void PhysicalConstants::validate() const {
    if (!(hbar_c > 0 && e_squared > 0 && amu > 0 && nucleon_mass > 0 && r0 > 0))
        throw DomainError("physical constants must be strictly positive");
    const double alpha = e_squared / hbar_c;
    if (alpha < 1.0 / 137.5 || alpha > 1.0 / 136.5)
        throw DomainError("e_squared / hbar_c is not a plausible fine-structure constant");
}

std::string PhysicalConstants::fingerprint() const {
    char text[160];
    std::snprintf(text, sizeof text, "%.17g %.17g %.17g %.17g %.17g", hbar_c, e_squared, amu, nucleon_mass, r0);
    // FNV-1a
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (const char* p = text; *p; ++p) {
        hash ^= static_cast<unsigned char>(*p);
        hash *= 0x100000001b3ULL;
    }
    char out[17];
    std::snprintf(out, sizeof out, "%016llx", static_cast<unsigned long long>(hash));
    return out;
}

PhysicalConstants parse_constants(std::istream& in) {
    PhysicalConstants c;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream fields(line);
        std::string key;
        if (!(fields >> key))
            continue;
        double value = 0;
        std::string extra;
        if (!(fields >> value) || (fields >> extra))
            throw ParseError("constants line " + std::to_string(line_no) + ": expected 'key value'");
        if (key == "hbar_c")
            c.hbar_c = value;
        else if (key == "e_squared")
            c.e_squared = value;
        else if (key == "amu")
            c.amu = value;
        else if (key == "nucleon_mass")
            c.nucleon_mass = value;
        else if (key == "r0")
            c.r0 = value;
        else
            throw ParseError("constants line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
    c.validate();
    return c;
}

PhysicalConstants load_constants(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open constants file '" + path + "'");
    return parse_constants(in);
}

} // namespace tiso
