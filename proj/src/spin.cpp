#include "tiso/spin.hpp"

#include <charconv>

#include "tiso/errors.hpp"

namespace tiso {

namespace {

int parse_nonnegative(std::string_view text) {
    int value = -1;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || value < 0)
        throw DomainError("invalid spin '" + std::string(text) + "'");
    return value;
}

} // namespace

Spin::Spin(int twice_s) : twice_(twice_s) {
    if (twice_s < 0)
        throw DomainError("spin must be non-negative");
}

Spin Spin::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Spin(2 * parse_nonnegative(text));
    if (text.substr(slash + 1) != "2")
        throw DomainError("spin denominator must be 2: '" + std::string(text) + "'");
    return Spin(parse_nonnegative(text.substr(0, slash)));
}

std::string Spin::to_string() const {
    if (twice_ % 2 == 0)
        return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
}

std::string to_string(Statistics stat) {
    return stat == Statistics::Boson ? "boson" : "fermion";
}

std::string to_string(Polarization pol) {
    return pol == Polarization::Unpolarized ? "unpolarized" : "aligned";
}

Statistics parse_statistics(std::string_view text) {
    if (text == "boson")
        return Statistics::Boson;
    if (text == "fermion")
        return Statistics::Fermion;
    throw DomainError("statistics must be 'boson' or 'fermion'");
}

Polarization parse_polarization(std::string_view text) {
    if (text == "unpolarized")
        return Polarization::Unpolarized;
    if (text == "aligned")
        return Polarization::AlignedSymmetric;
    throw DomainError("polarization must be 'unpolarized' or 'aligned'");
}

void require_consistent(Spin spin, Statistics stat) {
    if (spin.statistics() != stat)
        throw ConsistencyError("spin " + spin.to_string() + " is incompatible with " + to_string(stat) +
                               " statistics");
}

} // namespace tiso
