#pragma once

#include <string>
#include <string_view>

namespace tiso {

enum class Statistics { Boson, Fermion };

enum class Polarization { Unpolarized, AlignedSymmetric };

/// Particle spin stored as 2s so half-integer values stay exact.
class Spin {
  public:
    constexpr Spin() = default;
    explicit Spin(int twice_s);

    /// Parses "0", "1", "1/2", "9/2" (denominator must be 2).
    static Spin parse(std::string_view text);

    constexpr int twice() const { return twice_; }
    constexpr double value() const { return 0.5 * twice_; }
    /// Number of spin projections, 2s+1.
    constexpr int multiplicity() const { return twice_ + 1; }
    constexpr Statistics statistics() const {
        return twice_ % 2 == 0 ? Statistics::Boson : Statistics::Fermion;
    }

    std::string to_string() const;

    friend constexpr bool operator==(Spin, Spin) = default;

  private:
    int twice_ = 0;
};

std::string to_string(Statistics stat);
std::string to_string(Polarization pol);
Statistics parse_statistics(std::string_view text);
Polarization parse_polarization(std::string_view text);

/// Throws ConsistencyError unless `stat` is the statistics implied by `spin`.
void require_consistent(Spin spin, Statistics stat);

} // namespace tiso
