#include <doctest.h>

#include <cmath>

#include "tiso/errors.hpp"
#include "tiso/special_functions.hpp"

using namespace tiso;
using doctest::Approx;

namespace {

struct Reference {
    int l;
    double x;
    double j;
    double y;
};

// mpmath: sqrt(pi / 2x) J_{l+1/2}(x), sqrt(pi / 2x) Y_{l+1/2}(x), 30 digits.
constexpr Reference references[] = {
    {0, 1.0, 0.84147098480789651, -0.54030230586813972},
    {1, 1.0, 0.30116867893975679, -1.3817732906760362},
    {5, 0.5, 2.9774668754574456e-6, -61327.563166980636},
    {10, 5.0, 0.00040734424424946043, -26.6561144057187},
    {20, 1.0, 7.537795722236873e-26, -3.2395922185789839e+23},
    {3, 10.0, -0.039495844984470324, -0.095327478876568903},
    {30, 2.5, 4.6312333449528031e-31, -1.4206887828493412e+28},
    {2, M_PI, 0.30396355092701331, -0.2215552828841922},
};

} // namespace

TEST_CASE("spherical Bessel closed forms") {
    CHECK(spherical_bessel_j(0, 1.0) == Approx(0.841471).epsilon(1e-6));
    CHECK(spherical_bessel_j(1, 1.0) == Approx(0.301169).epsilon(1e-6));
    CHECK(spherical_bessel_y(0, 1.0) == Approx(-0.540302).epsilon(1e-6));
    CHECK(spherical_bessel_y(1, 1.0) == Approx(-1.381773).epsilon(1e-6));
}

TEST_CASE("spherical Bessel against high-precision references") {
    for (const auto& r : references) {
        CAPTURE(r.l);
        CAPTURE(r.x);
        CHECK(spherical_bessel_j(r.l, r.x) == Approx(r.j).epsilon(1e-12));
        CHECK(spherical_bessel_y(r.l, r.x) == Approx(r.y).epsilon(1e-12));
    }
}

TEST_CASE("j normalization near zeros of j0") {
    // j_0 vanishes at pi; normalization must fall back to j_1.
    const auto j = spherical_bessel_j_array(8, M_PI);
    CHECK(std::abs(j[0]) < 1e-15);
    CHECK(j[2] == Approx(0.30396355092701331).epsilon(1e-12));
}

TEST_CASE("Wronskian j_l y_l' - j_l' y_l = 1/x^2") {
    for (double x : {0.5, 1.0, 5.0}) {
        for (int l = 0; l <= 10; ++l) {
            const double w = spherical_bessel_j(l, x) * spherical_bessel_y_derivative(l, x) -
                             spherical_bessel_j_derivative(l, x) * spherical_bessel_y(l, x);
            CAPTURE(l);
            CAPTURE(x);
            CHECK(std::abs(w * x * x - 1) < 1e-10);
        }
    }
}

TEST_CASE("upward and downward branches agree at the switch") {
    // x slightly above and below l_max selects different recurrences.
    for (int l_max : {3, 7, 12}) {
        const auto below = spherical_bessel_j_array(l_max, l_max - 1e-9);
        const auto above = spherical_bessel_j_array(l_max, l_max + 1e-9);
        for (int l = 0; l <= l_max; ++l)
            CHECK(below[l] == Approx(above[l]).epsilon(1e-9));
    }
}

TEST_CASE("Bessel domain errors") {
    CHECK_THROWS_AS(spherical_bessel_j(0, 0.0), DomainError);
    CHECK_THROWS_AS(spherical_bessel_y(1, -1.0), DomainError);
    CHECK_THROWS_AS(spherical_bessel_j(-1, 1.0), DomainError);
}

TEST_CASE("Legendre polynomials") {
    CHECK(legendre_p(2, 0.0) == Approx(-0.5).epsilon(1e-15));
    for (int l = 0; l <= 20; ++l) {
        CHECK(std::abs(legendre_p(l, 1.0) - 1) < 1e-10);
        CHECK(std::abs(legendre_p(l, -1.0) - (l % 2 ? -1.0 : 1.0)) < 1e-10);
        if (l % 2)
            CHECK(std::abs(legendre_p(l, 0.0)) < 1e-10);
    }
    CHECK(legendre_p(7, 0.3) == Approx(-0.22407298125).epsilon(1e-12));
    CHECK(legendre_p(12, -0.7) == Approx(-0.2566400940716416).epsilon(1e-12));
    CHECK_THROWS_AS(legendre_p(2, 1.5), DomainError);
    CHECK_THROWS_AS(legendre_p(-1, 0.5), DomainError);
}
