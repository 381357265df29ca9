#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "cmax/kinematics.hpp"
#include "test_support.hpp"

using namespace cmax;

TEST_CASE("mass-velocity law") {
    const auto ctx = make_context(1.0, 2.0, 1.0);

    CHECK(mass_of_velocity(ctx, 1.3, 1.0) == 1.3); // m(c) = m_c, ratio is exactly 1
    CHECK_THAT(mass_of_velocity(ctx, 1.0, std::sqrt(2.0)),
               Catch::Matchers::WithinRel(std::sqrt(1.5), 1e-15));
    CHECK_THAT(mass_of_velocity(ctx, 1.0, 0.0),
               Catch::Matchers::WithinRel(std::sqrt(3.0) / 2.0, 1e-15));

    CHECK_THROWS_AS(mass_of_velocity(ctx, 1.0, 2.0), SpeedExceedsMaximum);
    CHECK_THROWS_AS(mass_of_velocity(ctx, -1.0, 0.5), InvalidArgument);

    // strictly increasing across both regimes
    double prev = 0.0;
    for (double s = 0.0; s < 1.99; s += 0.01) {
        const double m = mass_of_velocity(ctx, 1.0, s);
        CHECK(m > prev);
        prev = m;
    }
}

TEST_CASE("invariant mass product is constant in speed") {
    const auto ctx = make_context(1.0, 2.0, 1.0);

    const double at_c = invariant_mass_product(ctx, 1.0, 1.0);
    CHECK_THAT(at_c, Catch::Matchers::WithinRel(std::sqrt(1.0 - 0.25), 1e-15));
    CHECK_THAT(invariant_mass_product(ctx, 1.0, 1.5),
               Catch::Matchers::WithinRel(std::sqrt(3.0) / 2.0, 1e-15));

    std::mt19937_64 gen(301);
    for (int i = 0; i < 1000; ++i) {
        const double s = testsup::uniform(gen, 0.0, 0.99 * 2.0);
        CHECK_THAT(invariant_mass_product(ctx, 1.0, s),
                   Catch::Matchers::WithinRel(at_c, 1e-12));
    }
}

TEST_CASE("four-velocity") {
    const auto ctx = make_context(1.0, 2.0, 1.0);

    const FourVector rest = four_velocity(ctx, Velocity3(ctx, 0, 0, 0));
    CHECK(rest.t_component == 2.0);
    CHECK(rest.x == 0.0);

    const FourVector u = four_velocity(ctx, Velocity3(ctx, 1.2, 0, 0));
    CHECK_THAT(u.t_component, Catch::Matchers::WithinRel(2.5, 1e-15));
    CHECK_THAT(u.x, Catch::Matchers::WithinRel(1.5, 1e-15));

    std::mt19937_64 gen(302);
    for (int i = 0; i < 1000; ++i) {
        const double s = testsup::uniform(gen, 0.0, 0.99 * 2.0);
        const double phi = testsup::uniform(gen, 0.0, 2.0 * M_PI);
        const Velocity3 v(ctx, s * std::cos(phi), s * std::sin(phi), 0.0);
        CHECK_THAT(minkowski_square(four_velocity(ctx, v)),
                   Catch::Matchers::WithinRel(4.0, 1e-12));
    }
}

TEST_CASE("four-momentum and the mass shell") {
    const auto ctx = make_context(1.0, 2.0, 1.0);

    const FourMomentum rest = four_momentum(ctx, 1.5, Velocity3(ctx, 0, 0, 0));
    CHECK(rest.px == 0.0);
    CHECK(rest.E == 1.5 * 4.0);

    const FourMomentum fm = four_momentum(ctx, 1.0, Velocity3(ctx, 1.2, 0, 0));
    CHECK_THAT(fm.px, Catch::Matchers::WithinRel(1.5, 1e-15));
    CHECK_THAT(fm.E, Catch::Matchers::WithinRel(5.0, 1e-15));

    std::mt19937_64 gen(303);
    for (int i = 0; i < 1000; ++i) {
        const double s = testsup::uniform(gen, 0.0, 0.99 * 2.0);
        const double phi = testsup::uniform(gen, 0.0, 2.0 * M_PI);
        const double mz = testsup::uniform(gen, -1.0, 1.0);
        const double st = std::sqrt(1.0 - mz * mz);
        const Velocity3 v(ctx, s * st * std::cos(phi), s * st * std::sin(phi), s * mz);
        const double m_c = testsup::uniform(gen, 0.01, 10.0);
        CHECK(energy_momentum_residual(ctx, four_momentum(ctx, m_c, v), m_c) <= 1e-12);
    }
}

TEST_CASE("mass-shell residual diagnostics") {
    const auto ctx = make_context(1.0, 2.0, 1.0);

    // massless dispersion E = |p| c_m
    CHECK(energy_momentum_residual(ctx, FourMomentum{2.0 * 3.0, 3.0, 0, 0}, 0.0) == 0.0);

    FourMomentum fm = four_momentum(ctx, 1.0, Velocity3(ctx, 1.2, 0, 0));
    fm.E *= 1.01;
    CHECK(energy_momentum_residual(ctx, fm, 1.0) > 1e-3);
}

TEST_CASE("mass-energy relation") {
    const auto ctx = make_context(1.0, 2.0, 1.0);

    CHECK(energy_from_mass(ctx, 0.0) == 0.0);
    CHECK_THAT(energy_from_mass(ctx, 1.0),
               Catch::Matchers::WithinRel(8.0 / std::sqrt(3.0), 1e-15));

    // route equivalence: m(v) -> E equals the direct energy
    std::mt19937_64 gen(304);
    for (int i = 0; i < 1000; ++i) {
        const double s = testsup::uniform(gen, 0.0, 0.99 * 2.0);
        const double m_c = testsup::uniform(gen, 0.01, 5.0);
        const double via_mass = energy_from_mass(ctx, mass_of_velocity(ctx, m_c, s));
        const double direct = four_momentum(ctx, m_c, Velocity3(ctx, s, 0, 0)).E;
        CHECK_THAT(via_mass, Catch::Matchers::WithinRel(direct, 1e-12));
    }
}

TEST_CASE("rest-mass dilation stays in the light-speed sector") {
    const auto ctx = make_context(1.0, 2.0, 1.0);
    CHECK(rest_mass_dilation(ctx, 1.0, 0.0) == 1.0);
    CHECK_THAT(rest_mass_dilation(ctx, 1.0, 0.6), Catch::Matchers::WithinRel(1.25, 1e-15));
    CHECK_THROWS_AS(rest_mass_dilation(ctx, 1.0, 1.0), InvalidArgument);
    CHECK_THROWS_AS(rest_mass_dilation(ctx, 1.0, 1.5), InvalidArgument);
}

TEST_CASE("photon mass at speed c") {
    const auto ctx = make_context(1.0, 2.0, 1.0);

    CHECK_THAT(photon_mass_at_c(ctx, 1.0),
               Catch::Matchers::WithinRel(M_PI * std::sqrt(3.0) / 4.0, 1e-15));
    // linear in nu, so it vanishes in the zero-frequency limit
    CHECK(photon_mass_at_c(ctx, 1e-12) <= 1e-11);
    CHECK_THROWS_AS(photon_mass_at_c(ctx, 0.0), InvalidArgument);
    CHECK_THROWS_AS(photon_mass_at_c(ctx, -1.0), InvalidArgument);

    // energy round-trip: the photon's characteristic mass at v = c gives E = h nu
    std::mt19937_64 gen(305);
    for (int i = 0; i < 200; ++i) {
        const double nu = std::exp(testsup::uniform(gen, -3.0, 3.0));
        const double m = photon_mass_at_c(ctx, nu);
        const double E = four_momentum(ctx, m, Velocity3(ctx, 1.0, 0, 0)).E;
        CHECK_THAT(E, Catch::Matchers::WithinRel(ctx.h() * nu, 1e-12));
    }
}

TEST_CASE("superluminal photon") {
    const auto ctx = make_context(1.0, 2.0, 1.0);

    SECTION("frequency is unchanged at v = c, exactly") {
        const auto p = superluminal_photon(ctx, PhotonSpec(ctx, 0.7, 1.0));
        CHECK(p.frequency == 0.7);
        CHECK(p.energy == ctx.h() * 0.7);
    }

    SECTION("hand value at v = sqrt(2)") {
        const auto p = superluminal_photon(ctx, PhotonSpec(ctx, 1.0, std::sqrt(2.0)));
        CHECK_THAT(p.frequency, Catch::Matchers::WithinRel(std::sqrt(1.5), 1e-15));
        CHECK_THAT(p.energy, Catch::Matchers::WithinRel(ctx.h() * std::sqrt(1.5), 1e-15));
        CHECK_THAT(p.mass,
                   Catch::Matchers::WithinRel(ctx.h() / 8.0 * 3.0 / std::sqrt(2.0), 1e-15));
    }

    SECTION("frequency grows strictly with speed") {
        double prev = 0.0;
        for (double v = 1.0; v < 1.99; v += 0.03) {
            const auto p = superluminal_photon(ctx, PhotonSpec(ctx, 1.0, v));
            CHECK(p.frequency > prev);
            prev = p.frequency;
        }
        const auto at_c = superluminal_photon(ctx, PhotonSpec(ctx, 1.0, 1.0));
        const auto above = superluminal_photon(ctx, PhotonSpec(ctx, 1.0, 1.01));
        CHECK(above.frequency > at_c.frequency);
    }

    SECTION("speed domain is [c, c_m)") {
        CHECK_THROWS_AS(PhotonSpec(ctx, 1.0, 0.5), SpeedBelowLight);
        CHECK_THROWS_AS(PhotonSpec(ctx, 1.0, 2.0), SpeedExceedsMaximum);
        CHECK_THROWS_AS(PhotonSpec(ctx, 0.0, 1.5), InvalidArgument);
    }
}

TEST_CASE("energy and mass increase monotonically in the superluminal range") {
    const auto ctx = make_context(1.0, 2.0, 1.0);
    double prev_m = 0.0, prev_E = 0.0;
    for (double v = 1.0; v < 1.99; v += 0.01) {
        const double m = mass_of_velocity(ctx, 1.0, v);
        const double E = four_momentum(ctx, 1.0, Velocity3(ctx, v, 0, 0)).E;
        CHECK(m > prev_m);
        CHECK(E > prev_E);
        prev_m = m;
        prev_E = E;
    }
}
