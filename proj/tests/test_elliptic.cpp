#include <doctest.h>

#include <cmath>

#include "golden_values.hpp"
#include "spinon/elliptic.hpp"

using namespace spinon;

TEST_CASE("agm") {
    CHECK(agm(1.0, 1.0) == 1.0);
    CHECK(agm(1.0, 2.0) == doctest::Approx(1.4567910310469068).epsilon(1e-15));
    CHECK(agm(24.0, 6.0) == doctest::Approx(13.458171481725615).epsilon(1e-15));
}

TEST_CASE("modulus data from the nome, both regimes") {
    for (const auto& pt : golden::elliptic_moduli) {
        const EllipticModulus mod = modulus_from_nome(pt.nome);
        CHECK(mod.m == doctest::Approx(pt.m).epsilon(1e-13));
        CHECK(mod.log_mc == doctest::Approx(pt.log_mc).epsilon(1e-13));
        CHECK(mod.K == doctest::Approx(pt.K).epsilon(1e-13));
        CHECK(mod.K_prime == doctest::Approx(pt.K_prime).epsilon(1e-13));
        if (pt.mc > 1e-300)
            CHECK(mod.mc == doctest::Approx(pt.mc).epsilon(1e-12));
        // nome round trip
        CHECK(std::exp(-M_PI * mod.K_prime / mod.K) ==
              doctest::Approx(pt.nome).epsilon(1e-12));
    }
}

TEST_CASE("zero nome degenerates to the circular case") {
    const EllipticModulus mod = modulus_from_nome(0.0);
    CHECK(mod.m == 0.0);
    CHECK(mod.K == doctest::Approx(M_PI_2).epsilon(1e-15));
    CHECK(jacobi_dn(0.7, mod) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(jacobi_am(0.7, mod) == doctest::Approx(0.7).epsilon(1e-14));
}

TEST_CASE("amplitude and dn against frozen references") {
    for (const auto& pt : golden::am_dn_points) {
        const EllipticModulus mod = modulus_from_nome(pt.nome);
        const double u = pt.u_frac * mod.K;
        CHECK(jacobi_am(u, mod) == doctest::Approx(pt.am).epsilon(1e-12));
        const double dn = jacobi_dn(u, mod);
        const double scale = std::max(std::abs(pt.dn), 1e-18);
        CHECK(std::abs(dn - pt.dn) / scale < 1e-10);
    }
}

TEST_CASE("amplitude pins its exact anchors") {
    for (const auto& pt : golden::elliptic_moduli) {
        const EllipticModulus mod = modulus_from_nome(pt.nome);
        CHECK(jacobi_am(0.0, mod) == 0.0);
        CHECK(jacobi_dn(0.0, mod) == doctest::Approx(1.0).epsilon(1e-13));
        // quarter-period values: am(K) = pi/2, dn(K) = sqrt(mc)
        CHECK(jacobi_am(mod.K, mod) == doctest::Approx(M_PI_2).epsilon(1e-12));
        if (mod.mc > 1e-280)
            CHECK(jacobi_dn(mod.K, mod) ==
                  doctest::Approx(std::sqrt(mod.mc)).epsilon(1e-9));
        // oddness / periodicity
        CHECK(jacobi_am(-0.3 * mod.K, mod) ==
              doctest::Approx(-jacobi_am(0.3 * mod.K, mod)).epsilon(1e-13));
        CHECK(jacobi_am(0.3 * mod.K + 2.0 * mod.K, mod) ==
              doctest::Approx(jacobi_am(0.3 * mod.K, mod) + M_PI).epsilon(1e-12));
    }
}

TEST_CASE("d am / du = dn") {
    for (double nome : {0.04, 0.3, 0.5}) {
        const EllipticModulus mod = modulus_from_nome(nome);
        for (double frac : {0.2, 0.55, 0.85}) {
            const double u = frac * mod.K;
            const double h = 1e-6;
            const double deriv =
                (jacobi_am(u + h, mod) - jacobi_am(u - h, mod)) / (2.0 * h);
            CHECK(deriv == doctest::Approx(jacobi_dn(u, mod)).epsilon(1e-7));
        }
    }
}
