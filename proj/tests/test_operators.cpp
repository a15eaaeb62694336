#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "oracle.hpp"
#include "wilsonq/errors.hpp"
#include "wilsonq/operators.hpp"
#include "wilsonq/system.hpp"

using namespace wilsonq;

TEST_CASE("banded storage enforces its declared structure") {
    operators::BandedMatrix M(4, {0, -2, 2}, true);
    M.set(1, 3, 2.5);
    CHECK(M.at(1, 3) == 2.5);
    CHECK(M.at(0, 1) == 0.0);  // off-band reads are exact zeros
    CHECK_THROWS_AS(M.set(0, 1, 1.0), validation_error);
    CHECK_THROWS_AS(M.at(0, 4), validation_error);
    CHECK_THROWS_AS(operators::BandedMatrix(0, {0}, true), validation_error);

    operators::BandedMatrix other(4, {0, -2, 2}, true);
    other.set(1, 3, 1.0);
    CHECK(M.max_abs_diff(other) == 1.5);
    operators::BandedMatrix smaller(3, {0}, true);
    CHECK_THROWS_AS(M.max_abs_diff(smaller), validation_error);
}

TEST_CASE("kinetic matrix entries") {
    auto T = operators::kinetic_matrix(12, 0.5);
    CHECK(T.at(0, 0) == 0.0625);  // lambda^2/4
    CHECK(T.at(3, 3) == doctest::Approx(0.0625 * 7.0).epsilon(1e-15));
    CHECK(T.at(0, 1) == 0.0);
    CHECK(T.at(0, 2) == doctest::Approx(-0.08838834764831844055011).epsilon(1e-15));
    CHECK(T.at(2, 0) == T.at(0, 2));
    CHECK(T.at(1, 3) == doctest::Approx(-0.0625 * std::sqrt(2.0 * 3.0)).epsilon(1e-15));
}

TEST_CASE("kinetic matrix matches the second-derivative quadrature oracle") {
    // -1/2 int phi_n phi_m'' dx with a five-point stencil under Simpson.
    const double lambda = 0.7;
    const double hx = 1e-3 / lambda;
    auto phi = [&](int n, double x) { return system::basis_phi(n, x, lambda); };
    auto integrand = [&](int n, int m, double x) {
        double dd = (-phi(m, x - 2 * hx) + 16.0 * phi(m, x - hx) - 30.0 * phi(m, x)
                     + 16.0 * phi(m, x + hx) - phi(m, x + 2 * hx)) / (12.0 * hx * hx);
        return -0.5 * phi(n, x) * dd;
    };
    auto T = operators::kinetic_matrix(5, lambda);
    double L = 10.0 / lambda;
    for (int n = 0; n <= 4; ++n) {
        for (int m = n; m <= 4; ++m) {
            double want = oracle::simpson([&](double x) { return integrand(n, m, x); },
                                          -L, L, 8000);
            CHECK(std::abs(T.at(n, m) - want) < 1e-8);
        }
    }
}

TEST_CASE("squared-position matrix entries and moment oracle") {
    auto Z = operators::position_squared_matrix(6);
    CHECK(Z.at(0, 0) == 0.5);
    CHECK(Z.at(2, 2) == doctest::Approx(2.5).epsilon(1e-15));
    CHECK(Z.at(0, 2) == doctest::Approx(0.5 * std::sqrt(2.0)).epsilon(1e-15));
    CHECK(Z.at(0, 1) == 0.0);
    double lambda = 0.5;
    double want = oracle::simpson(
        [&](double x) {
            double z = lambda * x;
            return system::basis_phi(0, x, lambda) * z * z * system::basis_phi(2, x, lambda);
        },
        -30.0, 30.0, 20000);
    CHECK(Z.at(0, 2) == doctest::Approx(want).epsilon(1e-10));
}

TEST_CASE("kinetic decomposition recombines exactly") {
    for (double lambda : {0.2, 0.5, 1.0}) {
        auto r = operators::kinetic_decomposition_check(50, lambda);
        CHECK(r.name == "kinetic-decomposition");
        CHECK(r.residual < 1e-12);
        CHECK(r.passed);
    }
}

TEST_CASE("Hamiltonian-form matrix anchors") {
    auto H = operators::hamiltonian_matrix(40, 0.5, 0.8, 0.6);
    CHECK(H.at(0, 0) == doctest::Approx(3.84).epsilon(1e-14));
    CHECK(H.at(1, 0) == doctest::Approx(-3.980584458541100717773).epsilon(1e-14));
    CHECK(H.at(0, 1) == H.at(1, 0));
    CHECK(H.at(0, 2) == 0.0);

    double worst = 0.0;
    for (int i = 0; i < 40; ++i)
        for (int j = 0; j < 40; ++j)
            worst = std::max(worst, std::abs(H.at(i, j) - H.at(j, i)));
    CHECK(worst == 0.0);  // mirrored construction: symmetric by storage
}

TEST_CASE("the two printed off-diagonal families coincide under index shift") {
    auto H = operators::hamiltonian_matrix(40, 0.5, 0.8, 0.6);
    for (int n = 0; n + 1 < 40; ++n) {
        double upper = operators::hamiltonian_upper_entry(n, 0.5, 0.8, 0.6);
        double stored = H.at(n, n + 1);
        CHECK(std::abs(upper - stored) <= 1e-13 * std::max(1.0, std::abs(stored)));
    }
}

TEST_CASE("potential matrix is the banded difference") {
    auto H = operators::hamiltonian_matrix(10, 0.5, 0.8, 0.6);
    auto T = operators::kinetic_matrix(10, 0.5);
    auto V = operators::potential_matrix(H, T);
    CHECK(V.at(0, 0) == doctest::Approx(3.7775).epsilon(1e-14));
    CHECK(V.at(0, 1) == H.at(0, 1));
    CHECK(V.at(0, 2) == -T.at(0, 2));
    CHECK(V.at(1, 3) == -T.at(1, 3));
    CHECK(V.at(0, 3) == 0.0);
    auto T8 = operators::kinetic_matrix(8, 0.5);
    CHECK_THROWS_AS(operators::potential_matrix(H, T8), validation_error);
}

TEST_CASE("wave operator shifts the diagonal of a tridiagonal matrix") {
    auto H = operators::hamiltonian_matrix(6, 0.5, 0.8, 0.6);
    auto J = operators::wave_operator(H, 0.3);
    for (int i = 0; i < 6; ++i) {
        CHECK(J.at(i, i) == H.at(i, i) - 0.3);
        if (i + 1 < 6) CHECK(J.at(i, i + 1) == H.at(i, i + 1));
    }
    auto J0 = operators::wave_operator(H, 0.0);
    CHECK(J0.max_abs_diff(H) == 0.0);
    // Pentadiagonal input violates the tridiagonal contract.
    auto T = operators::kinetic_matrix(6, 0.5);
    CHECK_THROWS_AS(operators::wave_operator(T, 0.3), validation_error);
}

TEST_CASE("recursion diagnostic runs and reports a finite deviation") {
    double d = operators::hamiltonian_recursion_diagnostic(30, 0.5, 0.8, 0.6);
    CHECK(std::isfinite(d));
    CHECK(d >= 0.0);
    INFO("diagnostic deviation ", d);
}
