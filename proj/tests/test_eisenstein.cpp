#include "thetakit/eisenstein.hpp"
#include "thetakit/errata.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace thetakit;

TEST_CASE("low-weight Eisenstein polynomials") {
    CHECK(eisenstein_poly(2) == GradedPoly::generator(0));
    CHECK(eisenstein_poly(4) == GradedPoly::generator(1));
    CHECK(eisenstein_poly(6) == GradedPoly::generator(2));
    CHECK(eisenstein_poly(8) == pqr_poly(1, {{{0, 2, 0}, 1}}));                         // Q^2
    CHECK(eisenstein_poly(10) == pqr_poly(1, {{{0, 1, 1}, 1}}));                        // QR
    CHECK(eisenstein_poly(12) == pqr_poly(691, {{{0, 3, 0}, 441}, {{0, 0, 2}, 250}}));  // (441Q^3+250R^2)/691
    CHECK_THROWS_AS(eisenstein_poly(7), std::invalid_argument);
}

TEST_CASE("golden Phi table") {
    CHECK(phi_poly(1) == pqr_poly(24, {{{0, 0, 0}, 1}, {{1, 0, 0}, -1}}));
    CHECK(phi_poly(7) == pqr_poly(480, {{{0, 2, 0}, 1}, {{0, 0, 0}, -1}}));
    CHECK(phi_poly(9) == pqr_poly(264, {{{0, 0, 0}, 1}, {{0, 1, 1}, -1}}));
    CHECK(phi_poly(11) == pqr_poly(65520, {{{0, 0, 0}, -691}, {{0, 3, 0}, 441}, {{0, 0, 2}, 250}}));
    CHECK(phi_poly(13) == pqr_poly(24, {{{0, 0, 0}, 1}, {{0, 2, 1}, -1}}));
    CHECK(phi_poly(15) == pqr_poly(16320, {{{0, 0, 0}, -3617}, {{0, 4, 0}, 1617}, {{0, 1, 2}, 2000}}));
    CHECK(phi_poly(17) == pqr_poly(28728, {{{0, 0, 0}, 43867}, {{0, 3, 1}, -38367}, {{0, 0, 3}, -5500}}));
    CHECK_THROWS_AS(phi_poly(4), std::invalid_argument);
}

TEST_CASE("ansatz solve up to weight 24") {
    for (unsigned w = 8; w <= 24; w += 2) {
        const GradedPoly e = eisenstein_poly(w);  // throws on singular solve or
                                                  // surplus-coefficient failure
        CHECK(e.weight() == weight_uniform(w));
        CHECK(e.evaluate_all_ones() == 1);
    }
    for (unsigned k = 1; k <= 23; k += 2) CHECK(phi_poly(k).evaluate_all_ones() == 0);
}

TEST_CASE("series agreement through the verification window") {
    const QSeries::Index window = 40;
    const QSeries q = eisenstein_Q(window), r = eisenstein_R(window), p = eisenstein_P(window);
    for (unsigned w = 2; w <= 24; w += 2) {
        const QSeries target = eisenstein_series(w, window);
        QSeries acc(1, window);
        const GradedPoly poly = eisenstein_poly(w);
        for (const auto& [e, c] : poly.terms()) {
            QSeries term = qs_one(1, window);
            for (unsigned i = 0; i < e[0]; ++i) term = term * p;
            for (unsigned i = 0; i < e[1]; ++i) term = term * q;
            for (unsigned i = 0; i < e[2]; ++i) term = term * r;
            acc = acc + c * term;
        }
        CHECK(acc.same_coefficients(target));
    }
}

TEST_CASE("classical recursion backend agrees with the ansatz") {
    // n = 6, 8, ..., 22 imply weights 8 through 24.
    for (unsigned n = 6; n <= 22; n += 2) {
        INFO("n = " << n);
        CHECK(eisenstein_recursion_eq20(n) == eisenstein_poly(n + 2));
    }
    CHECK_THROWS_AS(eisenstein_recursion_eq20(4), std::invalid_argument);
    CHECK_THROWS_AS(eisenstein_recursion_eq20(7), std::invalid_argument);
}
