#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <random>
#include <string>

#include "eca/elliptic.hpp"
#include "eca/golden.hpp"

#include "oracles.hpp"

using namespace eca;

namespace {

double pi_defining_integral(double n, double m) {
    return oracle::simpson(
        [&](double t) {
            const double s = std::sin(t);
            return 1.0 / ((1.0 - n * s * s) * std::sqrt(1.0 - m * s * s));
        },
        0.0, 0.5 * M_PI, 1e-13);
}

GoldenStore golden() {
    return GoldenStore::load(std::string(ECA_TEST_DATA_DIR) + "/golden.json");
}

} // namespace

TEST_CASE("complete_elliptic_pi reference values") {
    CHECK(complete_elliptic_pi(0.0, 0.0) ==
          doctest::Approx(M_PI / 2).epsilon(1e-14));
    // characteristic only: Pi(n, 0) = pi / (2 sqrt(1 - n))
    CHECK(complete_elliptic_pi(0.5, 0.0) ==
          doctest::Approx(M_PI / std::sqrt(2.0)).epsilon(1e-14));
    // parameter only: reduces to the first-kind integral
    CHECK(complete_elliptic_pi(0.0, 0.5) ==
          doctest::Approx(1.8540746773013719).epsilon(1e-12));
    CHECK(complete_elliptic_pi(0.0, 0.5) ==
          doctest::Approx(pi_defining_integral(0.0, 0.5)).epsilon(1e-11));
    CHECK(complete_elliptic_k(0.5) == complete_elliptic_pi(0.0, 0.5));
    CHECK(complete_elliptic_pi(EllipticArgs{0.25, 0.75}) ==
          complete_elliptic_pi(0.25, 0.75));
}

TEST_CASE("complete_elliptic_pi domain errors, no clamping") {
    CHECK_THROWS_AS(complete_elliptic_pi(0.5, 1.0), DomainError);
    CHECK_THROWS_AS(complete_elliptic_pi(0.5, -0.1), DomainError);
    CHECK_THROWS_AS(complete_elliptic_pi(1.0, 0.5), DomainError);
    CHECK_THROWS_AS(complete_elliptic_pi(1.2, 0.5), DomainError);
}

TEST_CASE("oracle equivalence on 1000 random (n, m)") {
    std::mt19937 rng(20240811);
    std::uniform_real_distribution<double> un(-4.0, 0.95), um(0.0, 0.95);
    for (int i = 0; i < 1000; ++i) {
        const double n = un(rng), m = um(rng);
        const double cf = complete_elliptic_pi(n, m);
        const double qu = pi_defining_integral(n, m);
        CHECK(std::abs(cf - qu) <= 1e-10 * std::abs(qu));
    }
}

TEST_CASE("monotone in characteristic and parameter") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> un(-3.0, 0.9), um(0.0, 0.9);
    for (int i = 0; i < 200; ++i) {
        const double n = un(rng), m = um(rng);
        CHECK(complete_elliptic_pi(n + 0.05, m) > complete_elliptic_pi(n, m));
        CHECK(complete_elliptic_pi(n, m + 0.05) > complete_elliptic_pi(n, m));
    }
}

TEST_CASE("series coefficients match the printed closed forms") {
    const double alpha = 0.5;
    const double s = std::sqrt(1.0 - alpha);
    const auto c = elliptic_pi_series_coefficients(alpha, 8);
    CHECK(c[0] == doctest::Approx(M_PI / (2.0 * s)).epsilon(1e-14));
    CHECK(c[0] == doctest::Approx(M_PI * std::sqrt(2.0) / 2.0).epsilon(1e-14));
    CHECK(c[1] ==
          doctest::Approx(M_PI / 2.0 * (std::sqrt(2.0) - 2.0)).epsilon(1e-14));
    CHECK(c[1] == doctest::Approx(-0.9201511845).epsilon(1e-9));
    CHECK(c[2] == doctest::Approx(3.0 * M_PI / (32.0 * alpha * alpha) *
                                  (2.0 / s - 2.0 - alpha))
                      .epsilon(1e-13));
    CHECK(c[3] == doctest::Approx(5.0 * M_PI / (256.0 * alpha * alpha * alpha) *
                                  (-4.0 * alpha - 3.0 * alpha * alpha - 8.0 +
                                   8.0 / s))
                      .epsilon(1e-13));
    CHECK(elliptic_pi_series(alpha, 0.0, 1) ==
          doctest::Approx(M_PI * std::sqrt(2.0) / 2.0).epsilon(1e-14));
}

TEST_CASE("recurrence tail agrees with the Taylor coefficients of the "
          "defining integral beyond the fixed low orders") {
    // T_m = binom(2m, m)/4^m * W_m with W_m = (W_{m-1} - I_{m-1}) / alpha,
    // I_j = int_0^{pi/2} sin^{2j} t dt.
    const double alpha = -1.7;
    const int count = 10;
    const auto c = elliptic_pi_series_coefficients(alpha, count);
    double W = M_PI / (2.0 * std::sqrt(1.0 - alpha));
    double I = M_PI / 2.0;
    double binom = 1.0;
    for (int m = 1; m < count; ++m) {
        W = (W - I) / alpha;
        I *= (2.0 * m - 1.0) / (2.0 * m);
        binom *= (2.0 * m - 1.0) / (2.0 * m);
        const double taylor = binom * W;
        if (m == 1) {
            // the printed first-order closed form sits -pi/(4 alpha) away
            // from the Taylor value; everything past it is exact
            CHECK(c[1] - taylor ==
                  doctest::Approx(-M_PI / (4.0 * alpha)).epsilon(1e-10));
        } else {
            CHECK(c[static_cast<std::size_t>(m)] ==
                  doctest::Approx(taylor).epsilon(1e-9));
        }
    }
}

TEST_CASE("series validity region is enforced") {
    CHECK_THROWS_AS(elliptic_pi_series(0.5, 0.6, 4), DomainError);
    CHECK_THROWS_AS(elliptic_pi_series(-0.5, 0.1, 4), DomainError);
    CHECK_THROWS_AS(elliptic_pi_series(1.2, 0.1, 4), DomainError);
    CHECK_THROWS_AS(elliptic_pi_series(-2.0, 1.0, 4), DomainError);
    CHECK_THROWS_AS(elliptic_pi_series(0.5, 0.1, 0), DomainError);
    CHECK_NOTHROW(elliptic_pi_series(-2.0, 0.99, 4));
    CHECK_NOTHROW(elliptic_pi_series(0.5, 0.49, 4));
}

TEST_CASE("tiny characteristic falls back to the first-kind series") {
    const double v = elliptic_pi_series(1e-13, 0.3, 24);
    CHECK(v == doctest::Approx(complete_elliptic_k(0.3)).epsilon(1e-12));
}

TEST_CASE("series truncation gaps reproduce the frozen fixtures") {
    const GoldenStore store = golden();
    struct Probe {
        double alpha, k;
        int terms;
    };
    for (const Probe pr :
         {Probe{0.5, 0.1, 4}, Probe{0.5, 0.3, 4}, Probe{0.5, 0.45, 4},
          Probe{-2.0, 0.1, 8}, Probe{-2.0, 0.3, 8}, Probe{-2.0, 0.5, 8},
          Probe{0.6, 0.5, 8}, Probe{-1.5, 0.4, 8}, Probe{-3.0, 0.25, 8}}) {
        char key[80];
        std::snprintf(key, sizeof(key),
                      "specfun/series_minus_pi/alpha=%g,k=%g,terms=%d",
                      pr.alpha, pr.k, pr.terms);
        const double diff = elliptic_pi_series(pr.alpha, pr.k, pr.terms) -
                            complete_elliptic_pi(pr.alpha, pr.k);
        CHECK_MESSAGE(store.check(key, diff), key, " diff=", diff);
    }
}

TEST_CASE("Carlson forms: spot values and a closed reduction") {
    CHECK(carlson_rf(1.0, 1.0, 1.0) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(carlson_rc(1.0, 1.0) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(carlson_rj(1.0, 1.0, 1.0, 1.0) ==
          doctest::Approx(1.0).epsilon(1e-13));
    // R_J(0, y, y, p) = 3 (R_C(0, p) - R_C(0, y)) / (y - p)
    const double y = 1.0, pp = 0.5;
    CHECK(carlson_rj(0.0, y, y, pp) ==
          doctest::Approx(3.0 / (y - pp) *
                          (carlson_rc(0.0, pp) - carlson_rc(0.0, y)))
              .epsilon(1e-12));
}
