#pragma once

#include <cmath>
#include <vector>

#include "eca/errors.hpp"

// Complete elliptic integrals of the third kind,
//
//   Pi(n, m) = \int_0^{pi/2} dt / ((1 - n sin^2 t) sqrt(1 - m sin^2 t)),
//
// evaluated through Carlson symmetric forms (duplication algorithm), which
// stay uniformly accurate as n -> 1^-.  A truncated power series in the
// parameter m is provided as well; it carries fixed closed forms for the
// four lowest orders and generates the rest from a recurrence.

namespace eca {

namespace detail {

inline constexpr double carlson_errtol = 2.5e-4;

} // namespace detail

// Carlson R_F(x, y, z); x, y, z >= 0, at most one of them zero.
inline double carlson_rf(double x, double y, double z) {
    if (x < 0 || y < 0 || z < 0 || x + y <= 0 || y + z <= 0 || x + z <= 0)
        throw DomainError("carlson_rf: arguments out of range");
    for (int it = 0; it < 200; ++it) {
        const double sx = std::sqrt(x), sy = std::sqrt(y), sz = std::sqrt(z);
        const double lam = sx * (sy + sz) + sy * sz;
        x = 0.25 * (x + lam);
        y = 0.25 * (y + lam);
        z = 0.25 * (z + lam);
        const double mu = (x + y + z) / 3.0;
        const double dev = std::max({std::abs(mu - x), std::abs(mu - y),
                                     std::abs(mu - z)});
        if (dev < detail::carlson_errtol * mu) {
            const double X = (mu - x) / mu;
            const double Y = (mu - y) / mu;
            const double Z = -(X + Y);
            const double e2 = X * Y - Z * Z;
            const double e3 = X * Y * Z;
            return (1.0 + e2 * (e2 / 24.0 - 0.1 - 3.0 * e3 / 44.0) +
                    e3 / 14.0) /
                   std::sqrt(mu);
        }
    }
    throw NumericalError("carlson_rf: no convergence");
}

// Carlson R_C(x, y) = R_F(x, y, y); y > 0 branch only.
inline double carlson_rc(double x, double y) {
    if (x < 0 || y <= 0) throw DomainError("carlson_rc: arguments out of range");
    for (int it = 0; it < 200; ++it) {
        const double lam = 2.0 * std::sqrt(x) * std::sqrt(y) + y;
        x = 0.25 * (x + lam);
        y = 0.25 * (y + lam);
        const double mu = (x + 2.0 * y) / 3.0;
        const double s = (y - mu) / mu;
        if (std::abs(s) < detail::carlson_errtol) {
            return (1.0 +
                    s * s * (0.3 + s * (1.0 / 7.0 +
                                        s * (0.375 + s * 9.0 / 22.0)))) /
                   std::sqrt(mu);
        }
    }
    throw NumericalError("carlson_rc: no convergence");
}

// Carlson R_J(x, y, z, p) for p > 0.
inline double carlson_rj(double x, double y, double z, double p) {
    if (x < 0 || y < 0 || z < 0 || p <= 0 || x + y <= 0 || y + z <= 0 ||
        x + z <= 0)
        throw DomainError("carlson_rj: arguments out of range");
    double sum = 0.0;
    double fac = 1.0;
    for (int it = 0; it < 200; ++it) {
        const double sx = std::sqrt(x), sy = std::sqrt(y), sz = std::sqrt(z);
        const double lam = sx * (sy + sz) + sy * sz;
        const double alpha = p * (sx + sy + sz) + sx * sy * sz;
        const double beta = p + lam;
        sum += fac * carlson_rc(alpha * alpha, p * beta * beta);
        fac *= 0.25;
        x = 0.25 * (x + lam);
        y = 0.25 * (y + lam);
        z = 0.25 * (z + lam);
        p = 0.25 * (p + lam);
        const double mu = (x + y + z + 2.0 * p) / 5.0;
        const double dev =
            std::max({std::abs(mu - x), std::abs(mu - y), std::abs(mu - z),
                      std::abs(mu - p)});
        if (dev < detail::carlson_errtol * mu) {
            const double X = (mu - x) / mu;
            const double Y = (mu - y) / mu;
            const double Z = (mu - z) / mu;
            const double P = -0.5 * (X + Y + Z);
            const double ea = X * Y + X * Z + Y * Z;
            const double eb = X * Y * Z;
            const double ec = P * P;
            const double ed = ea - 3.0 * ec;
            const double ee = eb + 2.0 * P * (ea - ec);
            const double c1 = 3.0 / 14.0, c2 = 1.0 / 3.0, c3 = 3.0 / 22.0;
            const double c4 = 3.0 / 26.0, c5 = 0.75 * c3, c6 = 1.5 * c4;
            const double c7 = 0.5 * c2, c8 = 2.0 * c3;
            const double series =
                1.0 + ed * (-c1 + c5 * ed - c6 * ee) +
                eb * (c7 + P * (-c8 + P * c4)) + P * ea * (c2 - P * c3) -
                c2 * P * ec;
            return 3.0 * sum + fac * series / (mu * std::sqrt(mu));
        }
    }
    throw NumericalError("carlson_rj: no convergence");
}

struct EllipticArgs {
    double n = 0.0; // characteristic, n < 1
    double m = 0.0; // parameter (m = k^2 convention), 0 <= m < 1
};

// Complete elliptic integral of the first kind K(m).
inline double complete_elliptic_k(double m) {
    if (m < 0 || m >= 1)
        throw DomainError("complete_elliptic_k: require 0 <= m < 1");
    return carlson_rf(0.0, 1.0 - m, 1.0);
}

// Complete elliptic integral of the third kind Pi(n, m).
inline double complete_elliptic_pi(double n, double m) {
    if (m < 0 || m >= 1)
        throw DomainError("complete_elliptic_pi: require 0 <= m < 1");
    if (n >= 1) throw DomainError("complete_elliptic_pi: require n < 1");
    const double rf = carlson_rf(0.0, 1.0 - m, 1.0);
    if (n == 0.0) return rf;
    return rf + (n / 3.0) * carlson_rj(0.0, 1.0 - m, 1.0, 1.0 - n);
}

inline double complete_elliptic_pi(EllipticArgs a) {
    return complete_elliptic_pi(a.n, a.m);
}

namespace detail {

// Central binomial ratio binom(2m, m) / 4^m, i.e. |binom(-1/2, m)|.
inline double half_binomial(int m) {
    double t = 1.0;
    for (int j = 0; j < m; ++j) t *= (2.0 * j + 1.0) / (2.0 * j + 2.0);
    return t;
}

} // namespace detail

// First `count` coefficients c_m of the expansion Pi(alpha, k) = sum c_m k^m.
// c_0..c_3 are fixed closed forms, later ones come from the recurrence  2(m+1) alpha c_{m+1} =
//     pi binom(-1/2, m)^2 / (2(2m-1)) + (1-2m) c_{m-1} + (2m+1+2m alpha) c_m.
inline std::vector<double> elliptic_pi_series_coefficients(double alpha,
                                                           int count) {
    const double pi = M_PI;
    const double s = std::sqrt(1.0 - alpha);
    std::vector<double> c;
    c.reserve(static_cast<std::size_t>(count));
    const double closed[4] = {
        pi / (2.0 * s),
        pi / (4.0 * alpha) * (1.0 / s - 2.0),
        3.0 * pi / (32.0 * alpha * alpha) * (2.0 / s - 2.0 - alpha),
        5.0 * pi / (256.0 * alpha * alpha * alpha) *
            (-4.0 * alpha - 3.0 * alpha * alpha - 8.0 + 8.0 / s),
    };
    for (int m = 0; m < count && m < 4; ++m) c.push_back(closed[m]);
    for (int m = 3; m + 1 < count; ++m) {
        const double w = detail::half_binomial(m);
        const double rhs = pi * w * w / (2.0 * (2.0 * m - 1.0)) +
                           (1.0 - 2.0 * m) * c[m - 1] +
                           (2.0 * m + 1.0 + 2.0 * m * alpha) * c[m];
        c.push_back(rhs / (2.0 * (m + 1.0) * alpha));
    }
    return c;
}

// Truncated series for Pi(alpha, k) in powers of the parameter k, valid for
// (alpha < -1, 0 <= k < 1) or (0 < alpha < 1, 0 <= k < alpha).  For
// |alpha| < 1e-12 the characteristic factor drops out and the series of the
// first-kind integral K(k) is used instead (avoids dividing by alpha).
inline double elliptic_pi_series(double alpha, double k, int terms) {
    if (terms < 1) throw DomainError("elliptic_pi_series: terms >= 1");
    if (std::abs(alpha) < 1e-12) {
        double sum = 0.0, kp = 1.0;
        for (int m = 0; m < terms; ++m) {
            const double w = detail::half_binomial(m);
            sum += w * w * kp;
            kp *= k;
        }
        return 0.5 * M_PI * sum;
    }
    const bool valid = (alpha < -1.0 && 0.0 <= k && k < 1.0) ||
                       (0.0 < alpha && alpha < 1.0 && 0.0 <= k && k < alpha);
    if (!valid)
        throw DomainError(
            "elliptic_pi_series: (alpha, k) outside the validity region");
    const std::vector<double> c = elliptic_pi_series_coefficients(alpha, terms);
    double sum = 0.0, kp = 1.0;
    for (int m = 0; m < terms; ++m) {
        sum += c[static_cast<std::size_t>(m)] * kp;
        kp *= k;
    }
    return sum;
}

} // namespace eca
