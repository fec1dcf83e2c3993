#pragma once

#include <cmath>

#include "eca/cubic.hpp"
#include "eca/elliptic.hpp"
#include "eca/errors.hpp"
#include "eca/quadrature.hpp"

// Progression angle of one curvature period.  Three routes are provided:
// singular quadrature of the split integral (endpoint singularities removed
// by the sin^2 substitution), the closed form in complete elliptic integrals
// of the third kind, and the large-C2 asymptotic series (C1 = 0, R = 1).
// The angle decreases monotonically in C2 from its degenerate-limit value
// down to pi.

namespace eca {

enum class AngleMethod { quadrature, elliptic, series };

inline const char* to_string(AngleMethod m) {
    switch (m) {
        case AngleMethod::quadrature: return "quadrature";
        case AngleMethod::elliptic: return "elliptic";
        case AngleMethod::series: return "series";
    }
    return "?";
}

struct AngleResult {
    double lambda_theta = 0.0; // radians, in (pi, 2 pi)
    double period_T = 0.0;     // Euclidean arc length of one B-period
    AngleMethod method = AngleMethod::quadrature;
    double error_estimate = 0.0;
};

// Euclidean arc length of one period of B:
//   T = 2 \int_{A2}^{A1} dB / sqrt(C2 - B^2/R^2 - 4/B + C1 B).
// The substitution B = A2 + (A1 - A2) sin^2(phi) removes both endpoint
// singularities; the remaining integrand is smooth.
inline double period(const CurveParams& p) {
    const CubicRoots rt = solve_cubic(p);
    const double span = rt.A1 - rt.A2;
    auto integrand = [&](double phi) {
        const double s = std::sin(phi);
        const double B = rt.A2 + span * s * s;
        return std::sqrt(B / (B - rt.A3));
    };
    const QuadResult q = integrate(integrand, 0.0, 0.5 * M_PI, 1e-13);
    return 4.0 * p.R * q.value;
}

namespace detail {

// The two partial-fraction pieces of the split angle integral, after the
// substitution Btil = b + (a - b) sin^2(phi):
//   I_sign = \int_b^a dBtil / ((r + sign*Btil) sqrt((a-Btil)(Btil-b)(Btil-c)))
// The denominators are assembled from nonnegative pieces,
//   r - Btil = (r - a) + (a - b) cos^2(phi),
//   r + Btil = (r + b) + (a - b) sin^2(phi),
// so no cancellation occurs when r - a is many orders below r.
inline QuadResult angle_piece(const CubicRoots& rt, double sign) {
    const double span = rt.span_ab;
    const double b_minus_c = rt.b - rt.c;
    const double base = (sign < 0) ? rt.r_minus_a : rt.r_plus_b;
    auto integrand = [=](double phi) {
        const double s = std::sin(phi);
        const double c = std::cos(phi);
        const double s2 = s * s;
        const double denom =
            (sign < 0) ? base + span * c * c : base + span * s2;
        return 2.0 / (denom * std::sqrt(b_minus_c + span * s2));
    };
    return integrate(integrand, 0.0, 0.5 * M_PI, 1e-13);
}

} // namespace detail

// Progression angle by direct quadrature of the split integral.
inline AngleResult angle_quadrature(const CurveParams& p) {
    const CubicRoots rt = solve_cubic(p);
    const QuadResult minus = detail::angle_piece(rt, -1.0);
    const QuadResult plus = detail::angle_piece(rt, +1.0);
    const double pref = 2.0 / std::sqrt(p.R);
    AngleResult res;
    res.lambda_theta = pref * (minus.value + plus.value);
    res.error_estimate = pref * (minus.error + plus.error);
    res.period_T = period(p);
    res.method = AngleMethod::quadrature;
    if (res.error_estimate > 1e-8 * std::abs(res.lambda_theta))
        throw QuadratureFailure("angle_quadrature: error estimate too large");
    return res;
}

namespace detail {

// Two-term elliptic form, valid when r > a (which holds identically on the
// admissible set: r^2 - a^2 = 4/A1 > 0).
inline double angle_elliptic_two_term(const CurveParams& p,
                                      const CubicRoots& rt) {
    const double k2 = rt.span_ab / (rt.a - rt.c);
    const double n_plus = rt.span_ab / (rt.a + rt.r);
    const double n_minus = -rt.span_ab / rt.r_minus_a;
    const double pref = 4.0 / std::sqrt(p.R * (rt.a - rt.c));
    return pref * (complete_elliptic_pi(n_plus, k2) / (rt.a + rt.r) +
                   complete_elliptic_pi(n_minus, k2) / rt.r_minus_a);
}

// Three-term elliptic form; requires only r > b.
inline double angle_elliptic_three_term(const CurveParams& p,
                                        const CubicRoots& rt) {
    const double r_minus_b = rt.r_minus_a + rt.span_ab;
    const double k2 = rt.span_ab / (rt.a - rt.c);
    const double n1 = rt.span_ab / (rt.a + rt.r);
    const double n2 =
        rt.span_ab * (rt.r - rt.c) / ((rt.a - rt.c) * r_minus_b);
    const double pref = 4.0 / std::sqrt(p.R * (rt.a - rt.c));
    return pref * (complete_elliptic_pi(n1, k2) / (rt.a + rt.r) +
                   (rt.b - rt.c) * complete_elliptic_pi(n2, k2) /
                       ((rt.r - rt.c) * r_minus_b) +
                   complete_elliptic_k(k2) / (rt.r - rt.c));
}

} // namespace detail

// Progression angle through complete elliptic integrals of the third kind.
// Auto-selects the two-term form when r > a, the three-term form otherwise;
// if a characteristic reaches 1 the routine falls back to quadrature.
inline AngleResult angle_elliptic(const CurveParams& p) {
    const CubicRoots rt = solve_cubic(p);
    AngleResult res;
    res.method = AngleMethod::elliptic;
    res.period_T = period(p);
    try {
        res.lambda_theta = (rt.r > rt.a)
                               ? detail::angle_elliptic_two_term(p, rt)
                               : detail::angle_elliptic_three_term(p, rt);
        res.error_estimate = 1e-13 * res.lambda_theta;
    } catch (const DomainError&) {
        // characteristic at or beyond 1: fall back to quadrature
        const AngleResult q = angle_quadrature(p);
        res.lambda_theta = q.lambda_theta;
        res.error_estimate = q.error_estimate;
    }
    return res;
}

// Limit of the progression angle as C2 decreases to the admissibility
// bound D (the two positive roots merge).
inline double limit_at_D(double C1, double R) {
    if (!(R > 0)) throw DomainError("limit_at_D: R > 0 required");
    const double D = admissible_lower_bound(C1, R); // as a C2 threshold
    const double r0 = std::sqrt(D + 0.25 * C1 * C1 * R * R);
    const double d0 = std::sqrt(3.0 * D + C1 * C1 * R * R);
    const double rc1 = R * C1;
    return 12.0 * M_PI / std::sqrt(R * d0) *
           (1.0 / (2.0 * d0 + 6.0 * r0 - rc1) +
            1.0 / (6.0 * r0 + 4.0 * d0 + rc1) +
            6.0 * d0 /
                ((6.0 * r0 + 4.0 * d0 + rc1) * (6.0 * r0 - 2.0 * d0 + rc1)));
}

// Truncated-series evaluation of the two-term elliptic form for C1 = 0,
// R = 1: each complete integral of the third kind is replaced by its
// partial sum in powers of the parameter.  A term whose characteristic
// falls outside the series validity region falls back to the closed form.
inline double angle_series_partial_sum(const CurveParams& p, int terms = 4) {
    if (p.C1 != 0.0 || p.R != 1.0)
        throw DomainError("angle_series_partial_sum: defined for C1 = 0, R = 1");
    const CubicRoots rt = solve_cubic(p);
    const double k = rt.span_ab / (rt.a - rt.c);
    const auto pi_term = [&](double alpha) {
        try {
            return elliptic_pi_series(alpha, k, terms);
        } catch (const DomainError&) {
            return complete_elliptic_pi(alpha, k);
        }
    };
    const double pref = 4.0 / std::sqrt(rt.a - rt.c);
    return pref * (pi_term(rt.span_ab / (rt.a + rt.r)) / (rt.a + rt.r) +
                   pi_term(-rt.span_ab / rt.r_minus_a) / rt.r_minus_a);
}

// Asymptotic expansion of the progression angle for C1 = 0, R = 1,
// r = sqrt(C2):
//   Lambda = pi (1 + c1 r^{-3/2} - c2 r^{-9/2} + c3 r^{-15/2}) + O(r^{-9}).
// Monotone decreasing for r above the admissibility threshold.
inline AngleResult angle_series_large_C2(const CurveParams& p) {
    if (p.C1 != 0.0 || p.R != 1.0)
        throw DomainError("angle_series_large_C2: defined for C1 = 0, R = 1");
    const double r = std::sqrt(p.C2);
    const double r_min = std::cbrt(6.0 * std::sqrt(3.0));
    if (!(r > r_min))
        throw DomainError("angle_series_large_C2: require sqrt(C2) > (6 sqrt 3)^(1/3)");
    const double s2 = std::sqrt(2.0);
    const double c1 = (280.0 - 49.0 * s2) / 128.0;
    const double c2 = (350.0 - 35.0 * s2) / 64.0;
    const double c3 = (4193.0 - 735.0 * s2) / 128.0;
    const double u = std::pow(r, -1.5);
    const double last = c3 * u * u * u * u * u;
    AngleResult res;
    res.lambda_theta = M_PI * (1.0 + c1 * u - c2 * u * u * u + last);
    res.method = AngleMethod::series;
    res.error_estimate = M_PI * std::abs(last);
    res.period_T = period(p);
    return res;
}

} // namespace eca
