#pragma once

#include <cmath>
#include <string>

#include "eca/errors.hpp"

// Root structure of the curvature cubic
//
//   B^3 - mu B^2 - lambda B + 4 R^2 = 0,   mu = R^2 C1,  lambda = R^2 C2.
//
// A parameter triple (R, C1, C2) is admissible when this cubic has two
// distinct positive roots A1 > A2; the curvature variable B then oscillates
// in [A2, A1].  The lower bound on C2 (at fixed C1, R) comes from the
// discriminant analysis and has two closed-form branches that meet at
// mu^3 = -108 R^2.

namespace eca {

struct CurveParams {
    double R = 1.0;  // sphere radius
    double C1 = 0.0; // first-integral constant
    double C2 = 0.0; // integration constant
};

struct CubicRoots {
    double A1 = 0, A2 = 0, A3 = 0; // A1 > A2 > 0 > A3
    double theta = 0;              // angle fed to the trigonometric root forms
    double a = 0, b = 0, c = 0;    // shifted roots A_i/R - R C1/2, a > b > c
    double r = 0;                  // sqrt(C2 + (R C1 / 2)^2)
    double d = 0;                  // sqrt(C1^2 R^2 + 3 C2)

    // Cancellation-free combinations (r - a and r + b shrink to zero at
    // large C2 / strong C1 while r, a, b stay large; the plain differences
    // lose up to 12 digits there).  From the cubic: r^2 - a^2 = 4/A1 and
    // r^2 - b^2 = 4/A2; near the degenerate limit a - b follows from the
    // trigonometric root forms.
    double span_ab = 0;   // a - b = (2 sqrt3 / 3) d sin(theta/3)
    double r_minus_a = 0; // 4 / (A1 (a + r))
    double r_plus_b = 0;  // 4 / (A2 (r - b))
};

// Lower admissibility bound on C2 for given (C1, R): the cubic has two
// distinct positive roots iff C2 > admissible_lower_bound(C1, R).
inline double admissible_lower_bound(double C1, double R) {
    if (!(R > 0)) throw DomainError("admissible_lower_bound: R > 0 required");
    const double mu = C1 * R * R;
    const double R2 = R * R;
    const double mu_split = -3.0 * std::pow(2.0 * R, 2.0 / 3.0);
    double lambda_lb;
    if (mu >= mu_split) {
        // single real root of the discriminant cubic in lambda
        const double S = mu * mu * mu + 108.0 * R2;
        const double root_term = 48.0 * std::sqrt(3.0) * R * S * std::sqrt(S);
        const double base =
            std::pow(mu, 6) + 2160.0 * R2 * mu * mu * mu - 93312.0 * R2 * R2;
        const double y1 = std::cbrt(base + root_term);
        const double y2 = std::cbrt(base - root_term);
        lambda_lb = (-mu * mu - (y1 + y2)) / 12.0;
    } else {
        // three real roots; the largest is the bound
        const double mu3 = mu * mu * mu;
        const double w = mu * (mu3 - 864.0 * R2); // > 0 here
        const double sw = std::sqrt(w);
        double arg = (-std::pow(mu, 6) - 2160.0 * R2 * mu3 + 93312.0 * R2 * R2) /
                     (mu * (864.0 * R2 - mu3) * sw);
        arg = std::min(1.0, std::max(-1.0, arg));
        const double vartheta = std::acos(arg);
        lambda_lb = -mu * mu / 12.0 +
                    (sw / 6.0) * std::cos((vartheta - M_PI) / 3.0);
    }
    return lambda_lb / R2; // bound expressed as a C2 threshold
}

namespace detail {

inline double cubic_eval(double B, double mu, double lambda, double R2) {
    return ((B - mu) * B - lambda) * B + 4.0 * R2;
}

inline double cubic_deriv(double B, double mu, double lambda) {
    return (3.0 * B - 2.0 * mu) * B - lambda;
}

// Trigonometric closed forms for the three real roots, one Newton polish
// step each.  Returns false when the arccos argument leaves [-1, 1], i.e.
// when the cubic does not have three real roots.
inline bool cubic_roots_raw(const CurveParams& p, CubicRoots& out) {
    const double R = p.R, C1 = p.C1, C2 = p.C2;
    const double R2 = R * R;
    const double mu = C1 * R2;
    const double lambda = C2 * R2;
    const double disc = C1 * C1 * R2 + 3.0 * C2;
    if (disc <= 0) return false;
    const double d = std::sqrt(disc);
    const double arg = (108.0 - 9.0 * C1 * C2 * R2 - 2.0 * std::pow(C1, 3) * R2 * R2) /
                       (2.0 * R * disc * d);
    if (!(arg > -1.0 && arg < 1.0)) {
        out.theta = (arg >= 1.0) ? 0.0 : M_PI;
        return false;
    }
    const double theta = std::acos(arg);
    const double amp = 2.0 * R * d / 3.0;
    const double center = C1 * R2 / 3.0;
    double A1 = center + amp * std::cos((theta - M_PI) / 3.0);
    double A2 = center + amp * std::cos((theta + M_PI) / 3.0);
    double A3 = center - amp * std::cos(theta / 3.0);
    for (double* Ai : {&A1, &A2, &A3}) {
        const double deriv = cubic_deriv(*Ai, mu, lambda);
        if (std::abs(deriv) > 1e-14 * std::max(1.0, std::abs(lambda)))
            *Ai -= cubic_eval(*Ai, mu, lambda, R2) / deriv;
    }
    out.A1 = A1;
    out.A2 = A2;
    out.A3 = A3;
    out.theta = theta;
    out.d = d;
    out.r = std::sqrt(C2 + 0.25 * C1 * C1 * R2);
    const double shift = 0.5 * R * C1;
    out.a = A1 / R - shift;
    out.b = A2 / R - shift;
    out.c = A3 / R - shift;
    out.span_ab = 2.0 * std::sqrt(3.0) / 3.0 * d * std::sin(theta / 3.0);
    out.r_minus_a = 4.0 / (A1 * (out.a + out.r));
    // r - b = (r - a) + (a - b), both nonnegative
    out.r_plus_b = 4.0 / (A2 * (out.r_minus_a + out.span_ab));
    return true;
}

} // namespace detail

struct AdmissibilityReport {
    bool admissible = false;
    std::string diagnostic;
};

// Checks C2 against the closed-form bound and verifies the actual root
// structure; near-boundary disagreements are decided by the root count.
inline AdmissibilityReport check_admissibility(const CurveParams& p) {
    if (!(p.R > 0)) return {false, "R must be positive"};
    const double bound = admissible_lower_bound(p.C1, p.R);
    CubicRoots roots;
    const bool has_three = detail::cubic_roots_raw(p, roots);
    if (!has_three) {
        if (p.C2 <= bound)
            return {false, "C2 below admissible lower bound"};
        return {false, "cubic has fewer than three real roots"};
    }
    if (!(roots.A2 > 0))
        return {false, "cubic lacks two positive roots"};
    if (!(roots.A1 - roots.A2 > 1e-10 * p.R))
        return {false, "positive roots are not distinct (degenerate)"};
    return {true, ""};
}

inline bool is_admissible(const CurveParams& p) {
    return check_admissibility(p).admissible;
}

// Roots of the curvature cubic for admissible parameters.
// Throws NotAdmissible or Degenerate otherwise.
inline CubicRoots solve_cubic(const CurveParams& p) {
    if (!(p.R > 0)) throw DomainError("solve_cubic: R > 0 required");
    CubicRoots roots;
    if (!detail::cubic_roots_raw(p, roots)) {
        const double bound = admissible_lower_bound(p.C1, p.R);
        const double scale = std::max(1.0, std::abs(bound));
        if (std::abs(p.C2 - bound) <= 1e-9 * scale)
            throw Degenerate("solve_cubic: C2 at the admissibility boundary");
        throw NotAdmissible("solve_cubic: cubic has fewer than three real roots");
    }
    if (!(roots.A2 > 0))
        throw NotAdmissible("solve_cubic: cubic lacks two positive roots");
    if (!(roots.A1 - roots.A2 > 1e-10 * p.R))
        throw Degenerate("solve_cubic: A1 - A2 below separation tolerance");
    if (roots.A1 - roots.A2 < 1e-4 * p.R) {
        // the trigonometric forms stay finite across the fold; classify a
        // C2 at the closed-form boundary (to rounding) as degenerate
        const double bound = admissible_lower_bound(p.C1, p.R);
        if (p.C2 - bound <= 1e-12 * std::max(1.0, std::abs(bound)))
            throw Degenerate("solve_cubic: C2 at the admissibility boundary");
    }
    return roots;
}

} // namespace eca
