#pragma once

#include <cmath>
#include <cstdlib>
#include <numeric>
#include <vector>

#include "eca/angle.hpp"
#include "eca/cubic.hpp"
#include "eca/errors.hpp"
#include "eca/geometry.hpp"

// Curvature-profile integration and reconstruction of the ambient curve on
// the sphere.  The curvature variable B solves
//
//   B_ss = 2 B^{-2} - B / R^2 + C1 / 2,
//
// with first integral B_s^2 = C2 - B^2/R^2 - 4/B + C1 B (monitored, not
// integrated).  The ambient frame obeys x' = T, T' = kappa_g eps - x/R^2,
// eps' = -kappa_g T with kappa_g = B^{-3/2}.  The initial point is placed so
// that the Killing symmetry axis is the z-axis; the accumulated azimuth per
// curvature period then equals the progression angle.

namespace eca {

struct ProfileSample {
    double s = 0;
    double B = 0;
    double B_s = 0;
};

struct CurvatureProfile {
    std::vector<ProfileSample> samples;
    double period_T = 0;
    int n_periods = 0;
    CurveParams params;
    double first_integral_residual = 0;
};

namespace detail {

inline double profile_rhs(double B, const CurveParams& p) {
    return 2.0 / (B * B) - B / (p.R * p.R) + 0.5 * p.C1;
}

inline double first_integral(double B, const CurveParams& p) {
    return p.C2 - B * B / (p.R * p.R) - 4.0 / B + p.C1 * B;
}

} // namespace detail

// Integrates the curvature ODE over n_periods periods starting from the
// lower turning point (B, B_s) = (A2, 0).  The requested step is rounded
// down so that an integer number of steps covers one period exactly.  The
// first-integral residual is monitored at every integration step; samples
// are stored every store_every steps (the stored grid stays uniform).
inline CurvatureProfile integrate_profile(const CurveParams& p, int n_periods,
                                          double step, int store_every = 1) {
    if (n_periods < 1) throw DomainError("integrate_profile: n_periods >= 1");
    if (store_every < 1)
        throw DomainError("integrate_profile: store_every >= 1");
    const CubicRoots rt = solve_cubic(p);
    const double T = period(p);
    if (!(step > 0) || step > T / 200.0)
        throw StepTooLarge("integrate_profile: step must be <= T/200");
    long per = static_cast<long>(std::ceil(T / step));
    per = ((per + store_every - 1) / store_every) * store_every;
    const double h = T / static_cast<double>(per);
    const long total = per * n_periods;

    CurvatureProfile out;
    out.period_T = T;
    out.n_periods = n_periods;
    out.params = p;
    out.samples.reserve(static_cast<std::size_t>(total / store_every) + 1);

    double B = rt.A2, Bs = 0.0;
    double max_residual = 0.0;
    const auto record = [&](long i) {
        const double res = Bs * Bs - detail::first_integral(B, p);
        max_residual = std::max(max_residual, std::abs(res));
        if (i % store_every == 0) out.samples.push_back({i * h, B, Bs});
    };
    record(0);
    for (long i = 0; i < total; ++i) {
        const double k1B = Bs, k1S = detail::profile_rhs(B, p);
        const double k2B = Bs + 0.5 * h * k1S,
                     k2S = detail::profile_rhs(B + 0.5 * h * k1B, p);
        const double k3B = Bs + 0.5 * h * k2S,
                     k3S = detail::profile_rhs(B + 0.5 * h * k2B, p);
        const double k4B = Bs + h * k3S,
                     k4S = detail::profile_rhs(B + h * k3B, p);
        B += h / 6.0 * (k1B + 2.0 * k2B + 2.0 * k3B + k4B);
        Bs += h / 6.0 * (k1S + 2.0 * k2S + 2.0 * k3S + k4S);
        record(i + 1);
    }
    out.first_integral_residual = max_residual;
    return out;
}

// Constant profile over a prescribed length (used for the circle checks;
// it satisfies the curvature ODE only when the cubic has a double root).
inline CurvatureProfile constant_profile(double B, double R, double C1,
                                         double length, int n) {
    if (!(B > 0) || !(R > 0) || !(length > 0) || n < 2)
        throw DomainError("constant_profile: bad arguments");
    CurvatureProfile out;
    // C2 consistent with B_s = 0 at this B
    out.params = {R, C1, B * B / (R * R) + 4.0 / B - C1 * B};
    out.period_T = length;
    out.n_periods = 1;
    out.samples.reserve(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i)
        out.samples.push_back({length * i / n, B, 0.0});
    out.first_integral_residual = 0.0;
    return out;
}

struct TraceSample {
    double s = 0;
    Vec3 x;
    Vec3 tangent;
    Vec3 normal;
    double B = 0;
    double B_s = 0;
};

struct SphereTrace {
    std::vector<TraceSample> samples;
    CurveParams params;
    double period_T = 0;      // one curvature period (0 for synthetic circles)
    double winding_theta = 0; // accumulated azimuth about the z-axis
    double closure_gap = 0;   // |x(end) - x(0)|
    int rotation_index = 0;   // round(winding_theta / 2 pi)
};

// Reconstructs the ambient curve over q curvature periods using the
// profile's parameters and step size.
inline SphereTrace trace_curve(const CurvatureProfile& profile, int q) {
    if (q < 1) throw DomainError("trace_curve: q >= 1");
    if (profile.samples.size() < 2)
        throw DomainError("trace_curve: profile too short");
    const CurveParams p = profile.params;
    const CubicRoots rt = solve_cubic(p);
    const double R = p.R;
    const double h = profile.samples[1].s - profile.samples[0].s;
    const long per = std::lround(profile.period_T / h);
    const long total = per * q;

    // Killing-adapted initial point: colatitude from R^2 sin^2 psi =
    // b^2 (4/B + B_s^2) at B = A2, tangent purely azimuthal there.  The
    // hemisphere is fixed by requiring the symmetry axis of the solution to
    // be exactly the z-axis, which gives tan(psi0) = -2 / (sqrt(A2) R kt)
    // with kt = C1/2 - A2/R^2; hence sign(cos psi0) = -sign(kt).
    const double b_km = 1.0 / std::sqrt(p.C2 / (R * R) + 0.25 * p.C1 * p.C1);
    double sin_psi0 = b_km * std::sqrt(4.0 / rt.A2) / R;
    sin_psi0 = std::min(1.0, sin_psi0);
    const double kt = 0.5 * p.C1 - rt.A2 / (R * R);
    double cos_psi0 = std::sqrt(std::max(0.0, 1.0 - sin_psi0 * sin_psi0));
    if (kt > 0) cos_psi0 = -cos_psi0;

    double B = rt.A2, Bs = 0.0;
    Vec3 x{R * sin_psi0, 0.0, R * cos_psi0};
    Vec3 T{0.0, 1.0, 0.0};
    Vec3 eps = cross(normalized(x), T);

    SphereTrace out;
    out.params = p;
    out.period_T = profile.period_T;
    out.samples.reserve(static_cast<std::size_t>(total) + 1);
    out.samples.push_back({0.0, x, T, eps, B, Bs});

    const Vec3 x0 = x;
    double winding = 0.0;
    double prev_az = std::atan2(x.y, x.x);

    struct State {
        double B, Bs;
        Vec3 x, T, eps;
    };
    const auto deriv = [&p](const State& st) {
        State d;
        d.B = st.Bs;
        d.Bs = detail::profile_rhs(st.B, p);
        const double kappa = 1.0 / (st.B * std::sqrt(st.B));
        d.x = st.T;
        d.T = kappa * st.eps - (1.0 / (p.R * p.R)) * st.x;
        d.eps = (-kappa) * st.T;
        return d;
    };
    const auto advance = [](const State& st, const State& d, double dt) {
        State n;
        n.B = st.B + dt * d.B;
        n.Bs = st.Bs + dt * d.Bs;
        n.x = st.x + dt * d.x;
        n.T = st.T + dt * d.T;
        n.eps = st.eps + dt * d.eps;
        return n;
    };

    for (long i = 0; i < total; ++i) {
        State st{B, Bs, x, T, eps};
        const State k1 = deriv(st);
        const State k2 = deriv(advance(st, k1, 0.5 * h));
        const State k3 = deriv(advance(st, k2, 0.5 * h));
        const State k4 = deriv(advance(st, k3, h));
        B += h / 6.0 * (k1.B + 2 * k2.B + 2 * k3.B + k4.B);
        Bs += h / 6.0 * (k1.Bs + 2 * k2.Bs + 2 * k3.Bs + k4.Bs);
        x += (h / 6.0) * (k1.x + 2.0 * k2.x + 2.0 * k3.x + k4.x);
        T += (h / 6.0) * (k1.T + 2.0 * k2.T + 2.0 * k3.T + k4.T);
        eps += (h / 6.0) * (k1.eps + 2.0 * k2.eps + 2.0 * k3.eps + k4.eps);

        // drift check, then projection back onto the sphere frame
        const double defect =
            std::max({std::abs(norm(x) - R) / R, std::abs(dot(T, x)) / R,
                      std::abs(dot(eps, x)) / R, std::abs(dot(T, eps)),
                      std::abs(norm(T) - 1.0), std::abs(norm(eps) - 1.0)});
        if (defect > 1e-4)
            throw FrameDrift("trace_curve: frame drift exceeds tolerance");
        x = (R / norm(x)) * x;
        T = T - (dot(T, x) / (R * R)) * x;
        T = normalized(T);
        eps = eps - (dot(eps, x) / (R * R)) * x - dot(eps, T) * T;
        eps = normalized(eps);

        const double az = std::atan2(x.y, x.x);
        double daz = az - prev_az;
        if (daz > M_PI) daz -= 2.0 * M_PI;
        if (daz < -M_PI) daz += 2.0 * M_PI;
        winding += daz;
        prev_az = az;

        out.samples.push_back({(i + 1) * h, x, T, eps, B, Bs});
    }
    out.winding_theta = winding;
    out.closure_gap = norm(x - x0);
    out.rotation_index = static_cast<int>(std::lround(winding / (2.0 * M_PI)));
    return out;
}

// Planar circle at colatitude psi on a sphere of radius R, one full loop.
inline SphereTrace circle_trace(double R, double psi, int n = 512) {
    if (!(R > 0) || !(psi > 0) || !(psi < M_PI))
        throw DomainError("circle_trace: require R > 0, 0 < psi < pi");
    if (n < 8) throw DomainError("circle_trace: n >= 8");
    const double sp = std::sin(psi), cp = std::cos(psi);
    const double kappa = cp / (sp * R); // geodesic curvature
    const double B = std::pow(std::abs(kappa), -2.0 / 3.0);
    SphereTrace out;
    out.params = {R, 0.0, B * B / (R * R) + 4.0 / B};
    out.period_T = 0.0;
    out.samples.reserve(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        const double t = 2.0 * M_PI * i / n;
        const double ct = std::cos(t), st = std::sin(t);
        TraceSample smp;
        smp.s = R * sp * t;
        smp.x = {R * sp * ct, R * sp * st, R * cp};
        smp.tangent = {-st, ct, 0.0};
        smp.normal = cross(normalized(smp.x), smp.tangent);
        smp.B = B;
        smp.B_s = 0.0;
        out.samples.push_back(smp);
    }
    out.winding_theta = 2.0 * M_PI;
    out.closure_gap = norm(out.samples.back().x - out.samples.front().x);
    out.rotation_index = 1;
    return out;
}

// Rotation index of a closed trace; requires the endpoint gap to be small.
inline int rotation_index(const SphereTrace& trace) {
    if (trace.closure_gap > 1e-5 * trace.params.R)
        throw NotClosed("rotation_index: trace does not close");
    const double w = trace.winding_theta / (2.0 * M_PI);
    const long idx = std::lround(w);
    if (std::abs(w - static_cast<double>(idx)) > 1e-4)
        throw NumericalError("rotation_index: winding not near an integer");
    return static_cast<int>(idx);
}

// Invariant arc length R^{1/3} \int kappa_g^{1/3} ds by the trapezoid rule;
// kappa_g^{1/3} = B^{-1/2}.
inline double eca_length(const SphereTrace& trace) {
    double sum = 0.0;
    for (std::size_t i = 1; i < trace.samples.size(); ++i) {
        const double f0 = 1.0 / std::sqrt(trace.samples[i - 1].B);
        const double f1 = 1.0 / std::sqrt(trace.samples[i].B);
        sum += 0.5 * (f0 + f1) * (trace.samples[i].s - trace.samples[i - 1].s);
    }
    return std::cbrt(trace.params.R) * sum;
}

struct IsoperimetricPair {
    double lhs = 0; // cubed invariant length
    double rhs = 0; // (4 pi - A)(2 pi - A) A
};

// Equality case of the isoperimetric inequality for the circle at
// colatitude psi on the unit sphere, A = 2 pi (1 - cos psi).
inline IsoperimetricPair isoperimetric_check(double psi) {
    if (!(psi > 0) || !(psi < 0.5 * M_PI))
        throw DomainError("isoperimetric_check: require 0 < psi < pi/2");
    const double L = eca_length(circle_trace(1.0, psi, 512));
    const double A = 2.0 * M_PI * (1.0 - std::cos(psi));
    return {L * L * L, (4.0 * M_PI - A) * (2.0 * M_PI - A) * A};
}

// Finds C2 such that the progression angle equals 2 pi p / q, by bisection
// on the monotone-decreasing angle.  p and q must be coprime and p/q must
// lie strictly between 1/2 and limit_at_D / (2 pi).
inline CurveParams closure_search(int p, int q, double C1, double R) {
    if (p < 1 || q < 1) throw DomainError("closure_search: p, q >= 1");
    if (std::gcd(p, q) != 1)
        throw DomainError("closure_search: p and q must be coprime");
    const double ratio = static_cast<double>(p) / q;
    if (!(ratio > 0.5)) throw OutOfRange("closure_search: p/q must exceed 1/2");
    const double upper = limit_at_D(C1, R) / (2.0 * M_PI);
    if (!(ratio < upper))
        throw OutOfRange("closure_search: p/q must be below limit_at_D/(2 pi)");
    const double target = 2.0 * M_PI * ratio;

    const double D = admissible_lower_bound(C1, R);
    const auto lambda_of = [&](double C2) {
        return angle_elliptic({R, C1, C2}).lambda_theta;
    };

    double lo = D + 1e-8 * std::max(1.0, std::abs(D));
    for (int k = 0; k < 6 && lambda_of(lo) <= target; ++k)
        lo = D + (lo - D) * 1e-2;
    double lo_val = lambda_of(lo);
    if (lo_val <= target)
        throw NumericalError("closure_search: cannot bracket below D");

    double span = std::max(1.0, std::abs(lo));
    double hi = lo + span;
    int grow = 0;
    while (lambda_of(hi) > target) {
        span *= 2.0;
        hi = lo + span;
        if (++grow > 200)
            throw NumericalError("closure_search: cannot bracket above");
    }

    double mid = 0.5 * (lo + hi);
    for (int it = 0; it < 240; ++it) {
        mid = 0.5 * (lo + hi);
        const double val = lambda_of(mid);
        if (std::abs(val - target) <= 1e-12) break;
        if (val > target)
            lo = mid;
        else
            hi = mid;
        if (hi - lo <= 4e-16 * std::max(1.0, std::abs(hi))) break;
    }
    if (std::abs(lambda_of(mid) - target) > 1e-10)
        throw NumericalError("closure_search: bisection did not reach tolerance");
    return {R, C1, mid};
}

} // namespace eca
