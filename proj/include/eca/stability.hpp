#pragma once

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "eca/errors.hpp"
#include "eca/trace.hpp"

// Second variation of the invariant arc length about critical curves.
// For constant-curvature circles the quadratic form diagonalizes over
// Fourier modes with a closed-form coefficient; for the area-preserving
// problem each mode m carries the quadratic
//
//   Q(m, z) = (2m^4 - 4m^2 - 3) z^2 + (4m^4 - 14m^2 + 27) z
//           + (2m^4 - 10m^2 - 6),        z = B^3 / R^2,
//
// which is nonnegative for all m >= 1 exactly when z lies in [7/5, 2].

namespace eca {

struct FourierPerturbation {
    struct Mode {
        int m = 1;
        double a = 0;
        double b = 0;
    };
    double a0 = 0;
    std::vector<Mode> modes;
};

namespace detail {

// Eighth-order centered finite differences of uniformly sampled values;
// periodic wrap when the grid covers whole periods (first and last samples
// agree), fourth-order one-sided stencils near the ends otherwise.
inline std::vector<double> differentiate_samples(
    const std::vector<double>& f, double h, bool periodic) {
    const std::size_t n = f.size();
    std::vector<double> out(n, 0.0);
    if (n < 9) throw DomainError("differentiate_samples: too few samples");
    const auto at = [&](std::ptrdiff_t i) -> double {
        if (periodic) {
            // grid of n-1 distinct points, f[0] == f[n-1]
            const std::ptrdiff_t m = static_cast<std::ptrdiff_t>(n) - 1;
            std::ptrdiff_t j = i % m;
            if (j < 0) j += m;
            return f[static_cast<std::size_t>(j)];
        }
        return f[static_cast<std::size_t>(i)];
    };
    for (std::size_t i = 0; i < n; ++i) {
        const auto ii = static_cast<std::ptrdiff_t>(i);
        if (periodic || (i >= 4 && i + 4 < n)) {
            out[i] = (0.8 * (at(ii + 1) - at(ii - 1)) -
                      0.2 * (at(ii + 2) - at(ii - 2)) +
                      (4.0 / 105.0) * (at(ii + 3) - at(ii - 3)) -
                      (1.0 / 280.0) * (at(ii + 4) - at(ii - 4))) /
                     h;
        } else if (i < 4) {
            out[i] = (-25.0 * at(ii) + 48.0 * at(ii + 1) - 36.0 * at(ii + 2) +
                      16.0 * at(ii + 3) - 3.0 * at(ii + 4)) /
                     (12.0 * h);
        } else {
            out[i] = (25.0 * at(ii) - 48.0 * at(ii - 1) + 36.0 * at(ii - 2) -
                      16.0 * at(ii - 3) + 3.0 * at(ii - 4)) /
                     (12.0 * h);
        }
    }
    return out;
}

} // namespace detail

// Max norm of the Euler-Lagrange defect B_ss - 2 B^{-2} + B/R^2 - C1/2 over
// the profile, with B_ss estimated from the sampled B_s.
inline double extremal_residual(const CurvatureProfile& profile) {
    const std::size_t n = profile.samples.size();
    if (n < 5) throw DomainError("extremal_residual: profile too short");
    const double h = profile.samples[1].s - profile.samples[0].s;
    std::vector<double> bs(n);
    for (std::size_t i = 0; i < n; ++i) bs[i] = profile.samples[i].B_s;
    const bool periodic =
        std::abs(profile.samples.front().B - profile.samples.back().B) <
            1e-6 &&
        std::abs(bs.front() - bs.back()) < 1e-6;
    const std::vector<double> bss =
        detail::differentiate_samples(bs, h, periodic);
    const double R2 = profile.params.R * profile.params.R;
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double B = profile.samples[i].B;
        const double defect =
            bss[i] - 2.0 / (B * B) + B / R2 - 0.5 * profile.params.C1;
        worst = std::max(worst, std::abs(defect));
    }
    return worst;
}

// Closed-form second variation of the invariant arc length about the
// circle with B^3 = 2 R^2:
//   -(2^{5/6} sqrt 6 / (6R)) (a0^2 pi + pi sum (m^2-2)(m^2-1)(a_m^2+b_m^2)).
// Zero exactly on the m = 1 modes (the Killing directions).
inline double circle_second_variation(double R,
                                      const FourierPerturbation& pert) {
    if (!(R > 0)) throw DomainError("circle_second_variation: R > 0 required");
    double sum = pert.a0 * pert.a0;
    for (const auto& mode : pert.modes) {
        if (mode.m < 1)
            throw DomainError("circle_second_variation: mode index m >= 1");
        const double m2 = static_cast<double>(mode.m) * mode.m;
        sum += (m2 - 2.0) * (m2 - 1.0) * (mode.a * mode.a + mode.b * mode.b);
    }
    return -(std::pow(2.0, 5.0 / 6.0) * std::sqrt(6.0) / (6.0 * R)) * M_PI *
           sum;
}

// Second variation along a critical profile by quadrature of
// (R^{1/3}/3) \int (P2 U_ss^2 + P1 U_s^2 + P0 U^2) ds.  The sampled U is
// least-squares projected onto at most 64 Fourier modes of the profile's
// total length; derivatives are taken spectrally.
inline double second_variation_quadrature(const CurvatureProfile& profile,
                                          const std::vector<double>& U) {
    if (U.size() != profile.samples.size())
        throw DomainError(
            "second_variation_quadrature: U must be sampled on the profile grid");
    if (extremal_residual(profile) > 1e-8)
        throw NotCritical(
            "second_variation_quadrature: profile is not a critical point");
    const std::size_t M = profile.samples.size() - 1; // distinct grid points
    if (M < 8) throw DomainError("second_variation_quadrature: grid too small");
    const double h = profile.samples[1].s - profile.samples[0].s;
    const double L = static_cast<double>(M) * h;
    const std::size_t K = std::min<std::size_t>(64, (M - 1) / 2);

    std::vector<double> ca(K + 1, 0.0), cb(K + 1, 0.0);
    for (std::size_t k = 0; k <= K; ++k) {
        double sa = 0.0, sb = 0.0;
        for (std::size_t i = 0; i < M; ++i) {
            const double ang = 2.0 * M_PI * static_cast<double>(k) *
                               static_cast<double>(i) / static_cast<double>(M);
            sa += U[i] * std::cos(ang);
            sb += U[i] * std::sin(ang);
        }
        ca[k] = 2.0 * sa / static_cast<double>(M);
        cb[k] = 2.0 * sb / static_cast<double>(M);
    }

    const double R = profile.params.R;
    const double R2 = R * R;
    double integral = 0.0;
    for (std::size_t i = 0; i < M; ++i) {
        double u = 0.5 * ca[0], us = 0.0, uss = 0.0;
        for (std::size_t k = 1; k <= K; ++k) {
            const double w = 2.0 * M_PI * static_cast<double>(k) / L;
            const double ang = 2.0 * M_PI * static_cast<double>(k) *
                               static_cast<double>(i) / static_cast<double>(M);
            const double c = std::cos(ang), s = std::sin(ang);
            u += ca[k] * c + cb[k] * s;
            us += w * (-ca[k] * s + cb[k] * c);
            uss += -w * w * (ca[k] * c + cb[k] * s);
        }
        const double B = profile.samples[i].B;
        const double Bs = profile.samples[i].B_s;
        const double sqB = std::sqrt(B);
        const double B52 = B * B * sqB;
        const double P0 = B52 / (R2 * R2) - 2.5 * sqB * Bs * Bs / R2 -
                          9.0 / (sqB * R2) - 2.0 * Bs * Bs / (B * B * sqB) +
                          2.0 / (B * B * B * sqB);
        const double P1 = 4.0 * B52 / (3.0 * R2) + 10.0 / (3.0 * sqB);
        const double P2 = -2.0 * B52 / 3.0;
        integral += (P2 * uss * uss + P1 * us * us + P0 * u * u) * h;
    }
    return std::cbrt(R) / 3.0 * integral;
}

// Mode coefficient of the area-preserving second variation, z = B^3/R^2.
inline double area_preserving_Q(int m, double z) {
    if (m < 1) throw DomainError("area_preserving_Q: m >= 1 (a0 is excluded)");
    const double m2 = static_cast<double>(m) * m;
    const double m4 = m2 * m2;
    return (2.0 * m4 - 4.0 * m2 - 3.0) * z * z +
           (4.0 * m4 - 14.0 * m2 + 27.0) * z + (2.0 * m4 - 10.0 * m2 - 6.0);
}

inline double min_Q_over_modes(double z, int m_max = 50) {
    double worst = area_preserving_Q(1, z);
    for (int m = 2; m <= m_max; ++m)
        worst = std::min(worst, area_preserving_Q(m, z));
    return worst;
}

// z-window on which every mode coefficient is nonnegative.
inline std::pair<double, double> stability_window() { return {7.0 / 5.0, 2.0}; }

} // namespace eca
