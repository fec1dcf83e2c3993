#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "eca/errors.hpp"

// Elementary-symmetric calculus on principal-curvature spectra and the
// enumeration of compact isoparametric extremal hypersurfaces of the unit
// sphere under the constant-S_n extremality condition
//
//   S_{n-1} - (n+1) S_n S_1 = 0.
//
// Isoparametric spectra have g in {1, 2, 3, 4, 6} distinct curvatures
// k_alpha = cot(theta + (alpha-1) pi / g) for some theta in (0, pi/g).
// Eligibility requires S_n != 0, and S_n > 0 when n is even.

namespace eca {

struct SpectrumEntry {
    double k = 0;
    int mult = 1;
};

struct PrincipalSpectrum {
    std::vector<SpectrumEntry> entries; // curvatures strictly decreasing

    int g() const { return static_cast<int>(entries.size()); }
    int n() const {
        int sum = 0;
        for (const auto& e : entries) sum += e.mult;
        return sum;
    }
};

// r-th elementary symmetric function of the curvature multiset, via the
// generating polynomial prod (1 + k_i t)^{mult_i}.
inline double elem_sym(const PrincipalSpectrum& spec, int r) {
    const int n = spec.n();
    if (r < 0 || r > n) throw DomainError("elem_sym: index out of range");
    std::vector<double> coeff{1.0};
    coeff.reserve(static_cast<std::size_t>(n) + 1);
    for (const auto& e : spec.entries) {
        for (int j = 0; j < e.mult; ++j) {
            coeff.push_back(0.0);
            for (std::size_t i = coeff.size() - 1; i >= 1; --i)
                coeff[i] += e.k * coeff[i - 1];
        }
    }
    return coeff[static_cast<std::size_t>(r)];
}

// Extremality defect S_{n-1} - (n+1) S_n S_1 for constant-S_n hypersurfaces
// of the unit sphere.
inline double extremal_residual_iso(const PrincipalSpectrum& spec) {
    const int n = spec.n();
    return elem_sym(spec, n - 1) -
           (n + 1.0) * elem_sym(spec, n) * elem_sym(spec, 1);
}

inline PrincipalSpectrum spectrum_from_theta(int g,
                                             const std::vector<int>& mults,
                                             double theta) {
    if (g < 1 || static_cast<int>(mults.size()) != g)
        throw DomainError("spectrum_from_theta: need one multiplicity per curvature");
    PrincipalSpectrum spec;
    spec.entries.reserve(static_cast<std::size_t>(g));
    for (int alpha = 0; alpha < g; ++alpha) {
        const double ang = theta + alpha * M_PI / g;
        spec.entries.push_back({std::cos(ang) / std::sin(ang), mults[alpha]});
    }
    return spec;
}

// Nondegeneracy requires S_n != 0, i.e. no vanishing curvature; for even n
// the sign of S_n must be positive.  The sign is taken structurally from
// the curvature signs, since the product itself underflows for large n.
inline bool spectrum_eligible(const PrincipalSpectrum& spec) {
    double kmax = 0.0;
    for (const auto& e : spec.entries) kmax = std::max(kmax, std::abs(e.k));
    int sign = 1;
    for (const auto& e : spec.entries) {
        if (std::abs(e.k) < 1e-9 * std::max(kmax, 1.0)) return false;
        if (e.k < 0 && e.mult % 2 != 0) sign = -sign;
    }
    if (spec.n() % 2 == 0 && sign < 0) return false;
    return true;
}

// All theta in (0, pi/g) whose cot-progression spectrum satisfies the
// extremality condition and the eligibility constraints, found by sign
// scanning on a 10^4-point grid followed by bisection.
inline std::vector<double> solve_theta(int g, const std::vector<int>& mults) {
    const int grid = 10000;
    const double hi = M_PI / g;
    const auto f = [&](double th) {
        return extremal_residual_iso(spectrum_from_theta(g, mults, th));
    };
    std::vector<double> roots;
    double prev_th = hi / grid;
    double prev_f = f(prev_th);
    for (int j = 2; j < grid; ++j) {
        const double th = hi * j / grid;
        const double fj = f(th);
        if (prev_f == 0.0) {
            roots.push_back(prev_th);
        } else if (prev_f * fj < 0.0) {
            double lo_th = prev_th, hi_th = th;
            double lo_f = prev_f;
            for (int it = 0; it < 80; ++it) {
                const double mid = 0.5 * (lo_th + hi_th);
                const double fm = f(mid);
                if (lo_f * fm <= 0.0)
                    hi_th = mid;
                else {
                    lo_th = mid;
                    lo_f = fm;
                }
            }
            roots.push_back(0.5 * (lo_th + hi_th));
        }
        prev_th = th;
        prev_f = fj;
    }
    std::vector<double> eligible;
    for (double th : roots)
        if (spectrum_eligible(spectrum_from_theta(g, mults, th)))
            eligible.push_back(th);
    return eligible;
}

struct CliffordRadii {
    double r1 = 0;
    double r2 = 0;
    int sn_sign = 1; // sign of S_n = (-1)^{n-m}
};

// Product-of-spheres radii for the g = 2 family,
//   S^m(sqrt((m+1)/(n+2))) x S^{n-m}(sqrt((n+1-m)/(n+2))).
// When n = 2m the multiplicity m must be even.
inline CliffordRadii clifford_radii(int n, int m) {
    if (m < 1 || m > n - 1)
        throw DomainError("clifford_radii: require 1 <= m <= n-1");
    if (n == 2 * m && m % 2 != 0)
        throw IneligibleParity("clifford_radii: n = 2m requires even m");
    CliffordRadii out;
    out.r1 = std::sqrt((m + 1.0) / (n + 2.0));
    out.r2 = std::sqrt((n + 1.0 - m) / (n + 2.0));
    out.sn_sign = ((n - m) % 2 == 0) ? 1 : -1;
    return out;
}

// Pointwise integrand of the pinching argument,
//   sum_i mult_i (1 - (n+1) k_i^2) / k_i,
// which vanishes exactly at the umbilic value k_i = 1/sqrt(n+1).
inline double pinching_sign(const PrincipalSpectrum& spec) {
    const int n = spec.n();
    double sum = 0.0;
    for (const auto& e : spec.entries) {
        if (std::abs(e.k) < 1e-12)
            throw ZeroCurvature("pinching_sign: zero principal curvature");
        sum += e.mult * (1.0 - (n + 1.0) * e.k * e.k) / e.k;
    }
    return sum;
}

struct ClassificationRow {
    int g = 0;
    int n = 0;
    std::vector<int> mults;
    std::vector<double> curvatures; // distinct values, decreasing
    double residual = 0;
    bool eligible = true;
    std::string note;
};

namespace detail {

// Number of integers 1 <= s <= l with s = 0, 1, 2, 4 mod 8.
inline int clifford_phi(int l) {
    int count = 0;
    for (int s = 1; s <= l; ++s) {
        const int r = s % 8;
        if (r == 0 || r == 1 || r == 2 || r == 4) ++count;
    }
    return count;
}

inline ClassificationRow row_from_spectrum(const PrincipalSpectrum& spec,
                                           std::string note) {
    ClassificationRow row;
    row.g = spec.g();
    row.n = spec.n();
    for (const auto& e : spec.entries) {
        row.mults.push_back(e.mult);
        row.curvatures.push_back(e.k);
    }
    row.residual = extremal_residual_iso(spec);
    row.eligible = spectrum_eligible(spec);
    row.note = std::move(note);
    return row;
}

} // namespace detail

// Enumerates the isoparametric extremal spectra with dimension n <= n_max,
// one row per family member.  Ineligible catalogue entries (sign of S_n)
// are reported with a note rather than dropped.
inline std::vector<ClassificationRow> classify_all(int n_max) {
    if (n_max < 1) throw DomainError("classify_all: n_max >= 1");
    std::vector<ClassificationRow> rows;

    // g = 1: totally umbilic, k^2 = 1/(n+1), radius sqrt((n+1)/(n+2))
    for (int n = 1; n <= n_max; ++n) {
        PrincipalSpectrum spec;
        spec.entries.push_back({1.0 / std::sqrt(n + 1.0), n});
        rows.push_back(detail::row_from_spectrum(
            spec, "umbilic, radius sqrt(" + std::to_string(n + 1) + "/" +
                      std::to_string(n + 2) + ")"));
    }

    // g = 2: products of spheres, k1 = sqrt((n+1-m)/(m+1)), k2 = -1/k1
    for (int n = 2; n <= n_max; ++n) {
        for (int m = 1; m <= n - 1; ++m) {
            const double k1 = std::sqrt((n + 1.0 - m) / (m + 1.0));
            PrincipalSpectrum spec;
            spec.entries.push_back({k1, m});
            spec.entries.push_back({-1.0 / k1, n - m});
            std::string note = "S^" + std::to_string(m) + "(sqrt(" +
                               std::to_string(m + 1) + "/" +
                               std::to_string(n + 2) + ")) x S^" +
                               std::to_string(n - m) + "(sqrt(" +
                               std::to_string(n + 1 - m) + "/" +
                               std::to_string(n + 2) + "))";
            if (n % 2 == 0 && (n - m) % 2 != 0)
                note += "; excluded: S_n < 0 with n even";
            if (n == 2 * m && m % 2 != 0) note += " (n = 2m needs even m)";
            rows.push_back(detail::row_from_spectrum(spec, note));
        }
    }

    // g = 3: equal multiplicities 2^k, dimensions 3, 6, 12, 24
    for (int m : {1, 2, 4, 8}) {
        const int n = 3 * m;
        if (n > n_max) continue;
        const std::vector<int> mults{m, m, m};
        const std::vector<double> thetas = solve_theta(3, mults);
        if (thetas.empty()) continue;
        rows.push_back(detail::row_from_spectrum(
            spectrum_from_theta(3, mults, thetas.front()),
            "k1^2 k2^2 k3^2 = 1/" + std::to_string(n + 1)));
    }

    // g = 4: catalogue pairs (m1, m2); extremality forces S_1 = 0 with
    // A B = -4, and S_n > 0 forces m1 + m2 even, leaving (2, 2) with n = 8.
    {
        std::vector<std::pair<int, int>> candidates{{2, 2}, {4, 5}};
        for (int m1 = 2; 2 * (m1 + 1) <= n_max; ++m1) {
            for (int m2 = 1; 2 * (m1 + m2) <= n_max; ++m2) {
                if ((m1 == 2 && m2 == 2) || (m1 == 4 && m2 == 5)) continue;
                const int phi = detail::clifford_phi(m1 - 1);
                if ((m1 + m2 + 1) % (1 << phi) == 0)
                    candidates.emplace_back(m1, m2);
            }
        }
        for (const auto& [m1, m2] : candidates) {
            const int n = 2 * (m1 + m2);
            if (n > n_max) continue;
            if ((m1 + m2) % 2 != 0) continue; // S_n = (-1)^{m1+m2} < 0
            // S_1 = 0 at tan^2(2 theta) = m1/m2
            const double theta =
                0.5 * std::atan(std::sqrt(static_cast<double>(m1) / m2));
            rows.push_back(detail::row_from_spectrum(
                spectrum_from_theta(4, {m1, m2, m1, m2}, theta),
                "curvatures {1+sqrt2, sqrt2-1, 1-sqrt2, -(1+sqrt2)}"));
        }
    }

    // g = 6: all multiplicities 1 (n = 6) or 2 (n = 12); S_1 = 0 at
    // theta = pi/12 so k1 = 2 + sqrt 3.  n = 6 fails the S_n > 0 test.
    for (int m : {1, 2}) {
        const int n = 6 * m;
        if (n > n_max) continue;
        const std::vector<int> mults(6, m);
        const double theta = M_PI / 12.0;
        PrincipalSpectrum spec = spectrum_from_theta(6, mults, theta);
        std::string note = "curvatures {2+sqrt3, 1, 2-sqrt3, -(2-sqrt3), -1, -(2+sqrt3)}";
        if (!spectrum_eligible(spec)) note += "; excluded: S_6 = -1 < 0";
        rows.push_back(detail::row_from_spectrum(spec, note));
    }

    return rows;
}

} // namespace eca
