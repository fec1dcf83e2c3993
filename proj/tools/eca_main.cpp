// Command-line front end: progression angles, admissibility boundary,
// closure search, curve tracing, stability checks, and the isoparametric
// classification table.  Exit codes: 0 success, 2 domain/precondition
// error, 3 numerical failure.

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "eca/angle.hpp"
#include "eca/classify.hpp"
#include "eca/cubic.hpp"
#include "eca/io.hpp"
#include "eca/stability.hpp"
#include "eca/svg.hpp"
#include "eca/trace.hpp"

namespace {

void deliver(const std::string& content, const std::string& out_path) {
    if (out_path.empty())
        std::cout << content;
    else
        eca::atomic_write(out_path, content);
}

std::string angle_json_entry(const eca::AngleResult& r, int indent) {
    eca::JsonObject obj;
    obj.field("lambda_theta", r.lambda_theta)
        .field("period", r.period_T)
        .field("method", std::string(eca::to_string(r.method)))
        .field("error_estimate", r.error_estimate);
    return obj.str(indent);
}

eca::AngleResult angle_by_method(const eca::CurveParams& p,
                                 const std::string& method) {
    if (method == "quad") return eca::angle_quadrature(p);
    if (method == "elliptic") return eca::angle_elliptic(p);
    if (method == "series") return eca::angle_series_large_C2(p);
    throw eca::DomainError("unknown method: " + method);
}

int run_domain(double R, double c1_min, double c1_max, int steps,
               const std::string& out) {
    if (steps < 2) throw eca::DomainError("domain: steps >= 2");
    const auto values = eca::parallel_map(
        static_cast<std::size_t>(steps), [&](std::size_t i) {
            const double c1 =
                c1_min + (c1_max - c1_min) * static_cast<double>(i) / (steps - 1);
            return std::pair<double, double>(
                c1, eca::admissible_lower_bound(c1, R));
        });
    eca::CsvWriter csv({"C1", "D_C2"});
    for (const auto& [c1, d] : values) csv.row({c1, d});
    deliver(csv.str(), out);
    return 0;
}

int run_angle(const eca::CurveParams& p, const std::string& method,
              const std::string& out) {
    std::string content;
    if (method == "all") {
        std::vector<std::string> entries;
        entries.push_back(angle_json_entry(eca::angle_quadrature(p), 2));
        entries.push_back(angle_json_entry(eca::angle_elliptic(p), 2));
        if (p.C1 == 0.0 && p.R == 1.0 &&
            p.C2 > std::cbrt(6.0 * std::sqrt(3.0)) *
                       std::cbrt(6.0 * std::sqrt(3.0)))
            entries.push_back(angle_json_entry(eca::angle_series_large_C2(p), 2));
        content = "{\n  \"results\": " + eca::JsonObject::array(entries, 2) +
                  "\n}\n";
    } else {
        content = angle_json_entry(angle_by_method(p, method), 0) + "\n";
    }
    deliver(content, out);
    return 0;
}

int run_sweep(double R, double C1, double c2_min, double c2_max, int steps,
              const std::string& method, const std::string& out) {
    if (steps < 2) throw eca::DomainError("sweep: steps >= 2");
    const auto values = eca::parallel_map(
        static_cast<std::size_t>(steps), [&](std::size_t i) {
            const double c2 =
                c2_min + (c2_max - c2_min) * static_cast<double>(i) / (steps - 1);
            const eca::CurveParams p{R, C1, c2};
            const double lam = (method == "quad")
                                   ? eca::angle_quadrature(p).lambda_theta
                                   : eca::angle_elliptic(p).lambda_theta;
            return std::pair<double, double>(c2, lam);
        });
    eca::CsvWriter csv({"C2", "lambda_theta"});
    for (const auto& [c2, lam] : values) csv.row({c2, lam});
    deliver(csv.str(), out);
    return 0;
}

int run_closure(int p, int q, double C1, double R, int spp,
                const std::string& out) {
    const eca::CurveParams params = eca::closure_search(p, q, C1, R);
    const double T = eca::period(params);
    const eca::CurvatureProfile profile =
        eca::integrate_profile(params, q, T / spp);
    const eca::SphereTrace trace = eca::trace_curve(profile, q);
    eca::JsonObject obj;
    obj.field("p", p)
        .field("q", q)
        .field("C1", C1)
        .field("R", R)
        .field("C2", params.C2)
        .field("lambda_theta", eca::angle_elliptic(params).lambda_theta)
        .field("target", 2.0 * M_PI * p / q)
        .field("period", T)
        .field("winding_theta", trace.winding_theta)
        .field("closure_gap", trace.closure_gap)
        .field("rotation_index", eca::rotation_index(trace))
        .field("first_integral_residual", profile.first_integral_residual);
    deliver(obj.str(0) + "\n", out);
    return 0;
}

int run_trace(int p, int q, double C1, double R, int spp,
              const std::string& format, const std::string& out,
              double azimuth, double elevation) {
    const eca::CurveParams params = eca::closure_search(p, q, C1, R);
    const double T = eca::period(params);
    const eca::CurvatureProfile profile =
        eca::integrate_profile(params, q, T / spp);
    const eca::SphereTrace trace = eca::trace_curve(profile, q);
    if (format == "csv") {
        eca::CsvWriter csv({"s", "x", "y", "z", "B", "kappa_g"});
        for (const auto& smp : trace.samples)
            csv.row({smp.s, smp.x.x, smp.x.y, smp.x.z, smp.B,
                     1.0 / (smp.B * std::sqrt(smp.B))});
        deliver(csv.str(), out);
    } else if (format == "json") {
        std::vector<std::string> rows;
        rows.reserve(trace.samples.size());
        for (const auto& smp : trace.samples) {
            rows.push_back(
                "[" + eca::format_double(smp.s) + ", " +
                eca::format_double(smp.x.x) + ", " +
                eca::format_double(smp.x.y) + ", " +
                eca::format_double(smp.x.z) + ", " +
                eca::format_double(smp.B) + "]");
        }
        eca::JsonObject obj;
        obj.field("C2", params.C2)
            .field("winding_theta", trace.winding_theta)
            .field("closure_gap", trace.closure_gap)
            .field("rotation_index", eca::rotation_index(trace))
            .field_raw("samples", eca::JsonObject::array(rows, 2));
        deliver(obj.str(0) + "\n", out);
    } else if (format == "svg") {
        eca::ViewSpec view;
        view.azimuth_deg = azimuth;
        view.elevation_deg = elevation;
        deliver(eca::render_svg(trace, view), out);
    } else {
        throw eca::DomainError("trace: unknown format " + format);
    }
    return 0;
}

int run_stability(double R, const std::string& modes,
                  std::optional<double> z, int m_max,
                  const std::string& out) {
    eca::JsonObject obj;
    if (z.has_value()) {
        const double min_q = eca::min_Q_over_modes(*z, m_max);
        const auto window = eca::stability_window();
        obj.field("z", *z)
            .field("value", min_q)
            .field("stable", min_q >= 0.0)
            .field("window_lo", window.first)
            .field("window_hi", window.second);
    } else {
        if (modes.empty())
            throw eca::DomainError("stability: provide --modes or --z");
        std::vector<double> vals;
        std::stringstream ss(modes);
        std::string tok;
        while (std::getline(ss, tok, ',')) vals.push_back(std::stod(tok));
        if (vals.empty() || vals.size() % 2 == 0)
            throw eca::DomainError(
                "stability: modes must be a0,a1,b1,...,am,bm");
        eca::FourierPerturbation pert;
        pert.a0 = vals[0];
        for (std::size_t i = 1; i + 1 < vals.size(); i += 2)
            pert.modes.push_back({static_cast<int>((i + 1) / 2), vals[i],
                                  vals[i + 1]});
        const double value = eca::circle_second_variation(R, pert);
        obj.field("value", value).field("stable", value <= 0.0);
    }
    deliver(obj.str(0) + "\n", out);
    return 0;
}

int run_classify(int n_max, const std::string& format,
                 const std::string& out) {
    const auto rows = eca::classify_all(n_max);
    if (format == "json") {
        std::vector<std::string> entries;
        for (const auto& row : rows) {
            std::string mults = "[";
            for (std::size_t i = 0; i < row.mults.size(); ++i) {
                if (i) mults += ", ";
                mults += std::to_string(row.mults[i]);
            }
            mults += "]";
            std::string curv = "[";
            for (std::size_t i = 0; i < row.curvatures.size(); ++i) {
                if (i) curv += ", ";
                curv += eca::format_double(row.curvatures[i]);
            }
            curv += "]";
            eca::JsonObject obj;
            obj.field("g", row.g)
                .field("n", row.n)
                .field_raw("multiplicities", mults)
                .field_raw("curvatures", curv)
                .field("residual", row.residual)
                .field("eligible", row.eligible)
                .field("note", row.note);
            entries.push_back(obj.str(2));
        }
        deliver("{\n  \"rows\": " + eca::JsonObject::array(entries, 2) +
                    "\n}\n",
                out);
    } else {
        std::ostringstream text;
        char line[256];
        std::snprintf(line, sizeof(line), "%2s %3s  %-12s %-44s %-10s %s\n",
                      "g", "n", "mults", "curvatures", "residual", "note");
        text << line;
        for (const auto& row : rows) {
            std::string mults, curv;
            for (std::size_t i = 0; i < row.mults.size(); ++i)
                mults += (i ? "+" : "") + std::to_string(row.mults[i]);
            for (std::size_t i = 0; i < row.curvatures.size(); ++i) {
                char c[24];
                std::snprintf(c, sizeof(c), "%.6g", row.curvatures[i]);
                curv += (i ? "," : "") + std::string(c);
            }
            std::snprintf(line, sizeof(line), "%2d %3d  %-12s %-44s %-10.2e %s%s\n",
                          row.g, row.n, mults.c_str(), curv.c_str(),
                          row.residual, row.eligible ? "" : "[excluded] ",
                          row.note.c_str());
            text << line;
        }
        deliver(text.str(), out);
    }
    return 0;
}

int run_series_compare(double c2_min, double c2_max, int steps,
                       const std::string& out) {
    if (steps < 2) throw eca::DomainError("series-compare: steps >= 2");
    eca::CsvWriter csv({"C2", "quad", "elliptic", "series4", "asymptotic"});
    for (int i = 0; i < steps; ++i) {
        const double c2 = c2_min + (c2_max - c2_min) * i / (steps - 1.0);
        const eca::CurveParams p{1.0, 0.0, c2};
        csv.row({c2, eca::angle_quadrature(p).lambda_theta,
                 eca::angle_elliptic(p).lambda_theta,
                 eca::angle_series_partial_sum(p, 4),
                 eca::angle_series_large_C2(p).lambda_theta});
    }
    deliver(csv.str(), out);
    return 0;
}

int run_isoperimetric(std::optional<double> psi, int count,
                      const std::string& out) {
    if (psi.has_value()) {
        const auto pair = eca::isoperimetric_check(*psi);
        eca::JsonObject obj;
        obj.field("psi", *psi).field("lhs", pair.lhs).field("rhs", pair.rhs);
        deliver(obj.str(0) + "\n", out);
    } else {
        eca::CsvWriter csv({"psi", "lhs", "rhs"});
        for (int i = 1; i <= count; ++i) {
            const double ps = 0.5 * M_PI * i / (count + 1.0);
            const auto pair = eca::isoperimetric_check(ps);
            csv.row({ps, pair.lhs, pair.rhs});
        }
        deliver(csv.str(), out);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"extremal curves and hypersurfaces of spheres in "
                 "equi-centro-affine geometry"};
    app.require_subcommand(1);
    app.set_config("--config");

    std::string out;
    double R = 1.0, C1 = 0.0, C2 = 6.0;
    double c1_min = -5.0, c1_max = 5.0, c2_min = 5.0, c2_max = 20.0;
    int steps = 101, p = 2, q = 3, spp = 4000, n_max = 24, m_max = 50;
    int count = 100;
    std::string method = "elliptic", format = "csv", modes;
    double azimuth = 40.0, elevation = 25.0;
    std::optional<double> z, psi;

    auto* domain = app.add_subcommand("domain", "admissibility boundary CSV");
    domain->add_option("--R", R);
    domain->add_option("--C1-min", c1_min);
    domain->add_option("--C1-max", c1_max);
    domain->add_option("--steps", steps);
    domain->add_option("--out", out);

    auto* angle = app.add_subcommand("angle", "progression angle of one period");
    angle->add_option("--R", R);
    angle->add_option("--C1", C1);
    angle->add_option("--C2", C2);
    angle->add_option("--method", method)
        ->check(CLI::IsMember({"quad", "elliptic", "series", "all"}));
    angle->add_option("--out", out);

    auto* sweep = app.add_subcommand("sweep", "angle as a function of C2, CSV");
    sweep->add_option("--R", R);
    sweep->add_option("--C1", C1);
    sweep->add_option("--C2-min", c2_min)->required();
    sweep->add_option("--C2-max", c2_max)->required();
    sweep->add_option("--steps", steps);
    sweep->add_option("--method", method)
        ->check(CLI::IsMember({"quad", "elliptic"}));
    sweep->add_option("--out", out);

    auto* closure = app.add_subcommand("closure", "find C2 closing in q periods");
    closure->add_option("--p", p)->required();
    closure->add_option("--q", q)->required();
    closure->add_option("--C1", C1);
    closure->add_option("--R", R);
    closure->add_option("--samples-per-period", spp);
    closure->add_option("--out", out);

    auto* trace = app.add_subcommand("trace", "reconstruct the closed curve");
    trace->add_option("--p", p)->required();
    trace->add_option("--q", q)->required();
    trace->add_option("--C1", C1);
    trace->add_option("--R", R);
    trace->add_option("--samples-per-period", spp);
    trace->add_option("--format", format)
        ->check(CLI::IsMember({"csv", "json", "svg"}));
    trace->add_option("--azimuth", azimuth);
    trace->add_option("--elevation", elevation);
    trace->add_option("--out", out);

    auto* stability = app.add_subcommand("stability", "second-variation checks");
    stability->add_option("--R", R);
    stability->add_option("--modes", modes);
    stability->add_option("--z", z);
    stability->add_option("--m-max", m_max);
    stability->add_option("--out", out);

    auto* classify = app.add_subcommand("classify", "isoparametric table");
    classify->add_option("--n-max", n_max);
    classify->add_option("--format", format)
        ->check(CLI::IsMember({"csv", "json", "text"}));
    classify->add_option("--out", out);

    auto* series = app.add_subcommand("series-compare",
                                      "angle routes side by side, CSV");
    series->add_option("--C2-min", c2_min);
    series->add_option("--C2-max", c2_max);
    series->add_option("--steps", steps);
    series->add_option("--out", out);

    auto* isoper = app.add_subcommand("isoperimetric",
                                      "circle equality case of the "
                                      "isoperimetric identity");
    isoper->add_option("--psi", psi);
    isoper->add_option("--count", count);
    isoper->add_option("--out", out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (domain->parsed())
            return run_domain(R, c1_min, c1_max, steps, out);
        if (angle->parsed()) return run_angle({R, C1, C2}, method, out);
        if (sweep->parsed())
            return run_sweep(R, C1, c2_min, c2_max, steps, method, out);
        if (closure->parsed()) return run_closure(p, q, C1, R, spp, out);
        if (trace->parsed())
            return run_trace(p, q, C1, R, spp, format, out, azimuth,
                             elevation);
        if (stability->parsed())
            return run_stability(R, modes, z, m_max, out);
        if (classify->parsed())
            return run_classify(n_max,
                                format == "csv" ? "text" : format, out);
        if (series->parsed())
            return run_series_compare(c2_min, c2_max, steps, out);
        if (isoper->parsed()) return run_isoperimetric(psi, count, out);
    } catch (const eca::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const eca::NumericalError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
