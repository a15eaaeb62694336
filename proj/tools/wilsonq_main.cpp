#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "wilsonq/errors.hpp"
#include "wilsonq/operators.hpp"
#include "wilsonq/reconstruct.hpp"
#include "wilsonq/sampling.hpp"
#include "wilsonq/system.hpp"
#include "wilsonq/verify.hpp"
#include "wilsonq/wilson.hpp"

namespace {

using namespace wilsonq;

struct Options {
    double lambda = 0.2;
    double mu = 0.8;
    double nu = 0.3;
    double a = 0.6;
    double b = 0.5;
    int n_max = 20;
    int m_max = 0;
    double grid_min = std::numeric_limits<double>::quiet_NaN();
    double grid_max = std::numeric_limits<double>::quiet_NaN();
    int grid_points = 401;
    double y_min = 0.05;
    double y_max = 5.0;
    int y_points = 500;
    std::string method = "both";
    bool physical = false;
    std::string output;
    std::string format = "csv";
    double tolerance = 0.0;
    std::string only;
    bool inject_zero = false;

    CLI::Option* m_max_opt = nullptr;
    CLI::Option* tolerance_opt = nullptr;
    CLI::Option* only_opt = nullptr;
};

// Shortest representation that round-trips, never locale dependent.
std::string fmt(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string fmt_fixed(double v, const char* spec = "%.6g") {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

// Output is assembled fully in memory and written in one shot so a failure
// never leaves a partial file behind.
void write_sink(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw validation_error("cannot open output file: " + path);
    out << content;
    out.flush();
    if (!out) throw validation_error("failed writing output file: " + path);
}

struct Series {
    std::string label;
    std::string color;
    std::vector<std::pair<double, std::optional<double>>> pts;
};

std::string render_svg(const std::string& title, const std::vector<Series>& series) {
    const double W = 800, H = 500, L = 70, R = 25, T = 40, B = 55;
    double x_lo = std::numeric_limits<double>::infinity(), x_hi = -x_lo;
    double y_lo = x_lo, y_hi = -x_lo;
    for (const auto& s : series)
        for (const auto& [x, v] : s.pts)
            if (v && std::isfinite(*v)) {
                x_lo = std::min(x_lo, x);
                x_hi = std::max(x_hi, x);
                y_lo = std::min(y_lo, *v);
                y_hi = std::max(y_hi, *v);
            }
    if (!(x_lo <= x_hi)) { x_lo = 0; x_hi = 1; y_lo = 0; y_hi = 1; }
    if (x_lo == x_hi) { x_lo -= 1; x_hi += 1; }
    if (y_lo == y_hi) { y_lo -= 1; y_hi += 1; }
    auto px = [&](double x) { return L + (x - x_lo) / (x_hi - x_lo) * (W - L - R); };
    auto py = [&](double y) { return H - B - (y - y_lo) / (y_hi - y_lo) * (H - T - B); };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"500\" "
           "viewBox=\"0 0 800 500\">\n";
    svg += "<rect x=\"0\" y=\"0\" width=\"800\" height=\"500\" fill=\"white\"/>\n";
    svg += "<text x=\"400\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">" + title +
           "</text>\n";
    svg += "<rect x=\"" + fmt_fixed(L) + "\" y=\"" + fmt_fixed(T) + "\" width=\"" +
           fmt_fixed(W - L - R) + "\" height=\"" + fmt_fixed(H - T - B) +
           "\" fill=\"none\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + fmt_fixed(L) + "\" y=\"" + fmt_fixed(H - B + 18) +
           "\" font-size=\"12\">" + fmt_fixed(x_lo) + "</text>\n";
    svg += "<text x=\"" + fmt_fixed(W - R) + "\" y=\"" + fmt_fixed(H - B + 18) +
           "\" text-anchor=\"end\" font-size=\"12\">" + fmt_fixed(x_hi) + "</text>\n";
    svg += "<text x=\"" + fmt_fixed(L - 6) + "\" y=\"" + fmt_fixed(H - B) +
           "\" text-anchor=\"end\" font-size=\"12\">" + fmt_fixed(y_lo) + "</text>\n";
    svg += "<text x=\"" + fmt_fixed(L - 6) + "\" y=\"" + fmt_fixed(T + 12) +
           "\" text-anchor=\"end\" font-size=\"12\">" + fmt_fixed(y_hi) + "</text>\n";
    double legend_y = T + 16;
    for (const auto& s : series) {
        // Undefined points split the polyline rather than being interpolated.
        std::string run;
        auto flush = [&] {
            if (!run.empty())
                svg += "<polyline fill=\"none\" stroke=\"" + s.color +
                       "\" stroke-width=\"1.5\" points=\"" + run + "\"/>\n";
            run.clear();
        };
        for (const auto& [x, v] : s.pts) {
            if (v && std::isfinite(*v)) {
                if (!run.empty()) run += " ";
                run += fmt_fixed(px(x)) + "," + fmt_fixed(py(*v));
            } else {
                flush();
            }
        }
        flush();
        svg += "<text x=\"" + fmt_fixed(W - R - 8) + "\" y=\"" + fmt_fixed(legend_y) +
               "\" text-anchor=\"end\" font-size=\"12\" fill=\"" + s.color + "\">" + s.label +
               "</text>\n";
        legend_y += 16;
    }
    svg += "</svg>\n";
    return svg;
}

void emit(const Options& o, const std::string& csv, const std::string& title,
          const std::vector<Series>& series) {
    write_sink(o.output, o.format == "svg" ? render_svg(title, series) : csv);
}

wilson::WilsonParams make_wilson(const Options& o) {
    return wilson::WilsonParams(o.mu, o.nu, o.a, o.b);
}

int cmd_spectrum(const Options& o) {
    if (!(o.lambda > 0.0)) throw validation_error("lambda must be positive");
    std::vector<std::pair<int, double>> rows;
    bool figure_mode = !o.physical && o.m_max_opt->count() > 0;
    if (figure_mode) {
        if (o.m_max < 0) throw validation_error("m-max must be >= 0");
        for (int m = 0; m <= o.m_max; ++m)
            rows.emplace_back(m, system::level_energy(m, o.mu, o.lambda));
    } else {
        if (!o.physical && !(o.mu < 0.0))
            throw validation_error(
                "mu >= 0 supports no bound level; pass --m-max for the level sweep or "
                "--physical for the bound set");
        system::SystemParams p(o.lambda, make_wilson(o));
        for (const auto& s : system::bound_states(p)) rows.emplace_back(s.m, s.energy);
        if (rows.empty())
            std::cerr << "warning: no bound states for these parameters\n";
    }
    std::string csv = "m,E_m\n";
    Series s{"E_m", "#1f77b4", {}};
    for (const auto& [m, E] : rows) {
        csv += std::to_string(m) + "," + fmt(E) + "\n";
        s.pts.emplace_back(static_cast<double>(m), E);
    }
    emit(o, csv, "bound level energies", {s});
    return 0;
}

int cmd_phase_shift(const Options& o) {
    if (!(o.y_min > 0.0)) throw validation_error("y-min must be positive");
    if (!(o.y_max > o.y_min)) throw validation_error("y-max must exceed y-min");
    if (o.y_points < 2) throw validation_error("y-points must be at least 2");
    auto w = make_wilson(o);
    auto ys = sampling::linspace(o.y_min, o.y_max, o.y_points);
    auto deltas = sampling::unwrap_phase(sampling::sample_phase_shift(ys, w));
    std::string csv = "y,delta_over_pi\n";
    Series s{"delta/pi", "#1f77b4", {}};
    for (size_t i = 0; i < ys.size(); ++i) {
        double v = deltas[i] / std::numbers::pi;
        csv += fmt(ys[i]) + "," + fmt(v) + "\n";
        s.pts.emplace_back(ys[i], v);
    }
    emit(o, csv, "scattering phase shift over pi", {s});
    return 0;
}

operators::BandedMatrix reconstruct_input_matrix(const Options& o, int order) {
    if (o.inject_zero) return operators::BandedMatrix(order, {0, -1, 1, -2, 2}, true);
    auto H = operators::hamiltonian_matrix(order, o.lambda, o.mu, o.a);
    auto T = operators::kinetic_matrix(order, o.lambda);
    return operators::potential_matrix(H, T);
}

int cmd_reconstruct(const Options& o) {
    if (!(o.lambda > 0.0)) throw validation_error("lambda must be positive");
    if (o.n_max < 1) throw validation_error("n-max must be at least 1");
    if (o.grid_points < 2) throw validation_error("grid-points must be at least 2");
    double lo = std::isnan(o.grid_min) ? -8.0 / o.lambda : o.grid_min;
    double hi = std::isnan(o.grid_max) ? 8.0 / o.lambda : o.grid_max;
    reconstruct::Grid grid(lo, hi, o.grid_points);

    bool want_a = o.method == "14a" || o.method == "both";
    bool want_b = o.method == "14b" || o.method == "both";
    if (!want_a && !want_b)
        throw validation_error("method must be one of 14a, 14b, both");

    auto compute = [&](reconstruct::Method m, int order) {
        auto V = reconstruct_input_matrix(o, order);
        return reconstruct::full_potential_from_matrix(V, o.lambda, grid, m);
    };
    std::optional<reconstruct::ReconstructedPotential> ra, rb;
    if (want_a) ra = compute(reconstruct::Method::m14a, o.n_max);
    if (want_b) rb = compute(reconstruct::Method::m14b, o.n_max);

    // Convergence report: same grid at half the truncation order.
    int half = std::max(1, o.n_max / 2);
    auto report = [&](const reconstruct::ReconstructedPotential& full, reconstruct::Method m,
                      const char* label) {
        auto coarse = compute(m, half);
        double worst = 0.0;
        int shared = 0;
        for (size_t i = 0; i < full.values.size(); ++i)
            if (full.values[i] && coarse.values[i]) {
                worst = std::max(worst, std::abs(*full.values[i] - *coarse.values[i]));
                ++shared;
            }
        std::fprintf(stderr, "convergence %s: max |V_N - V_{N/2}| = %s over %d points (N=%d vs %d)\n",
                     label, fmt_fixed(worst, "%.6e").c_str(), shared, o.n_max, half);
    };
    if (ra) report(*ra, reconstruct::Method::m14a, "V_14a");
    if (rb) report(*rb, reconstruct::Method::m14b, "V_14b");

    std::string csv = "x,V_14a,V_14b\n";
    Series sa{"V_14a", "#1f77b4", {}}, sb{"V_14b", "#d62728", {}};
    for (int i = 0; i < grid.count; ++i) {
        double x = grid.point(i);
        std::string col_a, col_b;
        if (ra) {
            const auto& v = ra->values[static_cast<size_t>(i)];
            if (v) col_a = fmt(*v);
            sa.pts.emplace_back(x, v);
        }
        if (rb) {
            const auto& v = rb->values[static_cast<size_t>(i)];
            if (v) col_b = fmt(*v);
            sb.pts.emplace_back(x, v);
        }
        csv += fmt(x) + "," + col_a + "," + col_b + "\n";
    }
    std::vector<Series> series;
    if (ra) series.push_back(std::move(sa));
    if (rb) series.push_back(std::move(sb));
    emit(o, csv, "reconstructed potential", series);
    return 0;
}

int cmd_verify(const Options& o) {
    system::SystemParams p(o.lambda, make_wilson(o));
    verify::VerifyOptions vo;
    if (o.tolerance_opt->count() > 0) {
        if (o.tolerance < 0.0) throw validation_error("tolerance must be >= 0");
        vo.tolerance = o.tolerance;
    }
    if (o.only_opt->count() > 0) vo.only = o.only;
    auto reports = verify::run_verification(p, vo);
    std::string text;
    int passed = 0, counted = 0;
    for (const auto& r : reports) {
        char line[256];
        if (r.informational) {
            std::snprintf(line, sizeof line, "%-26s residual %.3e   (informational)\n",
                          r.name.c_str(), r.residual);
        } else {
            ++counted;
            passed += r.passed ? 1 : 0;
            std::snprintf(line, sizeof line, "%-26s residual %.3e   tolerance %.3e   %s\n",
                          r.name.c_str(), r.residual, r.tolerance, r.passed ? "PASS" : "FAIL");
        }
        text += line;
        if (!r.info.empty()) text += "    note: " + r.info + "\n";
    }
    text += "summary: " + std::to_string(passed) + "/" + std::to_string(counted) +
            " checks passed\n";
    write_sink(o.output, text);
    return passed == counted ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    Options o;
    CLI::App app{"Wilson-polynomial quantum system toolkit"};
    app.set_config("--config", "", "key=value configuration file; command-line flags win");
    // Tolerate unknown keys in config files without loosening command-line
    // parsing (the bool overload would also set allow_extras on the app).
    app.allow_config_extras(CLI::config_extras_mode::ignore_all);
    app.require_subcommand(1);

    auto add_params = [&](CLI::App* cmd) {
        cmd->add_option("--mu", o.mu, "Wilson parameter mu")->capture_default_str();
        cmd->add_option("--nu", o.nu, "Wilson parameter nu")->capture_default_str();
        cmd->add_option("--a", o.a, "Wilson parameter a")->capture_default_str();
        cmd->add_option("--b", o.b, "Wilson parameter b")->capture_default_str();
    };
    auto add_output = [&](CLI::App* cmd) {
        cmd->add_option("--output", o.output, "output path (stdout when omitted)");
        cmd->add_option("--format", o.format, "output format")
            ->check(CLI::IsMember({"csv", "svg"}))
            ->capture_default_str();
    };

    auto* spectrum = app.add_subcommand("spectrum", "bound level energies");
    spectrum->fallthrough();  // lets --config appear after the subcommand name
    spectrum->add_option("--lambda", o.lambda, "length scale parameter")->capture_default_str();
    add_params(spectrum);
    o.m_max_opt = spectrum->add_option(
        "--m-max", o.m_max, "evaluate the level formula for m = 0..m-max regardless of regime");
    spectrum->add_flag("--physical", o.physical,
                       "emit only levels satisfying the bound-state condition");
    add_output(spectrum);

    auto* phase = app.add_subcommand("phase-shift", "scattering phase shift sweep");
    phase->fallthrough();
    add_params(phase);
    phase->add_option("--y-min", o.y_min, "sweep start")->capture_default_str();
    phase->add_option("--y-max", o.y_max, "sweep end")->capture_default_str();
    phase->add_option("--y-points", o.y_points, "sample count")->capture_default_str();
    add_output(phase);

    auto* rec = app.add_subcommand("reconstruct", "numerical potential reconstruction");
    rec->fallthrough();
    rec->add_option("--lambda", o.lambda, "length scale parameter")->capture_default_str();
    add_params(rec);
    rec->add_option("--n-max", o.n_max, "basis truncation order")->capture_default_str();
    rec->add_option("--grid-min", o.grid_min, "grid start (default -8/lambda)");
    rec->add_option("--grid-max", o.grid_max, "grid end (default 8/lambda)");
    rec->add_option("--grid-points", o.grid_points, "grid sample count")->capture_default_str();
    rec->add_option("--method", o.method, "reconstruction formula")
        ->check(CLI::IsMember({"14a", "14b", "both"}))
        ->capture_default_str();
    rec->add_flag("--inject-zero-potential", o.inject_zero)->group("");
    add_output(rec);

    auto* ver = app.add_subcommand("verify", "run the numerical verification suite");
    ver->fallthrough();
    ver->add_option("--lambda", o.lambda, "length scale parameter")->capture_default_str();
    add_params(ver);
    o.tolerance_opt =
        ver->add_option("--tolerance", o.tolerance, "override every check tolerance");
    o.only_opt = ver->add_option("--only", o.only, "run a single named check");
    ver->add_option("--output", o.output, "report path (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (spectrum->parsed()) return cmd_spectrum(o);
        if (phase->parsed()) return cmd_phase_shift(o);
        if (rec->parsed()) return cmd_reconstruct(o);
        if (ver->parsed()) return cmd_verify(o);
        return 1;
    } catch (const validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const numeric_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
