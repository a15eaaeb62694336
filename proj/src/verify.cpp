#include "wilsonq/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include "wilsonq/errors.hpp"
#include "wilsonq/operators.hpp"
#include "wilsonq/reconstruct.hpp"

namespace wilsonq::verify {

namespace {

using specfun::cplx;
using wilson::WilsonParams;

double rel(double got, double want) {
    return std::abs(got - want) / std::max(1.0, std::abs(want));
}

double check_gamma_identities() {
    const cplx sample[] = {{0.3, 0.7}, {1.2, -2.0}, {2.5, 5.0}, {0.25, 0.05}, {3.0, 0.0}, {0.0, 0.6}};
    double worst = 0.0;
    for (cplx z : sample) {
        cplx lhs = std::exp(specfun::log_gamma_complex(z + 1.0));
        cplx rhs = z * std::exp(specfun::log_gamma_complex(z));
        worst = std::max(worst, std::abs(lhs - rhs) / std::abs(lhs));
    }
    for (double y : {0.25, 0.7, 1.5, 4.0}) {
        double modulus = std::exp(2.0 * specfun::log_gamma_complex(cplx(0.0, y)).real());
        double closed = std::numbers::pi / (y * std::sinh(std::numbers::pi * y));
        worst = std::max(worst, std::abs(modulus - closed) / closed);
    }
    return worst;
}

double check_recursion_vs_series() {
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> par(0.15, 1.2);
    std::uniform_real_distribution<double> yd(0.1, 4.0);
    double worst = 0.0;
    for (int draw = 0; draw < 20; ++draw) {
        WilsonParams p(par(rng), par(rng), par(rng), par(rng));
        double y = yd(rng);
        auto seq = wilson::wilson_seq(15, y, p);
        for (int n = 0; n <= 15; ++n) {
            double series = wilson::wilson_eval(n, y, p, wilson::EvalMethod::series);
            worst = std::max(worst, rel(series, seq[static_cast<size_t>(n)]));
        }
    }
    return worst;
}

double check_orthonormal_consistency(const WilsonParams& p) {
    double worst = 0.0;
    for (double y : {0.5, 1.3}) {
        auto scaled = wilson::wilson_orthonormal_seq(10, y, p);
        auto propagated = wilson::orthonormal_recursion_seq(10, y, p);
        for (int n = 0; n <= 10; ++n)
            worst = std::max(worst, rel(propagated[static_cast<size_t>(n)],
                                        scaled[static_cast<size_t>(n)]));
    }
    return worst;
}

double check_orthogonality(const WilsonParams& p) {
    double worst = 0.0;
    for (int n = 0; n <= 5; ++n) {
        for (int m = n; m <= 5; ++m) {
            double value = wilson::orthogonality_check(n, m, p);
            double target = (n == m) ? 1.0 : 0.0;
            worst = std::max(worst, std::abs(value - target));
        }
    }
    return worst;
}

double check_generating_function(const WilsonParams& p) {
    double worst = 0.0;
    for (double t : {0.3, -0.3}) {
        auto [lhs, rhs] = wilson::generating_function_check(t, 0.7, p, 80);
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return worst;
}

double check_weight_normalization(const WilsonParams& p) {
    double total = specfun::integrate_semi_infinite(
        [&](double y) { return wilson::weight_density(y, p); });
    return std::abs(total - 1.0);
}

double check_hamiltonian_symmetry() {
    const int N = 40;
    auto H = operators::hamiltonian_matrix(N, 0.5, 0.8, 0.6);
    double worst = 0.0;
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            worst = std::max(worst, std::abs(H.at(i, j) - H.at(j, i)));
    // The two printed off-diagonal families must coincide under index shift;
    // compared relatively because the entries grow quadratically.
    for (int n = 0; n + 1 < N; ++n) {
        double upper = operators::hamiltonian_upper_entry(n, 0.5, 0.8, 0.6);
        worst = std::max(worst, rel(upper, H.at(n, n + 1)));
    }
    return worst;
}

double check_harmonic_reconstruction() {
    const int N = 20;
    const double lambda = 0.5;
    const double half_l2 = 0.5 * lambda * lambda;
    auto Z = operators::position_squared_matrix(N);
    operators::BandedMatrix V(N, {0, -2, 2}, true);
    for (int i = 0; i < N; ++i)
        for (int j : {i - 2, i, i + 2})
            if (j >= 0 && j < N) V.set(i, j, half_l2 * Z.at(i, j));

    reconstruct::Grid grid(-2.0 / lambda, 2.0 / lambda, 81);
    auto ra = reconstruct::reconstruct_a(V, lambda, grid);
    auto rb = reconstruct::reconstruct_b(V, lambda, grid);
    double nd = static_cast<double>(N);
    double b1 = half_l2 * 0.5 * std::sqrt((nd - 1.0) * nd);        // <N-2|v|N>
    double b2 = half_l2 * 0.5 * std::sqrt(nd * (nd + 1.0));        // <N-1|v|N+1>
    double worst = 0.0;
    for (int i = 0; i < grid.count; ++i) {
        double x = grid.point(i);
        double v = half_l2 * (lambda * x) * (lambda * x);
        auto u = specfun::hermite_normalized_seq(N + 1, lambda * x);
        double den = 0.0;
        for (int n = 0; n < N; ++n) den += u[static_cast<size_t>(n)] * u[static_cast<size_t>(n)];
        // Truncating the full-matrix sum at N drops exactly two boundary
        // couplings; the ratio must match v minus that closed-form term.
        double boundary = (b1 * u[static_cast<size_t>(N - 2)] * u[static_cast<size_t>(N)]
                           + b2 * u[static_cast<size_t>(N - 1)] * u[static_cast<size_t>(N + 1)]) / den;
        worst = std::max(worst, std::abs(*ra.values[static_cast<size_t>(i)] - (v - boundary)));
        worst = std::max(worst, std::abs(*rb.values[static_cast<size_t>(i)] - v));
    }
    return worst;
}

}  // namespace

std::vector<std::string> check_names() {
    return {"gamma-identities", "recursion-vs-series", "orthonormal-consistency",
            "orthogonality",    "generating-function", "weight-normalization",
            "kinetic-decomposition", "hamiltonian-symmetry", "harmonic-reconstruction",
            "hamiltonian-vs-recursion"};
}

std::vector<VerificationReport> run_verification(const system::SystemParams& p,
                                                 const VerifyOptions& options) {
    if (options.only) {
        auto names = check_names();
        if (std::find(names.begin(), names.end(), *options.only) == names.end()) {
            std::string msg = "unknown check '" + *options.only + "'; valid names:";
            for (const auto& n : names) msg += " " + n;
            throw validation_error(msg);
        }
    }

    // Integral and identity checks over the Wilson parameters need the
    // scattering regime; outside it the stock parameters stand in.
    WilsonParams wp = p.wilson;
    std::string substituted;
    if (wp.regime != wilson::Regime::scattering) {
        wp = WilsonParams(0.8, 0.3, 0.6, 0.5);
        substituted = "bound-supporting parameters given; check ran with (0.8, 0.3, 0.6, 0.5)";
    }

    struct Item {
        const char* name;
        double tolerance;
        std::function<double()> run;
        const char* info;
    };
    const Item items[] = {
        {"gamma-identities", 1e-10, [] { return check_gamma_identities(); },
         "recurrence and reflection-modulus identities"},
        {"recursion-vs-series", 1e-9, [] { return check_recursion_vs_series(); },
         "seeded draws, degrees up to 15"},
        {"orthonormal-consistency", 1e-9, [&] { return check_orthonormal_consistency(wp); },
         "scaled values against the symmetric-recursion propagation"},
        {"orthogonality", 1e-6, [&] { return check_orthogonality(wp); },
         "quadrature Gram entries against the identity, degrees up to 5"},
        {"generating-function", 1e-8, [&] { return check_generating_function(wp); },
         "80-term partial sum against the Gauss-series product at t = +/-0.3"},
        {"weight-normalization", 1e-8, [&] { return check_weight_normalization(wp); },
         "semi-infinite quadrature of the weight density"},
        {"kinetic-decomposition", 1e-12,
         [&] { return operators::kinetic_decomposition_check(50, p.lambda).residual; },
         "oscillator-term split recombines entrywise at order 50"},
        {"hamiltonian-symmetry", 1e-13, [] { return check_hamiltonian_symmetry(); },
         "mirror symmetry exact; off-diagonal families compared relatively"},
        {"harmonic-reconstruction", 1e-10, [] { return check_harmonic_reconstruction(); },
         "first-column formula exact; ratio formula matches its truncation boundary term"},
    };

    std::vector<VerificationReport> reports;
    for (const auto& item : items) {
        if (options.only && *options.only != item.name) continue;
        VerificationReport r;
        r.name = item.name;
        r.tolerance = options.tolerance.value_or(item.tolerance);
        r.residual = item.run();
        r.passed = r.residual < r.tolerance;  // strict: tolerance 0 always fails
        r.info = item.info;
        if (!substituted.empty() &&
            (r.name == "orthonormal-consistency" || r.name == "orthogonality" ||
             r.name == "generating-function" || r.name == "weight-normalization")) {
            r.info = substituted;
        }
        reports.push_back(std::move(r));
    }

    if (!options.only || *options.only == "hamiltonian-vs-recursion") {
        VerificationReport diag;
        diag.name = "hamiltonian-vs-recursion";
        diag.residual = operators::hamiltonian_recursion_diagnostic(30, 0.5, 0.8, 0.6);
        diag.tolerance = 0.0;
        diag.passed = true;
        diag.informational = true;
        diag.info = "reported only: printed matrix against the mu=nu, a=b recursion Jacobi "
                    "scaled by 2/lambda^2";
        reports.push_back(std::move(diag));
    }
    return reports;
}

}  // namespace wilsonq::verify
