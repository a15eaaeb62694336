#include "wilsonq/wilson.hpp"

#include <cmath>
#include <string>

#include "wilsonq/errors.hpp"

namespace wilsonq::wilson {

using specfun::cplx;

WilsonParams::WilsonParams(double mu_, double nu_, double a_, double b_)
    : mu(mu_), nu(nu_), a(a_), b(b_), regime(Regime::scattering) {
    if (!(std::isfinite(mu) && std::isfinite(nu) && std::isfinite(a) && std::isfinite(b)))
        throw validation_error("WilsonParams: non-finite parameter");
    if (mu > 0.0 && nu > 0.0 && a > 0.0 && b > 0.0) {
        regime = Regime::scattering;
    } else if (mu < 0.0 && mu + nu > 0.0 && mu + a > 0.0 && mu + b > 0.0) {
        regime = Regime::bound_supporting;
    } else {
        throw validation_error(
            "WilsonParams: parameters fit neither the all-positive regime nor "
            "mu < 0 with mu+nu, mu+a, mu+b positive");
    }
}

namespace {

double sum_s(const WilsonParams& p) { return p.mu + p.nu + p.a + p.b; }

void check_nonzero(double d, const char* what) {
    if (d == 0.0) throw degenerate_denominator_error(std::string("wilson recursion: ") + what);
}

}  // namespace

std::vector<double> wilson_seq(int n_max, double y, const WilsonParams& p) {
    if (n_max < 0) throw validation_error("wilson_seq: negative degree");
    const double s = sum_s(p);
    const double y2 = y * y;
    std::vector<double> W(static_cast<size_t>(n_max) + 1);
    W[0] = 1.0;
    if (n_max == 0) return W;
    check_nonzero(p.a + p.b, "a+b vanishes");
    check_nonzero(p.mu + p.nu, "mu+nu vanishes");
    W[1] = (p.mu + p.a) * (p.mu + p.b) / (p.a + p.b)
         - s / ((p.mu + p.nu) * (p.a + p.b)) * (y2 + p.mu * p.mu);
    for (int n = 1; n < n_max; ++n) {
        double nd = static_cast<double>(n);
        double d0 = 2.0 * nd + s;
        double d1 = 2.0 * nd + s - 1.0;
        double d2 = 2.0 * nd + s - 2.0;
        check_nonzero(d0, "2n+s vanishes");
        check_nonzero(d1, "2n+s-1 vanishes");
        check_nonzero(d2, "2n+s-2 vanishes");
        double alpha = (nd + p.mu + p.nu) * (nd + p.mu + p.a) * (nd + p.mu + p.b)
                           * (nd + s - 1.0) / (d0 * d1)
                     + nd * (nd + p.nu + p.a - 1.0) * (nd + p.nu + p.b - 1.0)
                           * (nd + p.a + p.b - 1.0) / (d1 * d2)
                     - p.mu * p.mu;
        double c = (nd + p.mu + p.a - 1.0) * (nd + p.mu + p.b - 1.0)
                 * (nd + p.nu + p.a - 1.0) * (nd + p.nu + p.b - 1.0) / (d1 * d2);
        double adv = (nd + 1.0) * (nd + p.mu + p.nu) * (nd + p.a + p.b) * (nd + s - 1.0)
                   / (d0 * d1);
        check_nonzero(adv, "leading coefficient vanishes");
        W[static_cast<size_t>(n) + 1] =
            ((alpha - y2) * W[static_cast<size_t>(n)] - c * W[static_cast<size_t>(n) - 1]) / adv;
    }
    return W;
}

double wilson_eval(int n, double y, const WilsonParams& p, EvalMethod method) {
    if (n < 0) throw validation_error("wilson_eval: negative degree");
    if (method == EvalMethod::recursion) {
        return wilson_seq(n, y, p).back();
    }
    const double s = sum_s(p);
    double pref = specfun::pochhammer(p.mu + p.a, n) * specfun::pochhammer(p.mu + p.b, n)
                / (specfun::pochhammer(p.a + p.b, n) * specfun::pochhammer(1.0, n));
    cplx f = specfun::hyp4f3_terminating(n, cplx(static_cast<double>(n) + s - 1.0, 0.0),
                                         cplx(p.mu, y), cplx(p.mu, -y),
                                         p.mu + p.nu, p.mu + p.a, p.mu + p.b, 1.0);
    // mu + iy and mu - iy enter conjugately, so the imaginary residue must be
    // at rounding level.
    if (std::abs(f.imag()) > 1e-12 * std::max(1.0, std::abs(f.real())))
        throw numeric_error("wilson_eval: series imaginary residue too large");
    return pref * f.real();
}

double orthonormal_factor(int n, const WilsonParams& p) {
    if (n < 0) throw validation_error("orthonormal_factor: negative degree");
    const double s = sum_s(p);
    double ratio = 1.0;
    for (int k = 0; k < n; ++k) {
        double kd = static_cast<double>(k);
        ratio *= (p.mu + p.nu + kd) * (p.a + p.b + kd) * (s + kd) * (kd + 1.0)
               / ((p.mu + p.a + kd) * (p.mu + p.b + kd) * (p.nu + p.a + kd) * (p.nu + p.b + kd));
    }
    double nd = static_cast<double>(n);
    double radicand = (2.0 * nd + s - 1.0) / (nd + s - 1.0) * ratio;
    if (radicand < 0.0)
        throw negative_radicand_error("orthonormal_factor: negative radicand");
    return std::sqrt(radicand);
}

double wilson_orthonormal_eval(int n, double y, const WilsonParams& p) {
    return orthonormal_factor(n, p) * wilson_eval(n, y, p, EvalMethod::recursion);
}

std::vector<double> wilson_orthonormal_seq(int n_max, double y, const WilsonParams& p) {
    std::vector<double> W = wilson_seq(n_max, y, p);
    const double s = sum_s(p);
    double ratio = 1.0;  // running Pochhammer-quotient product
    for (int n = 0; n <= n_max; ++n) {
        double nd = static_cast<double>(n);
        double radicand = (2.0 * nd + s - 1.0) / (nd + s - 1.0) * ratio;
        if (radicand < 0.0)
            throw negative_radicand_error("wilson_orthonormal_seq: negative radicand");
        W[static_cast<size_t>(n)] *= std::sqrt(radicand);
        ratio *= (p.mu + p.nu + nd) * (p.a + p.b + nd) * (s + nd) * (nd + 1.0)
               / ((p.mu + p.a + nd) * (p.mu + p.b + nd) * (p.nu + p.a + nd) * (p.nu + p.b + nd));
    }
    return W;
}

double jacobi_alpha(int n, const WilsonParams& p) {
    if (n < 0) throw validation_error("jacobi_alpha: negative index");
    const double s = sum_s(p);
    double nd = static_cast<double>(n);
    double first = (nd + p.mu + p.nu) * (nd + p.mu + p.a) * (nd + p.mu + p.b) * (nd + s - 1.0)
                 / ((2.0 * nd + s) * (2.0 * nd + s - 1.0));
    double second = (n == 0) ? 0.0
                             : nd * (nd + p.nu + p.a - 1.0) * (nd + p.nu + p.b - 1.0)
                                   * (nd + p.a + p.b - 1.0)
                                   / ((2.0 * nd + s - 1.0) * (2.0 * nd + s - 2.0));
    return first + second - p.mu * p.mu;
}

double jacobi_beta(int n, const WilsonParams& p) {
    if (n < 0) throw validation_error("jacobi_beta: negative index");
    const double s = sum_s(p);
    double nd = static_cast<double>(n);
    double adv = (nd + 1.0) * (nd + p.mu + p.nu) * (nd + p.a + p.b) * (nd + s - 1.0)
               / ((2.0 * nd + s) * (2.0 * nd + s - 1.0));
    double next_c = (nd + p.mu + p.a) * (nd + p.mu + p.b) * (nd + p.nu + p.a) * (nd + p.nu + p.b)
                  / ((2.0 * nd + s + 1.0) * (2.0 * nd + s));
    double radicand = adv * next_c;
    if (radicand < 0.0) throw negative_radicand_error("jacobi_beta: negative radicand");
    return std::sqrt(radicand);
}

std::vector<double> orthonormal_recursion_seq(int n_max, double y, const WilsonParams& p) {
    if (n_max < 0) throw validation_error("orthonormal_recursion_seq: negative degree");
    const double y2 = y * y;
    std::vector<double> W(static_cast<size_t>(n_max) + 1);
    W[0] = 1.0;
    if (n_max == 0) return W;
    W[1] = (jacobi_alpha(0, p) - y2) / jacobi_beta(0, p);
    for (int n = 1; n < n_max; ++n) {
        W[static_cast<size_t>(n) + 1] =
            ((jacobi_alpha(n, p) - y2) * W[static_cast<size_t>(n)]
             - jacobi_beta(n - 1, p) * W[static_cast<size_t>(n) - 1]) / jacobi_beta(n, p);
    }
    return W;
}

double weight_density(double y, const WilsonParams& p) {
    if (!(y > 0.0)) throw validation_error("weight_density: y must be positive");
    const double s = sum_s(p);
    auto re_lg = [](double x) { return specfun::log_gamma_complex(cplx(x, 0.0)).real(); };
    double log_const = re_lg(s) - re_lg(p.mu + p.nu) - re_lg(p.a + p.b) - re_lg(p.mu + p.a)
                     - re_lg(p.mu + p.b) - re_lg(p.nu + p.a) - re_lg(p.nu + p.b);
    double log_moduli = specfun::log_gamma_complex(cplx(p.mu, y)).real()
                      + specfun::log_gamma_complex(cplx(p.nu, y)).real()
                      + specfun::log_gamma_complex(cplx(p.a, y)).real()
                      + specfun::log_gamma_complex(cplx(p.b, y)).real()
                      - specfun::log_gamma_complex(cplx(0.0, 2.0 * y)).real();
    return std::exp(log_const + 2.0 * log_moduli - std::log(2.0 * std::numbers::pi));
}

double orthogonality_check(int n, int m, const WilsonParams& p,
                           const specfun::QuadratureSpec& spec) {
    if (n < 0 || m < 0) throw validation_error("orthogonality_check: negative degree");
    int top = std::max(n, m);
    auto integrand = [&](double y) {
        auto W = wilson_orthonormal_seq(top, y, p);
        return weight_density(y, p) * W[static_cast<size_t>(n)] * W[static_cast<size_t>(m)];
    };
    return specfun::integrate_semi_infinite(integrand, spec);
}

std::pair<double, double> generating_function_check(double t, double y, const WilsonParams& p,
                                                    int n_terms) {
    if (n_terms < 1) throw validation_error("generating_function_check: need at least one term");
    if (!(std::abs(t) < 1.0)) throw validation_error("generating_function_check: |t| must be < 1");
    auto W = wilson_seq(n_terms - 1, y, p);
    double lhs = 0.0;
    double tn = 1.0;
    for (int n = 0; n < n_terms; ++n) {
        lhs += W[static_cast<size_t>(n)] * tn;
        tn *= t;
    }
    cplx g1 = specfun::hyp2f1(cplx(p.mu, y), cplx(p.nu, y), cplx(p.mu + p.nu, 0.0), t);
    cplx g2 = specfun::hyp2f1(cplx(p.a, -y), cplx(p.b, -y), cplx(p.a + p.b, 0.0), t);
    cplx rhs = g1 * g2;
    if (std::abs(rhs.imag()) > 1e-10 * std::max(1.0, std::abs(rhs.real())))
        throw numeric_error("generating_function_check: product has non-vanishing imaginary part");
    return {lhs, rhs.real()};
}

}  // namespace wilsonq::wilson
