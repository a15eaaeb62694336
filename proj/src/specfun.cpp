#include "wilsonq/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "wilsonq/errors.hpp"

namespace wilsonq::specfun {

namespace {

constexpr double kPi = std::numbers::pi;

// Double-double helpers: value = hi + lo with |lo| <= ulp(hi)/2. The
// terminating-series terms overshoot their sum by up to ~1e10, so both the
// accumulation and the term recurrence itself have to run in this format; a
// plain-double term ratio alone costs ~1e-6 of the result at degree 15.
struct dd {
    double hi;
    double lo;
};

inline dd two_sum(double x, double y) {
    double s = x + y;
    double b = s - x;
    return {s, (x - (s - b)) + (y - b)};
}

inline dd quick_two_sum(double x, double y) {
    double s = x + y;
    return {s, y - (s - x)};
}

inline dd two_prod(double x, double y) {
    double p = x * y;
    return {p, std::fma(x, y, -p)};
}

inline dd dd_add(dd x, dd y) {
    dd s = two_sum(x.hi, y.hi);
    dd t = two_sum(x.lo, y.lo);
    double lo = s.lo + t.hi;
    dd r = quick_two_sum(s.hi, lo);
    r.lo += t.lo;
    return quick_two_sum(r.hi, r.lo);
}

inline dd dd_mul_double(dd x, double c) {
    dd p = two_prod(x.hi, c);
    p.lo = std::fma(x.lo, c, p.lo);
    return quick_two_sum(p.hi, p.lo);
}

inline dd dd_mul(dd x, dd y) {
    dd p = two_prod(x.hi, y.hi);
    p.lo += x.hi * y.lo + x.lo * y.hi;
    return quick_two_sum(p.hi, p.lo);
}

inline dd dd_div(dd x, dd y) {
    double q1 = x.hi / y.hi;
    dd r = dd_add(x, dd_mul_double(y, -q1));
    double q2 = (r.hi + r.lo) / y.hi;
    r = dd_add(r, dd_mul_double(y, -q2));
    double q3 = (r.hi + r.lo) / y.hi;
    dd q = quick_two_sum(q1, q2);
    return dd_add(q, dd{q3, 0.0});
}

bool is_nonpositive_integer(double x) {
    return x <= 0.0 && x == std::floor(x);
}

// log(sin(w)) on a branch consistent with the principal log-gamma reflection
// formula; stable for large |Im w| where sin itself overflows.
cplx log_sin(cplx w) {
    if (w.imag() < 0.0) return std::conj(log_sin(std::conj(w)));
    cplx u = -std::exp(cplx(0.0, 2.0) * w);
    cplx one_plus = 1.0 + u;
    cplx lp = (one_plus == cplx(1.0, 0.0)) ? u : std::log(one_plus);
    return cplx(0.0, -1.0) * w + lp + std::log(0.5) + cplx(0.0, kPi / 2.0);
}

// Lanczos g = 7, 9 coefficients; relative accuracy ~1e-14 in the half-plane
// Re z >= 0.5.
cplx lanczos_log_gamma(cplx z) {
    static constexpr double c[9] = {
        0.99999999999980993,
        676.5203681218851,
        -1259.1392167224028,
        771.32342877765313,
        -176.61502916214059,
        12.507343278686905,
        -0.13857109526572012,
        9.9843695780195716e-6,
        1.5056327351493116e-7,
    };
    cplx w = z - 1.0;
    cplx sum = c[0];
    for (int i = 1; i < 9; ++i) sum += c[i] / (w + static_cast<double>(i));
    cplx base = w + 7.5;
    return 0.5 * std::log(2.0 * kPi) + (w + 0.5) * std::log(base) - base + std::log(sum);
}

}  // namespace

double pochhammer(double a, int n) {
    if (n < 0) throw validation_error("pochhammer: negative order");
    double p = 1.0;
    for (int k = 0; k < n; ++k) p *= a + static_cast<double>(k);
    return p;
}

cplx log_gamma_complex(cplx z) {
    if (z.imag() == 0.0 && is_nonpositive_integer(z.real()))
        throw pole_error("log_gamma_complex: pole at non-positive integer");
    cplx r;
    if (z.real() >= 0.5) {
        r = lanczos_log_gamma(z);
    } else {
        r = std::log(kPi) - log_sin(kPi * z) - lanczos_log_gamma(1.0 - z);
    }
    if (!std::isfinite(r.real()) || !std::isfinite(r.imag()))
        throw wilsonq::overflow_error("log_gamma_complex: non-finite result");
    return r;
}

cplx hyp2f1(cplx a, cplx b, cplx c, double t) {
    if (!(std::abs(t) < 1.0)) throw validation_error("hyp2f1: |t| must be < 1");
    if (c.imag() == 0.0 && is_nonpositive_integer(c.real()))
        throw pole_error("hyp2f1: lower parameter is a non-positive integer");
    constexpr int kCap = 100000;
    constexpr double kRelTol = 1e-15;
    cplx term = 1.0;
    cplx sum = 1.0;
    int small_streak = 0;
    for (int k = 0; k < kCap; ++k) {
        double kd = static_cast<double>(k);
        term *= (a + kd) * (b + kd) / ((c + kd) * (kd + 1.0)) * t;
        sum += term;
        if (std::abs(term) < kRelTol * std::abs(sum)) {
            if (++small_streak >= 2) return sum;
        } else {
            small_streak = 0;
        }
    }
    throw convergence_error("hyp2f1: term cap exceeded");
}

cplx hyp4f3_terminating(int n, cplx u1, cplx u2, cplx u3,
                        double l1, double l2, double l3, double t) {
    if (n < 0) throw validation_error("hyp4f3_terminating: negative degree");
    for (double l : {l1, l2, l3}) {
        if (l == std::floor(l) && l <= 0.0 && l >= -static_cast<double>(n - 1))
            throw pole_error("hyp4f3_terminating: lower Pochhammer vanishes in range");
    }
    double nd = static_cast<double>(n);
    if (u1.imag() == 0.0 && u2 == std::conj(u3)) {
        // Conjugate upper pair folds into a real quadratic per factor. Every
        // factor is formed with error-free two_sum/two_prod transforms and the
        // ratio, product and running sum stay in double-double end to end.
        double mu_r = u2.real();
        dd y2 = two_prod(u2.imag(), u2.imag());
        dd term{1.0, 0.0};
        dd sum{1.0, 0.0};
        for (int k = 0; k < n; ++k) {
            double kd = static_cast<double>(k);
            dd q = two_sum(mu_r, kd);
            dd quad = dd_add(dd_mul(q, q), y2);
            dd num = dd_mul(dd_mul_double(two_sum(u1.real(), kd), kd - nd), quad);
            dd den = dd_mul(dd_mul(two_sum(l1, kd), two_sum(l2, kd)),
                            dd_mul(two_sum(l3, kd), dd{kd + 1.0, 0.0}));
            dd ratio = dd_div(num, den);
            if (t != 1.0) ratio = dd_mul_double(ratio, t);
            term = dd_mul(term, ratio);
            sum = dd_add(sum, term);
        }
        return {sum.hi + sum.lo, 0.0};
    }
    cplx term = 1.0;
    cplx sum = 1.0;
    cplx comp = 0.0;  // Kahan compensation
    for (int k = 0; k < n; ++k) {
        double kd = static_cast<double>(k);
        term *= (kd - nd) * (u1 + kd) * (u2 + kd) * (u3 + kd)
              / ((l1 + kd) * (l2 + kd) * (l3 + kd) * (kd + 1.0)) * t;
        cplx yy = term - comp;
        cplx ss = sum + yy;
        comp = (ss - sum) - yy;
        sum = ss;
    }
    return sum;
}

double hermite(int n, double z) {
    if (n < 0) throw validation_error("hermite: negative degree");
    double hm = 1.0;
    if (n == 0) return hm;
    double h = 2.0 * z;
    for (int k = 1; k < n; ++k) {
        double next = 2.0 * z * h - 2.0 * static_cast<double>(k) * hm;
        hm = h;
        h = next;
    }
    if (!std::isfinite(h)) throw wilsonq::overflow_error("hermite: overflow");
    return h;
}

std::vector<double> hermite_normalized_seq(int n_max, double z) {
    if (n_max < 0) throw validation_error("hermite_normalized_seq: negative degree");
    std::vector<double> u(static_cast<size_t>(n_max) + 1);
    u[0] = 1.0;
    if (n_max >= 1) u[1] = std::sqrt(2.0) * z;
    for (int k = 1; k < n_max; ++k) {
        double kd = static_cast<double>(k);
        u[static_cast<size_t>(k) + 1] =
            std::sqrt(2.0 / (kd + 1.0)) * z * u[static_cast<size_t>(k)]
            - std::sqrt(kd / (kd + 1.0)) * u[static_cast<size_t>(k) - 1];
    }
    if (!std::isfinite(u.back()))
        throw wilsonq::overflow_error("hermite_normalized_seq: overflow");
    return u;
}

const std::pair<std::vector<double>, std::vector<double>>& gauss_legendre(int n) {
    if (n < 1) throw validation_error("gauss_legendre: order must be positive");
    static std::map<int, std::pair<std::vector<double>, std::vector<double>>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    std::vector<double> x(static_cast<size_t>(n)), w(static_cast<size_t>(n));
    int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Newton iteration on P_n from the Chebyshev-like initial guess.
        double xi = std::cos(kPi * (static_cast<double>(i) + 0.75) / (static_cast<double>(n) + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = xi;
            for (int k = 2; k <= n; ++k) {
                double kd = static_cast<double>(k);
                double p2 = ((2.0 * kd - 1.0) * xi * p1 - (kd - 1.0) * p0) / kd;
                p0 = p1;
                p1 = p2;
            }
            pp = static_cast<double>(n) * (xi * p1 - p0) / (xi * xi - 1.0);
            double dx = p1 / pp;
            xi -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        double weight = 2.0 / ((1.0 - xi * xi) * pp * pp);
        x[static_cast<size_t>(i)] = -xi;
        x[static_cast<size_t>(n - 1 - i)] = xi;
        w[static_cast<size_t>(i)] = weight;
        w[static_cast<size_t>(n - 1 - i)] = weight;
    }
    if (n % 2 == 1) x[static_cast<size_t>(n / 2)] = 0.0;
    auto [pos, ok] = cache.emplace(n, std::make_pair(std::move(x), std::move(w)));
    (void)ok;
    return pos->second;
}

namespace {

// Shared quadrature core; `parallel` toggles the OpenMP panel fan-out. Both
// paths sum per-panel partials in panel order, so results are bit-identical.
double integrate_impl(const std::function<double(double)>& f, QuadratureSpec spec,
                      bool parallel) {
    if (spec.panel_count < 1 || spec.nodes_per_panel < 1 || spec.y_max <= 0.0 ||
        spec.tail_tolerance <= 0.0)
        throw validation_error("integrate_semi_infinite: bad quadrature spec");

    double width = spec.y_max / static_cast<double>(spec.panel_count);
    int panels = spec.panel_count;
    double y_max = spec.y_max;
    for (int extension = 0;; ++extension) {
        double tail = f(y_max);
        if (std::isnan(tail)) throw numeric_error("integrate_semi_infinite: NaN integrand");
        if (std::abs(tail) <= spec.tail_tolerance) break;
        if (extension >= 4)
            throw truncation_error("integrate_semi_infinite: integrand not decayed at y_max");
        y_max *= 2.0;
        panels *= 2;
    }

    const auto& [nodes, weights] = gauss_legendre(spec.nodes_per_panel);
    std::vector<double> partial(static_cast<size_t>(panels), 0.0);
#pragma omp parallel for schedule(static) if (parallel)
    for (int p = 0; p < panels; ++p) {
        double a = width * static_cast<double>(p);
        double acc = 0.0;
        for (size_t j = 0; j < nodes.size(); ++j) {
            double y = a + 0.5 * width * (nodes[j] + 1.0);
            acc += weights[j] * f(y);
        }
        partial[static_cast<size_t>(p)] = 0.5 * width * acc;
    }
    double total = 0.0;
    for (double v : partial) total += v;
    if (std::isnan(total)) throw numeric_error("integrate_semi_infinite: NaN integrand");
    return total;
}

}  // namespace

double integrate_semi_infinite(const std::function<double(double)>& f, QuadratureSpec spec) {
    return integrate_impl(f, spec, true);
}

namespace serial {
double integrate_semi_infinite(const std::function<double(double)>& f, QuadratureSpec spec) {
    return integrate_impl(f, spec, false);
}
}  // namespace serial

}  // namespace wilsonq::specfun
