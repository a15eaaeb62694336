#include "oracle.hpp"

#include <cassert>
#include <cmath>
#include <numbers>

namespace oracle {

namespace {
// Bernoulli-number coefficients B_{2m} / (2m (2m-1)) of the asymptotic series.
constexpr double kStirling[] = {
    1.0 / 12.0,         -1.0 / 360.0,       1.0 / 1260.0,  -1.0 / 1680.0,
    1.0 / 1188.0,       -691.0 / 360360.0,  1.0 / 156.0,   -3617.0 / 122400.0,
};
}  // namespace

std::complex<double> log_gamma(std::complex<double> z) {
    assert(z.real() >= 0.0);
    std::complex<double> shift = 0.0;
    while (z.real() < 14.0) {
        shift += std::log(z);
        z += 1.0;
    }
    std::complex<double> w = z;
    std::complex<double> result =
        (w - 0.5) * std::log(w) - w + 0.5 * std::log(2.0 * std::numbers::pi);
    std::complex<double> inv = 1.0 / w;
    std::complex<double> inv2 = inv * inv;
    std::complex<double> power = inv;
    for (double c : kStirling) {
        result += c * power;
        power *= inv2;
    }
    return result - shift;
}

double simpson(const std::function<double(double)>& f, double a, double b, int n) {
    if (n % 2 != 0) ++n;
    double h = (b - a) / n;
    double total = f(a) + f(b);
    for (int i = 1; i < n; ++i) total += f(a + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
    return total * h / 3.0;
}

std::complex<double> hyp2f1_direct(std::complex<double> a, std::complex<double> b,
                                   std::complex<double> c, double t, int terms) {
    std::complex<long double> term = 1.0L;
    std::complex<long double> sum = 1.0L;
    std::complex<long double> al = a, bl = b, cl = c;
    for (int k = 0; k < terms; ++k) {
        long double kl = k;
        term *= (al + kl) * (bl + kl) / ((cl + kl) * (kl + 1.0L)) * static_cast<long double>(t);
        sum += term;
    }
    return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
}

double hyp4f3_direct(int n, double mu, double nu, double a, double b, double y, double t) {
    // Quad precision: the partial terms exceed the sum by ~1e10 at degree 15,
    // so anything narrower loses real digits to cancellation here.
    __float128 muq = mu, nuq = nu, aq = a, bq = b, yq = y, tq = t;
    __float128 s = muq + nuq + aq + bq;
    __float128 term = 1;
    __float128 sum = 1;
    for (int k = 0; k < n; ++k) {
        __float128 kq = k;
        __float128 num = (kq - n) * (n + s - 1 + kq) * ((muq + kq) * (muq + kq) + yq * yq);
        __float128 den = (muq + nuq + kq) * (muq + aq + kq) * (muq + bq + kq) * (kq + 1);
        term *= num / den * tq;
        sum += term;
    }
    return static_cast<double>(sum);
}

}  // namespace oracle
