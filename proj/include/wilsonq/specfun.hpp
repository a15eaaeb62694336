#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace wilsonq::specfun {

using cplx = std::complex<double>;

// Rising factorial (a)_n = a(a+1)...(a+n-1); n = 0 gives 1.
double pochhammer(double a, int n);

// Principal-branch log-gamma, continuous in the right half-plane; reflection
// formula handles Re z < 0.5. Throws pole_error at non-positive real integers
// and overflow_error if the result is not finite.
cplx log_gamma_complex(cplx z);

// Gauss series sum_{k} (a)_k (b)_k / (c)_k * t^k / k! for |t| < 1.
cplx hyp2f1(cplx a, cplx b, cplx c, double t);

// Terminating 4F3 with first upper parameter -n: sum of n+1 terms of
// (-n)_k (u1)_k (u2)_k (u3)_k / [(l1)_k (l2)_k (l3)_k k!] * t^k.
// When u2 and u3 are conjugate and u1 is real the term ratios are real and a
// compensated double-double accumulation is used (the partial sums cancel by
// several orders of magnitude for Wilson-shaped parameters).
cplx hyp4f3_terminating(int n, cplx u1, cplx u2, cplx u3,
                        double l1, double l2, double l3, double t);

// Physicists' Hermite polynomial by upward recurrence.
double hermite(int n, double z);

// Orthonormal-scaled Hermite values u_k(z) = H_k(z) / sqrt(2^k k!) for
// k = 0..n_max inclusive; the recurrence keeps magnitudes representable.
std::vector<double> hermite_normalized_seq(int n_max, double z);

struct QuadratureSpec {
    int panel_count = 20;
    int nodes_per_panel = 64;
    double y_max = 40.0;
    double tail_tolerance = 1e-12;
};

// Composite Gauss-Legendre over [0, y_max]. If |f(y_max)| exceeds the tail
// tolerance the range is doubled (panel width preserved) a few times before
// truncation_error is raised. NaN from the integrand raises numeric_error.
double integrate_semi_infinite(const std::function<double(double)>& f,
                               QuadratureSpec spec = {});

// Nodes and weights for n-point Gauss-Legendre on [-1, 1] (cached per n).
const std::pair<std::vector<double>, std::vector<double>>& gauss_legendre(int n);

namespace serial {
// Reference implementation without OpenMP, kept for testing and benchmarks;
// must produce bit-identical results to the parallel version.
double integrate_semi_infinite(const std::function<double(double)>& f,
                               QuadratureSpec spec = {});
}  // namespace serial

}  // namespace wilsonq::specfun
