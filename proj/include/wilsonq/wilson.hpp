#pragma once

#include <utility>
#include <vector>

#include "wilsonq/specfun.hpp"

namespace wilsonq::wilson {

enum class Regime { scattering, bound_supporting };

struct WilsonParams {
    double mu, nu, a, b;
    Regime regime;

    // Classifies on construction; parameters in neither regime are rejected.
    WilsonParams(double mu_, double nu_, double a_, double b_);
};

enum class EvalMethod { recursion, series };

// W-tilde_n at y^2 (the unit-seed normalization: W0 = 1).
double wilson_eval(int n, double y, const WilsonParams& p,
                   EvalMethod method = EvalMethod::recursion);

// W-tilde_0..n_max by the three-term recursion (the default evaluation path).
std::vector<double> wilson_seq(int n_max, double y, const WilsonParams& p);

// Scaling that makes the weighted L2 inner products exactly delta_nm.
double orthonormal_factor(int n, const WilsonParams& p);

double wilson_orthonormal_eval(int n, double y, const WilsonParams& p);

// Orthonormal values W_0..n_max via the A6-scaled recursion sequence.
std::vector<double> wilson_orthonormal_seq(int n_max, double y, const WilsonParams& p);

// Orthonormal values propagated by the symmetric (Jacobi) three-term
// recursion instead of explicit scaling; cross-check path.
std::vector<double> orthonormal_recursion_seq(int n_max, double y, const WilsonParams& p);

// Coefficients of the symmetric recursion y^2 W_n = alpha_n W_n
// - beta_{n-1} W_{n-1} - beta_n W_{n+1}.
double jacobi_alpha(int n, const WilsonParams& p);
double jacobi_beta(int n, const WilsonParams& p);

// Normalized weight density on y in (0, inf), computed through real parts of
// complex log-gamma so moderate parameters cannot overflow.
double weight_density(double y, const WilsonParams& p);

// Quadrature of rho * W_n * W_m; contract: approximately delta_nm.
double orthogonality_check(int n, int m, const WilsonParams& p,
                           const specfun::QuadratureSpec& spec = {});

// Returns (lhs, rhs): partial sum of W-tilde_n t^n against the product of the
// two Gauss-series factors; both sides evaluated by independent code paths.
std::pair<double, double> generating_function_check(double t, double y,
                                                    const WilsonParams& p, int n_terms);

}  // namespace wilsonq::wilson
