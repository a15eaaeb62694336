#include "wilsonq/system.hpp"

#include <cmath>
#include <numbers>

#include "wilsonq/errors.hpp"

namespace wilsonq::system {

SystemParams::SystemParams(double lambda_, wilson::WilsonParams wilson_)
    : lambda(lambda_), wilson(wilson_) {
    if (!(std::isfinite(lambda) && lambda > 0.0))
        throw validation_error("SystemParams: lambda must be positive");
}

EnergyPoint energy_to_y(double E, double lambda) {
    if (!(lambda > 0.0)) throw validation_error("energy_to_y: lambda must be positive");
    if (!(E > 0.0)) throw validation_error("energy_to_y: scattering energy must be positive");
    double k = std::sqrt(2.0 * E);
    return {E, k, lambda / k};
}

double level_energy(int m, double mu, double lambda) {
    if (m < 0) throw validation_error("level_energy: negative index");
    if (!(lambda > 0.0)) throw validation_error("level_energy: lambda must be positive");
    double d = static_cast<double>(m) + mu;
    if (d == 0.0) throw numeric_error("level_energy: m + mu vanishes");
    return -(lambda * lambda) / (2.0 * d * d);
}

std::vector<BoundState> bound_states(const SystemParams& p) {
    std::vector<BoundState> states;
    if (p.wilson.regime != wilson::Regime::bound_supporting) return states;
    for (int m = 0; static_cast<double>(m) + p.wilson.mu < 0.0; ++m) {
        double d = static_cast<double>(m) + p.wilson.mu;
        states.push_back({m, -(p.lambda * p.lambda) / (2.0 * d * d)});
    }
    return states;
}

double phase_shift(double y, const wilson::WilsonParams& w) {
    if (!(y > 0.0)) throw validation_error("phase_shift: y must be positive");
    using specfun::cplx;
    return specfun::log_gamma_complex(cplx(0.0, 2.0 * y)).imag()
         - specfun::log_gamma_complex(cplx(w.mu, y)).imag()
         - specfun::log_gamma_complex(cplx(w.nu, y)).imag()
         - specfun::log_gamma_complex(cplx(w.a, y)).imag()
         - specfun::log_gamma_complex(cplx(w.b, y)).imag();
}

double basis_phi(int n, double x, double lambda) {
    if (n < 0) throw validation_error("basis_phi: negative index");
    if (!(lambda > 0.0)) throw validation_error("basis_phi: lambda must be positive");
    double z = lambda * x;
    auto u = specfun::hermite_normalized_seq(n, z);
    double v = std::sqrt(lambda) * std::pow(std::numbers::pi, -0.25)
             * std::exp(-0.5 * z * z) * u[static_cast<size_t>(n)];
    if (!std::isfinite(v)) throw wilsonq::overflow_error("basis_phi: overflow");
    return v;
}

double wavefunction_continuum(double E, double x, const SystemParams& p, int n_max) {
    if (n_max < 0) throw validation_error("wavefunction_continuum: negative n_max");
    if (p.wilson.regime != wilson::Regime::scattering)
        throw validation_error("wavefunction_continuum: requires the scattering regime");
    EnergyPoint ep = energy_to_y(E, p.lambda);
    double rho = wilson::weight_density(ep.y, p.wilson);
    auto W = wilson::wilson_orthonormal_seq(n_max, ep.y, p.wilson);
    double z = p.lambda * x;
    auto u = specfun::hermite_normalized_seq(n_max, z);
    double envelope = std::sqrt(p.lambda) * std::pow(std::numbers::pi, -0.25)
                    * std::exp(-0.5 * z * z);
    double acc = 0.0;
    for (int n = 0; n <= n_max; ++n)
        acc += W[static_cast<size_t>(n)] * u[static_cast<size_t>(n)];
    return std::sqrt(rho) * envelope * acc;
}

}  // namespace wilsonq::system
