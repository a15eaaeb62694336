#pragma once

#include <vector>

#include "wilsonq/wilson.hpp"

namespace wilsonq::system {

struct SystemParams {
    double lambda;  // inverse length scale, atomic units
    wilson::WilsonParams wilson;

    SystemParams(double lambda_, wilson::WilsonParams wilson_);
};

struct EnergyPoint {
    double E;  // scattering energy, E = k^2/2
    double k;  // wavenumber
    double y;  // spectral variable, y = lambda/k
};

struct BoundState {
    int m;
    double energy;  // strictly negative
};

EnergyPoint energy_to_y(double E, double lambda);

// One state per integer m with m + mu < 0 (strict), ordered by m; empty in
// the scattering regime.
std::vector<BoundState> bound_states(const SystemParams& p);

// Level energy -lambda^2 / (2 (m+mu)^2) evaluated without membership checks;
// m + mu = 0 is a computation error. Used by the figure mode of the CLI.
double level_energy(int m, double mu, double lambda);

// Phase shift from the gamma-argument expression; each log-gamma uses its
// principal branch, so 2*pi jumps are possible across y sweeps (the CLI
// unwraps for plotting, the library reports the raw combination).
double phase_shift(double y, const wilson::WilsonParams& w);

// Oscillator basis function, orthonormal on the line (includes the sqrt(lambda)
// Jacobian factor).
double basis_phi(int n, double x, double lambda);

// Continuum expansion sqrt(rho(y)) * sum_{n=0}^{n_max} W_n(y^2) phi_n(x).
double wavefunction_continuum(double E, double x, const SystemParams& p, int n_max);

}  // namespace wilsonq::system
