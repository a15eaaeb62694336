#pragma once

#include <optional>
#include <vector>

#include "wilsonq/operators.hpp"
#include "wilsonq/system.hpp"

namespace wilsonq::reconstruct {

struct Grid {
    double x_min;
    double x_max;
    int count;  // >= 2, endpoints included

    Grid(double x_min_, double x_max_, int count_);
    double point(int i) const;
};

enum class Method { m14a, m14b };

struct ReconstructedPotential {
    Grid grid;
    std::vector<std::optional<double>> values;  // nullopt = undefined point
    Method method;
    int order;  // N used
};

// Full-matrix ratio formula: sum_{n,m<N} V_nm phi_n phi_m / sum_{n<N} phi_n^2.
// Points whose denominator falls below 1e-12 of its grid maximum are marked
// undefined rather than clamped.
ReconstructedPotential reconstruct_a(const operators::BandedMatrix& V, double lambda,
                                     const Grid& grid);

// First-column formula: sum_{m<N} (phi_m/phi_0) V_m0; defined everywhere.
ReconstructedPotential reconstruct_b(const operators::BandedMatrix& V, double lambda,
                                     const Grid& grid);

// Builds H and T at order n_max, reconstructs V = H - T by the chosen method
// and adds the harmonic counter-term (lambda^4/2) x^2 pointwise. Only mu and
// a of the wilson parameters participate (nu and b are ignored on this path).
ReconstructedPotential full_potential(const system::SystemParams& p, int n_max,
                                      const Grid& grid, Method method);

// Same assembly from a caller-supplied potential matrix (test hook and CLI
// zero-injection path).
ReconstructedPotential full_potential_from_matrix(const operators::BandedMatrix& Vt,
                                                  double lambda, const Grid& grid,
                                                  Method method);

namespace serial {
// Reference grid loops without OpenMP; bit-identical to the parallel kernels.
ReconstructedPotential reconstruct_a(const operators::BandedMatrix& V, double lambda,
                                     const Grid& grid);
ReconstructedPotential reconstruct_b(const operators::BandedMatrix& V, double lambda,
                                     const Grid& grid);
}  // namespace serial

}  // namespace wilsonq::reconstruct
