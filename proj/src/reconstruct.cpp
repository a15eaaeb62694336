#include "wilsonq/reconstruct.hpp"

#include <cmath>
#include <numbers>

#include "wilsonq/errors.hpp"

namespace wilsonq::reconstruct {

Grid::Grid(double x_min_, double x_max_, int count_)
    : x_min(x_min_), x_max(x_max_), count(count_) {
    if (!(x_min < x_max)) throw validation_error("Grid: x_min must be below x_max");
    if (count < 2) throw validation_error("Grid: need at least two points");
    if (!std::isfinite(x_min) || !std::isfinite(x_max))
        throw validation_error("Grid: non-finite bounds");
}

double Grid::point(int i) const {
    return x_min + (x_max - x_min) * static_cast<double>(i) / static_cast<double>(count - 1);
}

namespace {

struct PointEval {
    double value;    // band-contracted ratio or first-column sum
    double den_phi;  // Gaussian-weighted denominator used for the cutoff
};

// The Gaussian factors cancel in the 14a ratio, so the value is computed from
// the normalized Hermite values alone; the cutoff decision uses the true
// phi-based denominator, which underflows in the far tail by design.
PointEval eval_a(const operators::BandedMatrix& V, double lambda, double x) {
    int N = V.order();
    double z = lambda * x;
    auto u = specfun::hermite_normalized_seq(N - 1, z);
    double num = 0.0;
    for (int i = 0; i < N; ++i) {
        for (int d : V.band_offsets()) {
            int j = i + d;
            if (j < 0 || j >= N) continue;
            num += V.at(i, j) * u[static_cast<size_t>(i)] * u[static_cast<size_t>(j)];
        }
    }
    double den_u = 0.0;
    for (int i = 0; i < N; ++i) den_u += u[static_cast<size_t>(i)] * u[static_cast<size_t>(i)];
    double den_phi = lambda / std::sqrt(std::numbers::pi) * std::exp(-z * z) * den_u;
    return {num / den_u, den_phi};
}

double eval_b(const operators::BandedMatrix& V, double lambda, double x) {
    int N = V.order();
    double z = lambda * x;
    auto u = specfun::hermite_normalized_seq(N - 1, z);
    double acc = 0.0;
    for (int m = 0; m < N; ++m) acc += u[static_cast<size_t>(m)] * V.at(m, 0);
    return acc;
}

ReconstructedPotential reconstruct_a_impl(const operators::BandedMatrix& V, double lambda,
                                          const Grid& grid, bool parallel) {
    if (!(lambda > 0.0)) throw validation_error("reconstruct_a: lambda must be positive");
    if (!V.symmetric()) throw validation_error("reconstruct_a: V must be symmetric");
    int count = grid.count;
    std::vector<PointEval> evals(static_cast<size_t>(count));
#pragma omp parallel for schedule(static) if (parallel)
    for (int i = 0; i < count; ++i)
        evals[static_cast<size_t>(i)] = eval_a(V, lambda, grid.point(i));
    double max_den = 0.0;
    for (const auto& e : evals) max_den = std::max(max_den, e.den_phi);
    double threshold = 1e-12 * max_den;

    ReconstructedPotential out{grid, {}, Method::m14a, V.order()};
    out.values.resize(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i) {
        const auto& e = evals[static_cast<size_t>(i)];
        if (e.den_phi < threshold) continue;  // undefined: ratio meaningless in the tail
        out.values[static_cast<size_t>(i)] = e.value;
    }
    return out;
}

ReconstructedPotential reconstruct_b_impl(const operators::BandedMatrix& V, double lambda,
                                          const Grid& grid, bool parallel) {
    if (!(lambda > 0.0)) throw validation_error("reconstruct_b: lambda must be positive");
    if (!V.symmetric()) throw validation_error("reconstruct_b: V must be symmetric");
    int count = grid.count;
    ReconstructedPotential out{grid, {}, Method::m14b, V.order()};
    out.values.resize(static_cast<size_t>(count));
#pragma omp parallel for schedule(static) if (parallel)
    for (int i = 0; i < count; ++i)
        out.values[static_cast<size_t>(i)] = eval_b(V, lambda, grid.point(i));
    return out;
}

ReconstructedPotential assemble_full(const operators::BandedMatrix& Vt, double lambda,
                                     const Grid& grid, Method method) {
    ReconstructedPotential r = (method == Method::m14a)
                                   ? reconstruct_a_impl(Vt, lambda, grid, true)
                                   : reconstruct_b_impl(Vt, lambda, grid, true);
    double l4 = lambda * lambda * lambda * lambda;
    for (int i = 0; i < grid.count; ++i) {
        auto& v = r.values[static_cast<size_t>(i)];
        if (!v) continue;
        double x = grid.point(i);
        v = *v + 0.5 * l4 * x * x;
    }
    return r;
}

}  // namespace

ReconstructedPotential reconstruct_a(const operators::BandedMatrix& V, double lambda,
                                     const Grid& grid) {
    return reconstruct_a_impl(V, lambda, grid, true);
}

ReconstructedPotential reconstruct_b(const operators::BandedMatrix& V, double lambda,
                                     const Grid& grid) {
    return reconstruct_b_impl(V, lambda, grid, true);
}

ReconstructedPotential full_potential(const system::SystemParams& p, int n_max,
                                      const Grid& grid, Method method) {
    operators::BandedMatrix H =
        operators::hamiltonian_matrix(n_max, p.lambda, p.wilson.mu, p.wilson.a);
    operators::BandedMatrix T = operators::kinetic_matrix(n_max, p.lambda);
    operators::BandedMatrix Vt = operators::potential_matrix(H, T);
    return assemble_full(Vt, p.lambda, grid, method);
}

ReconstructedPotential full_potential_from_matrix(const operators::BandedMatrix& Vt,
                                                  double lambda, const Grid& grid,
                                                  Method method) {
    if (!(lambda > 0.0)) throw validation_error("full_potential_from_matrix: lambda must be positive");
    return assemble_full(Vt, lambda, grid, method);
}

namespace serial {

ReconstructedPotential reconstruct_a(const operators::BandedMatrix& V, double lambda,
                                     const Grid& grid) {
    return reconstruct_a_impl(V, lambda, grid, false);
}

ReconstructedPotential reconstruct_b(const operators::BandedMatrix& V, double lambda,
                                     const Grid& grid) {
    return reconstruct_b_impl(V, lambda, grid, false);
}

}  // namespace serial

}  // namespace wilsonq::reconstruct
