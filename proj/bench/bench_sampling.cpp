// Times the OpenMP kernels against their serial references and checks that
// the outputs are bit-identical (the parallel loops only reorder independent
// work, never the arithmetic inside a point).
#include <chrono>
#include <cmath>
#include <cstdio>
#include <vector>

#include "wilsonq/operators.hpp"
#include "wilsonq/reconstruct.hpp"
#include "wilsonq/sampling.hpp"
#include "wilsonq/specfun.hpp"
#include "wilsonq/system.hpp"
#include "wilsonq/wilson.hpp"

using namespace wilsonq;

namespace {

template <typename F>
double time_best_of(int repeats, F&& f) {
    double best = 1e300;
    for (int r = 0; r < repeats; ++r) {
        auto t0 = std::chrono::steady_clock::now();
        f();
        double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        best = std::min(best, dt);
    }
    return best;
}

void report(const char* name, double serial_s, double parallel_s, double max_diff) {
    std::printf("%-24s serial %8.4f s   parallel %8.4f s   speedup %5.2fx   max |diff| %g\n",
                name, serial_s, parallel_s, serial_s / parallel_s, max_diff);
}

double diff_of(const reconstruct::ReconstructedPotential& a,
               const reconstruct::ReconstructedPotential& b) {
    double worst = 0.0;
    for (size_t i = 0; i < a.values.size(); ++i) {
        if (a.values[i].has_value() != b.values[i].has_value()) return INFINITY;
        if (a.values[i]) worst = std::max(worst, std::abs(*a.values[i] - *b.values[i]));
    }
    return worst;
}

}  // namespace

int main() {
    const wilson::WilsonParams w(0.8, 0.3, 0.6, 0.5);

    {
        auto ys = sampling::linspace(0.05, 8.0, 20000);
        std::vector<double> par, ser;
        double tp = time_best_of(3, [&] { par = sampling::sample_phase_shift(ys, w); });
        double ts = time_best_of(3, [&] { ser = sampling::serial::sample_phase_shift(ys, w); });
        double worst = 0.0;
        for (size_t i = 0; i < par.size(); ++i) worst = std::max(worst, std::abs(par[i] - ser[i]));
        report("phase-shift sweep", ts, tp, worst);
    }

    {
        const double lambda = 0.5;
        auto H = operators::hamiltonian_matrix(40, lambda, 0.8, 0.6);
        auto T = operators::kinetic_matrix(40, lambda);
        auto V = operators::potential_matrix(H, T);
        reconstruct::Grid grid(-16.0, 16.0, 2001);
        reconstruct::ReconstructedPotential pa = reconstruct::reconstruct_a(V, lambda, grid);
        reconstruct::ReconstructedPotential sa = reconstruct::serial::reconstruct_a(V, lambda, grid);
        double tp = time_best_of(3, [&] { pa = reconstruct::reconstruct_a(V, lambda, grid); });
        double ts = time_best_of(3, [&] { sa = reconstruct::serial::reconstruct_a(V, lambda, grid); });
        report("potential ratio grid", ts, tp, diff_of(pa, sa));

        reconstruct::ReconstructedPotential pb = reconstruct::reconstruct_b(V, lambda, grid);
        reconstruct::ReconstructedPotential sb = reconstruct::serial::reconstruct_b(V, lambda, grid);
        tp = time_best_of(3, [&] { pb = reconstruct::reconstruct_b(V, lambda, grid); });
        ts = time_best_of(3, [&] { sb = reconstruct::serial::reconstruct_b(V, lambda, grid); });
        report("potential column grid", ts, tp, diff_of(pb, sb));
    }

    {
        auto f = [&](double y) { return wilson::weight_density(y, w); };
        double vp = 0.0, vs = 0.0;
        double tp = time_best_of(3, [&] {
            for (int r = 0; r < 20; ++r) vp = specfun::integrate_semi_infinite(f);
        });
        double ts = time_best_of(3, [&] {
            for (int r = 0; r < 20; ++r) vs = specfun::serial::integrate_semi_infinite(f);
        });
        report("weight quadrature x20", ts, tp, std::abs(vp - vs));
    }

    return 0;
}
