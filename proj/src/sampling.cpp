#include "wilsonq/sampling.hpp"

#include <cmath>
#include <numbers>

#include "wilsonq/errors.hpp"
#include "wilsonq/system.hpp"

namespace wilsonq::sampling {

std::vector<double> linspace(double lo, double hi, int count) {
    if (count < 1) throw validation_error("linspace: count must be positive");
    std::vector<double> xs(static_cast<size_t>(count));
    if (count == 1) {
        xs[0] = lo;
        return xs;
    }
    for (int i = 0; i < count; ++i)
        xs[static_cast<size_t>(i)] =
            lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
    return xs;
}

namespace {

std::vector<double> sample_phase_shift_impl(const std::vector<double>& ys,
                                            const wilson::WilsonParams& w, bool parallel) {
    std::vector<double> out(ys.size());
    int n = static_cast<int>(ys.size());
#pragma omp parallel for schedule(static) if (parallel)
    for (int i = 0; i < n; ++i)
        out[static_cast<size_t>(i)] = system::phase_shift(ys[static_cast<size_t>(i)], w);
    return out;
}

}  // namespace

std::vector<double> sample_phase_shift(const std::vector<double>& ys,
                                       const wilson::WilsonParams& w) {
    return sample_phase_shift_impl(ys, w, true);
}

std::vector<double> unwrap_phase(const std::vector<double>& deltas) {
    std::vector<double> out(deltas.size());
    if (deltas.empty()) return out;
    out[0] = deltas[0];
    constexpr double two_pi = 2.0 * std::numbers::pi;
    for (size_t i = 1; i < deltas.size(); ++i) {
        double step = deltas[i] - deltas[i - 1];
        step -= two_pi * std::round(step / two_pi);
        out[i] = out[i - 1] + step;
    }
    return out;
}

namespace serial {
std::vector<double> sample_phase_shift(const std::vector<double>& ys,
                                       const wilson::WilsonParams& w) {
    return sample_phase_shift_impl(ys, w, false);
}
}  // namespace serial

}  // namespace wilsonq::sampling
