#pragma once

#include <vector>

#include "wilsonq/wilson.hpp"

namespace wilsonq::sampling {

// Uniform grid including both endpoints (count >= 2), or the single value lo
// when count == 1.
std::vector<double> linspace(double lo, double hi, int count);

// Phase shift evaluated over a y-grid; parallel over points.
std::vector<double> sample_phase_shift(const std::vector<double>& ys,
                                       const wilson::WilsonParams& w);

// Removes 2*pi jumps between consecutive samples, keeping the first value.
std::vector<double> unwrap_phase(const std::vector<double>& deltas);

namespace serial {
std::vector<double> sample_phase_shift(const std::vector<double>& ys,
                                       const wilson::WilsonParams& w);
}  // namespace serial

}  // namespace wilsonq::sampling
