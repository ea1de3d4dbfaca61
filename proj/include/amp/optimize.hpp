#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace amp {

// Uniformly sampled sweep axis over a named parameter.
struct Axis {
    std::string param;
    double lo = 0.0;
    double hi = 0.0;
    int n = 0;
    double at(int i) const { return lo + (hi - lo) * static_cast<double>(i) / (n - 1); }
};

struct SweepSpec {
    std::vector<Axis> axes;  // 1 or 2; axis 0 is the slow (outer) index
    void validate() const;
    std::size_t size() const;
    std::vector<double> coords_at(std::size_t flat) const;
};

using Objective = std::function<double(const std::vector<double>&)>;

struct SweepResult {
    SweepSpec spec;
    std::vector<double> values;    // row-major over axes
    std::vector<int> argmax_idx;   // per-axis grid index of the maximum
    std::vector<double> argmax;    // coordinates of the maximum
    std::size_t flat_argmax = 0;
    double max_value = 0.0;  // exactly values[flat_argmax]
};

// Evaluates f on the grid. Parallel over AMP_THREADS (default: hardware
// concurrency) into a preallocated buffer, so results are independent of the
// thread count; the argmax scan is sequential and ties go to the lowest flat
// index.
SweepResult run_sweep(const SweepSpec& spec, const Objective& f);

int sweep_thread_count();

struct RefineResult {
    std::vector<double> x;
    double value = 0.0;
    bool converged = false;
};

// Polishes a grid maximum by coordinate-wise golden-section search, two
// passes over the axes, each line search bracketed one grid step either side
// of the current point (clamped to the axis) and run to 1e-6 of the axis
// span. The result never falls below the grid value; converged reports
// whether every line search met its tolerance.
RefineResult refine_max(const SweepResult& grid, const Objective& f);

}  // namespace amp
