#include "amp/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <stdexcept>
#include <thread>

namespace amp {

void SweepSpec::validate() const {
    if (axes.empty() || axes.size() > 2)
        throw std::invalid_argument("sweep needs one or two axes");
    for (const Axis& ax : axes) {
        if (ax.param.empty()) throw std::invalid_argument("sweep axis needs a parameter name");
        if (ax.n < 2) throw std::invalid_argument("sweep axis needs at least two points");
        if (!(ax.lo < ax.hi)) throw std::invalid_argument("sweep axis needs lo < hi");
        if (!std::isfinite(ax.lo) || !std::isfinite(ax.hi))
            throw std::invalid_argument("sweep axis bounds must be finite");
    }
}

std::size_t SweepSpec::size() const {
    std::size_t total = 1;
    for (const Axis& ax : axes) total *= static_cast<std::size_t>(ax.n);
    return total;
}

std::vector<double> SweepSpec::coords_at(std::size_t flat) const {
    std::vector<double> x(axes.size());
    for (std::size_t d = axes.size(); d-- > 0;) {
        const std::size_t n = static_cast<std::size_t>(axes[d].n);
        x[d] = axes[d].at(static_cast<int>(flat % n));
        flat /= n;
    }
    return x;
}

int sweep_thread_count() {
    if (const char* env = std::getenv("AMP_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v >= 1) return static_cast<int>(v);
        throw std::invalid_argument("AMP_THREADS must be a positive integer");
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

SweepResult run_sweep(const SweepSpec& spec, const Objective& f) {
    spec.validate();
    const std::size_t total = spec.size();

    SweepResult res;
    res.spec = spec;
    res.values.assign(total, 0.0);

    const int nthreads = static_cast<int>(
        std::min(static_cast<std::size_t>(sweep_thread_count()), total));
    std::vector<std::exception_ptr> errors(nthreads);
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (int t = 0; t < nthreads; ++t) {
        const std::size_t begin = total * t / nthreads;
        const std::size_t end = total * (t + 1) / nthreads;
        pool.emplace_back([&, t, begin, end] {
            try {
                for (std::size_t i = begin; i < end; ++i) res.values[i] = f(spec.coords_at(i));
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (std::thread& th : pool) th.join();
    for (const std::exception_ptr& e : errors)
        if (e) std::rethrow_exception(e);

    std::size_t best = 0;
    for (std::size_t i = 1; i < total; ++i)
        if (res.values[i] > res.values[best]) best = i;

    res.flat_argmax = best;
    res.max_value = res.values[best];
    res.argmax = spec.coords_at(best);
    res.argmax_idx.resize(spec.axes.size());
    std::size_t rem = best;
    for (std::size_t d = spec.axes.size(); d-- > 0;) {
        const std::size_t n = static_cast<std::size_t>(spec.axes[d].n);
        res.argmax_idx[d] = static_cast<int>(rem % n);
        rem /= n;
    }
    return res;
}

RefineResult refine_max(const SweepResult& grid, const Objective& f) {
    const SweepSpec& spec = grid.spec;
    spec.validate();
    constexpr double inv_phi = 0.6180339887498949;
    constexpr int passes = 2;
    constexpr int max_iter = 200;

    RefineResult out;
    out.x = grid.argmax;
    out.value = grid.max_value;
    out.converged = true;

    for (int pass = 0; pass < passes; ++pass) {
        for (std::size_t d = 0; d < spec.axes.size(); ++d) {
            const Axis& ax = spec.axes[d];
            const double step = (ax.hi - ax.lo) / (ax.n - 1);
            const double tol = 1e-6 * (ax.hi - ax.lo);
            double a = std::max(ax.lo, out.x[d] - step);
            double b = std::min(ax.hi, out.x[d] + step);

            std::vector<double> x = out.x;
            const auto eval = [&](double xd) {
                x[d] = xd;
                return f(x);
            };
            double c = b - inv_phi * (b - a);
            double e = a + inv_phi * (b - a);
            double fc = eval(c);
            double fe = eval(e);
            int it = 0;
            while (b - a > tol && it++ < max_iter) {
                if (fc > fe) {
                    b = e;
                    e = c;
                    fe = fc;
                    c = b - inv_phi * (b - a);
                    fc = eval(c);
                } else {
                    a = c;
                    c = e;
                    fc = fe;
                    e = a + inv_phi * (b - a);
                    fe = eval(e);
                }
            }
            if (b - a > tol) out.converged = false;
            const double xm = fc > fe ? c : e;
            const double fm = std::max(fc, fe);
            if (fm > out.value) {
                out.x[d] = xm;
                out.value = fm;
            }
        }
    }
    return out;
}

}  // namespace amp
