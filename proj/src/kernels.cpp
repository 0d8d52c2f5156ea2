#include "gconvex/kernels.hpp"

#include <atomic>
#include <cmath>

#include "gconvex/errors.hpp"

namespace gconvex {

namespace {
Exec g_default = Exec::Parallel;
}

Exec default_exec() { return g_default; }
void set_default_exec(Exec e) { g_default = e; }

namespace kernels {

std::vector<double> map_index(std::size_t n, const std::function<double(std::size_t)>& fn,
                              Exec exec) {
    std::vector<double> out(n, 0.0);
    if (exec == Exec::Serial) {
        for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
        return out;
    }
    std::vector<std::exception_ptr> errors(n);
    std::atomic<bool> failed{false};
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
        try {
            out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
        } catch (...) {
            errors[static_cast<std::size_t>(i)] = std::current_exception();
            failed.store(true, std::memory_order_relaxed);
        }
    }
    if (failed.load()) {
        for (std::size_t i = 0; i < n; ++i)
            if (errors[i]) std::rethrow_exception(errors[i]);
    }
    return out;
}

void for_index(std::size_t n, const std::function<void(std::size_t)>& fn, Exec exec) {
    if (exec == Exec::Serial) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::exception_ptr> errors(n);
    std::atomic<bool> failed{false};
#pragma omp parallel for schedule(dynamic, 1)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
        try {
            fn(static_cast<std::size_t>(i));
        } catch (...) {
            errors[static_cast<std::size_t>(i)] = std::current_exception();
            failed.store(true, std::memory_order_relaxed);
        }
    }
    if (failed.load()) {
        for (std::size_t i = 0; i < n; ++i)
            if (errors[i]) std::rethrow_exception(errors[i]);
    }
}

double simpson(const std::function<double(double)>& f, double a, double b, int panels,
               Exec exec) {
    if (panels < 2 || panels % 2 != 0)
        throw PreconditionError("quadrature panel count must be even and >= 2");
    const std::size_t nodes = static_cast<std::size_t>(panels) + 1;
    const double h = (b - a) / panels;
    std::vector<double> samples = map_index(
        nodes,
        [&](std::size_t i) {
            // endpoints exact, interior by offset from a
            double x = (i == nodes - 1) ? b : a + h * static_cast<double>(i);
            return f(x);
        },
        exec);
    double acc = samples[0] + samples[nodes - 1];
    for (std::size_t i = 1; i + 1 < nodes; ++i) acc += (i % 2 == 1 ? 4.0 : 2.0) * samples[i];
    return acc * h / 3.0;
}

}  // namespace kernels
}  // namespace gconvex
