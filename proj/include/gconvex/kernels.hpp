#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <vector>

namespace gconvex {

// Execution policy for the data-parallel kernels. Every kernel is a
// parallel map followed by a serial fold in index order, so Serial and
// Parallel produce bitwise-identical results; tests rely on that.
enum class Exec { Serial, Parallel };

// Process-wide default used when callers do not pass a policy.
Exec default_exec();
void set_default_exec(Exec e);

namespace kernels {

// fn(i) -> double for i in [0, n). Exceptions thrown by fn are captured
// per slot and the one with the lowest index is rethrown after the loop,
// keeping error reporting deterministic under OpenMP.
std::vector<double> map_index(std::size_t n, const std::function<double(std::size_t)>& fn,
                              Exec exec);

// Runs fn(i) for side effects (each i must touch disjoint state).
void for_index(std::size_t n, const std::function<void(std::size_t)>& fn, Exec exec);

// Composite Simpson rule with `panels` subintervals (must be even and
// >= 2). Integrand samples are gathered with map_index and folded
// serially in node order.
double simpson(const std::function<double(double)>& f, double a, double b, int panels,
               Exec exec);

inline double simpson(const std::function<double(double)>& f, double a, double b, int panels) {
    return simpson(f, a, b, panels, default_exec());
}

}  // namespace kernels
}  // namespace gconvex
