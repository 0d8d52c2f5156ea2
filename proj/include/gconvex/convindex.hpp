#pragma once

#include <optional>
#include <vector>

#include "gconvex/funcspace.hpp"

namespace gconvex {

// Index of convexity of a positive convex f, estimated through the
// differential criterion: with m = inf f f'' / (f')^2 over the grid
// (stationary points excluded), the index is 1/(1-m), or infinite when
// m >= 1. Infinity is a tagged state, never an IEEE value.
struct IndexResult {
    bool is_infinite = false;
    double value = 1.0;          // >= 1; meaningless when is_infinite
    double criterion_infimum = 0.0;  // raw m (infinity marker when no point qualifies)
    bool infimum_defined = false;
    double witness_x = 0.0;      // lowest x attaining the infimum
    enum class Method { Differential, GridScan } method = Method::Differential;
};

IndexResult index_differential(const Fn1D& f, const GridSpec& grid = GridSpec());

// Grid-convexity verdict of f^{1/r} for each requested exponent,
// reported in ascending r order.
struct ExponentScan {
    std::vector<double> exponents;  // sorted ascending
    std::vector<bool> convex_flags;
    double interval_hi = 1.0;  // largest exponent flagged convex
    bool any_convex = false;
};

ExponentScan exponent_scan(const Fn1D& f, std::vector<double> exponents,
                           const GridSpec& grid = GridSpec());

// Residual of the equality ODEs behind the differential criterion:
//   finite_r:    f(x) = ((c/r) x + d)^r   with (1 - 1/r) f'^2 = f f''
//   exponential: f(x) = alpha e^{beta x}  with        f'^2 = f f''
struct EqualityCaseResult {
    double max_residual = 0.0;
    double scale = 1.0;  // max magnitude of the two compared sides
    double relative() const { return max_residual / scale; }
};

EqualityCaseResult equality_case_residual_finite(double c, double d, double r,
                                                 const Interval& domain,
                                                 const GridSpec& grid = GridSpec());
EqualityCaseResult equality_case_residual_exponential(double alpha, double beta,
                                                      const Interval& domain,
                                                      const GridSpec& grid = GridSpec());

// For increasing positive f with (f')^2 <= f f'': the exponential
// minorant f(x) >= alpha e^{beta(x-a)}, alpha = f(a), beta = f'(a)/f(a),
// verified on every grid point >= a.
struct ExpLowerBound {
    double alpha = 0.0;
    double beta = 0.0;
    bool verified = false;
    double max_violation = 0.0;
};

ExpLowerBound exp_lower_bound(const Fn1D& f, double a, const GridSpec& grid = GridSpec());

// If log f passes the grid convexity test, the differential index must
// be infinite.
struct LogConvexCheck {
    bool log_convex = false;
    bool checked = false;         // false when not log-convex (check skipped)
    bool index_infinite = false;  // meaningful when checked
    bool ok() const { return !checked || index_infinite; }
};

LogConvexCheck logconvex_index_check(const Fn1D& f, const GridSpec& grid = GridSpec());

}  // namespace gconvex
