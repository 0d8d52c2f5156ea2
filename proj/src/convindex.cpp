#include "gconvex/convindex.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace gconvex {

namespace {

void require_positive(const std::vector<double>& xs, const std::vector<double>& values) {
    for (std::size_t i = 0; i < values.size(); ++i)
        if (!(values[i] > 0.0))
            throw EvalError("function must be positive on the grid", xs[i]);
}

}  // namespace

IndexResult index_differential(const Fn1D& f, const GridSpec& grid) {
    std::vector<double> xs = grid_points(f.domain(), grid);
    std::vector<double> values = f.values_on(xs);
    require_positive(xs, values);
    ConvexityVerdict cv = midpoint_convexity(xs, values, true);
    if (!cv.ok)
        throw PreconditionError("function is not convex on the grid (violation near x = " +
                                std::to_string(cv.witness->x2) + ")");

    double scale = 0.0;
    for (double v : values) scale = std::max(scale, std::fabs(v));
    const double delta = 1e-8 * (1.0 + scale);  // |f'| below this imposes no constraint

    std::vector<double> d1v = kernels::map_index(
        xs.size(), [&](std::size_t i) { return f.d1(xs[i]); }, default_exec());
    std::vector<double> d2v = kernels::map_index(
        xs.size(), [&](std::size_t i) { return f.d2(xs[i]); }, default_exec());

    IndexResult r;
    r.method = IndexResult::Method::Differential;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (std::fabs(d1v[i]) <= delta) continue;
        double ratio = values[i] * d2v[i] / (d1v[i] * d1v[i]);
        if (!r.infimum_defined || ratio < r.criterion_infimum) {
            r.infimum_defined = true;
            r.criterion_infimum = ratio;
            r.witness_x = xs[i];
        }
    }
    if (!r.infimum_defined || r.criterion_infimum >= 1.0) {
        r.is_infinite = true;
        return r;
    }
    // convex positive f gives a nonnegative ratio up to float noise
    double m = std::max(r.criterion_infimum, 0.0);
    r.value = 1.0 / (1.0 - m);
    return r;
}

ExponentScan exponent_scan(const Fn1D& f, std::vector<double> exponents, const GridSpec& grid) {
    for (double r : exponents)
        if (!(r >= 1.0)) throw PreconditionError("exponents must be >= 1");
    std::sort(exponents.begin(), exponents.end());
    std::vector<double> xs = grid_points(f.domain(), grid);
    std::vector<double> values = f.values_on(xs);
    require_positive(xs, values);

    ExponentScan scan;
    scan.exponents = exponents;
    for (double r : exponents) {
        std::vector<double> root(values.size());
        for (std::size_t i = 0; i < values.size(); ++i) root[i] = std::pow(values[i], 1.0 / r);
        bool ok = midpoint_convexity(xs, root, true).ok;
        scan.convex_flags.push_back(ok);
        if (ok) {
            scan.any_convex = true;
            scan.interval_hi = std::max(scan.interval_hi, r);
        }
    }
    return scan;
}

namespace {

EqualityCaseResult residual_of(const Fn1D& f, double coeff, const GridSpec& grid) {
    // residual of coeff * f'^2 - f f'' over the grid
    std::vector<double> xs = grid_points(f.domain(), grid);
    std::vector<double> values = f.values_on(xs);
    require_positive(xs, values);
    EqualityCaseResult res;
    res.scale = 1.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        double lhs = coeff * f.d1(xs[i]) * f.d1(xs[i]);
        double rhs = values[i] * f.d2(xs[i]);
        res.max_residual = std::max(res.max_residual, std::fabs(lhs - rhs));
        res.scale = std::max({res.scale, std::fabs(lhs), std::fabs(rhs)});
    }
    return res;
}

}  // namespace

EqualityCaseResult equality_case_residual_finite(double c, double d, double r,
                                                 const Interval& domain, const GridSpec& grid) {
    if (!(r > 1.0) && !(c == 0.0))
        throw PreconditionError("finite-r equality case requires r > 1");
    using namespace ast;
    ExprPtr base = add(mul(constant(c / r), variable()), constant(d));
    Fn1D f(pow(base, constant(r)), domain, grid);
    return residual_of(f, 1.0 - 1.0 / r, grid);
}

EqualityCaseResult equality_case_residual_exponential(double alpha, double beta,
                                                      const Interval& domain,
                                                      const GridSpec& grid) {
    using namespace ast;
    Fn1D f(mul(constant(alpha), exp(mul(constant(beta), variable()))), domain, grid);
    return residual_of(f, 1.0, grid);
}

ExpLowerBound exp_lower_bound(const Fn1D& f, double a, const GridSpec& grid) {
    const double slack = 1e-12 * (1.0 + f.domain().width());
    if (!f.domain().contains(a, slack))
        throw PreconditionError("expansion point a must lie in the domain of f");
    std::vector<double> xs = grid_points(f.domain(), grid);
    std::vector<double> values = f.values_on(xs);
    require_positive(xs, values);

    double scale = 0.0;
    for (double v : values) scale = std::max(scale, std::fabs(v));
    const double tol = 1e-9 * (1.0 + scale);

    for (std::size_t i = 0; i < xs.size(); ++i) {
        double d1 = f.d1(xs[i]);
        if (d1 < -tol)
            throw PreconditionError("f is not increasing on the grid (f' < 0 at x = " +
                                    std::to_string(xs[i]) + ")");
        double crit = d1 * d1 - values[i] * f.d2(xs[i]);
        if (crit > tol)
            throw PreconditionError("(f')^2 <= f f'' fails at x = " + std::to_string(xs[i]));
    }

    ExpLowerBound out;
    out.alpha = f(a);
    out.beta = f.d1(a) / f(a);
    out.verified = true;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (xs[i] < a) continue;
        double bound = out.alpha * std::exp(out.beta * (xs[i] - a));
        double gap = bound - values[i];  // positive means violation
        out.max_violation = std::max(out.max_violation, gap);
        if (gap > tol) out.verified = false;
    }
    return out;
}

LogConvexCheck logconvex_index_check(const Fn1D& f, const GridSpec& grid) {
    std::vector<double> xs = grid_points(f.domain(), grid);
    std::vector<double> values = f.values_on(xs);
    require_positive(xs, values);
    std::vector<double> logv(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) logv[i] = std::log(values[i]);

    LogConvexCheck out;
    out.log_convex = midpoint_convexity(xs, logv, true).ok;
    if (!out.log_convex) return out;  // nothing to assert
    out.checked = true;
    out.index_infinite = index_differential(f, grid).is_infinite;
    return out;
}

}  // namespace gconvex
