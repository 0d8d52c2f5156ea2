#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gconvex/expr.hpp"
#include "gconvex/kernels.hpp"

namespace gconvex {

// Closed or half-open real interval. Open endpoints are not sampled by
// grids; they are inset (see GridSpec).
struct Interval {
    double lo = 0.0;
    double hi = 1.0;
    bool open_lo = false;
    bool open_hi = false;

    double width() const { return hi - lo; }
    bool contains(double x, double slack = 0.0) const {
        return x >= lo - slack && x <= hi + slack;
    }
};

// Uniform sampling grid: n points, open endpoints inset by
// inset_rel * (hi - lo). Defaults follow the standard 257-point grid.
struct GridSpec {
    int n = 257;
    double inset_rel = 1e-4;

    GridSpec() = default;
    GridSpec(int n_, double inset_rel_ = 1e-4);
};

// Sample points of `iv` under `spec`. With force_interior the inset is
// applied to both endpoints regardless of the open flags (used for
// derivative-based checks that must avoid boundary singularities).
std::vector<double> grid_points(const Interval& iv, const GridSpec& spec,
                                bool force_interior = false);

// A scalar function given by a formula on an interval, with symbolic
// first and second derivatives. Construction verifies the formula is
// evaluable and finite at every standard-grid point of the domain.
class Fn1D {
public:
    Fn1D(ExprPtr formula, Interval domain, GridSpec validation_grid = GridSpec());
    Fn1D(const std::string& formula_text, Interval domain,
         GridSpec validation_grid = GridSpec());

    double operator()(double x) const { return eval(formula_, x); }
    double d1(double x) const { return eval(d1_, x); }
    double d2(double x) const { return eval(d2_, x); }

    const ExprPtr& formula() const { return formula_; }
    const ExprPtr& d1_formula() const { return d1_; }
    const ExprPtr& d2_formula() const { return d2_; }
    const Interval& domain() const { return domain_; }

    std::vector<double> values_on(const std::vector<double>& xs,
                                  Exec exec = default_exec()) const;

private:
    ExprPtr formula_;
    ExprPtr d1_;
    ExprPtr d2_;
    Interval domain_;
};

// Midpoint-rule convexity/concavity verdict on a grid. `witness` is
// filled with the first violating triple.
struct ConvexityWitness {
    double x1, x2, x3;
    double f1, f2, f3;
    double violation;  // how far f(x2) exceeds (f1+f3)/2 + tol
};

struct ConvexityVerdict {
    bool ok = false;
    std::optional<ConvexityWitness> witness;
};

// Convex iff f(x_mid) <= (f(x-)+f(x+))/2 + tol for every consecutive
// grid triple, tol = 1e-10 * (1 + local value scale).
ConvexityVerdict check_convex_on_grid(const Fn1D& f, const GridSpec& grid = GridSpec());
ConvexityVerdict check_concave_on_grid(const Fn1D& f, const GridSpec& grid = GridSpec());

// Same tests applied to raw uniformly spaced samples.
ConvexityVerdict midpoint_convexity(const std::vector<double>& xs,
                                    const std::vector<double>& values, bool convex);

// Link function g: increasing + concave (the chains' standing
// hypothesis) with an inverse, either symbolic or by bisection on g's
// domain. Diagnostics are computed once at construction; GLink is
// immutable afterwards.
struct GLinkDiagnostics {
    bool increasing = false;
    bool concave = false;
    bool convex = false;  // for g-concave-mode links
    bool inverse_ok = false;
    double max_inverse_residual = 0.0;
    std::optional<double> increasing_witness;
    std::optional<ConvexityWitness> concavity_witness;

    // The standing requirement for g-convex chains.
    bool pass() const { return increasing && concave && inverse_ok; }
    // Requirement for the g-concave variants (g increasing and convex).
    bool pass_convex_link() const { return increasing && convex && inverse_ok; }
};

class GLink {
public:
    // inverse == nullptr selects the numeric (bisection) inverse.
    GLink(Fn1D g, ExprPtr inverse, GridSpec grid = GridSpec());
    GLink(const std::string& g_text, Interval domain, GridSpec grid = GridSpec());
    GLink(const std::string& g_text, Interval domain, const std::string& inverse_text,
          GridSpec grid = GridSpec());

    const Fn1D& g() const { return g_; }
    const Interval& range() const { return range_; }
    bool has_symbolic_inverse() const { return static_cast<bool>(inverse_); }
    const ExprPtr& inverse_formula() const { return inverse_; }
    const GLinkDiagnostics& diagnostics() const { return diag_; }

    // g^{-1}(y); RangeError when y is outside the range of g.
    double inverse(double y) const;

    // (g^{-1})'(y): symbolic when the inverse formula is available,
    // otherwise 1 / g'(g^{-1}(y)). Throws on a vanishing g'.
    double inverse_d1(double y) const;

private:
    Fn1D g_;
    ExprPtr inverse_;
    ExprPtr inverse_d1_;
    Interval range_;
    GLinkDiagnostics diag_;
};

// Recomputes the construction-time diagnostics of a link on a grid:
// g' > 0 on the interior grid, second-difference concavity/convexity,
// and g(g^{-1}(y)) = y within 1e-9 over the range. Always returns a
// diagnostics object.
GLinkDiagnostics validate_glink(const GLink& link, const GridSpec& grid = GridSpec());

// g-convexity verdict: the composition g.f passes the grid convexity
// test and the link diagnostics pass. Throws EvalError when the range
// of f leaves g's domain.
struct GConvexityVerdict {
    bool ok = false;
    bool composition_convex = false;
    bool link_ok = false;
    std::optional<ConvexityWitness> witness;
};

GConvexityVerdict is_gconvex(const Fn1D& f, const GLink& g, const GridSpec& grid = GridSpec());
// Variant for g-concave f: g increasing convex, g.f concave.
GConvexityVerdict is_gconcave(const Fn1D& f, const GLink& g, const GridSpec& grid = GridSpec());

// The composition g.f as a Fn1D on f's domain.
Fn1D compose(const GLink& g, const Fn1D& f, const GridSpec& grid = GridSpec());

}  // namespace gconvex
