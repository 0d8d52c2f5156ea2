#include "gconvex/funcspace.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace gconvex {

GridSpec::GridSpec(int n_, double inset_rel_) : n(n_), inset_rel(inset_rel_) {
    if (n < 3) throw PreconditionError("grid needs at least 3 points");
    if (inset_rel <= 0.0) throw PreconditionError("grid inset must be positive");
}

std::vector<double> grid_points(const Interval& iv, const GridSpec& spec, bool force_interior) {
    if (!(iv.hi > iv.lo)) throw PreconditionError("interval must have positive width");
    const double eps = spec.inset_rel * iv.width();
    const double a = iv.lo + ((iv.open_lo || force_interior) ? eps : 0.0);
    const double b = iv.hi - ((iv.open_hi || force_interior) ? eps : 0.0);
    std::vector<double> xs(static_cast<std::size_t>(spec.n));
    const double denom = static_cast<double>(spec.n - 1);
    for (int i = 0; i < spec.n; ++i)
        xs[static_cast<std::size_t>(i)] = (a * (denom - i) + b * i) / denom;
    return xs;
}

Fn1D::Fn1D(ExprPtr formula, Interval domain, GridSpec validation_grid)
    : formula_(std::move(formula)),
      d1_(differentiate(formula_)),
      d2_(differentiate(d1_)),
      domain_(domain) {
    // Evaluability invariant: finite at every standard-grid point.
    for (double x : grid_points(domain_, validation_grid)) (void)eval(formula_, x);
}

Fn1D::Fn1D(const std::string& formula_text, Interval domain, GridSpec validation_grid)
    : Fn1D(parse(formula_text), domain, validation_grid) {}

std::vector<double> Fn1D::values_on(const std::vector<double>& xs, Exec exec) const {
    return kernels::map_index(xs.size(), [&](std::size_t i) { return eval(formula_, xs[i]); },
                              exec);
}

ConvexityVerdict midpoint_convexity(const std::vector<double>& xs,
                                    const std::vector<double>& values, bool convex) {
    ConvexityVerdict v;
    v.ok = true;
    for (std::size_t i = 1; i + 1 < xs.size(); ++i) {
        const double f1 = values[i - 1], f2 = values[i], f3 = values[i + 1];
        const double scale = std::max({std::fabs(f1), std::fabs(f2), std::fabs(f3)});
        const double tol = 1e-10 * (1.0 + scale);
        const double mid = 0.5 * (f1 + f3);
        const double excess = convex ? (f2 - mid) : (mid - f2);
        if (excess > tol) {
            v.ok = false;
            v.witness = ConvexityWitness{xs[i - 1], xs[i], xs[i + 1], f1, f2, f3, excess - tol};
            return v;
        }
    }
    return v;
}

namespace {

ConvexityVerdict grid_shape_check(const Fn1D& f, const GridSpec& grid, bool convex) {
    std::vector<double> xs = grid_points(f.domain(), grid);
    std::vector<double> values = f.values_on(xs);
    return midpoint_convexity(xs, values, convex);
}

}  // namespace

ConvexityVerdict check_convex_on_grid(const Fn1D& f, const GridSpec& grid) {
    return grid_shape_check(f, grid, true);
}

ConvexityVerdict check_concave_on_grid(const Fn1D& f, const GridSpec& grid) {
    return grid_shape_check(f, grid, false);
}

// ---------------------------------------------------------------------------
// GLink

namespace {

Interval range_of(const Fn1D& g, const GridSpec& grid) {
    // g is increasing, so its range is [g(lo), g(hi)]. Closed endpoints
    // are evaluated exactly; open or singular ones fall back to the
    // inset grid point.
    std::vector<double> xs = grid_points(g.domain(), grid, true);
    auto endpoint = [&](double exact, double inset, bool open) {
        if (!open) {
            try {
                return g(exact);
            } catch (const EvalError&) {
            }
        }
        return g(inset);
    };
    double lo = endpoint(g.domain().lo, xs.front(), g.domain().open_lo);
    double hi = endpoint(g.domain().hi, xs.back(), g.domain().open_hi);
    return Interval{lo, hi, false, false};
}

GLinkDiagnostics run_diagnostics(const Fn1D& g, const Interval& range, const GridSpec& grid,
                                 const std::function<double(double)>& inv_eval) {
    GLinkDiagnostics d;
    std::vector<double> xs = grid_points(g.domain(), grid, true);
    std::vector<double> values = g.values_on(xs);

    d.increasing = true;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        double gp;
        try {
            gp = g.d1(xs[i]);
        } catch (const EvalError&) {
            d.increasing = false;
            d.increasing_witness = xs[i];
            break;
        }
        if (!(gp > 0.0)) {
            d.increasing = false;
            d.increasing_witness = xs[i];
            break;
        }
    }

    ConvexityVerdict conc = midpoint_convexity(xs, values, false);
    d.concave = conc.ok;
    if (!conc.ok) d.concavity_witness = conc.witness;
    d.convex = midpoint_convexity(xs, values, true).ok;

    // Inverse consistency over the range.
    d.inverse_ok = true;
    d.max_inverse_residual = 0.0;
    GridSpec ygrid(std::min(grid.n, 101), grid.inset_rel);
    for (double y : grid_points(range, ygrid, true)) {
        double resid;
        try {
            resid = std::fabs(g(inv_eval(y)) - y);
        } catch (const Error&) {
            d.inverse_ok = false;
            break;
        }
        d.max_inverse_residual = std::max(d.max_inverse_residual, resid);
        if (resid > 1e-9 * (1.0 + std::fabs(y))) d.inverse_ok = false;
    }
    return d;
}

double bisect_inverse(const Fn1D& g, double y) {
    double lo = g.domain().lo;
    double hi = g.domain().hi;
    // Endpoint values; nudge inward when the formula is singular there.
    auto safe_eval = [&](double x, double nudge) {
        try {
            return g(x);
        } catch (const EvalError&) {
            return g(x + nudge);
        }
    };
    const double nudge = 1e-13 * (1.0 + std::fabs(hi - lo));
    double glo = safe_eval(lo, nudge);
    double ghi = safe_eval(hi, -nudge);
    const double slack = 1e-9 * (1.0 + std::max(std::fabs(glo), std::fabs(ghi)));
    if (y < glo - slack || y > ghi + slack)
        throw RangeError("value outside the range of the link function");
    y = std::clamp(y, glo, ghi);
    const double target_resid = 1e-12 * (1.0 + std::fabs(y));
    double mid = 0.5 * (lo + hi);
    for (int it = 0; it < 200; ++it) {
        mid = 0.5 * (lo + hi);
        double gm = g(mid);
        if (std::fabs(gm - y) <= target_resid) return mid;
        if (gm < y)
            lo = mid;
        else
            hi = mid;
        if (hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * (1.0 + std::fabs(mid)))
            break;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

GLink::GLink(Fn1D g, ExprPtr inverse, GridSpec grid)
    : g_(std::move(g)), inverse_(std::move(inverse)) {
    if (inverse_) inverse_d1_ = differentiate(inverse_);
    range_ = range_of(g_, grid);
    auto inv = [this](double y) { return this->inverse(y); };
    diag_ = run_diagnostics(g_, range_, grid, inv);
}

GLink::GLink(const std::string& g_text, Interval domain, GridSpec grid)
    : GLink(Fn1D(g_text, domain, grid), nullptr, grid) {}

GLink::GLink(const std::string& g_text, Interval domain, const std::string& inverse_text,
             GridSpec grid)
    : GLink(Fn1D(g_text, domain, grid), parse(inverse_text), grid) {}

double GLink::inverse(double y) const {
    if (inverse_) {
        const double slack = 1e-9 * (1.0 + std::max(std::fabs(range_.lo), std::fabs(range_.hi)));
        if (!range_.contains(y, slack))
            throw RangeError("value outside the range of the link function");
        return eval(inverse_, y);
    }
    return bisect_inverse(g_, y);
}

double GLink::inverse_d1(double y) const {
    if (inverse_) {
        const double slack = 1e-9 * (1.0 + std::max(std::fabs(range_.lo), std::fabs(range_.hi)));
        if (!range_.contains(y, slack))
            throw RangeError("value outside the range of the link function");
        return eval(inverse_d1_, y);
    }
    double x = inverse(y);
    double gp = g_.d1(x);
    if (gp == 0.0 || !std::isfinite(gp))
        throw NumericalError("link derivative vanishes at the evaluation point");
    return 1.0 / gp;
}

GLinkDiagnostics validate_glink(const GLink& link, const GridSpec& grid) {
    auto inv = [&link](double y) { return link.inverse(y); };
    return run_diagnostics(link.g(), link.range(), grid, inv);
}

Fn1D compose(const GLink& g, const Fn1D& f, const GridSpec& grid) {
    // Domain check: the range of f over the grid must sit inside g's domain.
    std::vector<double> xs = grid_points(f.domain(), grid);
    std::vector<double> fv = f.values_on(xs);
    auto [mn, mx] = std::minmax_element(fv.begin(), fv.end());
    const double slack = 1e-12 * (1.0 + g.g().domain().width());
    if (*mn < g.g().domain().lo - slack || *mx > g.g().domain().hi + slack)
        throw EvalError("range of f leaves the domain of g", *mn);
    ExprPtr h = substitute(g.g().formula(), f.formula());
    return Fn1D(h, f.domain(), grid);
}

GConvexityVerdict is_gconvex(const Fn1D& f, const GLink& g, const GridSpec& grid) {
    GConvexityVerdict v;
    Fn1D h = compose(g, f, grid);
    ConvexityVerdict hv = check_convex_on_grid(h, grid);
    v.composition_convex = hv.ok;
    v.witness = hv.witness;
    v.link_ok = g.diagnostics().pass();
    v.ok = v.composition_convex && v.link_ok;
    return v;
}

GConvexityVerdict is_gconcave(const Fn1D& f, const GLink& g, const GridSpec& grid) {
    GConvexityVerdict v;
    Fn1D h = compose(g, f, grid);
    ConvexityVerdict hv = check_concave_on_grid(h, grid);
    v.composition_convex = hv.ok;
    v.witness = hv.witness;
    v.link_ok = g.diagnostics().pass_convex_link();
    v.ok = v.composition_convex && v.link_ok;
    return v;
}

}  // namespace gconvex
