#include "gconvex/chains.hpp"

#include <cmath>

namespace gconvex {

double default_chain_tol(const std::vector<double>& values) {
    double scale = 0.0;
    for (double v : values) scale = std::max(scale, std::fabs(v));
    return 1e-9 * (1.0 + scale);
}

ChainReport ChainReport::build(std::vector<std::string> labels, std::vector<double> values,
                               ChainDirection dir, double tol_override) {
    ChainReport r;
    r.labels = std::move(labels);
    r.values = std::move(values);
    r.direction = dir;
    r.tol = tol_override >= 0.0 ? tol_override : default_chain_tol(r.values);
    r.holds = true;
    for (std::size_t i = 0; i + 1 < r.values.size(); ++i) {
        r.gaps.push_back(r.values[i + 1] - r.values[i]);
        bool link_ok = dir == ChainDirection::Ascending
                           ? r.values[i] <= r.values[i + 1] + r.tol
                           : r.values[i] >= r.values[i + 1] - r.tol;
        if (!link_ok && r.holds) {
            r.holds = false;
            r.violated_index = static_cast<int>(i);
        }
    }
    return r;
}

WeightedSample::WeightedSample(std::vector<double> pts, std::vector<double> ws)
    : points(std::move(pts)), weights(std::move(ws)) {
    if (points.empty() || points.size() != weights.size())
        throw PreconditionError("weighted sample needs matching nonempty points and weights");
    double sum = 0.0;
    for (double w : weights) {
        if (!(w > 0.0)) throw PreconditionError("weights must be positive");
        sum += w;
    }
    if (std::fabs(sum - 1.0) > 1e-12) throw PreconditionError("weights must sum to 1");
}

ChainReport jensen_chain(const Fn1D& f, const GLink& g, const WeightedSample& s,
                         double tol_override) {
    const double slack = 1e-12 * (1.0 + f.domain().width());
    double mean = 0.0;
    for (std::size_t i = 0; i < s.points.size(); ++i) {
        if (!f.domain().contains(s.points[i], slack))
            throw PreconditionError("sample point outside the domain of f");
        mean += s.weights[i] * s.points[i];
    }
    double mixed_link = 0.0;
    double mean_f = 0.0;
    for (std::size_t i = 0; i < s.points.size(); ++i) {
        double fx = f(s.points[i]);
        mixed_link += s.weights[i] * g.g()(fx);
        mean_f += s.weights[i] * fx;
    }
    return ChainReport::build({"f(weighted_mean)", "link_mixture", "mean_of_f"},
                              {f(mean), g.inverse(mixed_link), mean_f},
                              ChainDirection::Ascending, tol_override);
}

ChainReport young_refined(double a, double b, double t, double p, double tol_override) {
    if (!(a > 0.0) || !(b > 0.0)) throw PreconditionError("young_refined requires a, b > 0");
    if (t < 0.0 || t > 1.0) throw PreconditionError("young_refined requires t in [0, 1]");
    if (!(p > 0.0) || p > 1.0) throw PreconditionError("young_refined requires p in (0, 1]");
    double geometric = std::pow(a, 1.0 - t) * std::pow(b, t);
    double power_mean = std::pow((1.0 - t) * std::pow(a, p) + t * std::pow(b, p), 1.0 / p);
    double arithmetic = (1.0 - t) * a + t * b;
    return ChainReport::build({"weighted_geometric", "power_mean", "weighted_arithmetic"},
                              {geometric, power_mean, arithmetic}, ChainDirection::Ascending,
                              tol_override);
}

namespace {
double heinz_mean(double a, double b, double t) {
    return 0.5 * (std::pow(a, 1.0 - t) * std::pow(b, t) + std::pow(a, t) * std::pow(b, 1.0 - t));
}
}  // namespace

ChainReport heinz_refined(double a, double b, double t, double p, double tol_override) {
    if (!(a > 0.0) || !(b > 0.0)) throw PreconditionError("heinz_refined requires a, b > 0");
    if (t < 0.0 || t > 1.0) throw PreconditionError("heinz_refined requires t in [0, 1]");
    if (!(p > 0.0) || p > 1.0) throw PreconditionError("heinz_refined requires p in (0, 1]");
    double lo = std::sqrt(a * b);
    double mid = std::pow(heinz_mean(std::pow(a, p), std::pow(b, p), t), 1.0 / p);
    double hi = heinz_mean(a, b, t);
    return ChainReport::build({"sqrt_ab", "heinz_power_mean", "heinz_mean"}, {lo, mid, hi},
                              ChainDirection::Ascending, tol_override);
}

ChainReport superadditivity_chain(const Fn1D& f, const GLink& g, double x, double y,
                                  const GridSpec& grid, double tol_override) {
    const Interval& J = f.domain();
    const double slack = 1e-12 * (1.0 + J.width());
    if (std::fabs(J.lo) > slack)
        throw PreconditionError("superadditivity needs f on an interval [0, a]");
    if (!J.contains(x, slack) || !J.contains(y, slack) || !J.contains(x + y, slack))
        throw PreconditionError("x, y and x+y must lie in [0, a]");
    GConvexityVerdict gc = is_gconvex(f, g, grid);
    if (!gc.ok) throw PreconditionError("f is not g-convex for the supplied link");
    double h0, g0;
    try {
        h0 = g.g()(f(0.0));
    } catch (const EvalError&) {
        throw PreconditionError("(g.f)(0) <= 0 fails: composition undefined at 0");
    }
    if (h0 > slack) throw PreconditionError("(g.f)(0) <= 0 fails");
    try {
        g0 = g.g()(0.0);
    } catch (const EvalError&) {
        throw PreconditionError("g(0) >= 0 fails: g undefined at 0");
    }
    if (g0 < -slack) throw PreconditionError("g(0) >= 0 fails");

    double split = f(x) + f(y);
    double mid = g.inverse(g.g()(f(x)) + g.g()(f(y)));
    double joint = f(x + y);
    return ChainReport::build({"f(x)+f(y)", "link_split", "f(x+y)"}, {split, mid, joint},
                              ChainDirection::Ascending, tol_override);
}

ChainReport hh_chain_v1(const Fn1D& f, const GLink& g, double a, double b,
                        const QuadratureSpec& quad, double tol_override) {
    if (!(a < b)) throw PreconditionError("hh_chain_v1 requires a < b");
    const double slack = 1e-12 * (1.0 + f.domain().width());
    if (!f.domain().contains(a, slack) || !f.domain().contains(b, slack))
        throw PreconditionError("a and b must lie in the domain of f");
    const double width = b - a;
    const double ha = g.g()(f(a));
    const double hb = g.g()(f(b));

    double mean_f = kernels::simpson([&](double z) { return f(z); }, a, b, quad.panels) / width;
    double secant = kernels::simpson(
                        [&](double z) {
                            double w = (z - a) / width;
                            return g.inverse(w * ha + (1.0 - w) * hb);
                        },
                        a, b, quad.panels) /
                    width;
    return ChainReport::build(
        {"f(midpoint)", "mean_of_f", "link_secant_integral", "endpoint_mean"},
        {f(0.5 * (a + b)), mean_f, secant, 0.5 * (f(a) + f(b))}, ChainDirection::Ascending,
        tol_override);
}

ChainReport hh_chain_v2(const Fn1D& f, const GLink& g, double a, double b,
                        const QuadratureSpec& quad, double tol_override) {
    if (!(a <= b)) throw PreconditionError("hh_chain_v2 requires a <= b");
    const double slack = 1e-12 * (1.0 + f.domain().width());
    if (!f.domain().contains(a, slack) || !f.domain().contains(b, slack))
        throw PreconditionError("a and b must lie in the domain of f");
    auto h = [&](double z) { return g.g()(f(z)); };
    const double ha = h(a);
    const double hb = h(b);

    auto lerp = [&](double v) { return (1.0 - v) * a + v * b; };
    auto lerp_rev = [&](double v) { return (1.0 - v) * b + v * a; };

    double sym_link = kernels::simpson(
        [&](double v) { return g.inverse(0.5 * (h(lerp(v)) + h(lerp_rev(v)))); }, 0.0, 1.0,
        quad.panels);
    double mean_f =
        kernels::simpson([&](double v) { return f(lerp(v)); }, 0.0, 1.0, quad.panels);
    double secant_fwd = kernels::simpson(
        [&](double v) { return g.inverse((1.0 - v) * ha + v * hb); }, 0.0, 1.0, quad.panels);
    double secant_rev = kernels::simpson(
        [&](double v) { return g.inverse((1.0 - v) * hb + v * ha); }, 0.0, 1.0, quad.panels);

    return ChainReport::build(
        {"f(midpoint)", "symmetrized_link_integral", "mean_of_f", "link_secant_mean",
         "endpoint_mean"},
        {f(0.5 * (a + b)), sym_link, mean_f, 0.5 * (secant_fwd + secant_rev),
         0.5 * (f(a) + f(b))},
        ChainDirection::Ascending, tol_override);
}

ChainReport tangent_chain(const Fn1D& f, const GLink& g, double a, double b, TangentMode mode,
                          double tol_override) {
    const double slack = 1e-12 * (1.0 + f.domain().width());
    if (!f.domain().contains(a, slack) || !f.domain().contains(b, slack))
        throw PreconditionError("a and b must lie in the domain of f");
    const double fa = f(a);
    const double dfa = f.d1(a);
    const double ha = g.g()(fa);
    const double hb = g.g()(f(b));
    double tangent = fa + dfa * (b - a);
    double link_tangent = fa + g.inverse_d1(ha) * (hb - ha);
    ChainDirection dir =
        mode == TangentMode::GConvex ? ChainDirection::Ascending : ChainDirection::Descending;
    return ChainReport::build({"tangent_line", "link_tangent", "f(b)"},
                              {tangent, link_tangent, f(b)}, dir, tol_override);
}

}  // namespace gconvex
