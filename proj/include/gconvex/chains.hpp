#pragma once

#include <string>
#include <vector>

#include "gconvex/funcspace.hpp"

namespace gconvex {

// Ordered inequality-chain evaluation. For Ascending chains the verdict
// holds iff values[i] <= values[i+1] + tol for all i; Descending mirrors
// it. Default tol = 1e-9 * (1 + max |value|), overridable by callers
// (the CLI wires GCONVEX_TOL through here as an absolute tolerance).
enum class ChainDirection { Ascending, Descending };

struct ChainReport {
    std::vector<std::string> labels;
    std::vector<double> values;
    std::vector<double> gaps;  // values[i+1] - values[i]
    ChainDirection direction = ChainDirection::Ascending;
    bool holds = false;
    int violated_index = -1;  // first violated link, -1 when none
    double tol = 0.0;

    static ChainReport build(std::vector<std::string> labels, std::vector<double> values,
                             ChainDirection dir, double tol_override = -1.0);
};

double default_chain_tol(const std::vector<double>& values);

// Points x_1..x_n with positive weights summing to 1 (checked to 1e-12).
struct WeightedSample {
    std::vector<double> points;
    std::vector<double> weights;

    WeightedSample(std::vector<double> pts, std::vector<double> ws);
};

struct QuadratureSpec {
    int panels = 2048;
};

// f(sum w_i x_i) <= g^{-1}(sum w_i (g.f)(x_i)) <= sum w_i f(x_i).
ChainReport jensen_chain(const Fn1D& f, const GLink& g, const WeightedSample& s,
                         double tol_override = -1.0);

// a^{1-t} b^t <= ((1-t) a^p + t b^p)^{1/p} <= (1-t) a + t b.
ChainReport young_refined(double a, double b, double t, double p, double tol_override = -1.0);

// sqrt(ab) <= H_t^{1/p}(a^p, b^p) <= H_t(a, b),
// H_t(a,b) = (a^{1-t} b^t + a^t b^{1-t}) / 2.
ChainReport heinz_refined(double a, double b, double t, double p, double tol_override = -1.0);

// On J = [0, a] with (g.f)(0) <= 0 and g(0) >= 0:
// f(x) + f(y) <= g^{-1}((g.f)(x) + (g.f)(y)) <= f(x+y).
// Preconditions (including g-convexity) are checked; violations throw
// PreconditionError naming the failed condition.
ChainReport superadditivity_chain(const Fn1D& f, const GLink& g, double x, double y,
                                  const GridSpec& grid = GridSpec(),
                                  double tol_override = -1.0);

// Hermite-Hadamard refinement, endpoint-secant form (4 terms):
// f((a+b)/2) <= (1/(b-a)) int f
//            <= (1/(b-a)) int g^{-1}(((z-a) h(a) + (b-z) h(b)) / (b-a)) dz
//            <= (f(a)+f(b))/2,   h = g.f.
ChainReport hh_chain_v1(const Fn1D& f, const GLink& g, double a, double b,
                        const QuadratureSpec& quad = QuadratureSpec(),
                        double tol_override = -1.0);

// Hermite-Hadamard refinement, symmetrized form (5 terms over v in [0,1]).
ChainReport hh_chain_v2(const Fn1D& f, const GLink& g, double a, double b,
                        const QuadratureSpec& quad = QuadratureSpec(),
                        double tol_override = -1.0);

// Tangent-line refinement:
//   f(a) + f'(a)(b-a) <= f(a) + (g^{-1})'(h(a)) (h(b) - h(a)) <= f(b)
// for g-convex f; all inequalities reversed in gconcave mode.
enum class TangentMode { GConvex, GConcave };

ChainReport tangent_chain(const Fn1D& f, const GLink& g, double a, double b,
                          TangentMode mode = TangentMode::GConvex,
                          double tol_override = -1.0);

}  // namespace gconvex
