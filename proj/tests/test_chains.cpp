#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "gconvex/chains.hpp"
#include "gconvex/kernels.hpp"
#include "gconvex/matanalysis.hpp"  // Rng

using namespace gconvex;

namespace {

GLink sqrt_link(double hi) {
    return GLink(Fn1D("sqrt(x)", Interval{0.0, hi}), ast::pow(ast::variable(), ast::constant(2.0)));
}

GLink log_link(double lo, double hi) {
    return GLink(Fn1D("log(x)", Interval{lo, hi}), ast::exp(ast::variable()));
}

// plain 3-point simpson oracle, independent of the kernels module
double simpson_ref(const std::function<double(double)>& f, double a, double b, long panels) {
    double h = (b - a) / static_cast<double>(panels);
    double acc = f(a) + f(b);
    for (long i = 1; i < panels; ++i) acc += (i % 2 ? 4.0 : 2.0) * f(a + h * static_cast<double>(i));
    return acc * h / 3.0;
}

}  // namespace

TEST_CASE("weighted samples are validated") {
    CHECK_THROWS_AS(WeightedSample({1.0}, {0.5}), PreconditionError);
    CHECK_THROWS_AS(WeightedSample({1.0, 2.0}, {0.6, -0.4}), PreconditionError);
    CHECK_THROWS_AS(WeightedSample({1.0, 2.0}, {0.5}), PreconditionError);
    CHECK_NOTHROW(WeightedSample({1.0, 2.0}, {0.5, 0.5}));
}

TEST_CASE("jensen chain on the exp/log pair collapses its first link") {
    Fn1D f("exp(x)", Interval{0.0, 1.0});
    GLink g = log_link(0.5, 5.0);
    ChainReport rep = jensen_chain(f, g, WeightedSample({0.0, 1.0}, {0.5, 0.5}));
    CHECK(rep.holds);
    double e_half = std::exp(0.5);
    CHECK(rep.values[0] == doctest::Approx(e_half).epsilon(1e-12));
    CHECK(rep.values[1] == doctest::Approx(e_half).epsilon(1e-12));
    CHECK(rep.values[2] == doctest::Approx(0.5 * (1.0 + std::exp(1.0))).epsilon(1e-12));
}

TEST_CASE("jensen chain with the square-root link strictly refines") {
    Fn1D f("exp(x)", Interval{0.0, 1.0});
    GLink g = sqrt_link(5.0);
    ChainReport rep = jensen_chain(f, g, WeightedSample({0.0, 1.0}, {0.5, 0.5}));
    CHECK(rep.holds);
    double mid = 0.5 * (1.0 + std::exp(0.5));
    CHECK(rep.values[0] == doctest::Approx(std::exp(0.5)).epsilon(1e-12));
    CHECK(rep.values[1] == doctest::Approx(mid * mid).epsilon(1e-12));
    CHECK(rep.values[2] == doctest::Approx(0.5 * (1.0 + std::exp(1.0))).epsilon(1e-12));
    CHECK(rep.values[0] < rep.values[1]);
    CHECK(rep.values[1] < rep.values[2]);
}

TEST_CASE("jensen degenerates for a single point") {
    Fn1D f("x^2", Interval{0.0, 4.0});
    GLink g = sqrt_link(20.0);
    ChainReport rep = jensen_chain(f, g, WeightedSample({3.0}, {1.0}));
    CHECK(rep.holds);
    CHECK(rep.values[0] == doctest::Approx(9.0).epsilon(1e-12));
    CHECK(rep.values[1] == doctest::Approx(9.0).epsilon(1e-10));
    CHECK(rep.values[2] == doctest::Approx(9.0).epsilon(1e-12));
}

TEST_CASE("jensen rejects points outside the domain") {
    Fn1D f("x^2", Interval{0.0, 2.0});
    GLink g = sqrt_link(10.0);
    CHECK_THROWS_AS(jensen_chain(f, g, WeightedSample({3.0}, {1.0})), PreconditionError);
}

TEST_CASE("young refinement") {
    ChainReport rep = young_refined(4.0, 1.0, 0.5, 0.5);
    CHECK(rep.holds);
    CHECK(rep.values[0] == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(rep.values[1] == doctest::Approx(2.25).epsilon(1e-14));
    CHECK(rep.values[2] == doctest::Approx(2.5).epsilon(1e-14));

    ChainReport ones = young_refined(1.0, 1.0, 0.3, 0.7);
    for (double v : ones.values) CHECK(v == doctest::Approx(1.0).epsilon(1e-14));

    // p = 1 collapses the power mean onto the arithmetic mean exactly
    ChainReport collapse = young_refined(3.0, 7.0, 0.25, 1.0);
    CHECK(collapse.values[1] == collapse.values[2]);

    CHECK_THROWS_AS(young_refined(-1.0, 1.0, 0.5, 0.5), PreconditionError);
    CHECK_THROWS_AS(young_refined(1.0, 1.0, 1.5, 0.5), PreconditionError);
    CHECK_THROWS_AS(young_refined(1.0, 1.0, 0.5, 0.0), PreconditionError);
}

TEST_CASE("young power mean is monotone nonincreasing in p") {
    Rng rng(777001);
    for (int trial = 0; trial < 50; ++trial) {
        double a = rng.uniform(0.2, 5.0);
        double b = rng.uniform(0.2, 5.0);
        double t = rng.uniform(0.0, 1.0);
        double prev = std::numeric_limits<double>::max();
        for (double p : {0.1, 0.25, 0.4, 0.55, 0.7, 0.85, 1.0}) {
            double mid = young_refined(a, b, t, p).values[1];
            CHECK(mid <= prev + 1e-12 * (1.0 + std::fabs(prev)));
            prev = mid;
        }
    }
}

TEST_CASE("heinz refinement") {
    // t = 1/2 collapses every term to sqrt(ab)
    ChainReport mid = heinz_refined(4.0, 9.0, 0.5, 0.5);
    for (double v : mid.values) CHECK(v == doctest::Approx(6.0).epsilon(1e-13));

    // p = 1 collapses the middle onto the Heinz mean
    ChainReport collapse = heinz_refined(2.0, 5.0, 0.2, 1.0);
    CHECK(collapse.values[1] == collapse.values[2]);

    ChainReport rep = heinz_refined(4.0, 1.0, 0.0, 0.5);
    CHECK(rep.holds);
    CHECK(rep.values[0] == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(rep.values[1] == doctest::Approx(2.25).epsilon(1e-14));
    CHECK(rep.values[2] == doctest::Approx(2.5).epsilon(1e-14));
}

TEST_CASE("superadditivity chain with power links") {
    Fn1D f2("x^2", Interval{0.0, 4.0});
    GLink g = sqrt_link(20.0);
    ChainReport rep = superadditivity_chain(f2, g, 1.0, 1.0);
    CHECK(rep.holds);
    CHECK(rep.values[0] == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(rep.values[1] == doctest::Approx(4.0).epsilon(1e-10));
    CHECK(rep.values[2] == doctest::Approx(4.0).epsilon(1e-12));

    Fn1D f4("x^4", Interval{0.0, 2.0});
    GLink g4 = sqrt_link(20.0);
    ChainReport rep4 = superadditivity_chain(f4, g4, 1.0, 1.0);
    CHECK(rep4.holds);
    CHECK(rep4.values[0] == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(rep4.values[1] == doctest::Approx(4.0).epsilon(1e-10));
    CHECK(rep4.values[2] == doctest::Approx(16.0).epsilon(1e-12));

    // x = 0 with f(0) = 0 collapses the first link
    ChainReport zero = superadditivity_chain(f2, g, 0.0, 1.5);
    CHECK(zero.holds);
    CHECK(zero.values[0] == doctest::Approx(zero.values[1]).epsilon(1e-10));
}

TEST_CASE("superadditivity preconditions are reported by name") {
    Fn1D f("exp(x)", Interval{0.0, 1.0});
    GLink g = sqrt_link(5.0);
    // (g.f)(0) = 1 > 0
    CHECK_THROWS_WITH_AS(superadditivity_chain(f, g, 0.2, 0.3), doctest::Contains("(g.f)(0)"),
                         PreconditionError);

    Fn1D f2("x^2", Interval{0.0, 4.0});
    CHECK_THROWS_WITH_AS(superadditivity_chain(f2, g, 3.0, 3.0), doctest::Contains("x+y"),
                         PreconditionError);

    Fn1D shifted("x^2", Interval{1.0, 4.0});
    CHECK_THROWS_WITH_AS(superadditivity_chain(shifted, g, 2.0, 1.0),
                         doctest::Contains("[0, a]"), PreconditionError);
}

TEST_CASE("hh secant form on a linear function") {
    // linear f: the non-integral terms all equal f((a+b)/2); the link
    // integral is evaluated but not asserted here (the pair is not
    // g-convex for the log link)
    Fn1D f("2*x+1", Interval{1.0, 2.0});
    GLink g = log_link(1.0, 8.0);
    ChainReport rep = hh_chain_v1(f, g, 1.0, 2.0);
    CHECK(rep.values[0] == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(rep.values[1] == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(rep.values[3] == doctest::Approx(4.0).epsilon(1e-12));
    // the link term drops below the mean: the chain is correctly violated
    CHECK(rep.values[2] == doctest::Approx(2.0 / std::log(5.0 / 3.0)).epsilon(1e-9));
    CHECK_FALSE(rep.holds);
}

TEST_CASE("hh secant form on the exp/sqrt pair") {
    Fn1D f("exp(x)", Interval{0.0, 1.0});
    GLink g = sqrt_link(3.0);
    ChainReport rep = hh_chain_v1(f, g, 0.0, 1.0);
    CHECK(rep.holds);
    CHECK(rep.values[0] == doctest::Approx(std::exp(0.5)).epsilon(1e-12));
    CHECK(rep.values[1] == doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-10));
    // closed-form oracle for the secant integral: int_0^1 (z h(0) + (1-z) h(1))^2 dz
    double h0 = 1.0, h1 = std::exp(0.5);
    double closed = (h1 * h1 * h1 - h0 * h0 * h0) / (3.0 * (h1 - h0));
    CHECK(rep.values[2] == doctest::Approx(closed).epsilon(1e-9));
    // high-resolution quadrature oracle agrees
    double oracle = simpson_ref(
        [&](double z) {
            double w = z;  // (z - a)/(b - a) with a=0, b=1
            double mix = w * h0 + (1.0 - w) * h1;
            return mix * mix;
        },
        0.0, 1.0, 1000000);
    CHECK(rep.values[2] == doctest::Approx(oracle).epsilon(1e-8));
    CHECK(rep.values[3] == doctest::Approx(0.5 * (1.0 + std::exp(1.0))).epsilon(1e-12));
}

TEST_CASE("hh secant integrand orientation is symmetric after integration") {
    Fn1D f("exp(x)", Interval{0.0, 1.0});
    GLink g = sqrt_link(3.0);
    double h0 = g.g()(f(0.0)), h1 = g.g()(f(1.0));
    auto one_way = [&](double z) {
        double w = z;
        double mix = w * h0 + (1.0 - w) * h1;
        return mix * mix;
    };
    auto other_way = [&](double z) {
        double w = z;
        double mix = (1.0 - w) * h0 + w * h1;
        return mix * mix;
    };
    double a = kernels::simpson(one_way, 0.0, 1.0, 4096);
    double b = kernels::simpson(other_way, 0.0, 1.0, 4096);
    CHECK(a == doctest::Approx(b).epsilon(1e-12));
}

TEST_CASE("hh secant form near a degenerate interval") {
    Fn1D f("exp(x)", Interval{0.0, 1.0});
    GLink g = sqrt_link(3.0);
    double b = 0.5, a = b - 1e-9;
    ChainReport rep = hh_chain_v1(f, g, a, b);
    for (double v : rep.values) CHECK(std::fabs(v - f(a)) <= 1e-6);
    CHECK_THROWS_AS(hh_chain_v1(f, g, 0.5, 0.5), PreconditionError);
}

TEST_CASE("hh symmetrized form coincidences under the log link") {
    Fn1D f("exp(x)", Interval{0.0, 1.0});
    GLink g = log_link(0.5, 5.0);
    ChainReport rep = hh_chain_v2(f, g, 0.0, 1.0);
    CHECK(rep.holds);
    // h = x collapses the symmetrized integrand to the midpoint value
    CHECK(rep.values[1] == doctest::Approx(rep.values[0]).epsilon(1e-12));
    // and the secant mean onto the mean of f
    CHECK(rep.values[3] == doctest::Approx(rep.values[2]).epsilon(1e-12));
}

TEST_CASE("hh symmetrized form is strictly increasing for exp/sqrt") {
    Fn1D f("exp(x)", Interval{0.0, 1.0});
    GLink g = sqrt_link(3.0);
    ChainReport rep = hh_chain_v2(f, g, 0.0, 1.0, QuadratureSpec{2048});
    CHECK(rep.holds);
    for (std::size_t i = 0; i + 1 < rep.values.size(); ++i)
        CHECK(rep.values[i] < rep.values[i + 1] - 1e-4);
    // quadrature oracle for the symmetrized link integral
    double oracle = simpson_ref(
        [&](double v) {
            double h1 = std::exp(0.5 * v), h2 = std::exp(0.5 * (1.0 - v));
            double mix = 0.5 * (h1 + h2);
            return mix * mix;
        },
        0.0, 1.0, 1000000);
    CHECK(rep.values[1] == doctest::Approx(oracle).epsilon(1e-9));
}

TEST_CASE("hh symmetrized form with equal endpoints") {
    Fn1D f("exp(x)", Interval{0.0, 1.0});
    GLink g = sqrt_link(3.0);
    ChainReport rep = hh_chain_v2(f, g, 0.4, 0.4);
    for (double v : rep.values) CHECK(v == doctest::Approx(f(0.4)).epsilon(1e-12));
}

TEST_CASE("tangent chain on the exp/sqrt pair") {
    Fn1D f("exp(x)", Interval{0.0, 1.0});
    GLink g = sqrt_link(3.0);
    ChainReport rep = tangent_chain(f, g, 0.0, 1.0);
    CHECK(rep.holds);
    CHECK(rep.values[0] == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(rep.values[1] == doctest::Approx(1.0 + 2.0 * (std::exp(0.5) - 1.0)).epsilon(1e-12));
    CHECK(rep.values[2] == doctest::Approx(std::exp(1.0)).epsilon(1e-12));
}

TEST_CASE("tangent chain degenerates at b = a") {
    Fn1D f("exp(x)", Interval{0.0, 1.0});
    GLink g = sqrt_link(3.0);
    ChainReport rep = tangent_chain(f, g, 0.3, 0.3);
    for (double v : rep.values) CHECK(v == doctest::Approx(f(0.3)).epsilon(1e-12));
}

TEST_CASE("tangent chain with the identity link reduces to the tangent bound") {
    Fn1D f("x^2", Interval{0.1, 3.0});
    GLink ident(Fn1D("x", Interval{0.0, 10.0}), ast::variable());
    ChainReport rep = tangent_chain(f, ident, 0.5, 2.0);
    CHECK(rep.holds);
    // the link term coincides with f(b): the chain is the classical bound
    CHECK(std::fabs(rep.values[1] - rep.values[2]) <= 1e-12 * (1.0 + std::fabs(rep.values[2])));
    CHECK(rep.values[0] <= rep.values[2]);
}

TEST_CASE("tangent chain in gconcave mode") {
    Fn1D f("-x*log(x)", Interval{0.0, 1.0, true, false});
    GLink exp_link("exp(x)", Interval{-0.05, 0.45}, "log(x)");
    ChainReport rep = tangent_chain(f, exp_link, 0.5, 0.9, TangentMode::GConcave);
    CHECK(rep.holds);
    CHECK(rep.direction == ChainDirection::Descending);
    CHECK(rep.values[0] >= rep.values[1] - rep.tol);
    CHECK(rep.values[1] >= rep.values[2] - rep.tol);
    // middle term oracle: f(a) + (1/h(a)) (h(b) - h(a)), h = x^{-x}
    auto h = [](double x) { return std::pow(x, -x); };
    double mid = f(0.5) + (1.0 / h(0.5)) * (h(0.9) - h(0.5));
    CHECK(rep.values[1] == doctest::Approx(mid).epsilon(1e-12));
}

TEST_CASE("tangent chain reports derivative singularities") {
    // g = x^3 has g'(0) = 0; force the inverse-derivative path through it
    Fn1D f("x^2", Interval{-1.0, 1.0});
    GLink cubic(Fn1D("x^3", Interval{-2.0, 2.0}), nullptr);
    // h(a) = (a^2)^3 = 0 at a = 0, so (g^{-1})'(0) needs 1/g'(0)
    CHECK_THROWS_AS(tangent_chain(f, cubic, 0.0, 0.5), NumericalError);
}

TEST_CASE("randomized jensen property over validated pairs") {
    Rng rng(31415926);
    for (int trial = 0; trial < 100; ++trial) {
        double k = 2.0 + static_cast<double>(rng.next_u64() % 3);
        Interval J{0.0, rng.uniform(1.0, 2.0)};
        Fn1D f(ast::pow(ast::variable(), ast::constant(k)), J);
        GLink g = sqrt_link(std::pow(J.hi, k) * 1.1 + 1.0);
        REQUIRE(is_gconvex(f, g).ok);
        int npts = 2 + static_cast<int>(rng.next_u64() % 4);
        std::vector<double> xs, ws;
        double total = 0.0;
        for (int i = 0; i < npts; ++i) {
            xs.push_back(rng.uniform(0.0, J.hi));
            ws.push_back(rng.uniform(0.05, 1.0));
            total += ws.back();
        }
        for (double& w : ws) w /= total;
        CHECK(jensen_chain(f, g, WeightedSample{xs, ws}).holds);
    }
}
