#include "gconvex/suite.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <sstream>

#include "gconvex/chains.hpp"
#include "gconvex/convindex.hpp"
#include "gconvex/matanalysis.hpp"
#include "gconvex/qentropy.hpp"

namespace gconvex {

namespace {

using Clock = std::chrono::steady_clock;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

struct Check {
    bool ok = true;
    std::string first_failure;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            first_failure = what;
        }
    }
};

// Runs `body(trial, check)` for every trial, collecting the first
// failure in trial order. Exceptions count as failures.
Check run_trials(std::uint64_t trials, const std::function<void(std::uint64_t, Check&)>& body) {
    std::vector<Check> slots(trials);
    kernels::for_index(
        static_cast<std::size_t>(trials),
        [&](std::size_t i) {
            try {
                body(static_cast<std::uint64_t>(i), slots[i]);
            } catch (const std::exception& e) {
                slots[i].require(false, std::string("trial ") + std::to_string(i) +
                                            " raised: " + e.what());
            }
        },
        default_exec());
    Check combined;
    for (std::uint64_t i = 0; i < trials; ++i)
        if (!slots[i].ok) {
            combined.require(false, "trial " + std::to_string(i) + ": " + slots[i].first_failure);
            break;
        }
    return combined;
}

// --------------------------------------------------------------------------
// Example matrices (the regression anchors used by criteria 1 and 2).

HermitianMatrix example_rho_a() {
    Matrix m(2);
    m.at(0, 0) = 2.0 / 7.0;
    m.at(0, 1) = 2.0 / 7.0;
    m.at(1, 0) = 2.0 / 7.0;
    m.at(1, 1) = 5.0 / 7.0;
    return HermitianMatrix(m);
}

HermitianMatrix example_sigma_a() {
    Matrix m(2);
    m.at(0, 0) = 3.0 / 6.0;
    m.at(0, 1) = 1.0 / 6.0;
    m.at(1, 0) = 1.0 / 6.0;
    m.at(1, 1) = 3.0 / 6.0;
    return HermitianMatrix(m);
}

HermitianMatrix example_a1() {
    Matrix m(2);
    m.at(0, 0) = 2.0;
    m.at(0, 1) = -1.0;
    m.at(1, 0) = -1.0;
    m.at(1, 1) = 1.0;
    return HermitianMatrix(m);
}

HermitianMatrix example_a2() {
    Matrix m(2);
    m.at(0, 0) = 2.0;
    m.at(0, 1) = 1.0;
    m.at(1, 0) = 1.0;
    m.at(1, 1) = 2.0;
    return HermitianMatrix(m);
}

// --------------------------------------------------------------------------
// Criterion 1: two-state entropy example, both orientations.

CriterionResult criterion1(const AcceptanceOptions&) {
    CriterionResult r{1, "entropy-example-reproduction", false, "", 0.0};
    auto t0 = Clock::now();
    Check c;

    DensityMatrix rho = validate_density(example_rho_a());
    DensityMatrix sigma = validate_density(example_sigma_a());

    EntropyReport fwd = entropy_lower_bound(rho, sigma);
    c.require(fwd.d.finite, "forward relative entropy must be finite");
    c.require(std::fabs(fwd.d.value - 0.14388) <= 1e-4,
              "D(rho|sigma) = " + fmt(fwd.d.value) + ", expected 0.14388 +- 1e-4");
    c.require(std::fabs(fwd.bound - 0.0141518) <= 1e-5,
              "bound = " + fmt(fwd.bound) + ", expected 0.0141518 +- 1e-5");
    c.require(fwd.bound_below_d, "bound must not exceed D");

    EntropyReport bwd = entropy_lower_bound(sigma, rho);
    c.require(std::fabs(bwd.d.value - 0.174615) <= 1e-4,
              "D(sigma|rho) = " + fmt(bwd.d.value) + ", expected 0.174615 +- 1e-4");
    c.require(std::fabs(bwd.bound - 0.0155788) <= 1e-5,
              "swapped bound = " + fmt(bwd.bound) + ", expected 0.0155788 +- 1e-5");

    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    c.require(r.seconds < 1.0, "runtime " + fmt(r.seconds) + "s exceeds 1s");
    r.passed = c.ok;
    r.details = c.ok ? "D=" + fmt(fwd.d.value) + " bound=" + fmt(fwd.bound) +
                           " swapped D=" + fmt(bwd.d.value) + " bound=" + fmt(bwd.bound)
                     : c.first_failure;
    return r;
}

// --------------------------------------------------------------------------
// Criterion 2: two-matrix majorization example against the printed
// spectra. The link-mixture spectrum is computed exactly as the chain
// defines it; see the repository notes for the observed discrepancy.

CriterionResult criterion2(const AcceptanceOptions&) {
    CriterionResult r{2, "majorization-example-reproduction", false, "", 0.0};
    auto t0 = Clock::now();
    Check c;

    std::vector<HermitianMatrix> as{example_a1(), example_a2()};
    std::vector<double> ws{0.5, 0.5};
    PowerSqrtChainResult chain = power_sqrt_chain(as, ws, 2.0);

    const std::vector<std::vector<double>> printed{{4.0, 2.2}, {4.5, 2.8}, {5.1, 3.3}};
    const std::vector<const std::vector<double>*> spectra{
        &chain.chain.spectrum_f_of_mean, &chain.chain.spectrum_link_mixture,
        &chain.chain.spectrum_mean_of_f};
    for (std::size_t s = 0; s < 3; ++s)
        for (std::size_t i = 0; i < 2; ++i) {
            double got = (*spectra[s])[i];
            double want = printed[s][i];
            c.require(std::fabs(got - want) <= 0.06,
                      "spectrum " + std::to_string(s + 1) + " entry " + std::to_string(i + 1) +
                          " = " + fmt(got) + ", printed value " + fmt(want) + " +- 0.06");
        }
    c.require(weak_majorize(chain.chain.spectrum_f_of_mean, chain.chain.spectrum_link_mixture,
                            1e-9),
              "first weak majorization fails");
    c.require(weak_majorize(chain.chain.spectrum_link_mixture, chain.chain.spectrum_mean_of_f,
                            1e-9),
              "second weak majorization fails");
    c.require(chain.route_discrepancy <= 1e-9,
              "closed-form and generic middles disagree by " + fmt(chain.route_discrepancy));

    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    c.require(r.seconds < 1.0, "runtime " + fmt(r.seconds) + "s exceeds 1s");
    r.passed = c.ok;
    std::ostringstream os;
    os << "spectra {" << fmt((*spectra[0])[0]) << "," << fmt((*spectra[0])[1]) << "} {"
       << fmt((*spectra[1])[0]) << "," << fmt((*spectra[1])[1]) << "} {" << fmt((*spectra[2])[0])
       << "," << fmt((*spectra[2])[1]) << "}";
    r.details = c.ok ? os.str() : c.first_failure + " [" + os.str() + "]";
    return r;
}

// --------------------------------------------------------------------------
// Criterion 3: index regressions.

CriterionResult criterion3(const AcceptanceOptions&) {
    CriterionResult r{3, "convexity-index-regression", false, "", 0.0};
    auto t0 = Clock::now();
    Check c;
    const Interval dom{0.1, 10.0, true, true};

    for (double k : {2.0, 3.0, 4.0}) {
        Fn1D f(ast::pow(ast::variable(), ast::constant(k)), dom);
        IndexResult idx = index_differential(f);
        c.require(!idx.is_infinite && std::fabs(idx.value - k) <= 1e-6,
                  "index(x^" + fmt(k) + ") = " +
                      (idx.is_infinite ? std::string("inf") : fmt(idx.value)) + ", expected " +
                      fmt(k));
    }
    {
        Fn1D f("exp(x)", Interval{0.0, 5.0, true, true});
        c.require(index_differential(f).is_infinite, "index(exp(x)) must be infinite");
    }
    {
        Fn1D f("1/x", dom);
        c.require(index_differential(f).is_infinite, "index(1/x) must be infinite");
    }

    // exponent scans stay monotone (true then false) on every case
    std::vector<double> rs{1.0, 1.5, 2.0, 2.5, 3.0, 3.5, 4.0, 5.0, 6.0};
    for (const std::string& fx : {std::string("x^2"), std::string("x^3"), std::string("x^4"),
                                  std::string("exp(x)"), std::string("1/x")}) {
        Fn1D f(fx, dom);
        ExponentScan scan = exponent_scan(f, rs);
        bool seen_false = false;
        for (bool flag : scan.convex_flags) {
            if (!flag) seen_false = true;
            c.require(!(seen_false && flag), "scan flags for " + fx + " are not monotone");
        }
    }

    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    r.passed = c.ok;
    r.details = c.ok ? "indices 2,3,4,inf,inf; scans monotone" : c.first_failure;
    return r;
}

// --------------------------------------------------------------------------
// Criterion 4: randomized scalar chains.

struct ScalarTrialSetup {
    Fn1D f;
    GLink g;
    bool superadd_ok;  // f vanishes at 0 and the link passes through 0
};

ScalarTrialSetup make_scalar_trial(Rng& rng) {
    int f_kind = static_cast<int>(rng.uniform(0.0, 5.0));
    int g_kind = static_cast<int>(rng.uniform(0.0, 4.0));
    if (f_kind > 4) f_kind = 4;
    if (g_kind > 3) g_kind = 3;

    double k = 0.0;  // power f
    double fe = 1.0; // exponent scale for e^{px}
    bool power_f = f_kind <= 2;
    if (power_f) k = 2.0 + f_kind;  // x^2, x^3, x^4
    if (f_kind == 4) fe = rng.uniform(0.4, 2.0);

    // power functions are not log-convex; resample the link
    while (power_f && g_kind == 2) g_kind = static_cast<int>(rng.uniform(0.0, 4.0)) % 4;

    Interval J = power_f ? Interval{0.0, rng.uniform(1.0, 2.5)}
                         : Interval{rng.uniform(-1.0, 0.0), rng.uniform(0.5, 1.5)};
    ExprPtr ff = power_f ? ast::pow(ast::variable(), ast::constant(k))
                         : ast::exp(ast::mul(ast::constant(fe), ast::variable()));
    Fn1D f(ff, J);

    double fmin = std::numeric_limits<double>::max(), fmax = 0.0;
    for (double x : grid_points(J, GridSpec())) {
        double v = f(x);
        fmin = std::min(fmin, v);
        fmax = std::max(fmax, v);
    }
    double ghi = fmax * 1.05 + 0.5;

    auto make_link = [&](int kind) -> GLink {
        switch (kind) {
            case 0:
                return GLink(Fn1D("sqrt(x)", Interval{0.0, ghi}),
                             ast::pow(ast::variable(), ast::constant(2.0)));
            case 1: {
                double lo = power_f ? std::max(0.35, 1.0 / k) + 0.03 : 0.32;
                double p = rng.uniform(lo, 0.95);
                return GLink(Fn1D(ast::pow(ast::variable(), ast::constant(p)),
                                  Interval{0.0, ghi}),
                             ast::pow(ast::variable(), ast::constant(1.0 / p)));
            }
            case 2:
                return GLink(Fn1D("log(x)", Interval{fmin * 0.9, ghi, fmin * 0.9 <= 0.0, false}),
                             ast::exp(ast::variable()));
            default:
                return GLink(Fn1D("x+sqrt(x)", Interval{0.0, ghi}), nullptr);
        }
    };
    return ScalarTrialSetup{f, make_link(g_kind), power_f};
}

CriterionResult criterion4(const AcceptanceOptions& opts) {
    CriterionResult r{4, "scalar-chain-property-suite", false, "", 0.0};
    auto t0 = Clock::now();

    Check c = run_trials(500, [&](std::uint64_t trial, Check& chk) {
        Rng rng(opts.seed * 1000003 + trial);
        ScalarTrialSetup setup = make_scalar_trial(rng);
        const Fn1D& f = setup.f;
        const GLink& g = setup.g;
        const Interval& J = f.domain();

        GConvexityVerdict gv = is_gconvex(f, g);
        chk.require(gv.ok, "generated pair failed g-convexity validation");
        if (!gv.ok) return;
        // validated g-convexity implies plain convexity of f
        chk.require(check_convex_on_grid(f).ok, "g-convex f must be convex");

        // jensen
        int npts = 1 + static_cast<int>(rng.uniform(0.0, 5.0));
        std::vector<double> xs, ws;
        double wsum = 0.0;
        for (int i = 0; i < npts; ++i) {
            xs.push_back(rng.uniform(J.lo + 1e-3 * J.width(), J.hi - 1e-3 * J.width()));
            ws.push_back(rng.uniform(0.1, 1.0));
            wsum += ws.back();
        }
        for (double& w : ws) w /= wsum;
        ChainReport jensen = jensen_chain(f, g, WeightedSample{xs, ws});
        chk.require(jensen.holds, "jensen chain violated");

        // superadditivity where the [0,a] preconditions hold
        if (setup.superadd_ok) {
            double x = rng.uniform(0.0, 0.5 * J.hi);
            double y = rng.uniform(0.0, 0.5 * J.hi);
            ChainReport sup = superadditivity_chain(f, g, x, y);
            chk.require(sup.holds, "superadditivity chain violated");
        }

        // hermite-hadamard refinements
        double a = rng.uniform(J.lo + 1e-3 * J.width(), J.hi - 1e-3 * J.width());
        double b = rng.uniform(J.lo + 1e-3 * J.width(), J.hi - 1e-3 * J.width());
        if (a > b) std::swap(a, b);
        if (b - a < 1e-3 * J.width()) b = std::min(J.hi - 1e-3 * J.width(),
                                                   a + 1e-2 * J.width());
        if (b > a) {
            ChainReport hh1 = hh_chain_v1(f, g, a, b);
            chk.require(hh1.holds, "hh_chain_v1 violated");
            ChainReport hh2 = hh_chain_v2(f, g, a, b);
            chk.require(hh2.holds, "hh_chain_v2 violated");
            ChainReport tan = tangent_chain(f, g, a, b, TangentMode::GConvex);
            chk.require(tan.holds, "tangent chain violated");
        }
    });

    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    c.require(r.seconds < 30.0, "runtime " + fmt(r.seconds) + "s exceeds 30s");
    r.passed = c.ok;
    r.details = c.ok ? "500 trials, all verdicts hold (" + fmt(r.seconds) + "s)"
                     : c.first_failure;
    return r;
}

// --------------------------------------------------------------------------
// Criterion 5: randomized matrix chains.

CriterionResult criterion5(const AcceptanceOptions& opts) {
    CriterionResult r{5, "matrix-chain-property-suite", false, "", 0.0};
    auto t0 = Clock::now();

    Check c = run_trials(200, [&](std::uint64_t trial, Check& chk) {
        Rng rng(opts.seed * 2000003 + trial);
        int n = 2 + static_cast<int>(rng.uniform(0.0, 7.0));
        if (n > 8) n = 8;
        int count = 1 + static_cast<int>(rng.uniform(0.0, 3.0));
        if (count > 3) count = 3;

        std::vector<HermitianMatrix> as;
        double max_eig = 0.0;
        for (int i = 0; i < count; ++i) {
            HermitianMatrix a = random_psd(n, rng).scaled(1.0 / n);
            EigenSystem es = eigh(a);
            max_eig = std::max(max_eig, es.eigenvalues.front());
            as.push_back(std::move(a));
        }
        std::vector<double> ws;
        double wsum = 0.0;
        for (int i = 0; i < count; ++i) {
            ws.push_back(rng.uniform(0.1, 1.0));
            wsum += ws.back();
        }
        for (double& w : ws) w /= wsum;

        int f_kind = static_cast<int>(rng.uniform(0.0, 3.0)) % 3;  // x^2, x^3, e^x
        bool power_f = f_kind < 2;
        double fhi = std::max(1.0, max_eig) * 1.01 + 0.1;
        Fn1D f = power_f ? Fn1D(ast::pow(ast::variable(), ast::constant(f_kind == 0 ? 2.0 : 3.0)),
                                Interval{0.0, fhi})
                         : Fn1D("exp(x)", Interval{0.0, fhi});

        double fmax = power_f ? std::pow(fhi, f_kind == 0 ? 2.0 : 3.0) : std::exp(fhi);
        double ghi = fmax * 1.05 + 1.0;
        int g_kind = static_cast<int>(rng.uniform(0.0, power_f ? 2.0 : 3.0));
        GLink g = [&]() -> GLink {
            switch (g_kind) {
                case 0:
                    return GLink(Fn1D("sqrt(x)", Interval{0.0, ghi}),
                                 ast::pow(ast::variable(), ast::constant(2.0)));
                case 1:
                    return GLink(Fn1D("x+sqrt(x)", Interval{0.0, ghi}), nullptr);
                default:  // log link, only for exp f (range stays >= 1 > 0)
                    return GLink(Fn1D("log(x)", Interval{0.9, ghi}), ast::exp(ast::variable()));
            }
        }();

        MajorizationChainResult mc = majorization_chain(as, ws, f, g);
        chk.require(mc.holds(), "majorization chain violated");

        // norm chains need (g.f)(0) <= 0, so power f with a zero-passing link
        if (power_f && g_kind <= 1 && count >= 2) {
            for (const NormSpec& norm :
                 {NormSpec::operator_norm(), NormSpec::trace_norm(), NormSpec::kyfan(2),
                  NormSpec::schatten(3.0)}) {
                // widen the domain so spectra of A+B fit
                Fn1D f2(f.formula(), Interval{0.0, 2.0 * fhi});
                double g2hi = std::pow(2.0 * fhi, f_kind == 0 ? 2.0 : 3.0) * 1.05 + 1.0;
                GLink g2 = g_kind == 0
                               ? GLink(Fn1D("sqrt(x)", Interval{0.0, g2hi}),
                                       ast::pow(ast::variable(), ast::constant(2.0)))
                               : GLink(Fn1D("x+sqrt(x)", Interval{0.0, g2hi}), nullptr);
                ChainReport nc = norm_chain(as[0], as[1], f2, g2, norm);
                chk.require(nc.holds, "norm chain violated for " + norm.name());
            }
        }

        ChainReport inner = jensen_inner_product(as[0], random_unit_vector(n, rng), f, g);
        chk.require(inner.holds, "inner-product jensen chain violated");

        double rexp = rng.uniform(2.0, 4.0);
        PowerSqrtChainResult pc = power_sqrt_chain(as, ws, rexp);
        chk.require(pc.chain.holds(), "power chain violated");
        chk.require(pc.route_discrepancy <= 1e-9,
                    "closed-form vs generic middle disagree by " + fmt(pc.route_discrepancy));
    });

    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    c.require(r.seconds < 60.0, "runtime " + fmt(r.seconds) + "s exceeds 60s");
    r.passed = c.ok;
    r.details = c.ok ? "200 trials, all verdicts hold (" + fmt(r.seconds) + "s)"
                     : c.first_failure;
    return r;
}

// --------------------------------------------------------------------------
// Criterion 6: entropy bound over random density pairs.

CriterionResult criterion6(const AcceptanceOptions& opts) {
    CriterionResult r{6, "entropy-bound-property-suite", false, "", 0.0};
    auto t0 = Clock::now();

    Check c = run_trials(100, [&](std::uint64_t trial, Check& chk) {
        Rng rng(opts.seed * 3000017 + trial);
        int n = trial % 2 == 0 ? 2 : 3;
        auto density = [&]() {
            HermitianMatrix a = random_psd(n, rng);
            return validate_density(a.scaled(1.0 / a.trace_real()));
        };
        DensityMatrix rho = density();
        DensityMatrix sigma = density();
        EntropyReport rep = entropy_lower_bound(rho, sigma);
        chk.require(rep.d.finite, "D must be finite for PD sigma");
        chk.require(rep.bound >= -1e-9, "bound fell below 0 by " + fmt(-rep.bound));
        chk.require(rep.bound <= rep.d.value + 1e-9,
                    "bound exceeds D by " + fmt(rep.bound - rep.d.value));

        EntropyReport eq = entropy_lower_bound(rho, rho);
        chk.require(std::fabs(eq.bound) <= 1e-12 && std::fabs(eq.d.value) <= 1e-12,
                    "equality case off: D=" + fmt(eq.d.value) + " bound=" + fmt(eq.bound));
    });

    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    r.passed = c.ok;
    r.details = c.ok ? "100 qubit/qutrit pairs within bounds" : c.first_failure;
    return r;
}

// --------------------------------------------------------------------------
// Criterion 7: oracle checks.

ExprPtr random_safe_expr(Rng& rng, int depth) {
    using namespace ast;
    if (depth <= 0) {
        return rng.uniform() < 0.6 ? variable() : constant(rng.uniform(0.5, 2.5));
    }
    int pick = static_cast<int>(rng.uniform(0.0, 8.0)) % 8;
    switch (pick) {
        case 0: return add(random_safe_expr(rng, depth - 1), random_safe_expr(rng, depth - 1));
        case 1: return sub(random_safe_expr(rng, depth - 1), random_safe_expr(rng, depth - 1));
        case 2: return mul(random_safe_expr(rng, depth - 1), random_safe_expr(rng, depth - 1));
        case 3:
            // denominator bounded away from zero on [0.3, 2]
            return div(random_safe_expr(rng, depth - 1),
                       add(variable(), constant(rng.uniform(1.0, 3.0))));
        case 4: return sqrt(add(variable(), constant(rng.uniform(0.5, 2.0))));
        case 5: return log(add(variable(), constant(rng.uniform(0.8, 2.0))));
        case 6: return exp(mul(constant(rng.uniform(-1.2, 1.2)), random_safe_expr(rng, 0)));
        default: {
            static const double exps[] = {-2.0, -1.5, -1.0, -0.5, 0.5, 1.5, 2.0, 3.0};
            return pow(add(variable(), constant(rng.uniform(0.5, 2.0))),
                       constant(exps[rng.next_u64() % 8]));
        }
    }
}

CriterionResult criterion7(const AcceptanceOptions& opts) {
    CriterionResult r{7, "numeric-oracle-checks", false, "", 0.0};
    auto t0 = Clock::now();
    Check c;

    // 7a: symbolic derivatives against central differences
    {
        Rng rng(opts.seed * 4000037);
        int accepted = 0;
        int attempts = 0;
        const double h = 1e-5;
        while (accepted < 1000 && attempts < 20000) {
            ++attempts;
            ExprPtr e = random_safe_expr(rng, 1 + static_cast<int>(rng.uniform(0.0, 3.0)));
            double x = rng.uniform(0.3, 2.0);
            double fp, fm, dv;
            try {
                fp = eval(e, x + h);
                fm = eval(e, x - h);
                dv = eval(differentiate(e), x);
            } catch (const Error&) {
                continue;
            }
            if (std::fabs(fp) > 1e6 || std::fabs(fm) > 1e6 || std::fabs(dv) > 1e6) continue;
            double central = (fp - fm) / (2.0 * h);
            ++accepted;
            if (std::fabs(dv - central) > 1e-4 * (1.0 + std::fabs(dv))) {
                c.require(false, "derivative mismatch for " + serialize(e) + " at x=" + fmt(x) +
                                     ": symbolic " + fmt(dv) + " vs central " + fmt(central));
                break;
            }
        }
        c.require(accepted >= 1000, "could not draw 1000 in-domain derivative samples");
    }

    // 7b: eigendecomposition reconstruction and trace invariance
    if (c.ok) {
        Rng rng(opts.seed * 5000011);
        for (int n : {2, 3, 4, 8, 16, 32}) {
            HermitianMatrix a = random_hermitian(n, rng);
            EigenSystem es = eigh(a);
            Matrix scaled(n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    scaled.at(i, j) = es.vectors.at(i, j) * es.eigenvalues[static_cast<std::size_t>(j)];
            Matrix rec = scaled * es.vectors.adjoint();
            double scale = 1.0 + a.matrix().frobenius();
            c.require((rec - a.matrix()).frobenius() <= 1e-9 * scale,
                      "eigh reconstruction error at n=" + std::to_string(n));
            double tr_eig = 0.0;
            for (double ev : es.eigenvalues) tr_eig += ev;
            c.require(std::fabs(tr_eig - a.trace_real()) <= 1e-9 * (1.0 + std::fabs(a.trace_real())),
                      "trace invariance fails at n=" + std::to_string(n));
        }
    }

    // 7c: quadrature stability under 8x refinement on the HH examples
    if (c.ok) {
        Fn1D f("exp(x)", Interval{0.0, 1.0});
        GLink g(Fn1D("sqrt(x)", Interval{0.0, 3.0}),
                ast::pow(ast::variable(), ast::constant(2.0)));
        ChainReport coarse1 = hh_chain_v1(f, g, 0.0, 1.0, QuadratureSpec{2048});
        ChainReport fine1 = hh_chain_v1(f, g, 0.0, 1.0, QuadratureSpec{16384});
        ChainReport coarse2 = hh_chain_v2(f, g, 0.0, 1.0, QuadratureSpec{2048});
        ChainReport fine2 = hh_chain_v2(f, g, 0.0, 1.0, QuadratureSpec{16384});
        for (std::size_t i = 0; i < coarse1.values.size(); ++i)
            c.require(std::fabs(coarse1.values[i] - fine1.values[i]) <=
                          1e-9 * (1.0 + std::fabs(fine1.values[i])),
                      "hh_chain_v1 term " + std::to_string(i) + " unstable under refinement");
        for (std::size_t i = 0; i < coarse2.values.size(); ++i)
            c.require(std::fabs(coarse2.values[i] - fine2.values[i]) <=
                          1e-9 * (1.0 + std::fabs(fine2.values[i])),
                      "hh_chain_v2 term " + std::to_string(i) + " unstable under refinement");
    }

    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    r.passed = c.ok;
    r.details = c.ok ? "derivatives, eigh, quadrature oracles agree" : c.first_failure;
    return r;
}

// --------------------------------------------------------------------------
// Criterion 8: log-convexity of the norm interpolation scan.

CriterionResult criterion8(const AcceptanceOptions&) {
    CriterionResult r{8, "norm-interpolation-log-convexity", false, "", 0.0};
    auto t0 = Clock::now();
    Check c;

    HermitianMatrix a = HermitianMatrix::diagonal({4.0, 1.0});
    HermitianMatrix b = HermitianMatrix::diagonal({1.0, 4.0});
    Matrix x(2);
    x.at(0, 0) = x.at(0, 1) = x.at(1, 0) = x.at(1, 1) = 1.0;

    NormInterpolationScan scan = norm_interpolation_scan(a, x, b, NormSpec::trace_norm());
    c.require(!scan.degenerate, "scan must not be degenerate");
    c.require(scan.log_convex, "log-convexity fails: min second difference " +
                                   fmt(scan.min_second_difference));
    c.require(scan.min_second_difference >= -1e-10,
              "second difference " + fmt(scan.min_second_difference) + " below -1e-10");

    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    r.passed = c.ok;
    r.details = c.ok ? "min second difference " + fmt(scan.min_second_difference)
                     : c.first_failure;
    return r;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts, int only) {
    std::vector<CriterionResult> out;
    using Fn = CriterionResult (*)(const AcceptanceOptions&);
    const Fn criteria[] = {criterion1, criterion2, criterion3, criterion4,
                           criterion5, criterion6, criterion7, criterion8};
    for (int id = 1; id <= 8; ++id) {
        if (only != -1 && only != id) continue;
        out.push_back(criteria[id - 1](opts));
    }
    return out;
}

}  // namespace gconvex
