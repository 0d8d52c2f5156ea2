// gconvex: numerical verification front end for link-composed convexity
// chains, convexity-index estimation, Hermitian majorization and norm
// chains, and density-matrix entropy bounds.
//
// Exit codes: 0 all asserted verdicts hold, 1 verdict violation,
// 2 input error.

#include <algorithm>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gconvex/chains.hpp"
#include "gconvex/convindex.hpp"
#include "gconvex/matanalysis.hpp"
#include "gconvex/matio.hpp"
#include "gconvex/qentropy.hpp"
#include "gconvex/report.hpp"
#include "gconvex/suite.hpp"

namespace gx = gconvex;

namespace {

struct CommonOpts {
    std::string out_path;
    bool deterministic = false;
    std::uint64_t seed = 42;
    double tol = -1.0;  // <0: default scaling rule
    int grid_n = 257;
    int panels = 2048;
};

std::vector<double> parse_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw gx::InputError("empty entry in list '" + text + "'");
        std::size_t used = 0;
        out.push_back(std::stod(tok, &used));
        if (used != tok.size()) throw gx::InputError("bad number '" + tok + "'");
    }
    if (out.empty()) throw gx::InputError("empty list");
    return out;
}

// Interval syntax: "lo,hi", or with explicit endpoint style
// "[lo,hi]", "(lo,hi)", "[lo,hi)", "(lo,hi]".
gx::Interval parse_interval(std::string text) {
    gx::Interval iv;
    if (!text.empty() && (text.front() == '[' || text.front() == '(')) {
        iv.open_lo = text.front() == '(';
        if (text.back() != ']' && text.back() != ')')
            throw gx::InputError("interval '" + text + "' must close with ] or )");
        iv.open_hi = text.back() == ')';
        text = text.substr(1, text.size() - 2);
    }
    std::vector<double> vals = parse_list(text);
    if (vals.size() != 2) throw gx::InputError("interval needs exactly two endpoints");
    iv.lo = vals[0];
    iv.hi = vals[1];
    if (!(iv.hi > iv.lo)) throw gx::InputError("interval endpoints must satisfy lo < hi");
    return iv;
}

std::vector<gx::cx> parse_vector(const std::string& text) {
    std::vector<gx::cx> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ';')) {
        if (tok.empty()) continue;
        out.push_back(gx::parse_entry(tok));
    }
    if (out.empty()) throw gx::InputError("empty vector");
    return out;
}

// Builds the link; with no explicit domain, pads the range of f and
// falls back to inset endpoints when the link formula is singular at
// the boundary.
gx::GLink build_link(const std::string& g_text, const std::optional<std::string>& g_dom,
                     const std::optional<std::string>& ginv_text, const gx::Fn1D& f,
                     const gx::GridSpec& grid) {
    gx::Interval dom;
    if (g_dom) {
        dom = parse_interval(*g_dom);
    } else {
        double fmin = std::numeric_limits<double>::max();
        double fmax = std::numeric_limits<double>::lowest();
        for (double x : gx::grid_points(f.domain(), grid)) {
            double v = f(x);
            fmin = std::min(fmin, v);
            fmax = std::max(fmax, v);
        }
        const double pad = 1e-6 * (1.0 + fmax - fmin);
        dom = gx::Interval{fmin - pad, fmax + pad};
        if (dom.lo > 0.0 && dom.lo < 1e-6) dom.lo = 0.0;  // snap to the natural origin
    }
    auto construct = [&](gx::Interval d) {
        gx::Fn1D g(g_text, d, grid);
        return ginv_text ? gx::GLink(std::move(g), gx::parse(*ginv_text), grid)
                         : gx::GLink(std::move(g), nullptr, grid);
    };
    try {
        return construct(dom);
    } catch (const gx::EvalError&) {
        if (g_dom) throw;  // explicit domain: surface the error
        gx::Interval inset = dom;
        inset.open_lo = inset.open_hi = true;
        return construct(inset);
    }
}

int emit(const CommonOpts& common, gx::Report& report, int exit_code) {
    report.set("exit", static_cast<double>(exit_code));
    std::string text = gx::render_report(report);
    if (common.out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(common.out_path);
        if (!out) {
            std::cerr << "gconvex: cannot write report to '" << common.out_path << "'\n";
            return 2;
        }
        out << text;
    }
    return exit_code;
}

gx::Report make_report(const std::string& command, const CommonOpts& common) {
    gx::Report r;
    r.set("command", command);
    r.set("seed", static_cast<double>(common.seed));
    if (!common.deterministic)
        r.set("timestamp", std::to_string(static_cast<long long>(std::time(nullptr))));
    return r;
}

void note_gconvexity(gx::Report& report, const gx::Fn1D& f, const gx::GLink& g,
                     const gx::GridSpec& grid, bool concave_mode = false) {
    gx::GConvexityVerdict v =
        concave_mode ? gx::is_gconcave(f, g, grid) : gx::is_gconvex(f, g, grid);
    report.set(concave_mode ? "gconcave_check" : "gconvex_check", v.ok ? "pass" : "fail");
    if (!v.ok) {
        report.set("gconvex_composition", v.composition_convex ? "ok" : "fail");
        report.set("gconvex_link", v.link_ok ? "ok" : "fail");
    }
}

int chain_exit(const gx::ChainReport& chain) { return chain.holds ? 0 : 1; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical checks for link-composed convexity inequalities"};
    app.require_subcommand(1);

    CommonOpts common;
    if (const char* env_tol = std::getenv("GCONVEX_TOL")) {
        try {
            common.tol = std::stod(env_tol);
        } catch (const std::exception&) {
            std::cerr << "gconvex: bad GCONVEX_TOL value '" << env_tol << "'\n";
            return 2;
        }
    }
    app.add_option("--out", common.out_path, "write the report to this file instead of stdout");
    app.add_flag("--deterministic", common.deterministic,
                 "omit the timestamp so identical runs emit identical bytes");
    app.add_option("--seed", common.seed, "seed for randomized subcommands (default 42)");
    app.add_option("--tol", common.tol, "absolute chain tolerance override");
    app.add_option("--grid-n", common.grid_n, "grid point count (default 257)");
    app.add_option("--panels", common.panels, "Simpson panel count (default 2048)");

    // shared option storage
    std::string f_text, g_text, rho_path, sigma_path, a_path, b_path, x_path;
    std::optional<std::string> f_dom, g_dom, ginv_text;
    std::string points_text, weights_text, norm_text = "operator", xvec_text, rs_text;
    std::vector<std::string> matrix_paths;
    std::string mode_text = "gconvex";
    double a = 0.0, b = 1.0, t = 0.5, p = 1.0, x_val = 0.0, y_val = 0.0, r_exp = 2.0;
    int dim = 3;
    std::uint64_t trials = 1000;
    int criterion = -1;

    auto add_f = [&](CLI::App* cmd, bool with_dom = true) {
        cmd->add_option("--f", f_text, "function formula in x")->required();
        if (with_dom) cmd->add_option("--fdom", [&](const std::vector<std::string>& v) {
            f_dom = v.front();
            return true;
        }, "domain of f, e.g. \"[0,4]\" or \"(0.1,10)\"");
    };
    auto add_g = [&](CLI::App* cmd) {
        cmd->add_option("--g", g_text, "link formula in x (increasing, concave)")->required();
        cmd->add_option("--gdom", [&](const std::vector<std::string>& v) {
            g_dom = v.front();
            return true;
        }, "domain of g (default: padded range of f)");
        cmd->add_option("--ginv", [&](const std::vector<std::string>& v) {
            ginv_text = v.front();
            return true;
        }, "symbolic inverse of g (default: bisection)");
    };

    CLI::App* c_jensen = app.add_subcommand("jensen", "weighted Jensen chain");
    add_f(c_jensen);
    add_g(c_jensen);
    c_jensen->add_option("--points", points_text, "comma-separated sample points")->required();
    c_jensen->add_option("--weights", weights_text, "comma-separated positive weights")
        ->required();

    CLI::App* c_young = app.add_subcommand("young", "refined Young inequality");
    c_young->add_option("--a", a)->required();
    c_young->add_option("--b", b)->required();
    c_young->add_option("--t", t)->required();
    c_young->add_option("--p", p)->required();

    CLI::App* c_heinz = app.add_subcommand("heinz", "refined Heinz mean chain");
    c_heinz->add_option("--a", a)->required();
    c_heinz->add_option("--b", b)->required();
    c_heinz->add_option("--t", t)->required();
    c_heinz->add_option("--p", p)->required();

    CLI::App* c_superadd = app.add_subcommand("superadd", "superadditivity chain on [0, a]");
    add_f(c_superadd);
    add_g(c_superadd);
    c_superadd->add_option("--x", x_val)->required();
    c_superadd->add_option("--y", y_val)->required();

    CLI::App* c_hh1 = app.add_subcommand("hh1", "Hermite-Hadamard refinement (secant form)");
    add_f(c_hh1);
    add_g(c_hh1);
    c_hh1->add_option("--a", a)->required();
    c_hh1->add_option("--b", b)->required();

    CLI::App* c_hh2 = app.add_subcommand("hh2", "Hermite-Hadamard refinement (symmetrized)");
    add_f(c_hh2);
    add_g(c_hh2);
    c_hh2->add_option("--a", a)->required();
    c_hh2->add_option("--b", b)->required();

    CLI::App* c_tangent = app.add_subcommand("tangent", "tangent-line refinement chain");
    add_f(c_tangent);
    add_g(c_tangent);
    c_tangent->add_option("--a", a)->required();
    c_tangent->add_option("--b", b)->required();
    c_tangent->add_option("--mode", mode_text, "gconvex or gconcave");

    CLI::App* c_index = app.add_subcommand("index", "convexity index estimate");
    add_f(c_index, false);
    c_index->add_option("--a", a, "domain lower endpoint")->required();
    c_index->add_option("--b", b, "domain upper endpoint")->required();

    CLI::App* c_scan = app.add_subcommand("scan", "convex exponent scan");
    add_f(c_scan, false);
    c_scan->add_option("--a", a)->required();
    c_scan->add_option("--b", b)->required();
    c_scan->add_option("--rs", rs_text, "comma-separated exponents >= 1")->required();

    CLI::App* c_majorize = app.add_subcommand("majorize", "weak majorization chain");
    add_f(c_majorize);
    add_g(c_majorize);
    c_majorize->add_option("--matrix", matrix_paths, "matrix file (repeatable)")->required();
    c_majorize->add_option("--weights", weights_text)->required();

    CLI::App* c_power = app.add_subcommand("powerchain", "power/sqrt-link majorization chain");
    c_power->add_option("--matrix", matrix_paths, "matrix file (repeatable)")->required();
    c_power->add_option("--weights", weights_text)->required();
    c_power->add_option("--r", r_exp, "power exponent >= 2")->required();

    CLI::App* c_norm = app.add_subcommand("normchain", "unitarily invariant norm chain");
    add_f(c_norm);
    add_g(c_norm);
    c_norm->add_option("--A", a_path)->required();
    c_norm->add_option("--B", b_path)->required();
    c_norm->add_option("--norm", norm_text, "operator|trace|frobenius|kyfan:K|schatten:P");

    CLI::App* c_inner = app.add_subcommand("innerjensen", "inner-product Jensen chain");
    add_f(c_inner);
    add_g(c_inner);
    c_inner->add_option("--A", a_path)->required();
    c_inner->add_option("--xvec", xvec_text, "unit vector, ';'-separated entries")->required();

    CLI::App* c_opcheck = app.add_subcommand("opcheck", "randomized operator chain search");
    add_f(c_opcheck);
    add_g(c_opcheck);
    c_opcheck->add_option("--n", dim, "matrix dimension");
    c_opcheck->add_option("--trials", trials, "trial count");

    CLI::App* c_interp = app.add_subcommand("interp", "norm interpolation log-convexity scan");
    c_interp->add_option("--A", a_path)->required();
    c_interp->add_option("--B", b_path)->required();
    c_interp->add_option("--X", x_path)->required();
    c_interp->add_option("--norm", norm_text);

    CLI::App* c_entropy = app.add_subcommand("entropy", "relative entropy lower bound");
    c_entropy->add_option("--rho", rho_path)->required();
    c_entropy->add_option("--sigma", sigma_path)->required();

    CLI::App* c_jeffrey = app.add_subcommand("jeffrey", "Jeffrey divergence lower bound");
    c_jeffrey->add_option("--rho", rho_path)->required();
    c_jeffrey->add_option("--sigma", sigma_path)->required();

    CLI::App* c_suite = app.add_subcommand("suite", "run the full acceptance battery");
    c_suite->add_option("--criterion", criterion, "run a single criterion (1-8)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << app.help() << "\n";
        std::cerr << "gconvex: " << e.what() << "\n";
        return 2;
    }

    try {
        gx::GridSpec grid(common.grid_n);
        gx::QuadratureSpec quad{common.panels};

        auto make_f = [&](gx::Interval fallback) {
            return gx::Fn1D(f_text, f_dom ? parse_interval(*f_dom) : fallback, grid);
        };

        if (c_jensen->parsed()) {
            std::vector<double> pts = parse_list(points_text);
            std::vector<double> ws = parse_list(weights_text);
            auto [mn, mx] = std::minmax_element(pts.begin(), pts.end());
            double pad = 1e-9 * (1.0 + *mx - *mn);
            gx::Fn1D f = make_f(gx::Interval{*mn - pad, std::max(*mx + pad, *mn + 1.0)});
            gx::GLink g = build_link(g_text, g_dom, ginv_text, f, grid);
            gx::Report rep = make_report("jensen", common);
            note_gconvexity(rep, f, g, grid);
            gx::ChainReport chain = gx::jensen_chain(f, g, gx::WeightedSample{pts, ws}, common.tol);
            add_chain(rep, chain);
            return emit(common, rep, chain_exit(chain));
        }
        if (c_young->parsed() || c_heinz->parsed()) {
            bool young = c_young->parsed();
            gx::Report rep = make_report(young ? "young" : "heinz", common);
            gx::ChainReport chain = young ? gx::young_refined(a, b, t, p, common.tol)
                                          : gx::heinz_refined(a, b, t, p, common.tol);
            add_chain(rep, chain);
            return emit(common, rep, chain_exit(chain));
        }
        if (c_superadd->parsed()) {
            gx::Fn1D f = make_f(gx::Interval{0.0, std::max(x_val + y_val, 1e-9)});
            gx::GLink g = build_link(g_text, g_dom, ginv_text, f, grid);
            gx::Report rep = make_report("superadd", common);
            note_gconvexity(rep, f, g, grid);
            gx::ChainReport chain = gx::superadditivity_chain(f, g, x_val, y_val, grid, common.tol);
            add_chain(rep, chain);
            return emit(common, rep, chain_exit(chain));
        }
        if (c_hh1->parsed() || c_hh2->parsed()) {
            bool v1 = c_hh1->parsed();
            gx::Fn1D f = make_f(gx::Interval{std::min(a, b), std::max(a, b) + 1e-12});
            gx::GLink g = build_link(g_text, g_dom, ginv_text, f, grid);
            gx::Report rep = make_report(v1 ? "hh1" : "hh2", common);
            note_gconvexity(rep, f, g, grid);
            rep.set("panels", static_cast<double>(quad.panels));
            gx::ChainReport chain = v1 ? gx::hh_chain_v1(f, g, a, b, quad, common.tol)
                                       : gx::hh_chain_v2(f, g, a, b, quad, common.tol);
            add_chain(rep, chain);
            return emit(common, rep, chain_exit(chain));
        }
        if (c_tangent->parsed()) {
            gx::TangentMode mode;
            if (mode_text == "gconvex")
                mode = gx::TangentMode::GConvex;
            else if (mode_text == "gconcave")
                mode = gx::TangentMode::GConcave;
            else
                throw gx::InputError("--mode must be gconvex or gconcave");
            gx::Fn1D f = make_f(gx::Interval{std::min(a, b), std::max(a, b) + 1e-12});
            gx::GLink g = build_link(g_text, g_dom, ginv_text, f, grid);
            gx::Report rep = make_report("tangent", common);
            note_gconvexity(rep, f, g, grid, mode == gx::TangentMode::GConcave);
            gx::ChainReport chain = gx::tangent_chain(f, g, a, b, mode, common.tol);
            add_chain(rep, chain);
            return emit(common, rep, chain_exit(chain));
        }
        if (c_index->parsed()) {
            gx::Fn1D f(f_text, gx::Interval{a, b, true, true}, grid);
            gx::IndexResult idx = gx::index_differential(f, grid);
            gx::Report rep = make_report("index", common);
            rep.set("status", "holds");
            rep.add_row("index", idx.is_infinite ? "inf" : gx::format_double(idx.value));
            if (idx.infimum_defined) {
                rep.add_row("criterion_infimum", idx.criterion_infimum);
                rep.add_row("witness_x", idx.witness_x);
            }
            return emit(common, rep, 0);
        }
        if (c_scan->parsed()) {
            gx::Fn1D f(f_text, gx::Interval{a, b, true, true}, grid);
            gx::ExponentScan scan = gx::exponent_scan(f, parse_list(rs_text), grid);
            gx::Report rep = make_report("scan", common);
            bool monotone = true, seen_false = false;
            for (bool flag : scan.convex_flags) {
                if (!flag) seen_false = true;
                else if (seen_false) monotone = false;
            }
            rep.set("status", monotone ? "holds" : "violated");
            rep.set("interval", "[1," + gx::format_double(scan.interval_hi) + "]");
            for (std::size_t i = 0; i < scan.exponents.size(); ++i)
                rep.add_row("r=" + gx::format_double(scan.exponents[i]),
                            scan.convex_flags[i] ? "convex" : "nonconvex");
            return emit(common, rep, monotone ? 0 : 1);
        }
        if (c_majorize->parsed() || c_power->parsed()) {
            std::vector<gx::HermitianMatrix> as;
            for (const std::string& path : matrix_paths)
                as.emplace_back(gx::read_matrix_file(path));
            std::vector<double> ws = parse_list(weights_text);
            gx::Report rep = make_report(c_majorize->parsed() ? "majorize" : "powerchain", common);
            gx::MajorizationChainResult mc;
            if (c_majorize->parsed()) {
                double lo = std::numeric_limits<double>::max();
                double hi = std::numeric_limits<double>::lowest();
                for (const auto& m : as) {
                    gx::EigenSystem es = gx::eigh(m);
                    lo = std::min(lo, es.eigenvalues.back());
                    hi = std::max(hi, es.eigenvalues.front());
                }
                double pad = 1e-6 * (1.0 + hi - lo);
                gx::Fn1D f = make_f(gx::Interval{lo - pad, hi + pad});
                gx::GLink g = build_link(g_text, g_dom, ginv_text, f, grid);
                note_gconvexity(rep, f, g, grid);
                mc = gx::majorization_chain(as, ws, f, g, common.tol);
            } else {
                gx::PowerSqrtChainResult pc = gx::power_sqrt_chain(as, ws, r_exp, common.tol);
                rep.set("route_discrepancy", pc.route_discrepancy);
                mc = pc.chain;
            }
            rep.set("tol", mc.tol);
            rep.set("status", mc.holds() ? "holds" : "violated");
            rep.add_row("spectrum_f_of_mean", gx::join_spectrum(mc.spectrum_f_of_mean));
            rep.add_row("spectrum_link_mixture", gx::join_spectrum(mc.spectrum_link_mixture), "",
                        mc.first_majorized ? "ok" : "violated");
            rep.add_row("spectrum_mean_of_f", gx::join_spectrum(mc.spectrum_mean_of_f), "",
                        mc.second_majorized ? "ok" : "violated");
            return emit(common, rep, mc.holds() ? 0 : 1);
        }
        if (c_norm->parsed()) {
            gx::HermitianMatrix A(gx::read_matrix_file(a_path));
            gx::HermitianMatrix B(gx::read_matrix_file(b_path));
            double hi = std::max(gx::eigh(A).eigenvalues.front() +
                                     gx::eigh(B).eigenvalues.front(),
                                 1e-6);
            gx::Fn1D f = make_f(gx::Interval{0.0, hi * 1.01 + 1e-9});
            gx::GLink g = build_link(g_text, g_dom, ginv_text, f, grid);
            gx::Report rep = make_report("normchain", common);
            rep.set("norm", norm_text);
            note_gconvexity(rep, f, g, grid);
            gx::ChainReport chain =
                gx::norm_chain(A, B, f, g, gx::NormSpec::parse(norm_text), common.tol);
            add_chain(rep, chain);
            return emit(common, rep, chain_exit(chain));
        }
        if (c_inner->parsed()) {
            gx::HermitianMatrix A(gx::read_matrix_file(a_path));
            gx::EigenSystem es = gx::eigh(A);
            double pad = 1e-6 * (1.0 + es.eigenvalues.front() - es.eigenvalues.back());
            gx::Fn1D f = make_f(
                gx::Interval{es.eigenvalues.back() - pad, es.eigenvalues.front() + pad});
            gx::GLink g = build_link(g_text, g_dom, ginv_text, f, grid);
            gx::Report rep = make_report("innerjensen", common);
            note_gconvexity(rep, f, g, grid);
            gx::ChainReport chain =
                gx::jensen_inner_product(A, parse_vector(xvec_text), f, g, common.tol);
            add_chain(rep, chain);
            return emit(common, rep, chain_exit(chain));
        }
        if (c_opcheck->parsed()) {
            if (!f_dom) throw gx::InputError("opcheck requires --fdom");
            gx::Fn1D f = make_f(gx::Interval{0.0, 1.0});
            gx::GLink g = build_link(g_text, g_dom, ginv_text, f, grid);
            gx::OperatorChainSampleReport rep_data =
                gx::operator_chain_sample(f, g, dim, trials, common.seed, common.tol);
            gx::Report rep = make_report("opcheck", common);
            rep.set("tol", rep_data.tol);
            rep.set("status", rep_data.counterexamples == 0 ? "holds" : "violated");
            rep.add_row("trials", static_cast<double>(rep_data.trials));
            rep.add_row("counterexamples", static_cast<double>(rep_data.counterexamples));
            for (const auto& ex : rep_data.examples) {
                std::ostringstream os;
                os << "trial=" << ex.trial << " v=" << gx::format_double(ex.v)
                   << " min_eig_first=" << gx::format_double(ex.min_eig_first)
                   << " min_eig_second=" << gx::format_double(ex.min_eig_second);
                rep.add_row("counterexample", os.str());
                std::ostringstream ma, mb;
                gx::write_matrix(ma, ex.A.matrix());
                gx::write_matrix(mb, ex.B.matrix());
                std::string amat = ma.str(), bmat = mb.str();
                for (char& ch : amat)
                    if (ch == '\n') ch = '|';
                for (char& ch : bmat)
                    if (ch == '\n') ch = '|';
                rep.add_row("counterexample_A", amat);
                rep.add_row("counterexample_B", bmat);
            }
            return emit(common, rep, rep_data.counterexamples == 0 ? 0 : 1);
        }
        if (c_interp->parsed()) {
            gx::HermitianMatrix A(gx::read_matrix_file(a_path));
            gx::HermitianMatrix B(gx::read_matrix_file(b_path));
            gx::Matrix X = gx::read_matrix_file(x_path);
            gx::NormInterpolationScan scan =
                gx::norm_interpolation_scan(A, X, B, gx::NormSpec::parse(norm_text), grid);
            gx::Report rep = make_report("interp", common);
            rep.set("norm", norm_text);
            if (scan.degenerate) {
                rep.set("status", "degenerate");
                rep.add_row("note", "X = 0, scan skipped");
                return emit(common, rep, 0);
            }
            rep.set("status", scan.log_convex ? "holds" : "violated");
            rep.set("min_second_difference", scan.min_second_difference);
            for (std::size_t i = 0; i < scan.ts.size(); ++i)
                rep.add_row("t=" + gx::format_double(scan.ts[i]), scan.phis[i]);
            return emit(common, rep, scan.log_convex ? 0 : 1);
        }
        if (c_entropy->parsed() || c_jeffrey->parsed()) {
            gx::DensityMatrix rho =
                gx::validate_density(gx::HermitianMatrix(gx::read_matrix_file(rho_path)));
            gx::DensityMatrix sigma =
                gx::validate_density(gx::HermitianMatrix(gx::read_matrix_file(sigma_path)));
            if (c_entropy->parsed()) {
                gx::EntropyReport er = gx::entropy_lower_bound(rho, sigma);
                gx::Report rep = make_report("entropy", common);
                rep.set("status", er.bound_below_d ? "holds" : "violated");
                rep.add_row("S_rho", er.s_rho);
                rep.add_row("S_sigma", er.s_sigma);
                rep.add_row("D", er.d.finite ? gx::format_double(er.d.value) : "inf");
                rep.add_row("lower_bound", er.bound, "",
                            er.bound_below_d ? "ok" : "violated");
                rep.add_row("gap", er.gap);
                rep.add_row("bound_nonnegative", er.bound_nonneg ? "yes" : "no");
                return emit(common, rep, er.bound_below_d ? 0 : 1);
            }
            gx::ChainReport chain = gx::jeffrey_bound(rho, sigma, common.tol);
            gx::Report rep = make_report("jeffrey", common);
            add_chain(rep, chain);
            return emit(common, rep, chain_exit(chain));
        }
        if (c_suite->parsed()) {
            gx::AcceptanceOptions opts;
            opts.seed = common.seed;
            std::vector<gx::CriterionResult> results = gx::run_acceptance(opts, criterion);
            gx::Report rep = make_report("suite", common);
            int failed = 0;
            for (const auto& res : results) {
                if (!res.passed) ++failed;
                std::string details = res.details;
                for (char& ch : details)
                    if (ch == ',') ch = ';';
                rep.add_row("criterion_" + std::to_string(res.id) + ":" + res.name, details, "",
                            res.passed ? "pass" : "fail");
            }
            rep.set("status", failed == 0 ? "holds" : "violated");
            rep.set("passed", static_cast<double>(results.size() - failed));
            rep.set("failed", static_cast<double>(failed));
            return emit(common, rep, failed == 0 ? 0 : 1);
        }
        std::cerr << "gconvex: no subcommand selected\n";
        return 2;
    } catch (const gx::Error& e) {
        std::cerr << "gconvex: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "gconvex: " << e.what() << "\n";
        return 2;
    }
}
