#include "gconvex/matanalysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace gconvex {

// ---------------------------------------------------------------------------
// Matrix

Matrix Matrix::identity(int n) {
    Matrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

Matrix Matrix::adjoint() const {
    Matrix m(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) m.at(j, i) = std::conj(at(i, j));
    return m;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    if (rhs.n_ != n_) throw PreconditionError("matrix dimension mismatch");
    Matrix m(n_);
    for (int i = 0; i < n_; ++i)
        for (int k = 0; k < n_; ++k) {
            cx aik = at(i, k);
            if (aik == cx{0.0, 0.0}) continue;
            for (int j = 0; j < n_; ++j) m.at(i, j) += aik * rhs.at(k, j);
        }
    return m;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
    if (rhs.n_ != n_) throw PreconditionError("matrix dimension mismatch");
    Matrix m(n_);
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] + rhs.a_[i];
    return m;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
    if (rhs.n_ != n_) throw PreconditionError("matrix dimension mismatch");
    Matrix m(n_);
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] - rhs.a_[i];
    return m;
}

Matrix Matrix::scaled(double s) const {
    Matrix m(n_);
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] * s;
    return m;
}

cx Matrix::trace() const {
    cx t{0.0, 0.0};
    for (int i = 0; i < n_; ++i) t += at(i, i);
    return t;
}

double Matrix::frobenius() const {
    double s = 0.0;
    for (const cx& v : a_) s += std::norm(v);
    return std::sqrt(s);
}

double Matrix::max_abs() const {
    double s = 0.0;
    for (const cx& v : a_) s = std::max(s, std::abs(v));
    return s;
}

// ---------------------------------------------------------------------------
// HermitianMatrix

HermitianMatrix::HermitianMatrix(const Matrix& raw) : mat_(raw.n()) {
    const int n = raw.n();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            cx sym = 0.5 * (raw.at(i, j) + std::conj(raw.at(j, i)));
            if (i == j) sym = cx{sym.real(), 0.0};
            defect_ = std::max(defect_, std::abs(raw.at(i, j) - sym));
            mat_.at(i, j) = sym;
        }
    }
}

HermitianMatrix HermitianMatrix::diagonal(const std::vector<double>& d) {
    Matrix m(static_cast<int>(d.size()));
    for (int i = 0; i < m.n(); ++i) m.at(i, i) = d[static_cast<std::size_t>(i)];
    return HermitianMatrix(m);
}

HermitianMatrix HermitianMatrix::operator+(const HermitianMatrix& rhs) const {
    return HermitianMatrix(mat_ + rhs.mat_);
}

HermitianMatrix HermitianMatrix::scaled(double s) const {
    return HermitianMatrix(mat_.scaled(s));
}

// ---------------------------------------------------------------------------
// Cyclic Jacobi eigensolver

namespace {

double offdiag_frobenius(const Matrix& a) {
    double s = 0.0;
    for (int p = 0; p < a.n(); ++p)
        for (int q = p + 1; q < a.n(); ++q) s += 2.0 * std::norm(a.at(p, q));
    return std::sqrt(s);
}

}  // namespace

EigenSystem eigh(const HermitianMatrix& A) {
    const int n = A.n();
    Matrix a = A.matrix();
    Matrix v = Matrix::identity(n);
    const double norm_a = std::max(a.frobenius(), std::numeric_limits<double>::min());
    const double target = 1e-14 * norm_a;

    int sweep = 0;
    for (; sweep < 100; ++sweep) {
        if (offdiag_frobenius(a) <= target) break;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double gmag = std::abs(a.at(p, q));
                if (gmag == 0.0) continue;
                const cx phase = a.at(p, q) / gmag;  // a_pq = gmag * phase
                const double app = a.at(p, p).real();
                const double aqq = a.at(q, q).real();
                // Real 2x2 rotation for [[app, g], [g, aqq]].
                const double theta = (aqq - app) / (2.0 * gmag);
                const double sign = theta >= 0.0 ? 1.0 : -1.0;
                const double t = sign / (std::fabs(theta) + std::hypot(1.0, theta));
                const double c = 1.0 / std::hypot(1.0, t);
                const double s = t * c;
                const cx se = s * phase;             // J_pq
                const cx sec = std::conj(se);        //  conj for column p updates

                a.at(p, p) = app - t * gmag;
                a.at(q, q) = aqq + t * gmag;
                a.at(p, q) = cx{0.0, 0.0};
                a.at(q, p) = cx{0.0, 0.0};
                for (int r = 0; r < n; ++r) {
                    if (r == p || r == q) continue;
                    const cx arp = a.at(r, p);
                    const cx arq = a.at(r, q);
                    a.at(r, p) = c * arp - sec * arq;
                    a.at(r, q) = se * arp + c * arq;
                    a.at(p, r) = std::conj(a.at(r, p));
                    a.at(q, r) = std::conj(a.at(r, q));
                }
                for (int r = 0; r < n; ++r) {
                    const cx vrp = v.at(r, p);
                    const cx vrq = v.at(r, q);
                    v.at(r, p) = c * vrp - sec * vrq;
                    v.at(r, q) = se * vrp + c * vrq;
                }
            }
        }
    }
    if (sweep == 100 && offdiag_frobenius(a) > target)
        throw NumericalError("jacobi eigensolver did not converge in 100 sweeps");

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
        return a.at(i, i).real() > a.at(j, j).real();
    });

    EigenSystem es;
    es.eigenvalues.resize(static_cast<std::size_t>(n));
    es.vectors = Matrix(n);
    for (int jnew = 0; jnew < n; ++jnew) {
        int jold = order[static_cast<std::size_t>(jnew)];
        es.eigenvalues[static_cast<std::size_t>(jnew)] = a.at(jold, jold).real();
        for (int i = 0; i < n; ++i) es.vectors.at(i, jnew) = v.at(i, jold);
    }
    return es;
}

// ---------------------------------------------------------------------------
// Functional calculus

HermitianMatrix apply_fn(const EigenSystem& es, const std::function<double(double)>& phi) {
    const int n = es.vectors.n();
    Matrix scaled(n);  // V diag(phi(lambda))
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            scaled.at(i, j) = es.vectors.at(i, j) * phi(es.eigenvalues[static_cast<std::size_t>(j)]);
    return HermitianMatrix(scaled * es.vectors.adjoint());
}

HermitianMatrix apply_fn(const HermitianMatrix& A, const std::function<double(double)>& phi) {
    return apply_fn(eigh(A), phi);
}

HermitianMatrix apply_fn(const HermitianMatrix& A, const Fn1D& phi) {
    EigenSystem es = eigh(A);
    const double slack = 1e-12 * (1.0 + phi.domain().width());
    for (double ev : es.eigenvalues)
        if (!phi.domain().contains(ev, slack))
            throw EvalError("eigenvalue outside the function domain", ev);
    return apply_fn(es, [&phi](double t) { return phi(t); });
}

std::vector<double> sorted_desc(std::vector<double> v) {
    std::sort(v.begin(), v.end(), std::greater<double>());
    return v;
}

bool weak_majorize(const std::vector<double>& u, const std::vector<double>& v, double tol) {
    if (u.size() != v.size()) throw PreconditionError("weak majorization needs equal lengths");
    double su = 0.0, sv = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        su += u[i];
        sv += v[i];
        if (su > sv + tol) return false;
    }
    return true;
}

std::vector<double> clamped_psd_eigenvalues(const EigenSystem& es, double scale) {
    std::vector<double> out = es.eigenvalues;
    const double floor = -1e-10 * std::max(scale, 1.0);
    for (double& ev : out) {
        if (ev < floor) throw PreconditionError("matrix has a negative eigenvalue");
        ev = std::max(ev, 0.0);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Majorization chains

namespace {

void check_weights(const std::vector<double>& ws, std::size_t k) {
    if (ws.size() != k) throw PreconditionError("one weight per matrix required");
    double sum = 0.0;
    for (double w : ws) {
        if (!(w > 0.0)) throw PreconditionError("weights must be positive");
        sum += w;
    }
    if (std::fabs(sum - 1.0) > 1e-12) throw PreconditionError("weights must sum to 1");
}

void check_spectrum_in(const std::vector<double>& eigs, const Interval& J) {
    const double slack = 1e-10 * (1.0 + J.width());
    for (double ev : eigs)
        if (!J.contains(ev, slack))
            throw PreconditionError("matrix spectrum leaves the function domain");
}

}  // namespace

MajorizationChainResult majorization_chain(const std::vector<HermitianMatrix>& As,
                                           const std::vector<double>& weights, const Fn1D& f,
                                           const GLink& g, double tol_override) {
    if (As.empty()) throw PreconditionError("need at least one matrix");
    const int n = As.front().n();
    for (const auto& A : As)
        if (A.n() != n) throw PreconditionError("matrices must share one dimension");
    check_weights(weights, As.size());

    Fn1D h = compose(g, f);

    Matrix mean(n);
    Matrix mean_h(n);
    Matrix mean_f(n);
    for (std::size_t i = 0; i < As.size(); ++i) {
        EigenSystem es = eigh(As[i]);
        check_spectrum_in(es.eigenvalues, f.domain());
        mean = mean + As[i].matrix().scaled(weights[i]);
        mean_h = mean_h + apply_fn(es, [&h](double t) { return h(t); }).matrix().scaled(weights[i]);
        mean_f = mean_f + apply_fn(es, [&f](double t) { return f(t); }).matrix().scaled(weights[i]);
    }

    EigenSystem es_mean = eigh(HermitianMatrix(mean));
    check_spectrum_in(es_mean.eigenvalues, f.domain());
    EigenSystem es_mix = eigh(HermitianMatrix(mean_h));
    EigenSystem es_meanf = eigh(HermitianMatrix(mean_f));

    MajorizationChainResult r;
    std::vector<double> s1;
    for (double ev : es_mean.eigenvalues) s1.push_back(f(ev));
    r.spectrum_f_of_mean = sorted_desc(std::move(s1));
    std::vector<double> s2;
    for (double ev : es_mix.eigenvalues) s2.push_back(g.inverse(ev));
    r.spectrum_link_mixture = sorted_desc(std::move(s2));
    r.spectrum_mean_of_f = es_meanf.eigenvalues;  // already descending

    std::vector<double> all = r.spectrum_f_of_mean;
    all.insert(all.end(), r.spectrum_link_mixture.begin(), r.spectrum_link_mixture.end());
    all.insert(all.end(), r.spectrum_mean_of_f.begin(), r.spectrum_mean_of_f.end());
    r.tol = tol_override >= 0.0 ? tol_override : default_chain_tol(all);
    r.first_majorized = weak_majorize(r.spectrum_f_of_mean, r.spectrum_link_mixture, r.tol);
    r.second_majorized = weak_majorize(r.spectrum_link_mixture, r.spectrum_mean_of_f, r.tol);
    return r;
}

PowerSqrtChainResult power_sqrt_chain(const std::vector<HermitianMatrix>& As,
                                      const std::vector<double>& weights, double r,
                                      double tol_override) {
    if (!(r >= 2.0)) throw PreconditionError("power chain requires r >= 2");
    if (As.empty()) throw PreconditionError("need at least one matrix");
    const int n = As.front().n();
    check_weights(weights, As.size());

    // PSD check + spectral bound for the working domains.
    double max_eig = 0.0;
    std::vector<EigenSystem> systems;
    systems.reserve(As.size());
    for (const auto& A : As) {
        if (A.n() != n) throw PreconditionError("matrices must share one dimension");
        EigenSystem es = eigh(A);
        std::vector<double> clamped = clamped_psd_eigenvalues(es, A.matrix().max_abs());
        max_eig = std::max(max_eig, clamped.front());
        systems.push_back(std::move(es));
    }
    const double fhi = std::max(1.0, max_eig) * 1.0000001 + 1e-9;

    Fn1D f(ast::pow(ast::variable(), ast::constant(r)), Interval{0.0, fhi});
    const double ghi = std::pow(fhi, r) + std::pow(fhi, r / 2.0) + 1.0;
    GLink g("x+sqrt(x)", Interval{0.0, ghi});

    PowerSqrtChainResult out;
    out.chain = majorization_chain(As, weights, f, g, tol_override);

    // Closed-form middle: (1/2) lambda(2K + I - sqrt(4K + I)).
    Matrix K(n);
    for (std::size_t i = 0; i < As.size(); ++i) {
        HermitianMatrix powr = apply_fn(systems[i], [&](double t) {
            return std::pow(std::max(t, 0.0), r);
        });
        HermitianMatrix powr2 = apply_fn(systems[i], [&](double t) {
            return std::pow(std::max(t, 0.0), r / 2.0);
        });
        K = K + (powr.matrix() + powr2.matrix()).scaled(weights[i]);
    }
    Matrix I = Matrix::identity(n);
    HermitianMatrix inner(K.scaled(4.0) + I);
    HermitianMatrix root = apply_fn(inner, [](double t) { return std::sqrt(std::max(t, 0.0)); });
    HermitianMatrix closed(K.scaled(2.0) + I - root.matrix());
    EigenSystem es_closed = eigh(closed);
    out.middle_closed_form.resize(es_closed.eigenvalues.size());
    for (std::size_t i = 0; i < es_closed.eigenvalues.size(); ++i)
        out.middle_closed_form[i] = 0.5 * es_closed.eigenvalues[i];

    for (std::size_t i = 0; i < out.middle_closed_form.size(); ++i)
        out.route_discrepancy =
            std::max(out.route_discrepancy,
                     std::fabs(out.middle_closed_form[i] - out.chain.spectrum_link_mixture[i]));
    return out;
}

// ---------------------------------------------------------------------------
// Norms

NormSpec NormSpec::parse(const std::string& text) {
    if (text == "operator") return operator_norm();
    if (text == "trace") return trace_norm();
    if (text == "frobenius") return frobenius_norm();
    if (text.rfind("kyfan:", 0) == 0) {
        int k = std::stoi(text.substr(6));
        return kyfan(k);
    }
    if (text.rfind("schatten:", 0) == 0) {
        double p = std::stod(text.substr(9));
        return schatten(p);
    }
    throw InputError("unknown norm '" + text + "'");
}

std::string NormSpec::name() const {
    switch (kind) {
        case Kind::Operator: return "operator";
        case Kind::Trace: return "trace";
        case Kind::Frobenius: return "frobenius";
        case Kind::KyFan: return "kyfan:" + std::to_string(k);
        case Kind::Schatten: {
            char buf[32];
            std::snprintf(buf, sizeof(buf), "schatten:%g", p);
            return buf;
        }
    }
    return "?";
}

double uinorm(const Matrix& A, const NormSpec& norm) {
    // singular values via the spectrum of A* A
    EigenSystem es = eigh(HermitianMatrix(A.adjoint() * A));
    std::vector<double> sigma;
    sigma.reserve(es.eigenvalues.size());
    for (double ev : es.eigenvalues) sigma.push_back(std::sqrt(std::max(ev, 0.0)));

    switch (norm.kind) {
        case NormSpec::Kind::Operator:
            return sigma.empty() ? 0.0 : sigma.front();
        case NormSpec::Kind::Trace:
            return std::accumulate(sigma.begin(), sigma.end(), 0.0);
        case NormSpec::Kind::Frobenius: {
            double s = 0.0;
            for (double x : sigma) s += x * x;
            return std::sqrt(s);
        }
        case NormSpec::Kind::KyFan: {
            if (norm.k < 1 || norm.k > A.n())
                throw InputError("kyfan order must lie in [1, n]");
            double s = 0.0;
            for (int i = 0; i < norm.k; ++i) s += sigma[static_cast<std::size_t>(i)];
            return s;
        }
        case NormSpec::Kind::Schatten: {
            if (!(norm.p >= 1.0)) throw InputError("schatten order must be >= 1");
            double s = 0.0;
            for (double x : sigma) s += std::pow(x, norm.p);
            return std::pow(s, 1.0 / norm.p);
        }
    }
    throw InputError("corrupt norm spec");
}

ChainReport norm_chain(const HermitianMatrix& A, const HermitianMatrix& B, const Fn1D& f,
                       const GLink& g, const NormSpec& norm, double tol_override) {
    if (A.n() != B.n()) throw PreconditionError("matrices must share one dimension");
    EigenSystem esA = eigh(A);
    EigenSystem esB = eigh(B);
    clamped_psd_eigenvalues(esA, A.matrix().max_abs());
    clamped_psd_eigenvalues(esB, B.matrix().max_abs());
    HermitianMatrix sum = A + B;
    EigenSystem esSum = eigh(sum);
    check_spectrum_in(esA.eigenvalues, f.domain());
    check_spectrum_in(esB.eigenvalues, f.domain());
    check_spectrum_in(esSum.eigenvalues, f.domain());

    GConvexityVerdict gc = is_gconvex(f, g);
    if (!gc.ok) throw PreconditionError("f is not g-convex for the supplied link");
    double h0, g0;
    try {
        h0 = g.g()(f(0.0));
        g0 = g.g()(0.0);
    } catch (const EvalError&) {
        throw PreconditionError("link conditions at 0 are undefined");
    }
    if (h0 > 1e-12) throw PreconditionError("(g.f)(0) <= 0 fails");
    if (g0 < -1e-12) throw PreconditionError("g(0) >= 0 fails");

    Fn1D h = compose(g, f);
    HermitianMatrix fA = apply_fn(esA, [&f](double t) { return f(std::max(t, 0.0)); });
    HermitianMatrix fB = apply_fn(esB, [&f](double t) { return f(std::max(t, 0.0)); });
    HermitianMatrix hA = apply_fn(esA, [&h](double t) { return h(std::max(t, 0.0)); });
    HermitianMatrix hB = apply_fn(esB, [&h](double t) { return h(std::max(t, 0.0)); });
    HermitianMatrix mid_arg = hA + hB;
    HermitianMatrix mid = apply_fn(mid_arg, [&g](double t) { return g.inverse(t); });
    HermitianMatrix fSum = apply_fn(esSum, [&f](double t) { return f(std::max(t, 0.0)); });

    return ChainReport::build(
        {"norm_f_split", "norm_link_split", "norm_f_joint"},
        {uinorm(fA + fB, norm), uinorm(mid, norm), uinorm(fSum, norm)},
        ChainDirection::Ascending, tol_override);
}

// ---------------------------------------------------------------------------
// Inner-product chain and falsification sampler

namespace {

std::vector<cx> matvec(const Matrix& A, const std::vector<cx>& x) {
    std::vector<cx> y(static_cast<std::size_t>(A.n()), cx{0.0, 0.0});
    for (int i = 0; i < A.n(); ++i)
        for (int j = 0; j < A.n(); ++j) y[static_cast<std::size_t>(i)] += A.at(i, j) * x[static_cast<std::size_t>(j)];
    return y;
}

double inner_real(const std::vector<cx>& x, const std::vector<cx>& y) {
    cx s{0.0, 0.0};
    for (std::size_t i = 0; i < x.size(); ++i) s += std::conj(x[i]) * y[i];
    return s.real();
}

}  // namespace

ChainReport jensen_inner_product(const HermitianMatrix& A, const std::vector<cx>& x,
                                 const Fn1D& f, const GLink& g, double tol_override) {
    if (static_cast<int>(x.size()) != A.n())
        throw PreconditionError("vector length must match the matrix dimension");
    double norm2 = 0.0;
    for (const cx& v : x) norm2 += std::norm(v);
    if (std::fabs(std::sqrt(norm2) - 1.0) > 1e-12)
        throw PreconditionError("x must be a unit vector");

    EigenSystem es = eigh(A);
    check_spectrum_in(es.eigenvalues, f.domain());
    Fn1D h = compose(g, f);

    double quad = inner_real(x, matvec(A.matrix(), x));
    HermitianMatrix hA = apply_fn(es, [&h](double t) { return h(t); });
    HermitianMatrix fA = apply_fn(es, [&f](double t) { return f(t); });
    double mid = g.inverse(inner_real(x, matvec(hA.matrix(), x)));
    double rhs = inner_real(x, matvec(fA.matrix(), x));

    return ChainReport::build({"f(quadratic_form)", "link_quadratic_form", "quadratic_form_of_f"},
                              {f(quad), mid, rhs}, ChainDirection::Ascending, tol_override);
}

Matrix random_matrix(int n, Rng& rng) {
    Matrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double re = rng.uniform(-1.0, 1.0);
            double im = rng.uniform(-1.0, 1.0);
            m.at(i, j) = cx{re, im};
        }
    return m;
}

HermitianMatrix random_hermitian(int n, Rng& rng) {
    Matrix g = random_matrix(n, rng);
    return HermitianMatrix(g + g.adjoint());
}

HermitianMatrix random_psd(int n, Rng& rng) {
    Matrix g = random_matrix(n, rng);
    Matrix a = g.adjoint() * g;
    for (int i = 0; i < n; ++i) a.at(i, i) += 1e-3;
    return HermitianMatrix(a);
}

std::vector<cx> random_unit_vector(int n, Rng& rng) {
    std::vector<cx> x(static_cast<std::size_t>(n));
    double norm2 = 0.0;
    for (auto& v : x) {
        v = cx{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
        norm2 += std::norm(v);
    }
    double inv = 1.0 / std::sqrt(norm2);
    for (auto& v : x) v *= inv;
    return x;
}

OperatorChainSampleReport operator_chain_sample(const Fn1D& f, const GLink& g, int n,
                                                std::uint64_t trials, std::uint64_t seed,
                                                double tol_override) {
    Fn1D h = compose(g, f);
    OperatorChainSampleReport report;
    report.trials = trials;

    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        Rng rng(seed + trial);  // per-trial stream
        HermitianMatrix A = random_psd(n, rng);
        HermitianMatrix B = random_psd(n, rng);
        double v = rng.uniform();
        EigenSystem esA = eigh(A);
        EigenSystem esB = eigh(B);

        HermitianMatrix C(A.matrix().scaled(1.0 - v) + B.matrix().scaled(v));
        HermitianMatrix fC = apply_fn(C, [&f](double t) { return f(t); });
        HermitianMatrix hmix(apply_fn(esA, [&h](double t) { return h(t); }).matrix().scaled(1.0 - v) +
                             apply_fn(esB, [&h](double t) { return h(t); }).matrix().scaled(v));
        HermitianMatrix mid = apply_fn(hmix, [&g](double t) { return g.inverse(t); });
        HermitianMatrix fmix(apply_fn(esA, [&f](double t) { return f(t); }).matrix().scaled(1.0 - v) +
                             apply_fn(esB, [&f](double t) { return f(t); }).matrix().scaled(v));

        double scale = std::max({fC.matrix().max_abs(), mid.matrix().max_abs(),
                                 fmix.matrix().max_abs()});
        double tol = tol_override >= 0.0 ? tol_override : 1e-9 * (1.0 + scale);
        report.tol = tol;

        double min1 = eigh(HermitianMatrix(fC.matrix() - mid.matrix())).eigenvalues.back();
        double min2 = eigh(HermitianMatrix(mid.matrix() - fmix.matrix())).eigenvalues.back();
        if (min1 < -tol || min2 < -tol) {
            ++report.counterexamples;
            if (report.examples.size() < 5)
                report.examples.push_back({trial, v, min1, min2, A, B});
        }
    }
    return report;
}

NormInterpolationScan norm_interpolation_scan(const HermitianMatrix& A, const Matrix& X,
                                              const HermitianMatrix& B, const NormSpec& norm,
                                              const GridSpec& tgrid) {
    if (A.n() != X.n() || B.n() != X.n())
        throw PreconditionError("matrices must share one dimension");
    EigenSystem esA = eigh(A);
    EigenSystem esB = eigh(B);
    const double floorA = 1e-12 * std::max(1.0, A.matrix().max_abs());
    const double floorB = 1e-12 * std::max(1.0, B.matrix().max_abs());
    if (esA.eigenvalues.back() <= floorA || esB.eigenvalues.back() <= floorB)
        throw PreconditionError("interpolation scan needs positive definite A and B");

    NormInterpolationScan scan;
    if (X.max_abs() == 0.0) {
        scan.degenerate = true;
        return scan;
    }

    scan.ts = grid_points(Interval{0.0, 1.0}, tgrid);
    scan.phis.resize(scan.ts.size());
    for (std::size_t i = 0; i < scan.ts.size(); ++i) {
        double t = scan.ts[i];
        HermitianMatrix At = apply_fn(esA, [t](double ev) { return std::pow(ev, t); });
        HermitianMatrix Bt = apply_fn(esB, [t](double ev) { return std::pow(ev, 1.0 - t); });
        scan.phis[i] = uinorm(At.matrix() * X * Bt.matrix(), norm);
    }

    scan.log_convex = true;
    scan.min_second_difference = std::numeric_limits<double>::max();
    for (std::size_t i = 1; i + 1 < scan.phis.size(); ++i) {
        double second = std::log(scan.phis[i - 1]) - 2.0 * std::log(scan.phis[i]) +
                        std::log(scan.phis[i + 1]);
        scan.min_second_difference = std::min(scan.min_second_difference, second);
        if (second < -1e-10) scan.log_convex = false;
    }
    return scan;
}

}  // namespace gconvex
