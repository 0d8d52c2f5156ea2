#include "gconvex/qentropy.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace gconvex {

namespace {

// continuous extensions at 0: t ln t -> 0, t^t -> 1, t^{-t} -> 1
double xlogx(double t) { return t > 0.0 ? t * std::log(t) : 0.0; }
double pow_self(double t) { return t > 0.0 ? std::exp(t * std::log(t)) : 1.0; }
double pow_self_neg(double t) { return t > 0.0 ? std::exp(-t * std::log(t)) : 1.0; }

double trace_product(const Matrix& a, const Matrix& b) {
    cx s{0.0, 0.0};
    for (int i = 0; i < a.n(); ++i)
        for (int j = 0; j < a.n(); ++j) s += a.at(i, j) * b.at(j, i);
    return s.real();
}

}  // namespace

DensityMatrix validate_density(const HermitianMatrix& m) {
    const double scale = std::max(1.0, m.matrix().max_abs());
    if (m.hermitian_defect() > 1e-8 * scale)
        throw PreconditionError("matrix is not Hermitian (defect " +
                                std::to_string(m.hermitian_defect()) + ")");
    double tr = m.trace_real();
    if (std::fabs(tr - 1.0) > 1e-8)
        throw PreconditionError("density matrix trace is " + std::to_string(tr) +
                                ", expected 1");
    EigenSystem es = eigh(m);
    for (double& ev : es.eigenvalues) {
        if (ev < -1e-8)
            throw PreconditionError("density matrix has eigenvalue " + std::to_string(ev));
        ev = std::max(ev, 0.0);
    }
    DensityMatrix d;
    d.m_ = m;
    d.es_ = std::move(es);
    return d;
}

double von_neumann_entropy(const DensityMatrix& rho) {
    double s = 0.0;
    for (double ev : rho.eigensystem().eigenvalues) s -= xlogx(ev);
    return s;
}

RelEntropy relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma) {
    if (rho.n() != sigma.n()) throw PreconditionError("density matrices must share one dimension");
    const EigenSystem& es_sigma = sigma.eigensystem();
    const int n = rho.n();

    double tr_rho_ln_rho = 0.0;
    for (double ev : rho.eigensystem().eigenvalues) tr_rho_ln_rho += xlogx(ev);

    // Tr[rho ln sigma] = sum_j ln(mu_j) <u_j| rho |u_j>, skipping the
    // kernel of sigma; any rho-mass there makes D infinite.
    const double support_floor = 1e-12;
    double tr_rho_ln_sigma = 0.0;
    for (int j = 0; j < n; ++j) {
        double mu = es_sigma.eigenvalues[static_cast<std::size_t>(j)];
        // <u_j | rho | u_j>
        cx accum{0.0, 0.0};
        for (int r = 0; r < n; ++r) {
            cx row{0.0, 0.0};
            for (int c = 0; c < n; ++c)
                row += rho.matrix().matrix().at(r, c) * es_sigma.vectors.at(c, j);
            accum += std::conj(es_sigma.vectors.at(r, j)) * row;
        }
        double mass = accum.real();
        if (mu <= support_floor) {
            if (mass > 1e-12) return RelEntropy{false, 0.0};
            continue;
        }
        tr_rho_ln_sigma += mass * std::log(mu);
    }
    return RelEntropy{true, tr_rho_ln_rho - tr_rho_ln_sigma};
}

EntropyReport entropy_lower_bound(const DensityMatrix& rho, const DensityMatrix& sigma) {
    if (rho.n() != sigma.n()) throw PreconditionError("density matrices must share one dimension");
    EntropyReport rep;
    rep.s_rho = von_neumann_entropy(rho);
    rep.s_sigma = von_neumann_entropy(sigma);
    rep.d = relative_entropy(rho, sigma);

    HermitianMatrix p = apply_fn(rho.eigensystem(), pow_self_neg);   // exp(-rho ln rho)
    HermitianMatrix q = apply_fn(sigma.eigensystem(), pow_self);     // exp(sigma ln sigma)
    rep.bound = rep.s_sigma - rep.s_rho + trace_product(p.matrix(), q.matrix()) -
                static_cast<double>(rho.n());
    rep.bound_nonneg = rep.bound >= -1e-9;
    rep.bound_below_d = !rep.d.finite || rep.bound <= rep.d.value + 1e-9;
    rep.gap = rep.d.finite ? rep.d.value - rep.bound : std::numeric_limits<double>::infinity();
    return rep;
}

ChainReport jeffrey_bound(const DensityMatrix& rho, const DensityMatrix& sigma,
                          double tol_override) {
    RelEntropy fwd = relative_entropy(rho, sigma);
    RelEntropy bwd = relative_entropy(sigma, rho);
    double j = (fwd.finite && bwd.finite) ? 0.5 * (fwd.value + bwd.value)
                                          : std::numeric_limits<double>::infinity();

    HermitianMatrix p_rho = apply_fn(rho.eigensystem(), pow_self_neg);
    HermitianMatrix q_rho = apply_fn(rho.eigensystem(), pow_self);
    HermitianMatrix p_sigma = apply_fn(sigma.eigensystem(), pow_self_neg);
    HermitianMatrix q_sigma = apply_fn(sigma.eigensystem(), pow_self);
    double bound = 0.5 * (trace_product(p_rho.matrix(), q_sigma.matrix()) +
                          trace_product(q_rho.matrix(), p_sigma.matrix()) -
                          2.0 * static_cast<double>(rho.n()));

    // a non-finite J trivially dominates the bound
    double tol = tol_override >= 0.0
                     ? tol_override
                     : 1e-9 * (1.0 + std::max(std::fabs(bound),
                                              std::isfinite(j) ? std::fabs(j) : 0.0));
    return ChainReport::build({"jeffrey_lower_bound", "jeffrey_divergence"}, {bound, j},
                              ChainDirection::Ascending, tol);
}

}  // namespace gconvex
