#pragma once

#include <optional>

#include "gconvex/matanalysis.hpp"

namespace gconvex {

// PSD Hermitian matrix with unit trace. Validation clamps eigenvalues in
// (-1e-8, 0) to zero and rejects anything below -1e-8 or a trace off 1
// by more than 1e-8. The eigensystem is cached (clamped eigenvalues).
class DensityMatrix {
public:
    const HermitianMatrix& matrix() const { return m_; }
    const EigenSystem& eigensystem() const { return es_; }
    int n() const { return m_.n(); }

    friend DensityMatrix validate_density(const HermitianMatrix& m);

private:
    HermitianMatrix m_;
    EigenSystem es_;
};

DensityMatrix validate_density(const HermitianMatrix& m);

// S(rho) = -sum lambda ln lambda (natural log, 0 ln 0 = 0).
double von_neumann_entropy(const DensityMatrix& rho);

// D(rho|sigma) = Tr[rho (ln rho - ln sigma)]. Infinite when sigma's
// kernel carries rho-mass (the support condition fails); the marker is a
// state, not an exception.
struct RelEntropy {
    bool finite = true;
    double value = 0.0;  // meaningful when finite
};

RelEntropy relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma);

// Entropy-difference lower bound on D(rho|sigma):
//   bound = S(sigma) - S(rho) + Tr[exp(-rho ln rho) exp(sigma ln sigma) - I],
// computed as spectral maps t -> t^{-t} and t -> t^{t} (0^0 = 1).
struct EntropyReport {
    double s_rho = 0.0;
    double s_sigma = 0.0;
    RelEntropy d;        // D(rho|sigma)
    double bound = 0.0;
    double gap = 0.0;    // D - bound (when finite)
    bool bound_below_d = false;  // bound <= D + 1e-9
    bool bound_nonneg = false;   // claimed; recorded, never enforced
};

EntropyReport entropy_lower_bound(const DensityMatrix& rho, const DensityMatrix& sigma);

// Jeffrey divergence J = (D(rho|sigma) + D(sigma|rho))/2 against its
// symmetric trace lower bound. The returned ascending chain is
// [bound, J]; J is +inf in the report when a support condition fails.
ChainReport jeffrey_bound(const DensityMatrix& rho, const DensityMatrix& sigma,
                          double tol_override = -1.0);

}  // namespace gconvex
