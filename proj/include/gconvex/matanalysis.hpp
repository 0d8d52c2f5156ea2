#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "gconvex/chains.hpp"
#include "gconvex/funcspace.hpp"

namespace gconvex {

using cx = std::complex<double>;

// Dense square complex matrix, row-major. Sizes stay small (n <= 256).
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, cx{0.0, 0.0}) {}
    static Matrix identity(int n);

    int n() const { return n_; }
    cx& at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    const cx& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

    Matrix adjoint() const;
    Matrix operator*(const Matrix& rhs) const;
    Matrix operator+(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;
    Matrix scaled(double s) const;

    cx trace() const;
    double frobenius() const;
    double max_abs() const;

private:
    int n_ = 0;
    std::vector<cx> a_;
};

// Hermitian matrix: construction symmetrizes via (A + A*)/2 and records
// how large the adjustment was; callers that need strict Hermiticity
// (density validation) inspect hermitian_defect().
class HermitianMatrix {
public:
    HermitianMatrix() = default;
    explicit HermitianMatrix(const Matrix& raw);
    static HermitianMatrix diagonal(const std::vector<double>& d);

    int n() const { return mat_.n(); }
    const Matrix& matrix() const { return mat_; }
    double hermitian_defect() const { return defect_; }

    HermitianMatrix operator+(const HermitianMatrix& rhs) const;
    HermitianMatrix scaled(double s) const;
    double trace_real() const { return mat_.trace().real(); }

private:
    Matrix mat_;
    double defect_ = 0.0;
};

// Spectral decomposition A = V diag(lambda) V*, eigenvalues descending,
// ties kept in original order.
struct EigenSystem {
    std::vector<double> eigenvalues;
    Matrix vectors;  // columns
};

// Cyclic Jacobi sweeps until the off-diagonal Frobenius mass falls below
// 1e-14 * ||A||_F; throws NumericalError after 100 sweeps.
EigenSystem eigh(const HermitianMatrix& A);

// Functional calculus V diag(phi(lambda)) V*.
HermitianMatrix apply_fn(const HermitianMatrix& A, const std::function<double(double)>& phi);
HermitianMatrix apply_fn(const EigenSystem& es, const std::function<double(double)>& phi);
// Fn1D overload; an eigenvalue outside phi's domain raises EvalError
// naming the eigenvalue.
HermitianMatrix apply_fn(const HermitianMatrix& A, const Fn1D& phi);

// Descending-sorted spectrum helpers.
std::vector<double> sorted_desc(std::vector<double> v);

// Weak majorization u `weakly below` v: every descending partial sum of
// u is <= the matching partial sum of v (+ tol).
bool weak_majorize(const std::vector<double>& u, const std::vector<double>& v, double tol);

// lambda(f(sum w_i A_i)) <w lambda(g^{-1}(sum w_i (g.f)(A_i)))
//                        <w lambda(sum w_i f(A_i)).
struct MajorizationChainResult {
    std::vector<double> spectrum_f_of_mean;
    std::vector<double> spectrum_link_mixture;
    std::vector<double> spectrum_mean_of_f;
    bool first_majorized = false;
    bool second_majorized = false;
    double tol = 0.0;
    bool holds() const { return first_majorized && second_majorized; }
};

MajorizationChainResult majorization_chain(const std::vector<HermitianMatrix>& As,
                                           const std::vector<double>& weights, const Fn1D& f,
                                           const GLink& g, double tol_override = -1.0);

// Corollary chain for f = x^r, g = x + sqrt(x): the middle term has the
// closed form  (1/2) lambda(2K + I - sqrt(4K + I)),
// K = sum w_i (A_i^r + A_i^{r/2}); it must agree with the generic path.
struct PowerSqrtChainResult {
    MajorizationChainResult chain;             // generic route
    std::vector<double> middle_closed_form;    // closed-form route
    double route_discrepancy = 0.0;            // max abs difference
};

PowerSqrtChainResult power_sqrt_chain(const std::vector<HermitianMatrix>& As,
                                      const std::vector<double>& weights, double r,
                                      double tol_override = -1.0);

// Unitarily invariant norms from singular values.
struct NormSpec {
    enum class Kind { Operator, Trace, Frobenius, KyFan, Schatten } kind = Kind::Operator;
    int k = 1;       // KyFan
    double p = 2.0;  // Schatten

    static NormSpec operator_norm() { return {Kind::Operator, 1, 2.0}; }
    static NormSpec trace_norm() { return {Kind::Trace, 1, 2.0}; }
    static NormSpec frobenius_norm() { return {Kind::Frobenius, 1, 2.0}; }
    static NormSpec kyfan(int k) { return {Kind::KyFan, k, 2.0}; }
    static NormSpec schatten(double p) { return {Kind::Schatten, 1, p}; }
    // Parses "operator", "trace", "frobenius", "kyfan:K", "schatten:P".
    static NormSpec parse(const std::string& text);
    std::string name() const;
};

double uinorm(const Matrix& A, const NormSpec& norm);
inline double uinorm(const HermitianMatrix& A, const NormSpec& norm) {
    return uinorm(A.matrix(), norm);
}

// ||f(A) + f(B)|| <= ||g^{-1}((g.f)(A) + (g.f)(B))|| <= ||f(A+B)|| for
// PSD A, B with (g.f)(0) <= 0 and g(0) >= 0.
ChainReport norm_chain(const HermitianMatrix& A, const HermitianMatrix& B, const Fn1D& f,
                       const GLink& g, const NormSpec& norm, double tol_override = -1.0);

// f(<Ax,x>) <= g^{-1}(<(g.f)(A) x, x>) <= <f(A) x, x> for unit x.
ChainReport jensen_inner_product(const HermitianMatrix& A, const std::vector<cx>& x,
                                 const Fn1D& f, const GLink& g, double tol_override = -1.0);

// Randomized falsification of the operator chain
//   f((1-v)A + vB) >= g^{-1}((1-v)(g.f)(A) + v(g.f)(B)) >= (1-v)f(A) + vf(B)
// for caller-asserted hypotheses (g increasing operator convex, g.f
// operator concave). A counterexample is an outcome, not an error.
struct OperatorChainCounterexample {
    std::uint64_t trial = 0;
    double v = 0.0;
    double min_eig_first = 0.0;
    double min_eig_second = 0.0;
    HermitianMatrix A;
    HermitianMatrix B;
};

struct OperatorChainSampleReport {
    std::uint64_t trials = 0;
    std::uint64_t counterexamples = 0;
    double tol = 0.0;
    std::vector<OperatorChainCounterexample> examples;  // first few
};

OperatorChainSampleReport operator_chain_sample(const Fn1D& f, const GLink& g, int n,
                                                std::uint64_t trials, std::uint64_t seed,
                                                double tol_override = -1.0);

// Samples phi(t) = ||A^t X B^{1-t}|| on a t-grid over [0,1] and checks
// discrete log-convexity (second difference of log phi >= -1e-10).
struct NormInterpolationScan {
    std::vector<double> ts;
    std::vector<double> phis;
    bool degenerate = false;  // X = 0
    bool log_convex = false;
    double min_second_difference = 0.0;
};

NormInterpolationScan norm_interpolation_scan(const HermitianMatrix& A, const Matrix& X,
                                              const HermitianMatrix& B, const NormSpec& norm,
                                              const GridSpec& tgrid = GridSpec());

// Deterministic generators used by tests, the falsification sampler and
// the property suites: G has re/im entries uniform in [-1, 1] from a
// seeded mt19937_64; PSD matrices are G*G + 1e-3 I. The [0,1) mapping is
// fixed here (not distribution-object based) so streams are identical
// across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    std::uint64_t next_u64() { return gen_(); }

private:
    std::mt19937_64 gen_;
};

Matrix random_matrix(int n, Rng& rng);               // entries re,im in [-1,1]
HermitianMatrix random_hermitian(int n, Rng& rng);   // (G+G*)/2
HermitianMatrix random_psd(int n, Rng& rng);         // G*G + 1e-3 I
std::vector<cx> random_unit_vector(int n, Rng& rng);

// Eigenvalues must be >= -1e-10 * scale; smaller values throw, the rest
// clamp to zero.
std::vector<double> clamped_psd_eigenvalues(const EigenSystem& es, double scale);

}  // namespace gconvex
