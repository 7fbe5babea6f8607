#pragma once

#include <complex>
#include <vector>

#include "kenmotsu/errors.hpp"

namespace kenmotsu {

using Vec = std::vector<double>;
using Complex = std::complex<double>;
using CVec = std::vector<Complex>;

constexpr double kDefaultTol = 1e-9;

/// Dense row-major real matrix.  Sizes in this library are tiny (dim <= 129),
/// so everything is stored dense and operated on directly.
struct RealMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<double> entries;

    RealMatrix() = default;
    RealMatrix(int r, int c) : rows(r), cols(c), entries(static_cast<size_t>(r) * c, 0.0) {}

    double& operator()(int i, int j) { return entries[static_cast<size_t>(i) * cols + j]; }
    double operator()(int i, int j) const { return entries[static_cast<size_t>(i) * cols + j]; }

    static RealMatrix identity(int n);

    bool square() const { return rows == cols; }
};

/// Dense n x n complex matrix (row-major).
struct ComplexMatrix {
    int n = 0;
    CVec entries;

    ComplexMatrix() = default;
    explicit ComplexMatrix(int n_) : n(n_), entries(static_cast<size_t>(n_) * n_, Complex{0.0, 0.0}) {}

    Complex& operator()(int i, int j) { return entries[static_cast<size_t>(i) * n + j]; }
    Complex operator()(int i, int j) const { return entries[static_cast<size_t>(i) * n + j]; }

    static ComplexMatrix identity(int n);
};

// Elementwise / norm helpers.
double max_abs(const Vec& v);
double max_abs(const RealMatrix& m);
double max_abs(const ComplexMatrix& m);
double frobenius(const RealMatrix& m);

Vec matvec(const RealMatrix& m, const Vec& v);
RealMatrix matmul(const RealMatrix& a, const RealMatrix& b);
RealMatrix transpose(const RealMatrix& m);
RealMatrix add(const RealMatrix& a, const RealMatrix& b);
RealMatrix scale(const RealMatrix& a, double s);

Vec axpy(double a, const Vec& x, const Vec& y); // a*x + y
Vec sub(const Vec& x, const Vec& y);

/// Inner product u^T gram v.
double gram_inner(const Vec& u, const RealMatrix& gram, const Vec& v);
double gram_norm(const Vec& u, const RealMatrix& gram);

/// Inverse by Gauss-Jordan elimination with partial pivoting.
/// Throws SingularMap when a pivot falls below tol.
RealMatrix inverse(const RealMatrix& m, double tol = kDefaultTol);

/// Determinant via LU with partial pivoting; 0.0 signals a singular matrix.
double determinant(const RealMatrix& m);

/// Frobenius-based condition estimate ||m||_F * ||m^-1||_F; infinity when
/// the inverse does not exist.
double condition_estimate(const RealMatrix& m);

/// True when m is symmetric within tol and admits a Cholesky factorization
/// with strictly positive pivots.
bool is_spd(const RealMatrix& m, double tol = kDefaultTol);

/// Orthonormalizes `vectors` against the inner product defined by `gram`
/// (modified Gram-Schmidt with one re-orthogonalization pass), preserving
/// processing order.  Throws DependentInput when a candidate's residual
/// gram-norm drops below tol before normalization.
std::vector<Vec> gram_schmidt(const std::vector<Vec>& vectors, const RealMatrix& gram,
                              double tol = kDefaultTol);

struct HermitianEigen {
    std::vector<double> values; // sorted descending
    ComplexMatrix vectors;      // unitary; column k pairs with values[k]
};

/// Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations
/// (sweep budget 64).  Throws NotHermitian when ||H - H*||_max >= tol and
/// NoConvergence when the sweep budget is exhausted.
HermitianEigen hermitian_eigen(const ComplexMatrix& h, double tol = kDefaultTol);

} // namespace kenmotsu
