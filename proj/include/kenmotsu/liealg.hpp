#pragma once

#include <utility>
#include <vector>

#include "kenmotsu/numkit.hpp"
#include "kenmotsu/report.hpp"

namespace kenmotsu {

/// A Lie algebra with an inner product, described by structure constants on
/// a fixed basis: bracket(b_i, b_j) has coordinates c(i,j,*).  The tensor is
/// stored dense; dimensions are capped at 129.
struct MetricLieAlgebra {
    int dim = 0;
    std::vector<double> structure; // dim^3, index (i*dim + j)*dim + k
    RealMatrix gram;

    MetricLieAlgebra() = default;
    MetricLieAlgebra(int d, RealMatrix g)
        : dim(d), structure(static_cast<size_t>(d) * d * d, 0.0), gram(std::move(g)) {}

    double& c(int i, int j, int k) {
        return structure[(static_cast<size_t>(i) * dim + j) * dim + k];
    }
    double c(int i, int j, int k) const {
        return structure[(static_cast<size_t>(i) * dim + j) * dim + k];
    }

    const double* bracket_row(int i, int j) const {
        return structure.data() + (static_cast<size_t>(i) * dim + j) * dim;
    }
};

constexpr int kMaxDim = 129;

/// Validates dim bounds, antisymmetry of the structure tensor, gram shape
/// and finiteness.  Does not check Jacobi (that is a reported residual).
void validate_algebra(const MetricLieAlgebra& a);

/// Max |c(i,j,k) + c(j,i,k)| over the tensor.
double antisymmetry_residual(const MetricLieAlgebra& a);

/// A subspace of the ambient algebra given by linearly independent basis
/// vectors in ambient coordinates.
struct Subspace {
    int ambient_dim = 0;
    std::vector<Vec> basis;

    int rank() const { return static_cast<int>(basis.size()); }
};

/// Bilinear extension of the structure constants.
Vec bracket(const MetricLieAlgebra& a, const Vec& x, const Vec& y);

/// bracket(b_i, b_j) for basis vectors, without forming coordinate vectors.
Vec bracket_basis(const MetricLieAlgebra& a, int i, int j);

/// [b_i, y] for a basis vector against a general vector.
Vec bracket_basis_vec(const MetricLieAlgebra& a, int i, const Vec& y);

/// Max infinity-norm of the Jacobi cyclic sum over basis triples; zero for a
/// genuine Lie algebra.  Dispatches to the OpenMP kernel for large inputs.
double jacobi_residual(const MetricLieAlgebra& a);

namespace serial {
double jacobi_residual(const MetricLieAlgebra& a);
}
namespace par {
double jacobi_residual(const MetricLieAlgebra& a);
}

/// Checks that brackets of ambient basis vectors with subspace vectors stay
/// inside span(S); residual is the largest gram-norm of the off-span part.
Check is_ideal(const MetricLieAlgebra& a, const Subspace& s, double tol = kDefaultTol);

/// Checks the Leibniz identity M[x,y] = [Mx,y] + [x,My] on basis pairs.
Check is_derivation(const MetricLieAlgebra& a, const RealMatrix& m, double tol = kDefaultTol);

/// The almost contact pair: phi as a matrix acting on coordinates, xi as a
/// coordinate vector over the same basis as the algebra.
struct AlmostContactData {
    RealMatrix phi;
    Vec xi;
};

/// Transports the whole structure along an invertible map T:
///   [x,y]' = T[T^-1 x, T^-1 y],  gram' = T^-t gram T^-1,
///   phi' = T phi T^-1,           xi' = T xi.
/// Throws SingularMap when T is singular within tol or its condition
/// estimate exceeds 1e8.
std::pair<MetricLieAlgebra, AlmostContactData> pushforward(const MetricLieAlgebra& a,
                                                           const AlmostContactData& s,
                                                           const RealMatrix& t,
                                                           double tol = kDefaultTol);

} // namespace kenmotsu
