#pragma once

#include "kenmotsu/liealg.hpp"

namespace kenmotsu {

/// Levi-Civita products of basis pairs: entry (i,j) holds the coordinates
/// of L_{b_i} b_j.  Immutable once built; safe to share across threads.
struct LeviCivitaTable {
    int dim = 0;
    std::vector<double> entries; // dim^3, same indexing as structure constants

    LeviCivitaTable() = default;
    explicit LeviCivitaTable(int d)
        : dim(d), entries(static_cast<size_t>(d) * d * d, 0.0) {}

    double& at(int i, int j, int k) {
        return entries[(static_cast<size_t>(i) * dim + j) * dim + k];
    }
    double at(int i, int j, int k) const {
        return entries[(static_cast<size_t>(i) * dim + j) * dim + k];
    }
    const double* row(int i, int j) const {
        return entries.data() + (static_cast<size_t>(i) * dim + j) * dim;
    }

    /// L_x y for general vectors by bilinear contraction.
    Vec product(const Vec& x, const Vec& y) const;
    /// L_x b_j for a general left slot.
    Vec product_basis_right(const Vec& x, int j) const;
    /// L_{b_i} y for a general right slot.
    Vec product_basis_left(int i, const Vec& y) const;
};

/// Levi-Civita product L_x y from the Koszul identity
///   2<L_x y, z> = <[x,y],z> + <[z,x],y> + <[z,y],x>.
Vec koszul(const MetricLieAlgebra& a, const Vec& x, const Vec& y);

/// Full table of basis products.  Dispatches to the OpenMP kernel for large
/// dimensions; serial/par variants expose both code paths directly.
LeviCivitaTable levi_civita_table(const MetricLieAlgebra& a);

/// Curvature R(x,y)z = L_x(L_y z) - L_y(L_x z) - L_{[x,y]} z.
Vec curvature(const LeviCivitaTable& table, const MetricLieAlgebra& a, const Vec& x,
              const Vec& y, const Vec& z);

/// Ricci tensor ric(b_i, b_j) = sum_k <R(u_k, b_i) b_j, u_k> over a
/// gram-orthonormal frame obtained by Gram-Schmidt on the standard basis.
RealMatrix ricci(const MetricLieAlgebra& a);

namespace serial {
LeviCivitaTable levi_civita_table(const MetricLieAlgebra& a);
RealMatrix ricci(const MetricLieAlgebra& a);
}
namespace par {
LeviCivitaTable levi_civita_table(const MetricLieAlgebra& a);
RealMatrix ricci(const MetricLieAlgebra& a);
}

struct EinsteinFit {
    bool pass = false;
    double c = 0.0;        // best scalar with ric ~ c * gram (trace ratio)
    double residual = 0.0; // max |ric - c*gram|
};

/// Fits ric = c * gram and reports the max residual of the fit.
EinsteinFit einstein_check(const MetricLieAlgebra& a, double tol = kDefaultTol);

} // namespace kenmotsu
