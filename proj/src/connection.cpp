#include "kenmotsu/connection.hpp"

#include <cmath>

namespace kenmotsu {

Vec LeviCivitaTable::product(const Vec& x, const Vec& y) const {
    Vec out(dim, 0.0);
    for (int i = 0; i < dim; ++i) {
        if (x[i] == 0.0) continue;
        for (int j = 0; j < dim; ++j) {
            const double w = x[i] * y[j];
            if (w == 0.0) continue;
            const double* r = row(i, j);
            for (int k = 0; k < dim; ++k) out[k] += w * r[k];
        }
    }
    return out;
}

Vec LeviCivitaTable::product_basis_right(const Vec& x, int j) const {
    Vec out(dim, 0.0);
    for (int i = 0; i < dim; ++i) {
        if (x[i] == 0.0) continue;
        const double* r = row(i, j);
        for (int k = 0; k < dim; ++k) out[k] += x[i] * r[k];
    }
    return out;
}

Vec LeviCivitaTable::product_basis_left(int i, const Vec& y) const {
    Vec out(dim, 0.0);
    for (int j = 0; j < dim; ++j) {
        if (y[j] == 0.0) continue;
        const double* r = row(i, j);
        for (int k = 0; k < dim; ++k) out[k] += y[j] * r[k];
    }
    return out;
}

namespace {

// Right side of the Koszul identity against every basis vector, halved:
// w_k = (<[x,y],b_k> + <[b_k,x],y> + <[b_k,y],x>) / 2, so L_x y solves
// gram * L = w.
Vec koszul_rhs(const MetricLieAlgebra& a, const Vec& x, const Vec& y) {
    const int d = a.dim;
    const Vec bxy = bracket(a, x, y);
    Vec w(d, 0.0);
    Vec gy = matvec(a.gram, y);
    Vec gx = matvec(a.gram, x);
    Vec gb = matvec(a.gram, bxy);
    for (int k = 0; k < d; ++k) {
        const Vec bkx = bracket_basis_vec(a, k, x);
        const Vec bky = bracket_basis_vec(a, k, y);
        double acc = gb[k];
        for (int m = 0; m < d; ++m) acc += bkx[m] * gy[m] + bky[m] * gx[m];
        w[k] = 0.5 * acc;
    }
    return w;
}

} // namespace

Vec koszul(const MetricLieAlgebra& a, const Vec& x, const Vec& y) {
    if (static_cast<int>(x.size()) != a.dim || static_cast<int>(y.size()) != a.dim)
        fail(ErrorKind::DimensionMismatch, "koszul: vector length does not match algebra");
    const RealMatrix ginv = inverse(a.gram);
    return matvec(ginv, koszul_rhs(a, x, y));
}

namespace {

void table_entry(const MetricLieAlgebra& a, const RealMatrix& ginv, int i, int j,
                 LeviCivitaTable& out) {
    const int d = a.dim;
    Vec x(d, 0.0), y(d, 0.0);
    x[i] = 1.0;
    y[j] = 1.0;
    const Vec w = koszul_rhs(a, x, y);
    const Vec l = matvec(ginv, w);
    for (int k = 0; k < d; ++k) out.at(i, j, k) = l[k];
}

} // namespace

namespace serial {

LeviCivitaTable levi_civita_table(const MetricLieAlgebra& a) {
    const int d = a.dim;
    const RealMatrix ginv = inverse(a.gram);
    LeviCivitaTable out(d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) table_entry(a, ginv, i, j, out);
    return out;
}

} // namespace serial

namespace par {

LeviCivitaTable levi_civita_table(const MetricLieAlgebra& a) {
    const int d = a.dim;
    const RealMatrix ginv = inverse(a.gram);
    LeviCivitaTable out(d);
#pragma omp parallel for schedule(dynamic)
    for (int ij = 0; ij < d * d; ++ij) table_entry(a, ginv, ij / d, ij % d, out);
    return out;
}

} // namespace par

LeviCivitaTable levi_civita_table(const MetricLieAlgebra& a) {
#ifdef _OPENMP
    if (a.dim >= 24) return par::levi_civita_table(a);
#endif
    return serial::levi_civita_table(a);
}

Vec curvature(const LeviCivitaTable& table, const MetricLieAlgebra& a, const Vec& x,
              const Vec& y, const Vec& z) {
    if (table.dim != a.dim)
        fail(ErrorKind::DimensionMismatch, "curvature: table does not match algebra");
    if (static_cast<int>(x.size()) != a.dim || static_cast<int>(y.size()) != a.dim ||
        static_cast<int>(z.size()) != a.dim)
        fail(ErrorKind::DimensionMismatch, "curvature: vector length does not match algebra");
    const Vec lyz = table.product(y, z);
    const Vec lxz = table.product(x, z);
    const Vec bxy = bracket(a, x, y);
    Vec out = table.product(x, lyz);
    const Vec t2 = table.product(y, lxz);
    const Vec t3 = table.product(bxy, z);
    for (int k = 0; k < a.dim; ++k) out[k] -= t2[k] + t3[k];
    return out;
}

namespace {

// <R(u, b_i) b_j, u>_gram for one frame vector u, with the table fixed.
double ricci_term(const MetricLieAlgebra& a, const LeviCivitaTable& table, const Vec& u,
                  const Vec& gu, int i, int j) {
    const int d = a.dim;
    // L_u (L_{b_i} b_j)
    const double* lij = table.row(i, j);
    Vec r = table.product(u, Vec(lij, lij + d));
    // L_{b_i} (L_u b_j)
    {
        const Vec luj = table.product_basis_right(u, j);
        const Vec t2 = table.product_basis_left(i, luj);
        for (int k = 0; k < d; ++k) r[k] -= t2[k];
    }
    // L_{[u, b_i]} b_j
    {
        Vec bui(d, 0.0);
        for (int m = 0; m < d; ++m) {
            if (u[m] == 0.0) continue;
            const double* row = a.bracket_row(m, i);
            for (int k = 0; k < d; ++k) bui[k] += u[m] * row[k];
        }
        const Vec t3 = table.product_basis_right(bui, j);
        for (int k = 0; k < d; ++k) r[k] -= t3[k];
    }
    double acc = 0.0;
    for (int k = 0; k < d; ++k) acc += r[k] * gu[k];
    return acc;
}

double ricci_entry(const MetricLieAlgebra& a, const LeviCivitaTable& table,
                   const std::vector<Vec>& frame, const std::vector<Vec>& gframe, int i, int j) {
    double acc = 0.0;
    for (size_t k = 0; k < frame.size(); ++k)
        acc += ricci_term(a, table, frame[k], gframe[k], i, j);
    return acc;
}

std::vector<Vec> orthonormal_frame(const MetricLieAlgebra& a) {
    std::vector<Vec> standard(a.dim);
    for (int i = 0; i < a.dim; ++i) {
        standard[i] = Vec(a.dim, 0.0);
        standard[i][i] = 1.0;
    }
    return gram_schmidt(standard, a.gram);
}

} // namespace

namespace serial {

RealMatrix ricci(const MetricLieAlgebra& a) {
    const int d = a.dim;
    const LeviCivitaTable table = serial::levi_civita_table(a);
    const std::vector<Vec> frame = orthonormal_frame(a);
    std::vector<Vec> gframe(frame.size());
    for (size_t k = 0; k < frame.size(); ++k) gframe[k] = matvec(a.gram, frame[k]);
    RealMatrix out(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) out(i, j) = ricci_entry(a, table, frame, gframe, i, j);
    return out;
}

} // namespace serial

namespace par {

RealMatrix ricci(const MetricLieAlgebra& a) {
    const int d = a.dim;
    const LeviCivitaTable table = par::levi_civita_table(a);
    const std::vector<Vec> frame = orthonormal_frame(a);
    std::vector<Vec> gframe(frame.size());
    for (size_t k = 0; k < frame.size(); ++k) gframe[k] = matvec(a.gram, frame[k]);
    RealMatrix out(d, d);
#pragma omp parallel for schedule(dynamic)
    for (int ij = 0; ij < d * d; ++ij)
        out(ij / d, ij % d) = ricci_entry(a, table, frame, gframe, ij / d, ij % d);
    return out;
}

} // namespace par

RealMatrix ricci(const MetricLieAlgebra& a) {
#ifdef _OPENMP
    if (a.dim >= 16) return par::ricci(a);
#endif
    return serial::ricci(a);
}

EinsteinFit einstein_check(const MetricLieAlgebra& a, double tol) {
    const RealMatrix ric = ricci(a);
    const RealMatrix ginv = inverse(a.gram);
    double trace = 0.0;
    for (int i = 0; i < a.dim; ++i)
        for (int k = 0; k < a.dim; ++k) trace += ginv(i, k) * ric(k, i);
    EinsteinFit fit;
    fit.c = trace / a.dim;
    double residual = 0.0;
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j)
            residual = std::max(residual, std::abs(ric(i, j) - fit.c * a.gram(i, j)));
    fit.residual = residual;
    fit.pass = residual < tol;
    return fit;
}

} // namespace kenmotsu
