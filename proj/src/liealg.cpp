#include "kenmotsu/liealg.hpp"

#include <cmath>

namespace kenmotsu {

void validate_algebra(const MetricLieAlgebra& a) {
    if (a.dim < 1 || a.dim > kMaxDim)
        fail(ErrorKind::DimensionMismatch, "algebra dimension must be in [1, 129]");
    if (a.structure.size() != static_cast<size_t>(a.dim) * a.dim * a.dim)
        fail(ErrorKind::DimensionMismatch, "structure tensor has wrong size");
    if (a.gram.rows != a.dim || a.gram.cols != a.dim)
        fail(ErrorKind::DimensionMismatch, "gram matrix has wrong shape");
    for (double x : a.structure)
        if (!std::isfinite(x)) fail(ErrorKind::ParseError, "structure tensor has non-finite entry");
    for (double x : a.gram.entries)
        if (!std::isfinite(x)) fail(ErrorKind::ParseError, "gram matrix has non-finite entry");
    if (antisymmetry_residual(a) > 1e-12)
        fail(ErrorKind::ParseError, "structure tensor is not antisymmetric");
}

double antisymmetry_residual(const MetricLieAlgebra& a) {
    double r = 0.0;
    for (int i = 0; i < a.dim; ++i)
        for (int j = i; j < a.dim; ++j)
            for (int k = 0; k < a.dim; ++k)
                r = std::max(r, std::abs(a.c(i, j, k) + a.c(j, i, k)));
    return r;
}

Vec bracket(const MetricLieAlgebra& a, const Vec& x, const Vec& y) {
    if (static_cast<int>(x.size()) != a.dim || static_cast<int>(y.size()) != a.dim)
        fail(ErrorKind::DimensionMismatch, "bracket: vector length does not match algebra");
    Vec out(a.dim, 0.0);
    for (int i = 0; i < a.dim; ++i) {
        if (x[i] == 0.0) continue;
        for (int j = 0; j < a.dim; ++j) {
            const double w = x[i] * y[j];
            if (w == 0.0) continue;
            const double* row = a.bracket_row(i, j);
            for (int k = 0; k < a.dim; ++k) out[k] += w * row[k];
        }
    }
    return out;
}

Vec bracket_basis(const MetricLieAlgebra& a, int i, int j) {
    if (i < 0 || i >= a.dim || j < 0 || j >= a.dim)
        fail(ErrorKind::IndexOutOfRange, "bracket_basis: index out of range");
    const double* row = a.bracket_row(i, j);
    return Vec(row, row + a.dim);
}

Vec bracket_basis_vec(const MetricLieAlgebra& a, int i, const Vec& y) {
    if (static_cast<int>(y.size()) != a.dim)
        fail(ErrorKind::DimensionMismatch, "bracket_basis_vec: vector length does not match algebra");
    Vec out(a.dim, 0.0);
    for (int j = 0; j < a.dim; ++j) {
        if (y[j] == 0.0) continue;
        const double* row = a.bracket_row(i, j);
        for (int k = 0; k < a.dim; ++k) out[k] += y[j] * row[k];
    }
    return out;
}

namespace {

// Jacobi cyclic sum for one basis triple, reported in the infinity norm.
double jacobi_triple(const MetricLieAlgebra& a, int i, int j, int k) {
    Vec s = bracket_basis_vec(a, i, bracket_basis(a, j, k));
    const Vec t = bracket_basis_vec(a, j, bracket_basis(a, k, i));
    const Vec u = bracket_basis_vec(a, k, bracket_basis(a, i, j));
    for (int m = 0; m < a.dim; ++m) s[m] += t[m] + u[m];
    return max_abs(s);
}

} // namespace

namespace serial {

double jacobi_residual(const MetricLieAlgebra& a) {
    double r = 0.0;
    for (int i = 0; i < a.dim; ++i)
        for (int j = i + 1; j < a.dim; ++j)
            for (int k = j + 1; k < a.dim; ++k)
                r = std::max(r, jacobi_triple(a, i, j, k));
    return r;
}

} // namespace serial

namespace par {

double jacobi_residual(const MetricLieAlgebra& a) {
    const int d = a.dim;
    double r = 0.0;
#pragma omp parallel for reduction(max : r) schedule(dynamic)
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            for (int k = j + 1; k < d; ++k) {
                const double v = jacobi_triple(a, i, j, k);
                r = r > v ? r : v;
            }
    return r;
}

} // namespace par

double jacobi_residual(const MetricLieAlgebra& a) {
#ifdef _OPENMP
    if (a.dim >= 24) return par::jacobi_residual(a);
#endif
    return serial::jacobi_residual(a);
}

Check is_ideal(const MetricLieAlgebra& a, const Subspace& s, double tol) {
    if (s.ambient_dim != a.dim)
        fail(ErrorKind::DimensionMismatch, "is_ideal: subspace ambient dimension mismatch");
    const std::vector<Vec> onb = gram_schmidt(s.basis, a.gram, tol);
    double residual = 0.0;
    for (int i = 0; i < a.dim; ++i) {
        for (const Vec& v : s.basis) {
            Vec w = bracket_basis_vec(a, i, v);
            for (const Vec& u : onb) w = axpy(-gram_inner(w, a.gram, u), u, w);
            residual = std::max(residual, gram_norm(w, a.gram));
        }
    }
    return make_check("is_ideal", residual, tol);
}

Check is_derivation(const MetricLieAlgebra& a, const RealMatrix& m, double tol) {
    if (m.rows != a.dim || m.cols != a.dim)
        fail(ErrorKind::DimensionMismatch, "is_derivation: map shape does not match algebra");
    double residual = 0.0;
    std::vector<Vec> mb(a.dim); // columns of M: image of each basis vector
    for (int i = 0; i < a.dim; ++i) {
        Vec e(a.dim, 0.0);
        e[i] = 1.0;
        mb[i] = matvec(m, e);
    }
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j) {
            Vec r = matvec(m, bracket_basis(a, i, j));
            // [M b_i, b_j] = -[b_j, M b_i]
            const Vec t1 = bracket_basis_vec(a, j, mb[i]);
            const Vec t2 = bracket_basis_vec(a, i, mb[j]);
            for (int k = 0; k < a.dim; ++k) r[k] += t1[k] - t2[k];
            residual = std::max(residual, max_abs(r));
        }
    return make_check("is_derivation", residual, tol);
}

std::pair<MetricLieAlgebra, AlmostContactData> pushforward(const MetricLieAlgebra& a,
                                                           const AlmostContactData& s,
                                                           const RealMatrix& t, double tol) {
    if (t.rows != a.dim || t.cols != a.dim)
        fail(ErrorKind::DimensionMismatch, "pushforward: map shape does not match algebra");
    const RealMatrix tinv = inverse(t, tol);
    if (frobenius(t) * frobenius(tinv) > 1e8)
        fail(ErrorKind::SingularMap, "pushforward: condition estimate exceeds 1e8");

    const int d = a.dim;
    MetricLieAlgebra out(d, RealMatrix(d, d));

    // C'[i][j] = T [T^-1 b_i, T^-1 b_j]; contract the middle index first so
    // the whole transport stays O(d^4).
    // w[m][j][.] = sum_b (T^-1)(b,j) c(m,b,.)
    std::vector<double> w(static_cast<size_t>(d) * d * d, 0.0);
    for (int m = 0; m < d; ++m)
        for (int b = 0; b < d; ++b) {
            const double* row = a.bracket_row(m, b);
            for (int j = 0; j < d; ++j) {
                const double f = tinv(b, j);
                if (f == 0.0) continue;
                double* dst = w.data() + (static_cast<size_t>(m) * d + j) * d;
                for (int k = 0; k < d; ++k) dst[k] += f * row[k];
            }
        }
    Vec v(d), tv(d);
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            std::fill(v.begin(), v.end(), 0.0);
            for (int m = 0; m < d; ++m) {
                const double f = tinv(m, i);
                if (f == 0.0) continue;
                const double* src = w.data() + (static_cast<size_t>(m) * d + j) * d;
                for (int k = 0; k < d; ++k) v[k] += f * src[k];
            }
            tv = matvec(t, v);
            for (int k = 0; k < d; ++k) {
                out.c(i, j, k) = tv[k];
                out.c(j, i, k) = -tv[k];
            }
        }

    RealMatrix g = matmul(transpose(tinv), matmul(a.gram, tinv));
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            const double sym = 0.5 * (g(i, j) + g(j, i));
            g(i, j) = sym;
            g(j, i) = sym;
        }
    out.gram = std::move(g);

    AlmostContactData sc;
    sc.phi = matmul(t, matmul(s.phi, tinv));
    sc.xi = matvec(t, s.xi);
    return {std::move(out), std::move(sc)};
}

} // namespace kenmotsu
