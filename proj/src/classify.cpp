#include "kenmotsu/classify.hpp"

#include <algorithm>
#include <cmath>

namespace kenmotsu {

namespace {

// Pivoted Gram-Schmidt: repeatedly takes the candidate with the largest
// remaining gram-norm, orthogonalizes the rest against it, and stops after
// `count` vectors.  Robust against near-dependent candidate sets where a
// fixed processing order would amplify rounding.
std::vector<Vec> pivoted_orthonormal(std::vector<Vec> candidates, const RealMatrix& gram,
                                     int count, double tol) {
    std::vector<Vec> basis;
    double scale = 0.0;
    for (const Vec& v : candidates) scale = std::max(scale, gram_norm(v, gram));
    if (scale == 0.0) scale = 1.0;
    while (static_cast<int>(basis.size()) < count) {
        size_t best = 0;
        double best_norm = -1.0;
        for (size_t i = 0; i < candidates.size(); ++i) {
            const double nrm = gram_norm(candidates[i], gram);
            if (nrm > best_norm) {
                best_norm = nrm;
                best = i;
            }
        }
        if (best_norm < tol * scale)
            fail(ErrorKind::DegenerateMetric,
                 "orthonormalization ran out of independent directions");
        Vec u = candidates[best];
        candidates.erase(candidates.begin() + static_cast<long>(best));
        // One re-orthogonalization pass against the accepted set.
        for (int pass = 0; pass < 2; ++pass)
            for (const Vec& b : basis) u = axpy(-gram_inner(u, gram, b), b, u);
        const double nrm = gram_norm(u, gram);
        for (double& x : u) x /= nrm;
        for (Vec& v : candidates) v = axpy(-gram_inner(v, gram, u), u, v);
        basis.push_back(std::move(u));
    }
    return basis;
}

} // namespace

Subspace reeb_complement(const MetricLieAlgebra& a, const AlmostContactData& s, double tol) {
    const int d = a.dim;
    const double xi_norm = gram_norm(s.xi, a.gram);
    if (!(xi_norm > 0.0) || !std::isfinite(xi_norm))
        fail(ErrorKind::DegenerateMetric, "reeb_complement: xi has degenerate norm");
    Vec xi_unit = s.xi;
    for (double& x : xi_unit) x /= xi_norm;

    std::vector<Vec> candidates(d);
    for (int i = 0; i < d; ++i) {
        Vec e(d, 0.0);
        e[i] = 1.0;
        candidates[i] = axpy(-gram_inner(e, a.gram, xi_unit), xi_unit, e);
    }

    Subspace h;
    h.ambient_dim = d;
    if (d > 1) h.basis = pivoted_orthonormal(std::move(candidates), a.gram, d - 1, tol);
    return h;
}

RestrictedData restricted_data(const MetricLieAlgebra& a, const AlmostContactData& s,
                               const Subspace& h, double tol) {
    const int d = a.dim;
    const int hn = h.rank();
    if (h.ambient_dim != d || hn != d - 1 || hn % 2 != 0)
        fail(ErrorKind::DimensionMismatch, "restricted_data: h must be a (dim-1)-dimensional subspace");

    RestrictedData rd;
    rd.h_basis = h.basis;
    rd.d = RealMatrix(hn, hn);
    rd.j = RealMatrix(hn, hn);

    // Coordinates on h via the gram pairing with the orthonormal basis.
    std::vector<Vec> gh(hn);
    for (int b = 0; b < hn; ++b) gh[b] = matvec(a.gram, h.basis[b]);
    const auto to_h = [&](const Vec& v) {
        Vec out(hn, 0.0);
        for (int b = 0; b < hn; ++b) {
            double acc = 0.0;
            for (int k = 0; k < d; ++k) acc += gh[b][k] * v[k];
            out[b] = acc;
        }
        return out;
    };

    double off_h = 0.0; // component of images that escapes h (informative)
    for (int b = 0; b < hn; ++b) {
        const Vec dv = bracket(a, s.xi, h.basis[b]);
        const Vec jv = matvec(s.phi, h.basis[b]);
        const Vec dh = to_h(dv);
        const Vec jh = to_h(jv);
        for (int r = 0; r < hn; ++r) {
            rd.d(r, b) = dh[r];
            rd.j(r, b) = jh[r];
        }
        // residual of reconstruction back in ambient coordinates
        Vec dres = dv, jres = jv;
        for (int r = 0; r < hn; ++r) {
            dres = axpy(-dh[r], h.basis[r], dres);
            jres = axpy(-jh[r], h.basis[r], jres);
        }
        off_h = std::max({off_h, gram_norm(dres, a.gram), gram_norm(jres, a.gram)});
    }

    // [J, D] = 0
    const RealMatrix jd = matmul(rd.j, rd.d);
    const RealMatrix dj = matmul(rd.d, rd.j);
    double rcomm = 0.0;
    for (int i = 0; i < hn; ++i)
        for (int k = 0; k < hn; ++k) rcomm = std::max(rcomm, std::abs(jd(i, k) - dj(i, k)));

    // D + D^t = -2 Id (orthonormal basis, so adjoint = transpose)
    double rskew = 0.0;
    for (int i = 0; i < hn; ++i)
        for (int k = 0; k < hn; ++k) {
            const double expected = (i == k) ? -2.0 : 0.0;
            rskew = std::max(rskew, std::abs(rd.d(i, k) + rd.d(k, i) - expected));
        }

    // J^2 = -Id
    const RealMatrix jj = matmul(rd.j, rd.j);
    double rcomplex = 0.0;
    for (int i = 0; i < hn; ++i)
        for (int k = 0; k < hn; ++k)
            rcomplex = std::max(rcomplex, std::abs(jj(i, k) + ((i == k) ? 1.0 : 0.0)));

    // h abelian
    double rabelian = 0.0;
    for (int b1 = 0; b1 < hn; ++b1)
        for (int b2 = b1 + 1; b2 < hn; ++b2)
            rabelian = std::max(rabelian, max_abs(bracket(a, h.basis[b1], h.basis[b2])));

    rd.checks.checks.push_back(make_check("commutes_JD", rcomm, tol));
    rd.checks.checks.push_back(make_check("normalized_skew_D", rskew, tol));
    rd.checks.checks.push_back(make_check("complex_J", rcomplex, tol));
    rd.checks.checks.push_back(make_check("abelian_h", rabelian, tol));
    rd.checks.checks.push_back(make_check("stays_in_h", off_h, tol));

    if (rabelian >= tol)
        fail(ErrorKind::NonAbelianComplement,
             "restricted_data: xi^perp is not abelian (residual " + std::to_string(rabelian) + ")");
    if (rcomm >= tol || rskew >= tol || rcomplex >= tol || off_h >= tol)
        fail(ErrorKind::KahlerViolation,
             "restricted_data: Kahler structure conditions fail on xi^perp");
    return rd;
}

namespace {

// Builds a J-adapted orthonormal basis (u_1, ..., u_n) of R^{2n} in
// h-coordinates: each step takes the largest remaining candidate, removes
// span(u, Ju) and repeats.  Euclidean geometry, since the h-basis is
// gram-orthonormal.
std::vector<Vec> complex_basis(const RealMatrix& j, double tol) {
    const int hn = j.rows;
    const int n = hn / 2;
    std::vector<Vec> candidates(hn);
    for (int i = 0; i < hn; ++i) {
        candidates[i] = Vec(hn, 0.0);
        candidates[i][i] = 1.0;
    }
    const RealMatrix id = RealMatrix::identity(hn);
    std::vector<Vec> real_basis; // u_1, Ju_1, u_2, Ju_2, ...
    std::vector<Vec> us;
    const auto euclid_norm = [&](const Vec& v) { return gram_norm(v, id); };
    for (int step = 0; step < n; ++step) {
        size_t best = 0;
        double best_norm = -1.0;
        for (size_t i = 0; i < candidates.size(); ++i) {
            const double nrm = euclid_norm(candidates[i]);
            if (nrm > best_norm) {
                best_norm = nrm;
                best = i;
            }
        }
        if (best_norm < tol)
            fail(ErrorKind::DegenerateMetric, "complex basis construction ran out of directions");
        Vec u = candidates[best];
        candidates.erase(candidates.begin() + static_cast<long>(best));
        for (int pass = 0; pass < 2; ++pass)
            for (const Vec& b : real_basis) u = axpy(-gram_inner(u, id, b), b, u);
        double nrm = euclid_norm(u);
        for (double& x : u) x /= nrm;
        Vec ju = matvec(j, u);
        // J is orthogonal on the validated inputs; renormalize anyway.
        for (int pass = 0; pass < 2; ++pass) {
            ju = axpy(-gram_inner(ju, id, u), u, ju);
            for (const Vec& b : real_basis) ju = axpy(-gram_inner(ju, id, b), b, ju);
        }
        nrm = euclid_norm(ju);
        for (double& x : ju) x /= nrm;
        real_basis.push_back(u);
        real_basis.push_back(ju);
        for (Vec& v : candidates) {
            v = axpy(-gram_inner(v, id, u), u, v);
            v = axpy(-gram_inner(v, id, ju), ju, v);
        }
        us.push_back(std::move(u));
    }
    return us;
}

} // namespace

NormalForm normal_form(const MetricLieAlgebra& a, const AlmostContactData& s, double tol) {
    const int d = a.dim;
    const Subspace h = reeb_complement(a, s, tol);
    NormalForm nf;

    if (d == 1) {
        nf.basis_change = RealMatrix(1, 1);
        nf.basis_change(0, 0) = s.xi[0];
    } else {
        const RestrictedData rd = restricted_data(a, s, h, tol);
        const int hn = d - 1;
        const int n = hn / 2;

        // A' = D + Id is skew and commutes with J; i A' is Hermitian over
        // the complex structure of (h, J).
        RealMatrix aprime = rd.d;
        for (int i = 0; i < hn; ++i) aprime(i, i) += 1.0;

        const std::vector<Vec> us = complex_basis(rd.j, tol);
        std::vector<Vec> jus(n);
        for (int k = 0; k < n; ++k) jus[k] = matvec(rd.j, us[k]);

        // Complex matrix of A': M(j,k) = <A'u_k, u_j> + i <A'u_k, J u_j>.
        ComplexMatrix herm(n);
        for (int k = 0; k < n; ++k) {
            const Vec au = matvec(aprime, us[k]);
            for (int jj = 0; jj < n; ++jj) {
                double re = 0.0, im = 0.0;
                for (int m = 0; m < hn; ++m) {
                    re += au[m] * us[jj][m];
                    im += au[m] * jus[jj][m];
                }
                herm(jj, k) = Complex{0.0, 1.0} * Complex{re, im}; // i * M
            }
        }

        const HermitianEigen eig = hermitian_eigen(herm, std::max(tol, 10 * kDefaultTol));
        nf.lambdas = eig.values; // descending

        // Real adapted basis from the complex eigenvectors, phases fixed by
        // making the largest-magnitude component real positive.
        nf.basis_change = RealMatrix(d, d);
        for (int k = 0; k < d; ++k) nf.basis_change(k, 0) = s.xi[k];
        for (int col = 0; col < n; ++col) {
            CVec c(n);
            for (int k = 0; k < n; ++k) c[k] = eig.vectors(k, col);
            size_t arg = 0;
            double best = -1.0;
            for (size_t k = 0; k < c.size(); ++k)
                if (std::abs(c[k]) > best) {
                    best = std::abs(c[k]);
                    arg = k;
                }
            const Complex phase = std::conj(c[arg]) / std::abs(c[arg]);
            for (Complex& x : c) x *= phase;

            // e = sum_k Re(c_k) u_k + Im(c_k) J u_k, in h-coordinates.
            Vec e(hn, 0.0), je(hn, 0.0);
            for (int k = 0; k < n; ++k) {
                e = axpy(c[k].real(), us[k], e);
                e = axpy(c[k].imag(), jus[k], e);
            }
            je = matvec(rd.j, e);

            // Ambient coordinates through the orthonormal h-basis.
            Vec e_amb(d, 0.0), je_amb(d, 0.0);
            for (int k = 0; k < hn; ++k) {
                e_amb = axpy(e[k], rd.h_basis[k], e_amb);
                je_amb = axpy(je[k], rd.h_basis[k], je_amb);
            }
            for (int k = 0; k < d; ++k) {
                nf.basis_change(k, 2 * col + 1) = e_amb[k];
                nf.basis_change(k, 2 * col + 2) = je_amb[k];
            }
        }
    }

    const auto [ra, rs] = reconstruct(nf);
    nf.reconstruction_residual = structure_distance(ra, rs, a, s);
    if (!(nf.reconstruction_residual < tol))
        fail(ErrorKind::ReconstructionMismatch,
             "normal_form: reconstruction residual " + std::to_string(nf.reconstruction_residual) +
                 " exceeds tolerance");
    return nf;
}

std::pair<MetricLieAlgebra, AlmostContactData> reconstruct(const NormalForm& nf) {
    const auto [model, contact] = model_algebra(Lambda(nf.lambdas));
    return pushforward(model, contact, nf.basis_change);
}

double structure_distance(const MetricLieAlgebra& a1, const AlmostContactData& s1,
                          const MetricLieAlgebra& a2, const AlmostContactData& s2) {
    if (a1.dim != a2.dim)
        fail(ErrorKind::DimensionMismatch, "structure_distance: dimensions disagree");
    double r = 0.0;
    for (size_t i = 0; i < a1.structure.size(); ++i)
        r = std::max(r, std::abs(a1.structure[i] - a2.structure[i]));
    for (size_t i = 0; i < a1.gram.entries.size(); ++i)
        r = std::max(r, std::abs(a1.gram.entries[i] - a2.gram.entries[i]));
    for (size_t i = 0; i < s1.phi.entries.size(); ++i)
        r = std::max(r, std::abs(s1.phi.entries[i] - s2.phi.entries[i]));
    for (size_t i = 0; i < s1.xi.size(); ++i) r = std::max(r, std::abs(s1.xi[i] - s2.xi[i]));
    return r;
}

} // namespace kenmotsu
