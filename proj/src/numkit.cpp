#include "kenmotsu/numkit.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace kenmotsu {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::EvenDimension: return "EvenDimension";
        case ErrorKind::DegenerateMetric: return "DegenerateMetric";
        case ErrorKind::DependentInput: return "DependentInput";
        case ErrorKind::NotHermitian: return "NotHermitian";
        case ErrorKind::NoConvergence: return "NoConvergence";
        case ErrorKind::SingularMap: return "SingularMap";
        case ErrorKind::AlmostContactViolation: return "AlmostContactViolation";
        case ErrorKind::KahlerViolation: return "KahlerViolation";
        case ErrorKind::NonAbelianComplement: return "NonAbelianComplement";
        case ErrorKind::ReconstructionMismatch: return "ReconstructionMismatch";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "UnknownError";
}

RealMatrix RealMatrix::identity(int n) {
    RealMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::identity(int n) {
    ComplexMatrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = Complex{1.0, 0.0};
    return m;
}

double max_abs(const Vec& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

double max_abs(const RealMatrix& m) {
    double r = 0.0;
    for (double x : m.entries) r = std::max(r, std::abs(x));
    return r;
}

double max_abs(const ComplexMatrix& m) {
    double r = 0.0;
    for (const Complex& x : m.entries) r = std::max(r, std::abs(x));
    return r;
}

double frobenius(const RealMatrix& m) {
    double s = 0.0;
    for (double x : m.entries) s += x * x;
    return std::sqrt(s);
}

Vec matvec(const RealMatrix& m, const Vec& v) {
    if (static_cast<int>(v.size()) != m.cols)
        fail(ErrorKind::DimensionMismatch, "matvec: vector length does not match matrix columns");
    Vec out(m.rows, 0.0);
    for (int i = 0; i < m.rows; ++i) {
        double acc = 0.0;
        for (int j = 0; j < m.cols; ++j) acc += m(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

RealMatrix matmul(const RealMatrix& a, const RealMatrix& b) {
    if (a.cols != b.rows)
        fail(ErrorKind::DimensionMismatch, "matmul: inner dimensions disagree");
    RealMatrix out(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (int j = 0; j < b.cols; ++j) out(i, j) += aik * b(k, j);
        }
    return out;
}

RealMatrix transpose(const RealMatrix& m) {
    RealMatrix out(m.cols, m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) out(j, i) = m(i, j);
    return out;
}

RealMatrix add(const RealMatrix& a, const RealMatrix& b) {
    if (a.rows != b.rows || a.cols != b.cols)
        fail(ErrorKind::DimensionMismatch, "add: shapes disagree");
    RealMatrix out = a;
    for (size_t i = 0; i < out.entries.size(); ++i) out.entries[i] += b.entries[i];
    return out;
}

RealMatrix scale(const RealMatrix& a, double s) {
    RealMatrix out = a;
    for (double& x : out.entries) x *= s;
    return out;
}

Vec axpy(double a, const Vec& x, const Vec& y) {
    if (x.size() != y.size())
        fail(ErrorKind::DimensionMismatch, "axpy: lengths disagree");
    Vec out(y);
    for (size_t i = 0; i < out.size(); ++i) out[i] += a * x[i];
    return out;
}

Vec sub(const Vec& x, const Vec& y) {
    if (x.size() != y.size())
        fail(ErrorKind::DimensionMismatch, "sub: lengths disagree");
    Vec out(x);
    for (size_t i = 0; i < out.size(); ++i) out[i] -= y[i];
    return out;
}

double gram_inner(const Vec& u, const RealMatrix& gram, const Vec& v) {
    if (static_cast<int>(u.size()) != gram.rows || static_cast<int>(v.size()) != gram.cols)
        fail(ErrorKind::DimensionMismatch, "gram_inner: vector length does not match gram");
    double acc = 0.0;
    for (int i = 0; i < gram.rows; ++i) {
        if (u[i] == 0.0) continue;
        double row = 0.0;
        for (int j = 0; j < gram.cols; ++j) row += gram(i, j) * v[j];
        acc += u[i] * row;
    }
    return acc;
}

double gram_norm(const Vec& u, const RealMatrix& gram) {
    // Guard against tiny negative values produced by rounding.
    return std::sqrt(std::max(0.0, gram_inner(u, gram, u)));
}

namespace {

// LU with partial pivoting; returns false when a pivot magnitude falls
// below `floor`.  On success `lu` holds the factors and `det` the
// determinant (including the permutation sign).
bool lu_factor(const RealMatrix& m, RealMatrix& lu, std::vector<int>& perm, double& det,
               double floor) {
    const int n = m.rows;
    lu = m;
    perm.resize(n);
    std::iota(perm.begin(), perm.end(), 0);
    det = 1.0;
    for (int k = 0; k < n; ++k) {
        int p = k;
        double best = std::abs(lu(k, k));
        for (int i = k + 1; i < n; ++i) {
            const double v = std::abs(lu(i, k));
            if (v > best) {
                best = v;
                p = i;
            }
        }
        if (!(best > floor)) return false;
        if (p != k) {
            for (int j = 0; j < n; ++j) std::swap(lu(k, j), lu(p, j));
            std::swap(perm[k], perm[p]);
            det = -det;
        }
        det *= lu(k, k);
        for (int i = k + 1; i < n; ++i) {
            lu(i, k) /= lu(k, k);
            const double f = lu(i, k);
            for (int j = k + 1; j < n; ++j) lu(i, j) -= f * lu(k, j);
        }
    }
    return true;
}

} // namespace

RealMatrix inverse(const RealMatrix& m, double tol) {
    if (!m.square()) fail(ErrorKind::DimensionMismatch, "inverse: matrix not square");
    const int n = m.rows;
    RealMatrix lu;
    std::vector<int> perm;
    double det = 0.0;
    if (!lu_factor(m, lu, perm, det, tol))
        fail(ErrorKind::SingularMap, "inverse: matrix is singular within tolerance");
    RealMatrix inv(n, n);
    Vec col(n), x(n);
    for (int c = 0; c < n; ++c) {
        for (int i = 0; i < n; ++i) col[i] = (perm[i] == c) ? 1.0 : 0.0;
        // forward substitution (unit lower factor)
        for (int i = 0; i < n; ++i) {
            double acc = col[i];
            for (int j = 0; j < i; ++j) acc -= lu(i, j) * x[j];
            x[i] = acc;
        }
        // back substitution
        for (int i = n - 1; i >= 0; --i) {
            double acc = x[i];
            for (int j = i + 1; j < n; ++j) acc -= lu(i, j) * x[j];
            x[i] = acc / lu(i, i);
        }
        for (int i = 0; i < n; ++i) inv(i, c) = x[i];
    }
    return inv;
}

double determinant(const RealMatrix& m) {
    if (!m.square()) fail(ErrorKind::DimensionMismatch, "determinant: matrix not square");
    RealMatrix lu;
    std::vector<int> perm;
    double det = 0.0;
    if (!lu_factor(m, lu, perm, det, 0.0)) return 0.0;
    return det;
}

double condition_estimate(const RealMatrix& m) {
    try {
        const RealMatrix inv = inverse(m, 0.0);
        return frobenius(m) * frobenius(inv);
    } catch (const Error&) {
        return std::numeric_limits<double>::infinity();
    }
}

bool is_spd(const RealMatrix& m, double tol) {
    if (!m.square() || m.rows == 0) return false;
    const int n = m.rows;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::abs(m(i, j) - m(j, i)) > tol) return false;
    // Cholesky without pivoting; SPD iff all pivots stay positive.
    RealMatrix l(n, n);
    for (int j = 0; j < n; ++j) {
        double diag = m(j, j);
        for (int k = 0; k < j; ++k) diag -= l(j, k) * l(j, k);
        if (!(diag > 0.0) || !std::isfinite(diag)) return false;
        l(j, j) = std::sqrt(diag);
        for (int i = j + 1; i < n; ++i) {
            double v = m(i, j);
            for (int k = 0; k < j; ++k) v -= l(i, k) * l(j, k);
            l(i, j) = v / l(j, j);
        }
    }
    return true;
}

std::vector<Vec> gram_schmidt(const std::vector<Vec>& vectors, const RealMatrix& gram,
                              double tol) {
    std::vector<Vec> basis;
    basis.reserve(vectors.size());
    for (const Vec& candidate : vectors) {
        if (static_cast<int>(candidate.size()) != gram.rows)
            fail(ErrorKind::DimensionMismatch, "gram_schmidt: vector length does not match gram");
        Vec v = candidate;
        // Two orthogonalization passes keep the result orthonormal even when
        // candidates are strongly skewed against the earlier ones.
        for (int pass = 0; pass < 2; ++pass)
            for (const Vec& u : basis) v = axpy(-gram_inner(v, gram, u), u, v);
        const double norm = gram_norm(v, gram);
        if (norm < tol)
            fail(ErrorKind::DependentInput,
                 "gram_schmidt: candidate is linearly dependent within tolerance");
        for (double& x : v) x /= norm;
        basis.push_back(std::move(v));
    }
    return basis;
}

namespace {

double off_diagonal_max(const ComplexMatrix& h) {
    double m = 0.0;
    for (int i = 0; i < h.n; ++i)
        for (int j = 0; j < h.n; ++j)
            if (i != j) m = std::max(m, std::abs(h(i, j)));
    return m;
}

} // namespace

HermitianEigen hermitian_eigen(const ComplexMatrix& h, double tol) {
    const int n = h.n;
    if (n <= 0) fail(ErrorKind::DimensionMismatch, "hermitian_eigen: empty matrix");

    double dev = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            dev = std::max(dev, std::abs(h(i, j) - std::conj(h(j, i))));
    if (dev >= tol)
        fail(ErrorKind::NotHermitian, "hermitian_eigen: matrix is not Hermitian within tolerance");

    // Work on the Hermitian part so rounding asymmetry cannot bias sweeps.
    ComplexMatrix a(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = 0.5 * (h(i, j) + std::conj(h(j, i)));

    ComplexMatrix v = ComplexMatrix::identity(n);
    const double scale = std::max(max_abs(a), 1e-300);
    const double target = 1e-15 * scale;

    constexpr int kSweepBudget = 64;
    int sweep = 0;
    for (; sweep < kSweepBudget; ++sweep) {
        if (off_diagonal_max(a) <= target) break;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const Complex apq = a(p, q);
                const double r = std::abs(apq);
                if (r <= target * 1e-2) {
                    continue;
                }
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                // Phase removal followed by a classic real Jacobi rotation.
                const Complex phase = apq / r;
                const double theta = (aqq - app) / (2.0 * r);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                // Unitary U differs from the identity only in rows/cols p,q:
                //   U(p,p) = c          U(p,q) = s
                //   U(q,p) = -s*conj(phase)   U(q,q) = c*conj(phase)
                const Complex upp{c, 0.0};
                const Complex upq{s, 0.0};
                const Complex uqp = -s * std::conj(phase);
                const Complex uqq = c * std::conj(phase);

                for (int k = 0; k < n; ++k) { // A <- A U
                    const Complex akp = a(k, p);
                    const Complex akq = a(k, q);
                    a(k, p) = akp * upp + akq * uqp;
                    a(k, q) = akp * upq + akq * uqq;
                }
                for (int k = 0; k < n; ++k) { // A <- U* A
                    const Complex apk = a(p, k);
                    const Complex aqk = a(q, k);
                    a(p, k) = std::conj(upp) * apk + std::conj(uqp) * aqk;
                    a(q, k) = std::conj(upq) * apk + std::conj(uqq) * aqk;
                }
                a(p, q) = Complex{0.0, 0.0};
                a(q, p) = Complex{0.0, 0.0};
                a(p, p) = Complex{a(p, p).real(), 0.0};
                a(q, q) = Complex{a(q, q).real(), 0.0};

                for (int k = 0; k < n; ++k) { // V <- V U
                    const Complex vkp = v(k, p);
                    const Complex vkq = v(k, q);
                    v(k, p) = vkp * upp + vkq * uqp;
                    v(k, q) = vkp * upq + vkq * uqq;
                }
            }
        }
    }
    if (sweep == kSweepBudget && off_diagonal_max(a) > target)
        fail(ErrorKind::NoConvergence, "hermitian_eigen: sweep budget exhausted");

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return a(i, i).real() > a(j, j).real(); });

    HermitianEigen out;
    out.values.resize(n);
    out.vectors = ComplexMatrix(n);
    for (int k = 0; k < n; ++k) {
        out.values[k] = a(order[k], order[k]).real();
        for (int i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
    }
    return out;
}

} // namespace kenmotsu
