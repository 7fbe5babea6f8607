#include "kenmotsu/model.hpp"

#include <cmath>
#include <complex>

namespace kenmotsu {

namespace {

void check_point(const Lambda& lambda, const ModelPoint& p, const char* where) {
    if (static_cast<int>(p.z.size()) != 2 * lambda.n())
        fail(ErrorKind::DimensionMismatch, std::string(where) + ": point size does not match lambda");
}

} // namespace

std::pair<MetricLieAlgebra, AlmostContactData> model_algebra(const Lambda& lambda) {
    const int n = lambda.n();
    const int d = 2 * n + 1;
    MetricLieAlgebra a(d, RealMatrix::identity(d));
    for (int j = 1; j <= n; ++j) {
        const double lj = lambda.values[j - 1];
        const int ej = 2 * j - 1;
        const int fj = 2 * j;
        // [e0, ej] = -ej - lj fj
        a.c(0, ej, ej) = -1.0;
        a.c(0, ej, fj) = -lj;
        a.c(ej, 0, ej) = 1.0;
        a.c(ej, 0, fj) = lj;
        // [e0, fj] = -fj + lj ej
        a.c(0, fj, fj) = -1.0;
        a.c(0, fj, ej) = lj;
        a.c(fj, 0, fj) = 1.0;
        a.c(fj, 0, ej) = -lj;
    }

    AlmostContactData s;
    s.phi = RealMatrix(d, d);
    for (int j = 1; j <= n; ++j) {
        s.phi(2 * j, 2 * j - 1) = 1.0;  // phi(ej) = fj
        s.phi(2 * j - 1, 2 * j) = -1.0; // phi(fj) = -ej
    }
    s.xi = Vec(d, 0.0);
    s.xi[0] = 1.0;
    return {std::move(a), std::move(s)};
}

ModelPoint multiply(const Lambda& lambda, const ModelPoint& p, const ModelPoint& q) {
    check_point(lambda, p, "multiply");
    check_point(lambda, q, "multiply");
    const int n = lambda.n();
    ModelPoint out(p.t + q.t, std::vector<double>(2 * n, 0.0));
    for (int j = 0; j < n; ++j) {
        const std::complex<double> w =
            std::exp(std::complex<double>(-p.t, -p.t * lambda.values[j]));
        const std::complex<double> zq(q.z[2 * j], q.z[2 * j + 1]);
        const std::complex<double> z = std::complex<double>(p.z[2 * j], p.z[2 * j + 1]) + zq * w;
        out.z[2 * j] = z.real();
        out.z[2 * j + 1] = z.imag();
    }
    return out;
}

ModelPoint inverse(const Lambda& lambda, const ModelPoint& p) {
    check_point(lambda, p, "inverse");
    const int n = lambda.n();
    ModelPoint out(-p.t, std::vector<double>(2 * n, 0.0));
    for (int j = 0; j < n; ++j) {
        const std::complex<double> w =
            std::exp(std::complex<double>(p.t, p.t * lambda.values[j]));
        const std::complex<double> z = -std::complex<double>(p.z[2 * j], p.z[2 * j + 1]) * w;
        out.z[2 * j] = z.real();
        out.z[2 * j + 1] = z.imag();
    }
    return out;
}

Vec left_invariant_field(const Lambda& lambda, int basis_index, const ModelPoint& p) {
    check_point(lambda, p, "left_invariant_field");
    const int n = lambda.n();
    const int d = 2 * n + 1;
    if (basis_index < 0 || basis_index >= d)
        fail(ErrorKind::IndexOutOfRange, "left_invariant_field: basis index out of range");
    Vec out(d, 0.0);
    if (basis_index == 0) {
        out[0] = 1.0;
        return out;
    }
    const int j = (basis_index + 1) / 2;        // 1-based complex slot
    const double lj = lambda.values[j - 1];
    const double decay = std::exp(-p.t);
    const double c = std::cos(lj * p.t);
    const double s = std::sin(lj * p.t);
    if (basis_index % 2 == 1) { // e_j = e^{-t}(cos(l t) d/dx - sin(l t) d/dy)
        out[2 * j - 1] = decay * c;
        out[2 * j] = -decay * s;
    } else {                    // f_j = e^{-t}(sin(l t) d/dx + cos(l t) d/dy)
        out[2 * j - 1] = decay * s;
        out[2 * j] = decay * c;
    }
    return out;
}

RealMatrix metric_at(const Lambda& lambda, const ModelPoint& p) {
    check_point(lambda, p, "metric_at");
    const int d = lambda.dim();
    RealMatrix g(d, d);
    g(0, 0) = 1.0;
    const double w = std::exp(2.0 * p.t);
    for (int k = 1; k < d; ++k) g(k, k) = w;
    return g;
}

double numeric_bracket_check(const Lambda& lambda, const ModelPoint& p, double h_step) {
    check_point(lambda, p, "numeric_bracket_check");
    if (!(h_step > 0.0)) fail(ErrorKind::DimensionMismatch, "numeric_bracket_check: h_step must be positive");
    const int d = lambda.dim();

    const auto field_at = [&](int idx, const Vec& coords) {
        ModelPoint q(coords[0], Vec(coords.begin() + 1, coords.end()));
        return left_invariant_field(lambda, idx, q);
    };

    Vec base(d, 0.0);
    base[0] = p.t;
    for (int k = 1; k < d; ++k) base[k] = p.z[k - 1];

    // Jacobian of each frame field by central differences.
    std::vector<RealMatrix> jac(d, RealMatrix(d, d));
    std::vector<Vec> frame(d);
    for (int idx = 0; idx < d; ++idx) {
        frame[idx] = field_at(idx, base);
        for (int m = 0; m < d; ++m) {
            Vec fwd = base, bwd = base;
            fwd[m] += h_step;
            bwd[m] -= h_step;
            const Vec fp = field_at(idx, fwd);
            const Vec fm = field_at(idx, bwd);
            for (int k = 0; k < d; ++k) jac[idx](k, m) = (fp[k] - fm[k]) / (2.0 * h_step);
        }
    }

    RealMatrix frame_matrix(d, d);
    for (int idx = 0; idx < d; ++idx)
        for (int k = 0; k < d; ++k) frame_matrix(k, idx) = frame[idx][k];
    const RealMatrix frame_inv = inverse(frame_matrix);

    const auto [algebra, contact] = model_algebra(lambda);
    (void)contact;

    double residual = 0.0;
    for (int a = 0; a < d; ++a)
        for (int b = a + 1; b < d; ++b) {
            // [X, Y]^k = sum_m X^m dY^k/dm - Y^m dX^k/dm
            Vec lie(d, 0.0);
            for (int k = 0; k < d; ++k) {
                double acc = 0.0;
                for (int m = 0; m < d; ++m)
                    acc += jac[b](k, m) * frame[a][m] - jac[a](k, m) * frame[b][m];
                lie[k] = acc;
            }
            const Vec coeffs = matvec(frame_inv, lie);
            const double* expected = algebra.bracket_row(a, b);
            for (int k = 0; k < d; ++k)
                residual = std::max(residual, std::abs(coeffs[k] - expected[k]));
        }
    return residual;
}

} // namespace kenmotsu
