#pragma once

#include <utility>
#include <vector>

#include "kenmotsu/liealg.hpp"

namespace kenmotsu {

/// The classifying invariants (lambda_1, ..., lambda_n).
struct Lambda {
    std::vector<double> values;

    Lambda() = default;
    explicit Lambda(std::vector<double> v) : values(std::move(v)) {}

    int n() const { return static_cast<int>(values.size()); }
    int dim() const { return 2 * n() + 1; }
};

/// A point (t, z_1, ..., z_n) of R x C^n, complex parts stored as the real
/// pairs (x_1, y_1, ..., x_n, y_n).
struct ModelPoint {
    double t = 0.0;
    std::vector<double> z; // length 2n

    ModelPoint() = default;
    ModelPoint(double t_, std::vector<double> z_) : t(t_), z(std::move(z_)) {}

    static ModelPoint origin(int n) { return ModelPoint(0.0, std::vector<double>(2 * n, 0.0)); }
};

/// The model algebra in the basis (e0, e1, f1, ..., en, fn): h abelian,
/// [e0, e_j] = -e_j - lambda_j f_j, [e0, f_j] = -f_j + lambda_j e_j,
/// orthonormal gram, phi(e0) = 0, phi(e_j) = f_j, phi(f_j) = -e_j, xi = e0.
std::pair<MetricLieAlgebra, AlmostContactData> model_algebra(const Lambda& lambda);

/// Group product (t1+t2, z_j + z'_j e^{-t1(1+i lambda_j)}).
ModelPoint multiply(const Lambda& lambda, const ModelPoint& p, const ModelPoint& q);

/// Group inverse (-t, -z_j e^{t(1+i lambda_j)}).
ModelPoint inverse(const Lambda& lambda, const ModelPoint& p);

/// Coordinate components of the left-invariant frame field with the given
/// basis index (0 = d/dt direction) at p.
Vec left_invariant_field(const Lambda& lambda, int basis_index, const ModelPoint& p);

/// Metric in coordinates: diag(1, e^{2t}, ..., e^{2t}).
RealMatrix metric_at(const Lambda& lambda, const ModelPoint& p);

/// Cross-validates the algebra's structure constants against central
/// finite-difference brackets of the frame fields at p; returns the max
/// deviation over basis pairs, measured in the frame at p.
double numeric_bracket_check(const Lambda& lambda, const ModelPoint& p, double h_step = 1e-5);

} // namespace kenmotsu
