#include "kenmotsu/verify.hpp"

#include <cmath>

namespace kenmotsu {

namespace {

void check_contact_shape(const MetricLieAlgebra& a, const AlmostContactData& s) {
    if (s.phi.rows != a.dim || s.phi.cols != a.dim || static_cast<int>(s.xi.size()) != a.dim)
        fail(ErrorKind::DimensionMismatch, "almost contact data does not match algebra dimension");
}

} // namespace

Report verify_almost_contact(const MetricLieAlgebra& a, const AlmostContactData& s, double tol) {
    check_contact_shape(a, s);
    if (a.dim % 2 == 0)
        fail(ErrorKind::EvenDimension, "almost contact structures require odd dimension");

    const Vec eta = matvec(a.gram, s.xi); // eta(b_i) = <b_i, xi>
    Report report;

    report.checks.push_back(
        make_check("unit_xi", std::abs(gram_inner(s.xi, a.gram, s.xi) - 1.0), tol));

    // phi^2 + Id - xi eta^t, columnwise.
    const RealMatrix phi2 = matmul(s.phi, s.phi);
    double rsq = 0.0;
    for (int j = 0; j < a.dim; ++j)
        for (int k = 0; k < a.dim; ++k) {
            const double expected = -((j == k) ? 1.0 : 0.0) + eta[j] * s.xi[k];
            rsq = std::max(rsq, std::abs(phi2(k, j) - expected));
        }
    report.checks.push_back(make_check("phi_square", rsq, tol));

    // phi^t gram phi - gram + eta eta^t.
    const RealMatrix m = matmul(transpose(s.phi), matmul(a.gram, s.phi));
    double rc = 0.0;
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j)
            rc = std::max(rc, std::abs(m(i, j) - a.gram(i, j) + eta[i] * eta[j]));
    report.checks.push_back(make_check("phi_compatibility", rc, tol));

    return report;
}

namespace {

double kenmotsu_pair_residual(const MetricLieAlgebra& a, const AlmostContactData& s,
                              const LeviCivitaTable& table, const Vec& eta,
                              const std::vector<Vec>& phi_cols, int i, int j) {
    const int d = a.dim;
    // L_{b_i} phi(b_j) - phi(L_{b_i} b_j) = <phi b_i, b_j> xi - eta(b_j) phi b_i
    Vec lhs = table.product_basis_left(i, phi_cols[j]);
    const double* lij = table.row(i, j);
    const Vec phil = matvec(s.phi, Vec(lij, lij + d));
    double gphi = 0.0; // <phi b_i, b_j>
    {
        const Vec gp = matvec(a.gram, phi_cols[i]);
        gphi = gp[j];
    }
    double r = 0.0;
    for (int k = 0; k < d; ++k) {
        const double rhs = gphi * s.xi[k] - eta[j] * phi_cols[i][k];
        r = std::max(r, std::abs(lhs[k] - phil[k] - rhs));
    }
    return r;
}

} // namespace

namespace serial {

double kenmotsu_condition_residual(const MetricLieAlgebra& a, const AlmostContactData& s,
                                   const LeviCivitaTable& table) {
    const int d = a.dim;
    const Vec eta = matvec(a.gram, s.xi);
    std::vector<Vec> phi_cols(d);
    for (int j = 0; j < d; ++j) {
        phi_cols[j] = Vec(d, 0.0);
        for (int k = 0; k < d; ++k) phi_cols[j][k] = s.phi(k, j);
    }
    double r = 0.0;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            r = std::max(r, kenmotsu_pair_residual(a, s, table, eta, phi_cols, i, j));
    return r;
}

} // namespace serial

namespace par {

double kenmotsu_condition_residual(const MetricLieAlgebra& a, const AlmostContactData& s,
                                   const LeviCivitaTable& table) {
    const int d = a.dim;
    const Vec eta = matvec(a.gram, s.xi);
    std::vector<Vec> phi_cols(d);
    for (int j = 0; j < d; ++j) {
        phi_cols[j] = Vec(d, 0.0);
        for (int k = 0; k < d; ++k) phi_cols[j][k] = s.phi(k, j);
    }
    double r = 0.0;
#pragma omp parallel for reduction(max : r) schedule(dynamic)
    for (int ij = 0; ij < d * d; ++ij) {
        const double v = kenmotsu_pair_residual(a, s, table, eta, phi_cols, ij / d, ij % d);
        r = r > v ? r : v;
    }
    return r;
}

} // namespace par

double kenmotsu_condition_residual(const MetricLieAlgebra& a, const AlmostContactData& s,
                                   const LeviCivitaTable& table) {
#ifdef _OPENMP
    if (a.dim >= 24) return par::kenmotsu_condition_residual(a, s, table);
#endif
    return serial::kenmotsu_condition_residual(a, s, table);
}

Report verify_kenmotsu(const MetricLieAlgebra& a, const AlmostContactData& s, double tol) {
    Report report = verify_almost_contact(a, s, tol);
    if (!report.pass())
        fail(ErrorKind::AlmostContactViolation,
             "verify_kenmotsu: almost contact axioms fail (max residual " +
                 std::to_string(report.max_residual()) + ")");
    const LeviCivitaTable table = levi_civita_table(a);
    report.checks.push_back(
        make_check("kenmotsu_condition", kenmotsu_condition_residual(a, s, table), tol));
    return report;
}

Report derived_identities(const MetricLieAlgebra& a, const AlmostContactData& s, double tol) {
    check_contact_shape(a, s);
    const int d = a.dim;
    const Vec eta = matvec(a.gram, s.xi);
    const LeviCivitaTable table = levi_civita_table(a);
    Report report;

    report.checks.push_back(make_check("phi_xi", max_abs(matvec(s.phi, s.xi)), tol));

    // eta(phi b_j) over columns: (gram xi)^t phi
    const Vec eta_phi = matvec(transpose(s.phi), eta);
    report.checks.push_back(make_check("eta_phi", max_abs(eta_phi), tol));

    // gram-adjoint skewness: gram phi + (gram phi)^t = 0
    const RealMatrix gp = matmul(a.gram, s.phi);
    double rskew = 0.0;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) rskew = std::max(rskew, std::abs(gp(i, j) + gp(j, i)));
    report.checks.push_back(make_check("phi_skew", rskew, tol));

    // L_X xi = X - eta(X) xi on basis vectors.
    double rlxi = 0.0;
    for (int i = 0; i < d; ++i) {
        const Vec l = table.product_basis_left(i, s.xi);
        for (int k = 0; k < d; ++k) {
            const double expected = ((i == k) ? 1.0 : 0.0) - eta[i] * s.xi[k];
            rlxi = std::max(rlxi, std::abs(l[k] - expected));
        }
    }
    report.checks.push_back(make_check("L_X_xi", rlxi, tol));

    // [L_xi, phi] = 0 on basis vectors.
    double rcomm = 0.0;
    for (int j = 0; j < d; ++j) {
        Vec phij(d, 0.0);
        Vec bj(d, 0.0);
        bj[j] = 1.0;
        for (int k = 0; k < d; ++k) phij[k] = s.phi(k, j);
        const Vec t1 = table.product(s.xi, phij);
        const Vec t2 = matvec(s.phi, table.product(s.xi, bj));
        for (int k = 0; k < d; ++k) rcomm = std::max(rcomm, std::abs(t1[k] - t2[k]));
    }
    report.checks.push_back(make_check("L_xi_phi_commute", rcomm, tol));

    // <L_X Y, xi> = -<X,Y> + eta(X) eta(Y) on basis pairs.
    double reta_l = 0.0;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            const double* lij = table.row(i, j);
            double acc = 0.0;
            for (int k = 0; k < d; ++k) acc += lij[k] * eta[k];
            const double expected = -a.gram(i, j) + eta[i] * eta[j];
            reta_l = std::max(reta_l, std::abs(acc - expected));
        }
    report.checks.push_back(make_check("eta_L", reta_l, tol));

    // d eta = 0, i.e. eta([X,Y]) = 0 on basis pairs.
    double rdeta = 0.0;
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            const double* row = a.bracket_row(i, j);
            double acc = 0.0;
            for (int k = 0; k < d; ++k) acc += row[k] * eta[k];
            rdeta = std::max(rdeta, std::abs(acc));
        }
    report.checks.push_back(make_check("d_eta", rdeta, tol));

    return report;
}

} // namespace kenmotsu
