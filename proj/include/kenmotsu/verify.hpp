#pragma once

#include "kenmotsu/connection.hpp"
#include "kenmotsu/report.hpp"

namespace kenmotsu {

/// Checks the almost contact metric axioms on basis vectors:
///   unit_xi            <xi, xi> = 1
///   phi_square         phi^2 X = -X + eta(X) xi
///   phi_compatibility  <phi X, phi Y> = <X, Y> - eta(X) eta(Y)
/// Throws EvenDimension when dim is even.
Report verify_almost_contact(const MetricLieAlgebra& a, const AlmostContactData& s,
                             double tol = kDefaultTol);

/// Checks the algebraic Kenmotsu condition
///   L_X phi(Y) - phi(L_X Y) = <phi X, Y> xi - eta(Y) phi X
/// over all basis pairs, on top of the almost-contact report.  Throws
/// AlmostContactViolation when the precondition report fails.
Report verify_kenmotsu(const MetricLieAlgebra& a, const AlmostContactData& s,
                       double tol = kDefaultTol);

/// Max residual of the Kenmotsu condition over basis pairs, given a
/// precomputed Levi-Civita table.  Dispatches to the OpenMP kernel for
/// large dimensions.
double kenmotsu_condition_residual(const MetricLieAlgebra& a, const AlmostContactData& s,
                                   const LeviCivitaTable& table);

namespace serial {
double kenmotsu_condition_residual(const MetricLieAlgebra& a, const AlmostContactData& s,
                                   const LeviCivitaTable& table);
}
namespace par {
double kenmotsu_condition_residual(const MetricLieAlgebra& a, const AlmostContactData& s,
                                   const LeviCivitaTable& table);
}

/// One named check per consequence identity of the Kenmotsu condition:
///   phi_xi              phi(xi) = 0
///   eta_phi             eta(phi X) = 0
///   phi_skew            phi^t + phi = 0
///   L_X_xi              L_X xi = X - eta(X) xi
///   L_xi_phi_commute    [L_xi, phi] = 0
///   eta_L               <L_X Y, xi> = -<X,Y> + eta(X) eta(Y)
///   d_eta               eta([X,Y]) = 0
/// These are theorems for valid inputs; failures indicate numeric or input
/// faults.
Report derived_identities(const MetricLieAlgebra& a, const AlmostContactData& s,
                          double tol = kDefaultTol);

} // namespace kenmotsu
