#pragma once

#include "kenmotsu/model.hpp"
#include "kenmotsu/verify.hpp"

namespace kenmotsu {

/// The structure restricted to the Reeb complement h = xi^perp:
/// D = ad_xi|h and J = phi|h expressed on an orthonormal basis of h, so the
/// induced inner product is the identity.
struct RestrictedData {
    std::vector<Vec> h_basis; // 2n orthonormal ambient vectors
    RealMatrix d;             // matrix of x -> [xi, x]
    RealMatrix j;             // matrix of phi on h
    Report checks;            // commutation, skew-normalization, complex, abelian
};

/// Classification output: the sorted spectrum and an explicit isomorphism.
/// basis_change columns are the images of the canonical model basis
/// (e0, e1, f1, ..., en, fn), so pushing the model forward along it
/// reproduces the classified input.
struct NormalForm {
    std::vector<double> lambdas; // sorted descending
    RealMatrix basis_change;
    double reconstruction_residual = 0.0;
};

/// Gram-orthonormal basis of xi^perp (dimension dim-1), built by pivoted
/// Gram-Schmidt of the standard basis after projecting out xi.  Throws
/// DegenerateMetric when no spanning set survives the tolerance.
Subspace reeb_complement(const MetricLieAlgebra& a, const AlmostContactData& s,
                         double tol = kDefaultTol);

/// Extracts D and J on h and validates [J,D] = 0, D + D^t = -2 Id,
/// J^2 = -Id (KahlerViolation) and abelianness of h (NonAbelianComplement).
RestrictedData restricted_data(const MetricLieAlgebra& a, const AlmostContactData& s,
                               const Subspace& h, double tol = kDefaultTol);

/// Full classification: diagonalizes i(D + Id) over the complex structure
/// of (h, J), reads off the spectrum, assembles the adapted basis and
/// verifies the reconstruction.  Throws ReconstructionMismatch when the
/// rebuilt structure deviates from the input by tol or more.
NormalForm normal_form(const MetricLieAlgebra& a, const AlmostContactData& s,
                       double tol = kDefaultTol);

/// The model structure carried back along nf.basis_change; equals the
/// classified input within the classification tolerance.
std::pair<MetricLieAlgebra, AlmostContactData> reconstruct(const NormalForm& nf);

/// Max entrywise deviation between two structures (brackets, gram, phi, xi).
double structure_distance(const MetricLieAlgebra& a1, const AlmostContactData& s1,
                          const MetricLieAlgebra& a2, const AlmostContactData& s2);

} // namespace kenmotsu
