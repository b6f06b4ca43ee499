// compression.hpp — splitting a unitary against a subspace into (T, S, Ũ),
// the two Herglotz evaluations whose equality is the central identity, and
// the certified generalized spectral measure of the compression.

#pragma once

#include "hdl/config.hpp"
#include "hdl/contractions.hpp"
#include "hdl/measures.hpp"

namespace hdl {

// U = T + S with T = P_K U and S = (I − P_K) U, plus the unitary
// identification Ũ : U*(K) → K and the defect data of S.  K-side quantities
// are k×k matrices in the frames (ustar_k → K); ambient quantities are n×n.
struct CompressionTriple {
    CMatrix u;        // n×n unitary
    Frame k;          // the subspace, k columns
    CMatrix t;        // P_K U, ambient
    CMatrix s;        // (I − P_K) U, ambient
    Frame ustar_k;    // orthonormal basis of U*(K)
    CMatrix u_tilde;  // Kᴴ U · ustar_k, unitary k×k
    DefectData s_defect;
};

// Builds the triple and verifies its construction identities
// (Ũ unitary, Ũ*P_K = T*, Θ_S(0) = O, T and S partial isometries).
CompressionTriple split(const CMatrix& u, const Frame& k, const Tolerances& tol = {});

// ⟨(U + zI)(U − zI)⁻¹ k₁ | k₂⟩ on ambient vectors, one linear solve.
Complex herglotz_lhs(const CMatrix& u, const CVector& k1, const CVector& k2, Complex z);

// Θ_S(z) expressed in (ustar_k → K) so it shares coordinates with Ũ.
CMatrix theta_s_in_k(const CompressionTriple& ct, Complex z, double cond_limit = 1e12);

// (Ũ + Θ_S(z))(Ũ − Θ_S(z))⁻¹ as a k×k matrix in K coordinates.
CMatrix rhs_matrix(const CompressionTriple& ct, Complex z, double cond_limit = 1e12);

// ⟨(Ũ + Θ_S(z))(Ũ − Θ_S(z))⁻¹ k₁ | k₂⟩ on K-coordinate vectors (length k).
Complex herglotz_rhs(const CompressionTriple& ct, const CVector& k1, const CVector& k2,
                     Complex z, double cond_limit = 1e12);

// The two coordinate systems the identity straddles, made explicit.
CVector embed_to_ambient(const Frame& k, const CVector& k_coords);
CVector extract_from_ambient(const Frame& k, const CVector& ambient);

struct MeasureCertificate {
    double max_identity_residual = 0.0;
    ZGrid grid;
    bool pass = false;
};

struct GeneralizedMeasureResult {
    DiscreteOVMeasure measure;  // POVM on K
    MeasureCertificate certificate;
};

// B(Δ) = Kᴴ E(Δ) K with a certificate: over the z-grid, the Herglotz sum of B
// must match (Ũ + Θ_S)(Ũ − Θ_S)⁻¹ entrywise.
GeneralizedMeasureResult generalized_measure(const CompressionTriple& ct,
                                             const ZGrid& grid = {},
                                             const Tolerances& tol = {});

}  // namespace hdl
