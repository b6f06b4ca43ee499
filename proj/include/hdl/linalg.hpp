// linalg.hpp — dense complex primitives: frames, unitary eigenstructure, PSD roots

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <vector>

namespace hdl {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

// ⟨x|y⟩, linear in x and conjugate-linear in y.
inline Complex inner(const CVector& x, const CVector& y) { return y.dot(x); }

bool all_finite(const CMatrix& m);

// Spectral norm ‖M‖₂ (largest singular value).
double op_norm(const CMatrix& m);

// ‖MᴴM − I‖_F; zero exactly when columns are orthonormal.
double unitary_defect(const CMatrix& m);

// An orthonormal ordered basis of a subspace of C^{ambient_dim}.
// Columns carry a fixed phase convention (largest-magnitude entry real
// positive) so that identical inputs produce identical frames.
struct Frame {
    Eigen::Index ambient_dim = 0;
    CMatrix basis;  // ambient_dim × k, orthonormal columns

    Eigen::Index dim() const { return basis.cols(); }
    bool empty() const { return basis.cols() == 0; }
    CMatrix projector() const { return basis * basis.adjoint(); }
    double orthonormality_defect() const { return unitary_defect(basis); }

    static Frame full(Eigen::Index n);
    static Frame empty_frame(Eigen::Index n);
    // Validates orthonormality against `frame_tol` before accepting.
    static Frame from_basis(CMatrix basis, double frame_tol = 1e-12);
};

// Multiplies each column by a unimodular scalar so its largest-magnitude
// entry becomes real positive.  Spans and orthonormality are untouched.
void normalize_column_phases(CMatrix& m);

// Orthonormal basis of the column space of M.  Rank is the number of
// singular values exceeding tol × (largest singular value).
Frame orthonormal_columns(const CMatrix& m, double tol);

struct EigenPair {
    Complex value;  // on the unit circle
    Frame space;
};

// Eigenstructure of a unitary matrix, eigenvalues grouped when the arc
// distance is below cluster_tol.  Eigenspace frames are mutually orthogonal
// and their ranks sum to the dimension.
//
// Route: a provisional eigenvalue pass (Schur, values only) locates the
// largest spectral gap on the circle; the Cayley transform with pole at the
// gap midpoint turns U into a Hermitian matrix, whose tridiagonalization +
// QR eigensolve is a backward-stable unitary-similarity reduction with
// orthonormal eigenvectors even across degenerate clusters.
std::vector<EigenPair> unitary_eig(const CMatrix& u, double cluster_tol = 1e-8,
                                   double unitary_tol = 1e-8);

// Hermitian PSD square root.  Eigenvalues in [−clamp_tol, 0) are clamped to
// zero; anything below −clamp_tol is a hard NotPsd failure.
CMatrix psd_sqrt(const CMatrix& p, double clamp_tol = 1e-8);

}  // namespace hdl
