// linalg.cpp

#include "hdl/linalg.hpp"

#include "hdl/config.hpp"
#include "hdl/errors.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace hdl {

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;
}

std::vector<Complex> ZGrid::points() const {
    std::vector<Complex> pts;
    pts.reserve(radii.size() * static_cast<std::size_t>(angles));
    for (double r : radii) {
        for (int a = 0; a < angles; ++a) {
            const double th = two_pi * a / angles;
            pts.emplace_back(r * std::cos(th), r * std::sin(th));
        }
    }
    return pts;
}

bool all_finite(const CMatrix& m) {
    return m.array().isFinite().all();
}

double op_norm(const CMatrix& m) {
    if (m.size() == 0) return 0.0;
    return Eigen::BDCSVD<CMatrix>(m).singularValues()(0);
}

double unitary_defect(const CMatrix& m) {
    return (m.adjoint() * m - CMatrix::Identity(m.cols(), m.cols())).norm();
}

Frame Frame::full(Eigen::Index n) {
    return Frame{n, CMatrix::Identity(n, n)};
}

Frame Frame::empty_frame(Eigen::Index n) {
    return Frame{n, CMatrix(n, 0)};
}

Frame Frame::from_basis(CMatrix basis, double frame_tol) {
    if (!all_finite(basis)) throw InvalidInput("Frame: non-finite entry");
    const double defect = unitary_defect(basis);
    if (defect > frame_tol)
        throw InvalidInput("Frame: columns not orthonormal, defect " + std::to_string(defect));
    return Frame{basis.rows(), std::move(basis)};
}

void normalize_column_phases(CMatrix& m) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
        Eigen::Index imax = 0;
        const double amax = m.col(j).cwiseAbs().maxCoeff(&imax);
        if (amax > 0.0) m.col(j) *= std::conj(m(imax, j)) / amax;
    }
}

Frame orthonormal_columns(const CMatrix& m, double tol) {
    if (!all_finite(m)) throw InvalidInput("orthonormal_columns: non-finite entry");
    if (!(tol > 0.0)) throw InvalidInput("orthonormal_columns: tol must be positive");
    if (m.cols() == 0 || m.rows() == 0) return Frame::empty_frame(m.rows());

    Eigen::BDCSVD<CMatrix> svd(m, Eigen::ComputeThinU);
    const auto& sv = svd.singularValues();
    const double smax = sv(0);
    Eigen::Index rank = 0;
    if (smax > 0.0) {
        while (rank < sv.size() && sv(rank) > tol * smax) ++rank;
    }
    CMatrix basis = svd.matrixU().leftCols(rank);
    normalize_column_phases(basis);
    return Frame{m.rows(), std::move(basis)};
}

namespace {

// Midpoint of the largest eigenvalue-free arc, given provisional angles.
double gap_midpoint(std::vector<double> angles) {
    std::sort(angles.begin(), angles.end());
    const std::size_t n = angles.size();
    double best_gap = -1.0, best_mid = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const double next = (j + 1 < n) ? angles[j + 1] : angles[0] + two_pi;
        const double gap = next - angles[j];
        if (gap > best_gap) {
            best_gap = gap;
            best_mid = angles[j] + gap / 2.0;
        }
    }
    return best_mid;
}

}  // namespace

std::vector<EigenPair> unitary_eig(const CMatrix& u, double cluster_tol, double unitary_tol) {
    if (u.rows() != u.cols()) throw DimensionMismatch("unitary_eig: matrix not square");
    if (!all_finite(u)) throw InvalidInput("unitary_eig: non-finite entry");
    const Eigen::Index n = u.rows();
    if (n == 0) return {};
    const double defect = unitary_defect(u);
    if (defect > unitary_tol)
        throw NotUnitary("unitary_eig: ‖UᴴU − I‖_F = " + std::to_string(defect), defect);

    // Provisional eigenvalues locate the spectral gap for the Cayley pole.
    Eigen::ComplexSchur<CMatrix> schur(u, /*computeU=*/false);
    std::vector<double> prov(static_cast<std::size_t>(n));
    for (Eigen::Index j = 0; j < n; ++j) {
        const Complex lam = schur.matrixT()(j, j);
        prov[static_cast<std::size_t>(j)] = std::atan2(lam.imag(), lam.real());
    }
    const double wa = gap_midpoint(std::move(prov));
    const Complex w(std::cos(wa), std::sin(wa));

    // A = i (wI + U)(wI − U)⁻¹ is Hermitian when U is unitary and w is not an
    // eigenvalue; its eigenvectors are eigenvectors of U.
    const CMatrix id = CMatrix::Identity(n, n);
    CMatrix a = Eigen::PartialPivLU<CMatrix>(w * id - u).solve(Complex(0, 1) * (w * id + u));
    a = 0.5 * (a + a.adjoint());

    Eigen::SelfAdjointEigenSolver<CMatrix> saes(a);
    if (saes.info() != Eigen::Success)
        throw NumericalSingularity("unitary_eig: Hermitian eigensolve failed", 0.0);

    // a = −cot(ψ/2) with λ = w e^{iψ}; ascending a means ascending ψ ∈ (0, 2π),
    // so clustering is a single pass over consecutive gaps.  Both ends of the
    // ψ range approach the pole w, which sits in a spectral gap, so no cluster
    // wraps around.
    std::vector<double> psi(static_cast<std::size_t>(n));
    for (Eigen::Index j = 0; j < n; ++j)
        psi[static_cast<std::size_t>(j)] = 2.0 * std::atan2(1.0, -saes.eigenvalues()(j));

    std::vector<EigenPair> out;
    Eigen::Index lo = 0;
    while (lo < n) {
        Eigen::Index hi = lo + 1;
        while (hi < n &&
               psi[static_cast<std::size_t>(hi)] - psi[static_cast<std::size_t>(hi - 1)] <
                   cluster_tol)
            ++hi;
        Complex sum = 0.0;
        for (Eigen::Index j = lo; j < hi; ++j) {
            const double p = psi[static_cast<std::size_t>(j)];
            sum += Complex(std::cos(p), std::sin(p));
        }
        Complex lam = w * (std::abs(sum) > 0.0 ? sum / std::abs(sum)
                                               : Complex(std::cos(psi[static_cast<std::size_t>(lo)]),
                                                         std::sin(psi[static_cast<std::size_t>(lo)])));
        CMatrix basis = saes.eigenvectors().middleCols(lo, hi - lo);
        normalize_column_phases(basis);
        out.push_back(EigenPair{lam, Frame{n, std::move(basis)}});
        lo = hi;
    }
    return out;
}

CMatrix psd_sqrt(const CMatrix& p, double clamp_tol) {
    if (p.rows() != p.cols()) throw DimensionMismatch("psd_sqrt: matrix not square");
    if (!all_finite(p)) throw InvalidInput("psd_sqrt: non-finite entry");
    const double scale = std::max(1.0, p.norm());
    const double herm_defect = (p - p.adjoint()).norm();
    if (herm_defect > 1e-10 * scale)
        throw InvalidInput("psd_sqrt: not Hermitian, defect " + std::to_string(herm_defect));

    const CMatrix h = 0.5 * (p + p.adjoint());
    Eigen::SelfAdjointEigenSolver<CMatrix> saes(h);
    if (saes.info() != Eigen::Success)
        throw NumericalSingularity("psd_sqrt: eigensolve failed", 0.0);
    Eigen::VectorXd ev = saes.eigenvalues();
    if (ev.size() > 0 && ev(0) < -clamp_tol)
        throw NotPsd("psd_sqrt: eigenvalue " + std::to_string(ev(0)), ev(0));
    for (Eigen::Index j = 0; j < ev.size(); ++j) ev(j) = std::sqrt(std::max(ev(j), 0.0));
    CMatrix q = saes.eigenvectors() * ev.asDiagonal() * saes.eigenvectors().adjoint();
    return 0.5 * (q + q.adjoint());
}

}  // namespace hdl
