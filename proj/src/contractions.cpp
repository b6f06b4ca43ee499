// contractions.cpp

#include "hdl/contractions.hpp"

#include "hdl/errors.hpp"

#include <Eigen/LU>
#include <Eigen/SVD>

#include <cmath>
#include <limits>
#include <string>

namespace hdl {

DefectData defect_data(const CMatrix& t, double rank_tol, double contraction_tol) {
    if (t.rows() != t.cols()) throw DimensionMismatch("defect_data: matrix not square");
    if (!all_finite(t)) throw InvalidInput("defect_data: non-finite entry");
    const double norm2 = op_norm(t);
    if (norm2 > 1.0 + contraction_tol)
        throw NotContraction("defect_data: ‖T‖₂ = " + std::to_string(norm2), norm2);

    const Eigen::Index n = t.rows();
    const CMatrix id = CMatrix::Identity(n, n);
    // The contraction gate admits ‖T‖₂ up to 1 + contraction_tol, which pushes
    // eigenvalues of I − TᴴT down to ≈ −2·contraction_tol; clamp accordingly.
    const double clamp = 3.0 * contraction_tol;
    DefectData dd;
    dd.t = t;
    dd.d_t = psd_sqrt(id - t.adjoint() * t, clamp);
    dd.d_ts = psd_sqrt(id - t * t.adjoint(), clamp);
    dd.frame_dt = orthonormal_columns(dd.d_t, rank_tol);
    dd.frame_dts = orthonormal_columns(dd.d_ts, rank_tol);
    return dd;
}

CMatrix char_fn_ambient(const DefectData& dd, Complex z, double cond_limit) {
    const double az = std::abs(z);
    if (az > 1.0 + 1e-12)
        throw DomainError("char_fn_ambient: |z| = " + std::to_string(az) + " > 1");

    const Eigen::Index n = dd.t.rows();
    const CMatrix r = CMatrix::Identity(n, n) - z * dd.t.adjoint();
    // For |z| ≤ 1 − δ, σ_min(I − zTᴴ) ≥ 1 − |z| ≥ δ, so the solve is safe
    // without an estimate; near the boundary, measure the condition.
    if (az > 0.999) {
        Eigen::BDCSVD<CMatrix> svd(r);
        const double smin = svd.singularValues()(svd.singularValues().size() - 1);
        const double smax = svd.singularValues()(0);
        const double cond = (smin > 0.0) ? smax / smin : std::numeric_limits<double>::infinity();
        if (cond > cond_limit)
            throw BoundarySingularity("char_fn_ambient: (I − zTᴴ) condition " +
                                          std::to_string(cond),
                                      cond);
    }
    return -dd.t + z * dd.d_ts * Eigen::PartialPivLU<CMatrix>(r).solve(dd.d_t);
}

CMatrix char_fn_in_frames(const DefectData& dd, const Frame& domain, const Frame& codomain,
                          Complex z, double cond_limit) {
    if (domain.ambient_dim != dd.t.rows() || codomain.ambient_dim != dd.t.rows())
        throw DimensionMismatch("char_fn_in_frames: frame ambient dim vs operator dim");
    return codomain.basis.adjoint() * char_fn_ambient(dd, z, cond_limit) * domain.basis;
}

CharFnSample characteristic_function(const DefectData& dd, Complex z, double cond_limit) {
    return CharFnSample{z, char_fn_in_frames(dd, dd.frame_dt, dd.frame_dts, z, cond_limit)};
}

bool is_partial_isometry(const CMatrix& t, double tol) {
    if (t.rows() != t.cols()) throw DimensionMismatch("is_partial_isometry: matrix not square");
    return (t * t.adjoint() * t - t).norm() < tol;
}

PurityReport purity(const DefectData& dd) {
    return PurityReport{op_norm(characteristic_function(dd, Complex(0, 0)).theta)};
}

CnuSplit cnu_split(const CMatrix& t, double rank_tol) {
    const DefectData dd = defect_data(t, rank_tol);
    const Eigen::Index n = t.rows();
    if (n == 0) return CnuSplit{Frame::empty_frame(0), Frame::empty_frame(0)};

    // Stack D_T Tᵐ and D_{T*}(Tᴴ)ᵐ for m = 0 … n−1; the joint kernel is the
    // unitary reducing part.
    CMatrix stack(2 * n * n, n);
    CMatrix pow_t = CMatrix::Identity(n, n);
    CMatrix pow_ts = CMatrix::Identity(n, n);
    for (Eigen::Index m = 0; m < n; ++m) {
        stack.middleRows(2 * m * n, n) = dd.d_t * pow_t;
        stack.middleRows((2 * m + 1) * n, n) = dd.d_ts * pow_ts;
        pow_t = pow_t * t;
        pow_ts = pow_ts * t.adjoint();
    }

    Eigen::BDCSVD<CMatrix> svd(stack, Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    const double smax = sv.size() > 0 ? sv(0) : 0.0;
    Eigen::Index rank = 0;
    if (smax > 1e-14) {
        while (rank < sv.size() && sv(rank) > rank_tol * smax) ++rank;
    }
    CMatrix cnu_basis = svd.matrixV().leftCols(rank);
    CMatrix uni_basis = svd.matrixV().rightCols(n - rank);
    normalize_column_phases(cnu_basis);
    normalize_column_phases(uni_basis);
    return CnuSplit{Frame{n, std::move(uni_basis)}, Frame{n, std::move(cnu_basis)}};
}

}  // namespace hdl
