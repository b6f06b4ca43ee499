// contractions.hpp — defect operators and spaces, characteristic functions,
// partial-isometry and completely-nonunitary structure of contractions.

#pragma once

#include "hdl/linalg.hpp"

namespace hdl {

// T together with D_T = (I − TᴴT)^{1/2}, D_{T*} = (I − TTᴴ)^{1/2} and
// orthonormal bases of their ranges.  Frames are fixed at construction so
// characteristic-function samples at different z share coordinates.
struct DefectData {
    CMatrix t;
    CMatrix d_t;    // (I − TᴴT)^{1/2}
    CMatrix d_ts;   // (I − TTᴴ)^{1/2}
    Frame frame_dt;   // basis of ran D_T
    Frame frame_dts;  // basis of ran D_{T*}

    Eigen::Index index_t() const { return frame_dt.dim(); }
    Eigen::Index index_ts() const { return frame_dts.dim(); }
};

DefectData defect_data(const CMatrix& t, double rank_tol = 1e-10,
                       double contraction_tol = 1e-8);

// −T + z D_{T*}(I − zTᴴ)⁻¹ D_T as an operator on the whole space.  Defined on
// the closed disc; on the boundary the resolvent must exist (condition below
// cond_limit), which finite c.n.u. contractions always satisfy.
CMatrix char_fn_ambient(const DefectData& dd, Complex z, double cond_limit = 1e12);

// The same operator compressed to arbitrary orthonormal frames
// (domain ⊂ ran D_T, codomain ⊂ ran D_{T*} for the classical object).
CMatrix char_fn_in_frames(const DefectData& dd, const Frame& domain, const Frame& codomain,
                          Complex z, double cond_limit = 1e12);

struct CharFnSample {
    Complex z;
    CMatrix theta;  // index_ts × index_t, in (frame_dt → frame_dts) coordinates
};

// Θ_T(z) in the DefectData's own frames.
CharFnSample characteristic_function(const DefectData& dd, Complex z,
                                     double cond_limit = 1e12);

// ‖T TᴴT − T‖_F < tol; algebraically equivalent to Θ_T(0) = O.
bool is_partial_isometry(const CMatrix& t, double tol = 1e-9);

struct PurityReport {
    double theta0_norm;  // ‖Θ_T(0)‖₂
    bool pure() const { return theta0_norm < 1.0 - 1e-9; }
    // Strict inequality cannot be decided this close to the boundary; callers
    // see the band instead of a coin flip.
    bool near_boundary() const { return !pure(); }
};

PurityReport purity(const DefectData& dd);

struct CnuSplit {
    Frame unitary_part;
    Frame cnu_part;
};

// Largest reducing subspace on which T acts unitarily, as the joint kernel of
// {D_T Tᵐ, D_{T*} (Tᴴ)ᵐ : 0 ≤ m < n}; Cayley–Hamilton caps the power range.
CnuSplit cnu_split(const CMatrix& t, double rank_tol = 1e-10);

}  // namespace hdl
