// random.cpp

#include "hdl/random.hpp"

#include "hdl/errors.hpp"
#include "hdl/measures.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace hdl {

double Rng::uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

double Rng::gaussian() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double th = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(th);
    have_spare_ = true;
    return r * std::cos(th);
}

Complex Rng::cgaussian() {
    return Complex(gaussian(), gaussian());
}

CMatrix random_gaussian(Rng& rng, Eigen::Index rows, Eigen::Index cols) {
    CMatrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = rng.cgaussian();
    return m;
}

CVector random_vector(Rng& rng, Eigen::Index n) {
    CVector v(n);
    for (Eigen::Index i = 0; i < n; ++i) v(i) = rng.cgaussian();
    const double nv = v.norm();
    if (nv > 0.0) v /= nv;
    return v;
}

CMatrix random_unitary(Rng& rng, Eigen::Index n) {
    const CMatrix g = random_gaussian(rng, n, n);
    Eigen::HouseholderQR<CMatrix> qr(g);
    CMatrix q = qr.householderQ() * CMatrix::Identity(n, n);
    const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    // Fix the phase ambiguity so the draw is a deterministic function of the seed.
    for (Eigen::Index j = 0; j < n; ++j) {
        const Complex d = r(j, j);
        if (std::abs(d) > 0.0) q.col(j) *= d / std::abs(d);
    }
    return q;
}

Frame random_frame(Rng& rng, Eigen::Index ambient_dim, Eigen::Index k) {
    if (k > ambient_dim)
        throw DimensionMismatch("random_frame: k exceeds ambient dimension");
    return Frame{ambient_dim, random_unitary(rng, ambient_dim).leftCols(k)};
}

DiscreteOVMeasure random_povm(Rng& rng, Eigen::Index dim, int atoms, bool rank_deficient) {
    if (dim < 1 || atoms < 1) throw InvalidInput("random_povm: need dim ≥ 1 and atoms ≥ 1");

    // Distinct points: equispaced skeleton with a bounded random jitter.
    std::vector<double> angles(static_cast<std::size_t>(atoms));
    for (int j = 0; j < atoms; ++j) {
        const double base = 2.0 * std::numbers::pi * j / atoms;
        const double jitter = (rng.uniform() - 0.5) * (std::numbers::pi / atoms);
        angles[static_cast<std::size_t>(j)] = base + jitter;
    }

    std::vector<CMatrix> raw;
    raw.reserve(static_cast<std::size_t>(atoms));
    CMatrix sum = CMatrix::Zero(dim, dim);
    for (int j = 0; j < atoms; ++j) {
        Eigen::Index rows = dim;
        if (rank_deficient && j % 2 == 1 && dim > 1)
            rows = 1 + static_cast<Eigen::Index>(rng.uniform() * static_cast<double>(dim - 1));
        const CMatrix g = random_gaussian(rng, rows, dim);
        CMatrix p = g.adjoint() * g;
        p = 0.5 * (p + p.adjoint());
        sum += p;
        raw.push_back(std::move(p));
    }

    // Conjugate by sum^{-1/2} so the weights add up to the identity exactly.
    Eigen::SelfAdjointEigenSolver<CMatrix> saes(sum);
    Eigen::VectorXd ev = saes.eigenvalues();
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
        if (ev(i) <= 0.0) throw NumericalSingularity("random_povm: singular atom sum", 0.0);
        ev(i) = 1.0 / std::sqrt(ev(i));
    }
    const CMatrix sinv = saes.eigenvectors() * ev.asDiagonal() * saes.eigenvectors().adjoint();

    DiscreteOVMeasure m;
    m.dim = dim;
    m.kind = MeasureKind::POVM;
    for (int j = 0; j < atoms; ++j) {
        CMatrix w = sinv * raw[static_cast<std::size_t>(j)] * sinv;
        w = 0.5 * (w + w.adjoint());
        m.atoms.push_back(MeasureAtom{CirclePoint::from_angle(angles[static_cast<std::size_t>(j)]),
                                      std::move(w)});
    }
    return m;
}

CMatrix random_cnu_partial_isometry(Rng& rng, Eigen::Index dim, Eigen::Index defect,
                                    double radius_margin) {
    if (defect < 1 || defect >= dim)
        throw InvalidInput("random_cnu_partial_isometry: need 1 ≤ defect < dim");
    for (int attempt = 0; attempt < 100; ++attempt) {
        const CMatrix u = random_unitary(rng, dim);
        const Frame k = random_frame(rng, dim, dim - defect);
        const CMatrix s = k.projector() * u;
        // Finite-dimensional c.n.u. criterion: spectral radius strictly inside
        // the disc.  A unimodular eigenvalue would carry a unitary summand.
        Eigen::ComplexSchur<CMatrix> schur(s, /*computeU=*/false);
        double rho = 0.0;
        for (Eigen::Index j = 0; j < dim; ++j)
            rho = std::max(rho, std::abs(schur.matrixT()(j, j)));
        if (rho < 1.0 - radius_margin) return s;
    }
    throw NumericalSingularity("random_cnu_partial_isometry: no c.n.u. draw in 100 attempts",
                               0.0);
}

}  // namespace hdl
