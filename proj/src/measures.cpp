// measures.cpp

#include "hdl/measures.hpp"

#include "hdl/errors.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <numbers>
#include <sstream>

namespace hdl {

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;
}

CirclePoint CirclePoint::from_angle(double t) {
    double r = std::fmod(t, two_pi);
    if (r < 0.0) r += two_pi;
    if (r >= two_pi) r = 0.0;  // fmod rounding at the seam
    return CirclePoint{r};
}

CirclePoint CirclePoint::from_complex(Complex z) {
    return from_angle(std::atan2(z.imag(), z.real()));
}

double arc_distance(CirclePoint a, CirclePoint b) {
    double d = std::abs(a.theta - b.theta);
    if (d > std::numbers::pi) d = two_pi - d;
    return d;
}

std::string ValidationReport::to_string() const {
    if (ok()) return "valid";
    std::ostringstream os;
    for (const auto& v : violations)
        os << v.invariant << " (magnitude " << v.magnitude << ")\n";
    return os.str();
}

ValidationReport validate(const DiscreteOVMeasure& m, const Tolerances& tol) {
    ValidationReport rep;
    auto flag = [&rep](const std::string& name, double mag) {
        rep.violations.push_back(Violation{name, mag});
    };

    if (m.dim < 1) {
        flag("dim_positive", static_cast<double>(m.dim));
        return rep;
    }

    CMatrix sum = CMatrix::Zero(m.dim, m.dim);
    for (std::size_t j = 0; j < m.atoms.size(); ++j) {
        const CMatrix& w = m.atoms[j].weight;
        const std::string tag = "atom " + std::to_string(j);
        if (w.rows() != m.dim || w.cols() != m.dim) {
            flag(tag + ": weight_shape", static_cast<double>(w.rows()));
            continue;
        }
        if (!all_finite(w)) {
            flag(tag + ": weight_finite", 0.0);
            continue;
        }
        const double herm = (w - w.adjoint()).norm();
        if (herm > tol.hermitian) flag(tag + ": weight_hermitian", herm);
        Eigen::SelfAdjointEigenSolver<CMatrix> saes(0.5 * (w + w.adjoint()),
                                                    Eigen::EigenvaluesOnly);
        const double min_eig = saes.eigenvalues()(0);
        if (min_eig < -tol.psd) flag(tag + ": weight_psd", min_eig);
        sum += w;
    }

    const double total = (sum - CMatrix::Identity(m.dim, m.dim)).norm();
    if (total > tol.sum_identity) flag("sum_identity", total);

    for (std::size_t i = 0; i < m.atoms.size(); ++i)
        for (std::size_t j = i + 1; j < m.atoms.size(); ++j) {
            const double d = arc_distance(m.atoms[i].point, m.atoms[j].point);
            if (d <= tol.cluster)
                flag("points_distinct (" + std::to_string(i) + "," + std::to_string(j) + ")", d);
        }

    if (m.kind == MeasureKind::PVM) {
        for (std::size_t j = 0; j < m.atoms.size(); ++j) {
            const CMatrix& w = m.atoms[j].weight;
            if (w.rows() != m.dim || w.cols() != m.dim) continue;
            const double idem = (w * w - w).norm();
            if (idem > tol.idempotent)
                flag("atom " + std::to_string(j) + ": pvm_idempotent", idem);
        }
        for (std::size_t i = 0; i < m.atoms.size(); ++i)
            for (std::size_t j = i + 1; j < m.atoms.size(); ++j) {
                if (m.atoms[i].weight.rows() != m.dim || m.atoms[j].weight.rows() != m.dim)
                    continue;
                const double cross = (m.atoms[i].weight * m.atoms[j].weight).norm();
                if (cross > tol.idempotent)
                    flag("pvm_orthogonal (" + std::to_string(i) + "," + std::to_string(j) + ")",
                         cross);
            }
    }
    return rep;
}

DiscreteOVMeasure spectral_measure_of_unitary(const CMatrix& u, double cluster_tol) {
    const auto pairs = unitary_eig(u, cluster_tol);
    DiscreteOVMeasure m;
    m.dim = u.rows();
    m.kind = MeasureKind::PVM;
    m.atoms.reserve(pairs.size());
    for (const auto& p : pairs)
        m.atoms.push_back(MeasureAtom{CirclePoint::from_complex(p.value), p.space.projector()});
    return m;
}

DiscreteOVMeasure compress_measure(const DiscreteOVMeasure& m, const Frame& k,
                                   double atom_drop) {
    if (k.ambient_dim != m.dim)
        throw DimensionMismatch("compress_measure: frame ambient dim " +
                                std::to_string(k.ambient_dim) + " vs measure dim " +
                                std::to_string(m.dim));
    DiscreteOVMeasure out;
    out.dim = k.dim();
    out.kind = MeasureKind::POVM;
    for (const auto& atom : m.atoms) {
        CMatrix w = k.basis.adjoint() * atom.weight * k.basis;
        w = 0.5 * (w + w.adjoint());
        if (w.norm() < atom_drop) continue;
        out.atoms.push_back(MeasureAtom{atom.point, std::move(w)});
    }
    return out;
}

CMatrix herglotz_transform(const DiscreteOVMeasure& m, Complex z) {
    if (std::abs(z) >= 1.0 - 1e-9)
        throw DomainError("herglotz_transform: |z| = " + std::to_string(std::abs(z)) +
                          " outside the open disc");
    CMatrix f = CMatrix::Zero(m.dim, m.dim);
    for (const auto& atom : m.atoms) {
        const Complex xi = atom.point.value();
        f += ((xi + z) / (xi - z)) * atom.weight;
    }
    return f;
}

Complex ScalarMeasure::total() const {
    Complex s = 0.0;
    for (const auto& a : atoms) s += a.mass;
    return s;
}

ScalarMeasure matrix_element_measure(const DiscreteOVMeasure& m, const CVector& h1,
                                     const CVector& h2) {
    if (h1.size() != m.dim || h2.size() != m.dim)
        throw DimensionMismatch("matrix_element_measure: vector length vs measure dim");
    ScalarMeasure out;
    out.atoms.reserve(m.atoms.size());
    for (const auto& atom : m.atoms)
        out.atoms.push_back(ScalarAtom{atom.point, inner(atom.weight * h1, h2)});
    return out;
}

}  // namespace hdl
