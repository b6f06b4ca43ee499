// measures.hpp — finite atomic operator-valued measures on the unit circle:
// validation, spectral measures of unitaries, compression, Herglotz transform,
// scalar matrix-element measures.

#pragma once

#include "hdl/config.hpp"
#include "hdl/linalg.hpp"

#include <string>
#include <vector>

namespace hdl {

// Point ξ = e^{iθ} on the circle, θ kept in [0, 2π).
struct CirclePoint {
    double theta = 0.0;

    Complex value() const { return Complex(std::cos(theta), std::sin(theta)); }
    static CirclePoint from_angle(double t);
    static CirclePoint from_complex(Complex z);  // projects to the circle
};

// Arc-length distance in [0, π].
double arc_distance(CirclePoint a, CirclePoint b);

enum class MeasureKind { PVM, POVM };

struct MeasureAtom {
    CirclePoint point;
    CMatrix weight;  // dim × dim Hermitian PSD
};

struct DiscreteOVMeasure {
    Eigen::Index dim = 0;
    MeasureKind kind = MeasureKind::POVM;
    std::vector<MeasureAtom> atoms;
};

struct Violation {
    std::string invariant;
    double magnitude;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    std::string to_string() const;
};

// Checks every structural invariant (Hermitian PSD weights, total mass I,
// distinct points, and the projection laws when kind is PVM).  Reports, never
// throws: the CLI shows all violations at once.
ValidationReport validate(const DiscreteOVMeasure& m, const Tolerances& tol = {});

// The spectral measure of a finite unitary: one atom per eigenvalue cluster,
// weight the orthogonal eigenprojection.
DiscreteOVMeasure spectral_measure_of_unitary(const CMatrix& u, double cluster_tol = 1e-8);

// Compression Δ ↦ Kᴴ B(Δ) K expressed in K's basis.  Atoms whose compressed
// weight drops below atom_drop in Frobenius norm are removed.
DiscreteOVMeasure compress_measure(const DiscreteOVMeasure& m, const Frame& k,
                                   double atom_drop = 1e-12);

// F(z) = Σ_j ((ξ_j + z)/(ξ_j − z)) W_j for |z| < 1 − 1e-9.
CMatrix herglotz_transform(const DiscreteOVMeasure& m, Complex z);

struct ScalarAtom {
    CirclePoint point;
    Complex mass;
};

struct ScalarMeasure {
    std::vector<ScalarAtom> atoms;
    Complex total() const;
};

// μ_{h₁,h₂}: mass ⟨W_j h₁|h₂⟩ per atom.  Hermitian-symmetric in (h₁, h₂);
// diagonal measures (h₁ = h₂) have real nonnegative masses.
ScalarMeasure matrix_element_measure(const DiscreteOVMeasure& m, const CVector& h1,
                                     const CVector& h2);

}  // namespace hdl
