// random.hpp — seeded generators for unitaries, frames, POVMs, partial isometries.
// Every generator takes an explicit seed or Rng; there is no global state.

#pragma once

#include "hdl/linalg.hpp"

#include <cstdint>
#include <random>

namespace hdl {

struct DiscreteOVMeasure;

// mt19937_64 with a hand-rolled Box–Muller transform, so streams depend only
// on the engine (which the standard pins down exactly), not on the standard
// library's distribution implementations.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    // Uniform in [0, 1) with 53 random bits.
    double uniform();
    double gaussian();
    Complex cgaussian();  // standard complex Gaussian (unit variance per part)

  private:
    std::mt19937_64 gen_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

CMatrix random_gaussian(Rng& rng, Eigen::Index rows, Eigen::Index cols);
CVector random_vector(Rng& rng, Eigen::Index n);  // unit norm

// Orthonormalization (QR with positive diagonal) of a seeded complex Gaussian.
CMatrix random_unitary(Rng& rng, Eigen::Index n);
Frame random_frame(Rng& rng, Eigen::Index ambient_dim, Eigen::Index k);

// Random POVM: PSD atoms G_jᴴG_j at distinct circle points, conjugated so the
// weights sum exactly to the identity.  When rank_deficient is set, roughly
// half of the atoms get rank below dim.
DiscreteOVMeasure random_povm(Rng& rng, Eigen::Index dim, int atoms,
                              bool rank_deficient = false);

// Completely nonunitary partial isometry with equal defect indices `defect`,
// built as a subspace compression of a random unitary; retries draws until
// the spectral radius is comfortably inside the disc.
CMatrix random_cnu_partial_isometry(Rng& rng, Eigen::Index dim, Eigen::Index defect,
                                    double radius_margin = 1e-6);

}  // namespace hdl
