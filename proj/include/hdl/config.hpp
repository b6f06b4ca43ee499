// config.hpp — the one tolerance block and the versioned certificate z-grid

#pragma once

#include <complex>
#include <vector>

namespace hdl {

// Every threshold used by the library, with its default pinned here.  Library
// functions take the specific numbers they need as parameters defaulting to
// these values; the CLI exposes the whole block as --tol.<name> flags.
struct Tolerances {
    double unitary = 1e-8;          // gate on ‖UᴴU − I‖_F
    double cluster = 1e-8;          // eigenvalue merging, arc distance
    double rank = 1e-10;            // relative singular-value threshold
    double frame = 1e-12;           // frame orthonormality defect
    double hermitian = 1e-10;       // ‖W − Wᴴ‖_F
    double psd = 1e-10;             // PSD slack on weights
    double not_psd = 1e-8;          // hard failure below −this in psd_sqrt
    double sum_identity = 1e-9;     // ‖Σ weights − I‖_F
    double idempotent = 1e-9;       // PVM projection checks
    double atom_drop = 1e-12;       // compressed atoms below this norm vanish
    double identity = 1e-9;         // Herglotz identity residual
    double compression = 1e-10;     // per-atom compression residual
    double dilation = 1e-9;         // dilation report items (a), (b), (c)
    double cayley = 1e-10;          // F ↔ Θ round trip
    double theta_zero = 1e-12;      // ‖Θ(0)‖ for Cayley transforms of measures
    double clark = 1e-9;            // Clark measure Herglotz certificate
    double spectrum = 1e-8;         // arc-Hausdorff gap between spectrum routes
    double boundary_cond = 1e12;    // condition limit before a solve is refused
};

// Fixed evaluation grid in the open disc.  Certificates are defined over this
// grid, so it is part of the artifact format, not a free parameter.
struct ZGrid {
    std::vector<double> radii{0.3, 0.6, 0.9};
    int angles = 16;

    std::vector<std::complex<double>> points() const;
};

}  // namespace hdl
