#pragma once

#include <string>
#include <vector>

#include "wlab/surface.hpp"

namespace wlab {

struct CheckReport {
    std::string checkName;
    int samples = 0;
    double maxResidual = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    Cd worstPoint{0.0, 0.0};
};

inline CheckReport makeReport(std::string name, int samples, double maxResidual,
                              double tol, Cd worst) {
    return {std::move(name), samples, maxResidual, tol, maxResidual <= tol, worst};
}

struct GridSpec {
    double rMin, rMax;
    int nR, nTheta;
};

// Asymptotic data of X_z near a branch point: X_z = A (z-p)^nu + higher order.
struct BranchExpansion {
    Cd center;
    int order = 0;
    CVec3 leadingVector = CVec3::Zero();
    double isotropyResidual = 0.0; // |<A,A>| with the bilinear product
    Vec3 limitNormal = Vec3::Zero();
    double fitResidual = 0.0;
};

// Harmonicity (5-point Laplacian) and almost-conformality residuals over a
// polar grid, skipping points within `clearance` of a branch point.
CheckReport checkMinimalImmersion(const SurfaceChart& surface, const GridSpec& grid,
                                  double tol, double clearance = 0.05,
                                  double fdStep = 1e-4);

// |X| = 1 on the boundary circles and conormal parallel to the position.
CheckReport checkFreeBoundary(const SurfaceChart& surface, int boundarySamples,
                              double tol, double restrictR = 0.0);

// Im(phi(z) (iz)^2) = 0 along the boundary circles; `restrictR` substitutes
// an annulus when the surface's own domain has no boundary.
CheckReport checkHopfRealOnBoundary(const SurfaceChart& surface, double tol,
                                    double restrictR = 0.0, int samples = 64);

// <X_zz, N> from 9-point complex finite differences of the immersion;
// independent of the symbolic Hopf route.
Cd fdHopfOracle(const SurfaceChart& surface, const Cd& z, double h = 0.0);

// Least-squares fit of X_z = A (z-p)^nu on a circle around p, nu in 1..6.
BranchExpansion branchExpansion(const SurfaceChart& surface, const Cd& p,
                                double radius);

// Deterministic annulus sample set shared by check drivers and tests.
std::vector<Cd> sampleAnnulus(double rMin, double rMax, int n, unsigned seed,
                              const std::vector<Cd>& avoid = {},
                              double clearance = 0.0);

} // namespace wlab
