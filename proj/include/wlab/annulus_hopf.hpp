#pragma once

#include "wlab/surface.hpp"

namespace wlab {

// Fit of the free-boundary annulus form phi(z) = C0 / z^2.
struct HopfFitResult {
    Cd c0{0.0};
    double residual = 0.0; // max over samples of |z^2 phi(z) - C0|
    int samples = 0;
    bool exactConstant = false; // z^2 phi simplifies to a constant rational
};

enum class AnnulusClass { TotallyGeodesic, RegularFreeOfUmbilics, NotFreeBoundaryForm };

// Symbolic constancy when the Hopf coefficient is rational, sampled mean
// otherwise; two radii times 32 angles.
HopfFitResult fitC0(const SurfaceChart& surface, int sampleCount = 64,
                    double restrictR = 0.0);

AnnulusClass classifyAnnulus(const SurfaceChart& surface, double tol = 1e-6,
                             double restrictR = 0.0);

const char* annulusClassName(AnnulusClass c);

struct AnnulusAutomorphism {
    enum class Kind { Rotation, Inversion };
    Kind kind = Kind::Rotation;
    double theta0 = 0.0;

    // Rotation: z -> e^{i theta0} z. Inversion: z -> e^{i theta0} / z
    // (the canonical annulus has ab = 1).
    Cd apply(const Cd& z, const Domain& dom) const;
    AnnulusAutomorphism compose(const AnnulusAutomorphism& inner) const;
};

} // namespace wlab
