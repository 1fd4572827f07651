#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wlab/checks.hpp"
#include "wlab/surface.hpp"

namespace wlab {

// The anti-holomorphic deck involution of the canonical annulus whose
// quotient is the Moebius band.
struct DeckMap {
    static Cd apply(const Cd& z) {
        if (z == Cd(0.0)) throw DomainError("deck map undefined at 0");
        return -1.0 / std::conj(z);
    }
};

inline Cd deck(const Cd& z) { return DeckMap::apply(z); }

// max |X(T(z)) - X(z)| over samples, each side by an independent contour
// integration.
CheckReport checkDeckInvariance(const SurfaceChart& surface, int samples, double tol);

// Law g(T(z)) = T(g(z)): residual |g(T(z)) + 1/conj(g(z))|.
CheckReport checkGaussLaw(const WeierstrassSurface& surface, int samples, double tol);

// Law f(T(z)) = -conj(f(z) (z g(z))^2).
CheckReport checkFLaw(const WeierstrassSurface& surface, int samples, double tol);

// Law T*(phi dz^2) = -conj(phi dz^2): residual |phi(T(z))/conj(z)^4 + conj(phi(z))|.
CheckReport hopfLawResidual(const RationalFunction& phi, const std::vector<Cd>& samples,
                            double tol);
CheckReport hopfLawResidual(const SurfaceChart& surface, int samples, double tol);

// Exact rational identities behind the three laws; nullopt when the data has
// no exact representation.
std::optional<bool> gaussLawHoldsExact(const WeierstrassSurface& surface);
std::optional<bool> fLawHoldsExact(const WeierstrassSurface& surface);
std::optional<bool> hopfLawHoldsExact(const RationalFunction& phi);

struct ImpossibilityCertificate {
    double R = 0.0;
    Cd c0{0.0};
    // T*(C0/z^2 dz^2) computed symbolically equals +conj(C0/z^2 dz^2).
    bool pullbackIsPlusConj = false;
    std::string pullbackStatement;
    std::string requiredLaw;
    std::vector<std::pair<Cd, double>> mismatchSamples; // (z, measured residual)
    bool consistent = false; // true only in the C0 = 0 (totally geodesic) case
    std::vector<std::string> chain;
};

ImpossibilityCertificate impossibilityCertificate(double R, const Cd& c0);

// Deterministic slit-avoiding sample set: z and T(z) both stay clear of the
// slit rays at +-pi/2.
std::vector<Cd> deckSamplePoints(const Domain& dom, int n, unsigned seed = 20240901);

} // namespace wlab
