#pragma once

#include <cmath>
#include <complex>
#include <optional>

#include "wlab/errors.hpp"

namespace wlab {

using Cd = std::complex<double>;

// Parameter domain of a chart. The canonical annulus A_{1/R,R} has inner
// radius 1/R and outer radius R; the optional slit ray marks the cut used to
// obtain a simply connected chart.
struct Domain {
    enum class Kind { CanonicalAnnulus, PuncturedPlane, Strip, UnitDisk };

    Kind kind = Kind::PuncturedPlane;
    double R = 0.0;         // CanonicalAnnulus only, R > 1
    double halfWidth = 0.0; // Strip only
    std::optional<double> slit; // slit ray angle, normalized to [0, 2pi)

    static Domain annulus(double R, std::optional<double> slitAngle = {}) {
        if (!(R > 1.0)) throw ParamRangeError("annulus modulus must satisfy R > 1");
        Domain d;
        d.kind = Kind::CanonicalAnnulus;
        d.R = R;
        d.slit = normalizeSlit(slitAngle);
        return d;
    }
    static Domain puncturedPlane(std::optional<double> slitAngle = {}) {
        Domain d;
        d.kind = Kind::PuncturedPlane;
        d.slit = normalizeSlit(slitAngle);
        return d;
    }
    static Domain strip(double halfWidth) {
        if (!(halfWidth > 0.0)) throw ParamRangeError("strip half-width must be positive");
        Domain d;
        d.kind = Kind::Strip;
        d.halfWidth = halfWidth;
        return d;
    }
    static Domain unitDisk() {
        Domain d;
        d.kind = Kind::UnitDisk;
        return d;
    }

    bool contains(const Cd& z, double margin = 0.0) const {
        double r = std::abs(z);
        switch (kind) {
        case Kind::CanonicalAnnulus:
            return r >= 1.0 / R - margin && r <= R + margin;
        case Kind::PuncturedPlane:
            return r > 0.0;
        case Kind::Strip:
            return std::abs(z.imag()) <= halfWidth + margin;
        case Kind::UnitDisk:
            return r <= 1.0 + margin;
        }
        return false;
    }

    bool hasBoundaryCircles() const {
        return kind == Kind::CanonicalAnnulus || kind == Kind::UnitDisk;
    }

private:
    static std::optional<double> normalizeSlit(std::optional<double> a) {
        if (!a) return a;
        double t = std::fmod(*a, 2.0 * M_PI);
        if (t < 0) t += 2.0 * M_PI;
        return t;
    }
};

} // namespace wlab
