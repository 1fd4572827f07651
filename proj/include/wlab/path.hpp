#pragma once

#include <cmath>
#include <complex>
#include <variant>
#include <vector>

namespace wlab {

using Cd = std::complex<double>;

struct LineSeg {
    Cd a, b;
};

// Circular arc about `center`, parameter angle running from a0 to a1
// (either direction; a1 - a0 carries the orientation).
struct ArcSeg {
    Cd center;
    double radius;
    double a0, a1;
};

using PathSeg = std::variant<LineSeg, ArcSeg>;

// Integration contour in the parameter plane.
struct PathInPlane {
    std::vector<PathSeg> segs;

    static PathInPlane line(const Cd& a, const Cd& b) {
        PathInPlane p;
        if (std::abs(a - b) > 0) p.segs.push_back(LineSeg{a, b});
        return p;
    }
    static PathInPlane circle(double radius, const Cd& center = Cd(0.0)) {
        PathInPlane p;
        p.segs.push_back(ArcSeg{center, radius, 0.0, 2.0 * M_PI});
        return p;
    }

    void append(PathSeg s) { segs.push_back(std::move(s)); }

    static Cd segStart(const PathSeg& s) {
        if (auto* l = std::get_if<LineSeg>(&s)) return l->a;
        const auto& a = std::get<ArcSeg>(s);
        return a.center + std::polar(a.radius, a.a0);
    }
    static Cd segEnd(const PathSeg& s) {
        if (auto* l = std::get_if<LineSeg>(&s)) return l->b;
        const auto& a = std::get<ArcSeg>(s);
        return a.center + std::polar(a.radius, a.a1);
    }

    Cd start() const { return segs.empty() ? Cd(0.0) : segStart(segs.front()); }
    Cd end() const { return segs.empty() ? Cd(0.0) : segEnd(segs.back()); }
    bool closed(double tol = 1e-12) const {
        return !segs.empty() && std::abs(start() - end()) <= tol;
    }
};

} // namespace wlab
