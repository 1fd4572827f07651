#include "wlab/surface.hpp"

#include <cmath>

namespace wlab {

namespace {

double wrapAngle(double a) {
    double t = std::fmod(a, 2.0 * M_PI);
    if (t < 0) t += 2.0 * M_PI;
    return t;
}

// Does the ccw arc from a0 of signed extent delta cross the ray at angle s?
bool arcCrossesRay(double a0, double delta, double s) {
    if (delta == 0.0) return false;
    double rel = wrapAngle(s - a0);
    if (delta > 0) return rel > 1e-12 && rel < delta - 1e-12;
    return rel > 2.0 * M_PI + delta + 1e-12 && rel < 2.0 * M_PI - 1e-12;
}

double distToSeg(const Cd& p, const PathSeg& seg) {
    if (const auto* l = std::get_if<LineSeg>(&seg)) {
        Cd d = l->b - l->a;
        double len2 = std::norm(d);
        if (len2 == 0) return std::abs(p - l->a);
        double t = ((p - l->a).real() * d.real() + (p - l->a).imag() * d.imag()) / len2;
        t = std::clamp(t, 0.0, 1.0);
        return std::abs(p - (l->a + t * d));
    }
    const auto& arc = std::get<ArcSeg>(seg);
    Cd rel = p - arc.center;
    double ang = std::atan2(rel.imag(), rel.real());
    double lo = std::min(arc.a0, arc.a1), hi = std::max(arc.a0, arc.a1);
    // Sample candidate angles: projection (mod 2pi shifts) and the endpoints.
    double best = std::min(std::abs(p - (arc.center + std::polar(arc.radius, arc.a0))),
                           std::abs(p - (arc.center + std::polar(arc.radius, arc.a1))));
    for (int k = -2; k <= 2; ++k) {
        double a = ang + 2.0 * M_PI * k;
        if (a >= lo && a <= hi)
            best = std::min(best, std::abs(p - (arc.center + std::polar(arc.radius, a))));
    }
    return best;
}

std::vector<Cd> polesOf(const RationalFunction& r) {
    std::vector<Cd> out;
    if (r.den().degree() < 1) return out;
    for (const auto& [z, m] : polyRoots(r.den(), 1e-8)) out.push_back(z);
    return out;
}

} // namespace

double SurfaceChart::conformalFactor(const Cd& z) const {
    CVec3 d = xz(z);
    Vec3 xu = 2.0 * d.real();
    return xu.squaredNorm();
}

Vec3 SurfaceChart::normal(const Cd& z) const {
    CVec3 d = xz(z);
    Vec3 xu = 2.0 * d.real();
    Vec3 xv = -2.0 * d.imag();
    Vec3 n = xu.cross(xv);
    double len = n.norm();
    if (len == 0.0) throw BranchPointError("normal undefined at a branch point");
    return n / len;
}

WeierstrassSurface::WeierstrassSurface(RationalFunction f, RationalFunction g,
                                       Domain dom, Cd basePoint, Vec3 baseValue)
    : f_(f.simplified()), g_(g.simplified()), dom_(std::move(dom)),
      basePoint_(basePoint), baseValue_(std::move(baseValue)) {
    if (f_.isZero()) throw Error("Weierstrass data: f is identically zero");
    if (g_.isZero()) throw Error("Weierstrass data: g is identically zero");
    fg_ = (f_ * g_).simplified();
    fg2_ = (f_ * g_ * g_).simplified();
    checkHolomorphicTriple();

    RationalFunction h = -(g_.derivative() * f_);
    h = h * RationalFunction::constant(GaussRat(BigRat(1, 2)));
    hopf_ = h.simplified();
    for (const auto& p : polesOf(hopf_))
        if (dom_.contains(p, -1e-9))
            throw SimplificationError("Hopf coefficient has a pole inside the domain");
}

void WeierstrassSurface::checkHolomorphicTriple() const {
    for (const RationalFunction* r : {&f_, &fg_, &fg2_})
        for (const auto& p : polesOf(*r))
            if (dom_.contains(p, -1e-9))
                throw Error("Weierstrass data: (f, fg, fg^2) not holomorphic on the domain");
}

CVec3 WeierstrassSurface::integrand(const Cd& z) const {
    Cd a = f_(z), c = fg2_(z), b = fg_(z);
    return CVec3(0.5 * (a - c), Cd(0.0, 0.5) * (a + c), b);
}

CVec3 WeierstrassSurface::xz(const Cd& z) const { return 0.5 * integrand(z); }

PathInPlane WeierstrassSurface::defaultPath(const Cd& z) const {
    PathInPlane path;
    double r0 = std::abs(basePoint_), r1 = std::abs(z);
    double a0 = std::atan2(basePoint_.imag(), basePoint_.real());
    double a1 = std::atan2(z.imag(), z.real());
    Cd corner = std::polar(r1, a0);
    if (std::abs(corner - basePoint_) > 1e-15)
        path.append(LineSeg{basePoint_, corner});
    double delta = wrapAngle(a1 - a0);
    if (delta > M_PI) delta -= 2.0 * M_PI; // shorter direction
    if (dom_.slit && arcCrossesRay(a0, delta, *dom_.slit))
        delta = delta > 0 ? delta - 2.0 * M_PI : delta + 2.0 * M_PI;
    if (std::abs(delta) > 1e-15)
        path.append(ArcSeg{Cd(0.0), r1, a0, a0 + delta});
    (void)r0;
    return path;
}

void WeierstrassSurface::checkPoleClearance(const PathInPlane& path,
                                            double clearance) const {
    for (const RationalFunction* r : {&f_, &fg_, &fg2_})
        for (const auto& p : polesOf(*r))
            for (const auto& seg : path.segs)
                if (distToSeg(p, seg) < clearance)
                    throw PoleOnPathError("integration contour too close to a pole");
}

Vec3 WeierstrassSurface::positionAlong(const Cd& z, const PathInPlane* path) const {
    if (!dom_.contains(z, 1e-9)) throw DomainError("point outside the domain");
    PathInPlane local;
    if (!path) {
        if (std::abs(z - basePoint_) < 1e-15) return baseValue_;
        local = defaultPath(z);
        path = &local;
    }
    checkPoleClearance(*path, 1e-3);
    CVec3 w = integrateAlong([this](const Cd& zz) { return integrand(zz); }, *path,
                             quadrature);
    return baseValue_ + w.real();
}

Vec3 WeierstrassSurface::periodResidual(const PathInPlane& loop) const {
    if (!loop.closed(1e-10)) throw Error("periodResidual: loop is not closed");
    checkPoleClearance(loop, 1e-6);
    CVec3 w = integrateAlong([this](const Cd& zz) { return integrand(zz); }, loop,
                             quadrature);
    return w.real();
}

double WeierstrassSurface::conformalFactor(const Cd& z) const {
    if (!dom_.contains(z, 1e-9)) throw DomainError("point outside the domain");
    // lambda^2 = (1+|g|^2)^2 |f|^2 / 4, evaluated from the side of |g|=1
    // where the data stays finite.
    Cd gn = g_.num().eval(z), gd = g_.den().eval(z);
    if (std::abs(gn) <= std::abs(gd)) {
        double ag2 = (std::abs(gd) > 0) ? std::norm(gn / gd) : 0.0;
        double af = std::abs(f_(z));
        double lam = 0.5 * af * (1.0 + ag2);
        return lam * lam;
    }
    double aginv2 = (std::abs(gn) > 0) ? std::norm(gd / gn) : 0.0;
    double afg2 = std::abs(fg2_(z));
    double lam = 0.5 * afg2 * (1.0 + aginv2);
    return lam * lam;
}

Vec3 WeierstrassSurface::gaussMap(const Cd& z) const {
    Cd gn = g_.num().eval(z), gd = g_.den().eval(z);
    if (std::abs(gd) <= kPoleTol * (std::abs(gn) + std::abs(gd)) || std::abs(gd) == 0.0)
        return Vec3(0, 0, 1); // pole of g: north pole
    if (std::abs(gn) <= std::abs(gd)) {
        Cd g = gn / gd;
        double d = 1.0 + std::norm(g);
        return Vec3(2.0 * g.real() / d, 2.0 * g.imag() / d, (std::norm(g) - 1.0) / d);
    }
    Cd h = gd / gn; // 1/g, |h| <= 1
    double d = std::norm(h) + 1.0;
    return Vec3(2.0 * h.real() / d, -2.0 * h.imag() / d, (1.0 - std::norm(h)) / d);
}

std::vector<BranchPoint> WeierstrassSurface::branchPoints() const {
    std::vector<BranchPoint> out;
    if (f_.num().degree() < 1 || fg2_.num().degree() < 1) return out;
    auto rf = polyRoots(f_.num(), 1e-8);
    auto rfg2 = polyRoots(fg2_.num(), 1e-8);
    for (const auto& [zf, mf] : rf) {
        for (const auto& [zg, mg] : rfg2) {
            if (std::abs(zf - zg) < kClusterTol * (1.0 + std::abs(zf)) &&
                dom_.contains(0.5 * (zf + zg), 1e-9)) {
                out.push_back({0.5 * (zf + zg), std::min(mf, mg)});
            }
        }
    }
    return out;
}

double WeierstrassSurface::secondFundamentalForm(const Cd& z, const Eigen::Vector2d& v,
                                                 const Eigen::Vector2d& w) const {
    for (const auto& bp : branchPoints())
        if (std::abs(z - bp.point) < 1e-9)
            throw BranchPointError("second fundamental form at a branch point");
    Cd phi = hopf_(z);
    Cd vv(v(0), v(1)), ww(w(0), w(1));
    return 2.0 * (phi * vv * ww).real();
}

CVec3 GenericChartSurface::xz(const Cd& z) const {
    const double h = 1e-6;
    Vec3 xu = (map_(z + h) - map_(z - h)) / (2.0 * h);
    Vec3 xv = (map_(z + Cd(0, h)) - map_(z - Cd(0, h))) / (2.0 * h);
    CVec3 out;
    for (int i = 0; i < 3; ++i) out(i) = Cd(0.5 * xu(i), -0.5 * xv(i));
    return out;
}

} // namespace wlab
