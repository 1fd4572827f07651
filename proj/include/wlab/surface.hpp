#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "wlab/domain.hpp"
#include "wlab/quadrature.hpp"
#include "wlab/rational.hpp"

namespace wlab {

struct BranchPoint {
    Cd point;
    int order;
};

// Common chart interface for branched minimal immersions given either by
// Weierstrass data or by an explicit coordinate map.
class SurfaceChart {
public:
    virtual ~SurfaceChart() = default;

    virtual const Domain& domain() const = 0;
    virtual Vec3 position(const Cd& z) const = 0;
    // dX/dz as a complex 3-vector; X_u = 2 Re X_z, X_v = -2 Im X_z.
    virtual CVec3 xz(const Cd& z) const = 0;

    virtual double conformalFactor(const Cd& z) const;
    virtual Vec3 normal(const Cd& z) const;
    virtual std::optional<RationalFunction> hopfSymbolic() const { return std::nullopt; }
    virtual std::vector<BranchPoint> branchPoints() const { return {}; }
};

// Branched minimal immersion from Weierstrass data (f, g). All numerics go
// through the holomorphic triple (f, fg, fg^2) so that poles of g never enter.
class WeierstrassSurface : public SurfaceChart {
public:
    WeierstrassSurface(RationalFunction f, RationalFunction g, Domain dom,
                       Cd basePoint, Vec3 baseValue);

    const Domain& domain() const override { return dom_; }
    const RationalFunction& f() const { return f_; }
    const RationalFunction& g() const { return g_; }
    const RationalFunction& fg() const { return fg_; }
    const RationalFunction& fg2() const { return fg2_; }
    Cd basePoint() const { return basePoint_; }
    const Vec3& baseValue() const { return baseValue_; }

    // Weierstrass integrand (f(1-g^2)/2, i f(1+g^2)/2, f g), written
    // pole-safe as ((f - fg2)/2, i (f + fg2)/2, fg).
    CVec3 integrand(const Cd& z) const;

    Vec3 position(const Cd& z) const override { return positionAlong(z, nullptr); }
    Vec3 positionAlong(const Cd& z, const PathInPlane* path) const;
    // Deterministic default contour: radial segment from the base point to
    // radius |z|, then a circular arc, chosen to avoid the slit ray.
    PathInPlane defaultPath(const Cd& z) const;

    // Real part of the loop integral of the integrand; must vanish on the
    // annulus generator for the immersion to be single valued.
    Vec3 periodResidual(const PathInPlane& loop) const;

    CVec3 xz(const Cd& z) const override;
    double conformalFactor(const Cd& z) const override;
    Vec3 normal(const Cd& z) const override { return gaussMap(z); }
    Vec3 gaussMap(const Cd& z) const;

    std::optional<RationalFunction> hopfSymbolic() const override { return hopf_; }
    const RationalFunction& hopf() const { return hopf_; }

    std::vector<BranchPoint> branchPoints() const override;

    double secondFundamentalForm(const Cd& z, const Eigen::Vector2d& v,
                                 const Eigen::Vector2d& w) const;

    QuadratureOptions quadrature;

private:
    RationalFunction f_, g_, fg_, fg2_, hopf_;
    Domain dom_;
    Cd basePoint_;
    Vec3 baseValue_;

    void checkHolomorphicTriple() const;
    void checkPoleClearance(const PathInPlane& path, double clearance) const;
};

// Immersion given by an explicit holomorphic map into the equatorial plane,
// embedded as (Re w, Im w, 0). Totally geodesic by construction.
class PlanarChartSurface : public SurfaceChart {
public:
    PlanarChartSurface(std::function<Cd(Cd)> map, std::function<Cd(Cd)> deriv,
                       Domain dom, std::vector<BranchPoint> branches = {})
        : map_(std::move(map)), deriv_(std::move(deriv)), dom_(std::move(dom)),
          branches_(std::move(branches)) {}

    const Domain& domain() const override { return dom_; }
    Vec3 position(const Cd& z) const override {
        Cd w = map_(z);
        return Vec3(w.real(), w.imag(), 0.0);
    }
    CVec3 xz(const Cd& z) const override {
        Cd d = 0.5 * deriv_(z);
        return CVec3(d, Cd(0.0, -1.0) * d, Cd(0.0));
    }
    Vec3 normal(const Cd&) const override { return Vec3(0, 0, 1); }
    std::optional<RationalFunction> hopfSymbolic() const override {
        return RationalFunction(); // zero: totally geodesic
    }
    std::vector<BranchPoint> branchPoints() const override { return branches_; }

private:
    std::function<Cd(Cd)> map_, deriv_;
    Domain dom_;
    std::vector<BranchPoint> branches_;
};

// Arbitrary coordinate chart (u,v) -> R^3, derivatives by finite differences.
// Used for negative-control fixtures that are not harmonic or conformal.
class GenericChartSurface : public SurfaceChart {
public:
    GenericChartSurface(std::function<Vec3(Cd)> map, Domain dom)
        : map_(std::move(map)), dom_(std::move(dom)) {}

    const Domain& domain() const override { return dom_; }
    Vec3 position(const Cd& z) const override { return map_(z); }
    CVec3 xz(const Cd& z) const override;

private:
    std::function<Vec3(Cd)> map_;
    Domain dom_;
};

} // namespace wlab
