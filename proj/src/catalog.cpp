#include "wlab/catalog.hpp"

#include <cmath>

#include "wlab/riemann_map.hpp"

namespace wlab {

namespace {

PolyQ polyQ(std::vector<GaussRat> c) { return PolyQ(std::move(c)); }

std::shared_ptr<WeierstrassSurface> makeHenneberg() {
    // f = (z^4 - 1)/z^4, g = z
    auto f = RationalFunction::fromExact(
        polyQ({GaussRat(-1), GaussRat(0), GaussRat(0), GaussRat(0), GaussRat(1)}),
        polyQ({GaussRat(0), GaussRat(0), GaussRat(0), GaussRat(0), GaussRat(1)}));
    auto g = RationalFunction::identity();
    return std::make_shared<WeierstrassSurface>(f, g, Domain::puncturedPlane(), Cd(1.0),
                                                Vec3::Zero());
}

std::shared_ptr<WeierstrassSurface> makeMeeks() {
    // f = 2i (z-1)^2 / z^4, g = z^2 (z+1)/(z-1)
    GaussRat twoI(BigRat(0), BigRat(2));
    GaussRat minusFourI(BigRat(0), BigRat(-4));
    auto f = RationalFunction::fromExact(
        polyQ({twoI, minusFourI, twoI}),
        polyQ({GaussRat(0), GaussRat(0), GaussRat(0), GaussRat(0), GaussRat(1)}));
    auto g = RationalFunction::fromExact(polyQ({GaussRat(0), GaussRat(0), GaussRat(1), GaussRat(1)}),
                                         polyQ({GaussRat(-1), GaussRat(1)}));
    return std::make_shared<WeierstrassSurface>(f, g, Domain::puncturedPlane(), Cd(1.0),
                                                Vec3::Zero());
}

double catenoidScaleFor(double s) { return 1.0 / std::sqrt(std::cosh(s) * std::cosh(s) + s * s); }

std::shared_ptr<WeierstrassSurface> makeCatenoid(double c, double R) {
    // f = c/z^2, g = z; X(1) = (-c, 0, 0) centers the neck at the origin.
    auto f = RationalFunction::fromApprox(PolyC::constant(Cd(c)),
                                          PolyC(std::vector<Cd>{Cd(0.0), Cd(0.0), Cd(1.0)}));
    auto g = RationalFunction::identity();
    return std::make_shared<WeierstrassSurface>(f, g, Domain::annulus(R), Cd(1.0),
                                                Vec3(-c, 0.0, 0.0));
}

// Signed conormal-orthogonality residual of the scale-normalized catenoid at
// the outer boundary; vanishes exactly for the critical catenoid.
double orthogonalityResidual(double s) {
    double c = catenoidScaleFor(s);
    auto surf = makeCatenoid(c, std::exp(s) + 1e-9);
    Cd z = std::exp(s);
    Vec3 x = surf->position(z);
    // d/ds X(e^{s}) along the outward conormal direction.
    CVec3 d = surf->xz(z);
    Vec3 conormal = 2.0 * (d * z).real(); // dX/ds = 2 Re(X_z dz/ds), dz/ds = z
    return x.cross(conormal)(1);
}

const RiemannMap& ellipseToDiskMap() {
    static const RiemannMap map(
        [](double theta) {
            const double a = std::cosh(1.0), b = std::sinh(1.0);
            double c = std::cos(theta), s = std::sin(theta);
            return a * b / std::sqrt(b * b * c * c + a * a * s * s);
        },
        256, 96);
    return map;
}

std::shared_ptr<PlanarChartSurface> makeCerezo() {
    const RiemannMap& rm = ellipseToDiskMap();
    // Annulus chart w with z = i Log w (so Im z = log|w| in [-1,1]),
    // X = Phi(sin z) where Phi is the ellipse -> disk map.
    auto stripPoint = [](const Cd& w) {
        return Cd(-std::arg(w), std::log(std::abs(w)));
    };
    auto value = [&rm, stripPoint](Cd w) {
        Cd z = stripPoint(w);
        return rm.inverse(std::sin(z));
    };
    auto deriv = [&rm, stripPoint](Cd w) {
        Cd z = stripPoint(w);
        return rm.inverseDeriv(std::sin(z)) * std::cos(z) * Cd(0.0, 1.0) / w;
    };
    std::vector<BranchPoint> branches{{Cd(0.0, -1.0), 1}, {Cd(0.0, 1.0), 1}};
    return std::make_shared<PlanarChartSurface>(value, deriv,
                                                Domain::annulus(std::exp(1.0)),
                                                branches);
}

double paramOr(const std::map<std::string, double>& params, const std::string& key,
               double fallback) {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
}

} // namespace

double criticalCatenoidS0(double bisectTol) {
    double lo = 0.5, hi = 2.0;
    double flo = orthogonalityResidual(lo);
    if (flo == 0.0) return lo;
    while (hi - lo > bisectTol) {
        double mid = 0.5 * (lo + hi);
        double fm = orthogonalityResidual(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0) == (flo > 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

std::vector<std::string> catalogList() {
    return {"henneberg", "meeks", "catenoid", "critical_catenoid", "equatorial_disk",
            "cerezo"};
}

CatalogEntry catalogGet(const std::string& name,
                        const std::map<std::string, double>& params) {
    CatalogEntry e;
    e.name = name;
    if (name == "henneberg") {
        e.surface = makeHenneberg();
        e.expected.branchPoints = {{Cd(-1, 0), 1}, {Cd(1, 0), 1}, {Cd(0, -1), 1}, {Cd(0, 1), 1}};
        e.expected.umbilicPoints = {Cd(-1, 0), Cd(1, 0), Cd(0, -1), Cd(0, 1)};
        e.expected.deckInvariant = true;
    } else if (name == "meeks") {
        e.surface = makeMeeks();
        double phi = (1.0 + std::sqrt(5.0)) / 2.0;
        e.expected.umbilicPoints = {Cd(1.0 - phi, 0.0), Cd(phi, 0.0)};
        e.expected.deckInvariant = true;
    } else if (name == "catenoid") {
        double c = paramOr(params, "c", 1.0);
        double R = paramOr(params, "R", 2.0);
        if (!(c > 0)) throw ParamRangeError("catenoid scale c must be positive");
        if (!(R > 1)) throw ParamRangeError("catenoid annulus modulus R must exceed 1");
        e.surface = makeCatenoid(c, R);
        e.parameters = {{"c", c}, {"R", R}};
    } else if (name == "critical_catenoid") {
        double s0 = criticalCatenoidS0();
        double c = catenoidScaleFor(s0);
        e.surface = makeCatenoid(c, std::exp(s0));
        e.expected.freeBoundary = true;
        e.parameters = {{"c", c}, {"s0", s0}, {"R", std::exp(s0)}};
    } else if (name == "equatorial_disk") {
        e.surface = std::make_shared<PlanarChartSurface>(
            [](Cd z) { return z; }, [](Cd) { return Cd(1.0); }, Domain::unitDisk());
        e.expected.freeBoundary = true;
        e.expected.totallyGeodesic = true;
    } else if (name == "cerezo") {
        e.surface = makeCerezo();
        e.expected.branchPoints = {{Cd(0.0, -1.0), 1}, {Cd(0.0, 1.0), 1}};
        e.expected.freeBoundary = true;
        e.expected.totallyGeodesic = true;
        // Modulus induced by strip height 2 under w = e^{-iz}.
        e.parameters = {{"R", std::exp(1.0)}};
    } else {
        throw UnknownSurfaceError("unknown surface: " + name);
    }
    return e;
}

} // namespace wlab
