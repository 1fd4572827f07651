#include "wlab/checks.hpp"

#include <cmath>
#include <random>

namespace wlab {

namespace {

std::pair<double, double> boundaryRadii(const Domain& dom, double restrictR) {
    if (dom.kind == Domain::Kind::CanonicalAnnulus) return {1.0 / dom.R, dom.R};
    if (dom.kind == Domain::Kind::UnitDisk) return {0.0, 1.0}; // inner unused
    if (restrictR > 1.0) return {1.0 / restrictR, restrictR};
    throw DomainError("surface domain has no boundary circles");
}

} // namespace

std::vector<Cd> sampleAnnulus(double rMin, double rMax, int n, unsigned seed,
                              const std::vector<Cd>& avoid, double clearance) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> ur(rMin, rMax), ut(0.0, 2.0 * M_PI);
    std::vector<Cd> out;
    while (static_cast<int>(out.size()) < n) {
        Cd z = std::polar(ur(rng), ut(rng));
        bool ok = true;
        for (const auto& a : avoid)
            if (std::abs(z - a) < clearance) ok = false;
        if (ok) out.push_back(z);
    }
    return out;
}

CheckReport checkMinimalImmersion(const SurfaceChart& surface, const GridSpec& grid,
                                  double tol, double clearance, double fdStep) {
    auto branches = surface.branchPoints();
    double worst = 0.0;
    Cd worstPoint(0.0);
    int used = 0;
    const double h = fdStep;

    for (int i = 0; i < grid.nR; ++i) {
        double r = grid.rMin + (grid.rMax - grid.rMin) * (i + 0.5) / grid.nR;
        for (int j = 0; j < grid.nTheta; ++j) {
            double th = 2.0 * M_PI * j / grid.nTheta;
            Cd z = std::polar(r, th);
            bool skip = false;
            for (const auto& bp : branches)
                if (std::abs(z - bp.point) < clearance) skip = true;
            if (skip) continue;

            Vec3 xc = surface.position(z);
            Vec3 xpu = surface.position(z + h), xmu = surface.position(z - h);
            Vec3 xpv = surface.position(z + Cd(0, h)), xmv = surface.position(z - Cd(0, h));

            Vec3 lap = (xpu + xmu + xpv + xmv - 4.0 * xc) / (h * h);
            Vec3 xu = (xpu - xmu) / (2.0 * h);
            Vec3 xv = (xpv - xmv) / (2.0 * h);

            double res = lap.norm();
            res = std::max(res, std::abs(xu.norm() - xv.norm()));
            res = std::max(res, std::abs(xu.dot(xv)));
            ++used;
            if (res > worst) {
                worst = res;
                worstPoint = z;
            }
        }
    }
    return makeReport("minimal_immersion", used, worst, tol, worstPoint);
}

CheckReport checkFreeBoundary(const SurfaceChart& surface, int boundarySamples,
                              double tol, double restrictR) {
    auto [rIn, rOut] = boundaryRadii(surface.domain(), restrictR);
    double worst = 0.0;
    Cd worstPoint(0.0);
    int used = 0;

    auto visitCircle = [&](double r, double outwardSign) {
        if (r <= 0.0) return;
        for (int j = 0; j < boundarySamples; ++j) {
            double th = 2.0 * M_PI * (j + 0.25) / boundarySamples;
            Cd z = std::polar(r, th);
            Vec3 x = surface.position(z);
            double res = std::abs(x.norm() - 1.0);

            // Outward conormal: derivative along the radial direction.
            Cd dir = outwardSign * std::polar(1.0, th);
            CVec3 d = surface.xz(z);
            Vec3 conormal = 2.0 * (d * dir).real();
            double clen = conormal.norm();
            if (clen > 0 && x.norm() > 0) {
                Vec3 xhat = x / x.norm();
                Vec3 perp = conormal - conormal.dot(xhat) * xhat;
                res = std::max(res, perp.norm() / clen);
            }
            ++used;
            if (res > worst) {
                worst = res;
                worstPoint = z;
            }
        }
    };
    visitCircle(rOut, +1.0);
    if (surface.domain().kind != Domain::Kind::UnitDisk) visitCircle(rIn, -1.0);
    return makeReport("free_boundary", used, worst, tol, worstPoint);
}

CheckReport checkHopfRealOnBoundary(const SurfaceChart& surface, double tol,
                                    double restrictR, int samples) {
    auto hopf = surface.hopfSymbolic();
    if (!hopf) throw Error("symbolic Hopf coefficient unavailable");
    auto [rIn, rOut] = boundaryRadii(surface.domain(), restrictR);

    double worst = 0.0;
    Cd worstPoint(0.0);
    int used = 0;
    auto visitCircle = [&](double r) {
        if (r <= 0.0) return;
        for (int j = 0; j < samples; ++j) {
            double th = 2.0 * M_PI * (j + 0.25) / samples;
            Cd z = std::polar(r, th);
            Cd t = Cd(0, 1) * z; // boundary tangent direction
            Cd val = (*hopf)(z)*t * t;
            double res = std::abs(val.imag()) / std::max(std::abs(val), 1e-12);
            ++used;
            if (res > worst) {
                worst = res;
                worstPoint = z;
            }
        }
    };
    visitCircle(rOut);
    visitCircle(rIn);
    return makeReport("hopf_real_on_boundary", used, worst, tol, worstPoint);
}

Cd fdHopfOracle(const SurfaceChart& surface, const Cd& z, double h) {
    if (h <= 0.0) h = 1e-4 * std::abs(z);
    auto X = [&](const Cd& w) { return surface.position(w); };
    Vec3 xc = X(z);
    Vec3 xpu = X(z + h), xmu = X(z - h);
    Vec3 xpv = X(z + Cd(0, h)), xmv = X(z - Cd(0, h));
    Vec3 xpp = X(z + Cd(h, h)), xpm = X(z + Cd(h, -h));
    Vec3 xmp = X(z + Cd(-h, h)), xmm = X(z + Cd(-h, -h));

    Vec3 xuu = (xpu - 2.0 * xc + xmu) / (h * h);
    Vec3 xvv = (xpv - 2.0 * xc + xmv) / (h * h);
    Vec3 xuv = (xpp - xpm - xmp + xmm) / (4.0 * h * h);

    CVec3 xzz;
    for (int i = 0; i < 3; ++i)
        xzz(i) = Cd(0.25 * (xuu(i) - xvv(i)), -0.5 * xuv(i));

    Vec3 n = surface.normal(z);
    Cd out(0.0);
    for (int i = 0; i < 3; ++i) out += xzz(i) * n(i);
    return out;
}

BranchExpansion branchExpansion(const SurfaceChart& surface, const Cd& p,
                                double radius) {
    const int m = 48;
    std::vector<Cd> t(m);
    std::vector<CVec3> d(m);
    double dataNorm2 = 0.0;
    for (int j = 0; j < m; ++j) {
        t[j] = std::polar(radius, 2.0 * M_PI * j / m);
        d[j] = surface.xz(p + t[j]);
        dataNorm2 += d[j].squaredNorm();
    }

    double bestRes = 1e300, secondRes = 1e300;
    int bestNu = 0;
    CVec3 bestA = CVec3::Zero();
    for (int nu = 1; nu <= 6; ++nu) {
        CVec3 num = CVec3::Zero();
        double den = 0.0;
        for (int j = 0; j < m; ++j) {
            Cd tv = std::pow(t[j], nu);
            num += std::conj(tv) * d[j];
            den += std::norm(tv);
        }
        CVec3 A = num / den;
        double res2 = 0.0;
        for (int j = 0; j < m; ++j) res2 += (d[j] - A * std::pow(t[j], nu)).squaredNorm();
        double rel = std::sqrt(res2 / std::max(dataNorm2, 1e-300));
        if (rel < bestRes) {
            secondRes = bestRes;
            bestRes = rel;
            bestNu = nu;
            bestA = A;
        } else if (rel < secondRes) {
            secondRes = rel;
        }
    }
    if (bestRes > 0.5 || secondRes < 2.0 * bestRes)
        throw FitAmbiguousError("branch expansion fit is ambiguous at this point");

    BranchExpansion out;
    out.center = p;
    out.order = bestNu;
    out.leadingVector = bestA;
    Cd aa(0.0);
    for (int i = 0; i < 3; ++i) aa += bestA(i) * bestA(i);
    out.isotropyResidual = std::abs(aa);
    Vec3 alpha = 2.0 * bestA.real();
    Vec3 beta = -2.0 * bestA.imag();
    Vec3 n = alpha.cross(beta);
    if (n.norm() == 0.0) throw FitAmbiguousError("degenerate leading vector");
    out.limitNormal = n / n.norm();
    out.fitResidual = bestRes;
    return out;
}

} // namespace wlab
