#include "wlab/annulus_hopf.hpp"

#include <cmath>

#include "wlab/roots.hpp"

namespace wlab {

namespace {

std::pair<double, double> fitRadii(const Domain& dom, double restrictR) {
    double R;
    if (dom.kind == Domain::Kind::CanonicalAnnulus)
        R = dom.R;
    else if (restrictR > 1.0)
        R = restrictR;
    else
        R = 2.0;
    // Two radii with geometric-mean spacing inside [1/R, R].
    double g = std::sqrt(R);
    return {1.0 / g, g};
}

} // namespace

HopfFitResult fitC0(const SurfaceChart& surface, int sampleCount, double restrictR) {
    auto hopf = surface.hopfSymbolic();
    if (!hopf) throw Error("symbolic Hopf coefficient unavailable");

    HopfFitResult out;
    RationalFunction z2phiExactPath =
        (RationalFunction::fromExact(PolyQ::monomial(GaussRat(1), 2),
                                     PolyQ::constant(GaussRat(1))) *
         *hopf)
            .simplified();
    if (z2phiExactPath.isConstant() || z2phiExactPath.isZero()) {
        out.exactConstant = true;
        out.c0 = z2phiExactPath.isZero() ? Cd(0.0) : z2phiExactPath.constantValue();
        out.residual = 0.0;
        out.samples = 0;
        return out;
    }

    auto [r1, r2] = fitRadii(surface.domain(), restrictR);
    int perRadius = std::max(sampleCount / 2, 4);
    std::vector<Cd> zs;
    for (double r : {r1, r2})
        for (int j = 0; j < perRadius; ++j)
            zs.push_back(std::polar(r, 2.0 * M_PI * (j + 0.3) / perRadius));

    Cd mean(0.0);
    std::vector<Cd> vals;
    for (const auto& z : zs) {
        Cd v = z * z * (*hopf)(z);
        vals.push_back(v);
        mean += v;
    }
    mean /= static_cast<double>(vals.size());
    out.c0 = mean;
    for (const auto& v : vals) out.residual = std::max(out.residual, std::abs(v - mean));
    out.samples = static_cast<int>(vals.size());
    return out;
}

AnnulusClass classifyAnnulus(const SurfaceChart& surface, double tol, double restrictR) {
    auto hopf = surface.hopfSymbolic();
    if (!hopf) throw Error("symbolic Hopf coefficient unavailable");
    if (hopf->isZero()) return AnnulusClass::TotallyGeodesic;

    HopfFitResult fit = fitC0(surface, 64, restrictR);
    double fitTol = fit.exactConstant ? 1e-10 : tol;
    if (std::abs(fit.c0) <= fitTol && fit.residual <= fitTol)
        return AnnulusClass::TotallyGeodesic;
    if (fit.residual > fitTol || std::abs(fit.c0.imag()) > fitTol)
        return AnnulusClass::NotFreeBoundaryForm;

    // C0 != 0 and the form holds: assert no branch points and no Hopf zeros
    // inside the annulus.
    if (!surface.branchPoints().empty()) return AnnulusClass::NotFreeBoundaryForm;
    const auto& num = hopf->num();
    if (num.degree() >= 1) {
        double R = surface.domain().kind == Domain::Kind::CanonicalAnnulus
                       ? surface.domain().R
                       : (restrictR > 1.0 ? restrictR : 2.0);
        for (const auto& [z, m] : polyRoots(num, 1e-8)) {
            double r = std::abs(z);
            if (r >= 1.0 / R - 1e-9 && r <= R + 1e-9)
                return AnnulusClass::NotFreeBoundaryForm;
        }
    }
    return AnnulusClass::RegularFreeOfUmbilics;
}

const char* annulusClassName(AnnulusClass c) {
    switch (c) {
    case AnnulusClass::TotallyGeodesic: return "TotallyGeodesic";
    case AnnulusClass::RegularFreeOfUmbilics: return "RegularFreeOfUmbilics";
    case AnnulusClass::NotFreeBoundaryForm: return "NotFreeBoundaryForm";
    }
    return "?";
}

Cd AnnulusAutomorphism::apply(const Cd& z, const Domain& dom) const {
    if (dom.kind != Domain::Kind::CanonicalAnnulus)
        throw DomainError("annulus automorphisms act on the canonical annulus");
    if (!dom.contains(z, 1e-12)) throw DomainError("point outside the annulus");
    Cd rot = std::polar(1.0, theta0);
    return kind == Kind::Rotation ? rot * z : rot / z;
}

AnnulusAutomorphism AnnulusAutomorphism::compose(const AnnulusAutomorphism& inner) const {
    // rot(a) o rot(b) = rot(a+b); rot(a) o inv(b) = inv(a+b);
    // inv(a) o rot(b) = inv(a-b); inv(a) o inv(b) = rot(a-b).
    AnnulusAutomorphism out;
    if (kind == Kind::Rotation && inner.kind == Kind::Rotation) {
        out.kind = Kind::Rotation;
        out.theta0 = theta0 + inner.theta0;
    } else if (kind == Kind::Rotation && inner.kind == Kind::Inversion) {
        out.kind = Kind::Inversion;
        out.theta0 = theta0 + inner.theta0;
    } else if (kind == Kind::Inversion && inner.kind == Kind::Rotation) {
        out.kind = Kind::Inversion;
        out.theta0 = theta0 - inner.theta0;
    } else {
        out.kind = Kind::Rotation;
        out.theta0 = theta0 - inner.theta0;
    }
    out.theta0 = std::remainder(out.theta0, 2.0 * M_PI);
    return out;
}

} // namespace wlab
