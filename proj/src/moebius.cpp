#include "wlab/moebius.hpp"

#include <cmath>
#include <random>
#include <sstream>

namespace wlab {

namespace {

double slitDistance(const Cd& z, double slitAngle) {
    // Angular distance to either slit ray (the slit and its deck image).
    double a = std::arg(z);
    double d1 = std::abs(std::remainder(a - slitAngle, 2.0 * M_PI));
    double d2 = std::abs(std::remainder(a + slitAngle, 2.0 * M_PI));
    return std::min(d1, d2);
}

} // namespace

std::vector<Cd> deckSamplePoints(const Domain& dom, int n, unsigned seed) {
    double R = dom.kind == Domain::Kind::CanonicalAnnulus ? dom.R : 2.0;
    double slit = dom.slit ? *dom.slit : M_PI / 2.0;
    double rMin = std::sqrt(1.0 / R), rMax = std::sqrt(R);
    if (rMax / rMin > 2.0) {
        rMin = std::max(rMin, 1.0 / 1.5);
        rMax = std::min(rMax, 1.5);
    }
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> ur(rMin, rMax), ut(0.0, 2.0 * M_PI);
    std::vector<Cd> out;
    int guard = 0;
    while (static_cast<int>(out.size()) < n && ++guard < 100000) {
        Cd z = std::polar(ur(rng), ut(rng));
        // Both z and -1/conj(z) have the same argument distance to the slit
        // pair, so one test covers both charts.
        if (slitDistance(z, slit) < 0.15) continue;
        out.push_back(z);
    }
    return out;
}

CheckReport checkDeckInvariance(const SurfaceChart& surface, int samples, double tol) {
    auto zs = deckSamplePoints(surface.domain(), samples);
    double worst = 0.0;
    Cd worstPoint(0.0);
    int used = 0;
    for (const auto& z : zs) {
        Vec3 a = surface.position(z);
        Vec3 b = surface.position(deck(z));
        double res = (a - b).norm();
        ++used;
        if (res > worst) {
            worst = res;
            worstPoint = z;
        }
    }
    return makeReport("deck_invariance", used, worst, tol, worstPoint);
}

CheckReport checkGaussLaw(const WeierstrassSurface& surface, int samples, double tol) {
    auto zs = deckSamplePoints(surface.domain(), samples);
    const auto& g = surface.g();
    double worst = 0.0;
    Cd worstPoint(0.0);
    int used = 0;
    for (const auto& z : zs) {
        Cd gz, gt;
        try {
            gz = g(z);
            gt = g(deck(z));
        } catch (const PoleError&) {
            continue;
        }
        if (std::abs(gz) < 1e-8) continue; // 1/conj(g) blows up, skip
        double res = std::abs(gt + 1.0 / std::conj(gz));
        ++used;
        if (res > worst) {
            worst = res;
            worstPoint = z;
        }
    }
    return makeReport("gauss_map_law", used, worst, tol, worstPoint);
}

CheckReport checkFLaw(const WeierstrassSurface& surface, int samples, double tol) {
    auto zs = deckSamplePoints(surface.domain(), samples);
    const auto& f = surface.f();
    const auto& fg = surface.fg();
    double worst = 0.0;
    Cd worstPoint(0.0);
    int used = 0;
    for (const auto& z : zs) {
        // f (z g)^2 = z^2 (fg)^2 / f keeps poles of g out of the evaluation.
        Cd fz, ft, fgz;
        try {
            fz = f(z);
            ft = f(deck(z));
            fgz = fg(z);
        } catch (const PoleError&) {
            continue;
        }
        if (std::abs(fz) < 1e-10) continue;
        Cd rhs = z * z * fgz * fgz / fz;
        double res = std::abs(ft + std::conj(rhs));
        ++used;
        if (res > worst) {
            worst = res;
            worstPoint = z;
        }
    }
    return makeReport("f_law", used, worst, tol, worstPoint);
}

CheckReport hopfLawResidual(const RationalFunction& phi, const std::vector<Cd>& samples,
                            double tol) {
    double worst = 0.0;
    Cd worstPoint(0.0);
    int used = 0;
    for (const auto& z : samples) {
        Cd zt = deck(z);
        Cd zb4 = std::pow(std::conj(z), 4);
        Cd pz, pt;
        try {
            pz = phi(z);
            pt = phi(zt);
        } catch (const PoleError&) {
            continue;
        }
        double res = std::abs(pt / zb4 + std::conj(pz));
        ++used;
        if (res > worst) {
            worst = res;
            worstPoint = z;
        }
    }
    return makeReport("hopf_law", used, worst, tol, worstPoint);
}

CheckReport hopfLawResidual(const SurfaceChart& surface, int samples, double tol) {
    auto hopf = surface.hopfSymbolic();
    if (!hopf) throw Error("symbolic Hopf coefficient unavailable");
    return hopfLawResidual(*hopf, deckSamplePoints(surface.domain(), samples), tol);
}

std::optional<bool> gaussLawHoldsExact(const WeierstrassSurface& surface) {
    // g(T(z)) = -1/conj(g(z)) for all z is the polynomial identity
    // g*(-1/z) g(z) = -1, with * the coefficient conjugation.
    const auto& g = surface.g();
    return RationalFunction::identicallyEqualExact(
        g.conjugateCoeffs().composeNegInv() * g,
        RationalFunction::constant(GaussRat(BigRat(-1), BigRat(0))));
}

std::optional<bool> fLawHoldsExact(const WeierstrassSurface& surface) {
    // (f o neginv)*(z) = -f(z) (z g(z))^2.
    const auto& f = surface.f();
    RationalFunction zg = RationalFunction::identity() * surface.g();
    return RationalFunction::identicallyEqualExact(
        f.composeNegInv().conjugateCoeffs(), -(f * zg * zg));
}

std::optional<bool> hopfLawHoldsExact(const RationalFunction& phi) {
    // (phi* o neginv)(z) = -z^4 phi(z).
    RationalFunction z4 = RationalFunction::fromExact(
        PolyQ::monomial(GaussRat(1), 4), PolyQ::constant(GaussRat(1)));
    return RationalFunction::identicallyEqualExact(
        phi.conjugateCoeffs().composeNegInv(), -(z4 * phi));
}

ImpossibilityCertificate impossibilityCertificate(double R, const Cd& c0) {
    if (!(R > 1.0)) throw ParamRangeError("certificate needs R > 1");

    ImpossibilityCertificate cert;
    cert.R = R;
    cert.c0 = c0;

    // phi(z) = C0 / z^2; its pullback under T(z) = -1/conj(z), computed on
    // the rational side, is phi*(-1/z)/z^4 = conj(C0)/z^2 = +conj(phi).
    RationalFunction phi = RationalFunction::fromApprox(
        PolyC::constant(c0), PolyC::monomial(Cd(1.0), 2));
    RationalFunction pullback =
        (phi.conjugateCoeffs().composeNegInv() *
         RationalFunction::fromApprox(PolyC::constant(Cd(1.0)),
                                      PolyC::monomial(Cd(1.0), 4)))
            .simplified();
    RationalFunction plusConj = phi.conjugateCoeffs();
    // Compare as simplified quotients of degree <= 2 data.
    auto eq = [](const RationalFunction& a, const RationalFunction& b) {
        PolyC lhs = a.num() * b.den();
        PolyC rhs = b.num() * a.den();
        PolyC diff = lhs - rhs;
        double scale = 0.0;
        for (int k = 0; k <= lhs.degree(); ++k) scale = std::max(scale, std::abs(lhs.coeff(k)));
        for (int k = 0; k <= diff.degree(); ++k)
            if (std::abs(diff.coeff(k)) > 1e-13 * std::max(scale, 1.0)) return false;
        return true;
    };
    cert.pullbackIsPlusConj = eq(pullback, plusConj);

    std::ostringstream ps;
    ps << "T*(C0/z^2 dz^2) = +conj(C0/z^2 dz^2) for T(z) = -1/conj(z)";
    cert.pullbackStatement = ps.str();
    cert.requiredLaw = "a deck-invariant Hopf form must satisfy T*Q = -conj(Q)";

    // Residual of the required law, measured pointwise. For phi = C0/z^2 it
    // equals 2|C0|/|z|^2 identically.
    double rr = std::sqrt(R);
    for (double r : {1.0, rr}) {
        for (int j = 0; j < 8; ++j) {
            Cd z = std::polar(r, 2.0 * M_PI * j / 8.0);
            Cd zt = deck(z);
            Cd zb4 = std::pow(std::conj(z), 4);
            double res = std::abs(phi(zt) / zb4 + std::conj(phi(z)));
            cert.mismatchSamples.emplace_back(z, res);
        }
    }

    cert.consistent = std::abs(c0) <= 1e-14;
    cert.chain = {
        "free boundary annulus form: phi(z) = C0 / z^2 with C0 real",
        cert.pullbackStatement,
        cert.requiredLaw,
        "both hold only if conj(Q) = -conj(Q), i.e. C0 = 0",
        cert.consistent ? "C0 = 0: consistent, the band is totally geodesic"
                        : "C0 != 0: laws are inconsistent, no such Moebius band",
    };
    return cert;
}

} // namespace wlab
