// Acceptance gate: one [PASS]/[FAIL] line per criterion, exit nonzero if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "support/fd_steklov.hpp"
#include "wlab/annulus_hopf.hpp"
#include "wlab/catalog.hpp"
#include "wlab/checks.hpp"
#include "wlab/moebius.hpp"
#include "wlab/steklov.hpp"

using namespace wlab;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int index, const char* title, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << index << ". " << title;
    if (!detail.empty()) std::cout << "  (" << detail << ")";
    std::cout << "\n";
    if (!ok) ++failures;
}

double seconds(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

const WeierstrassSurface* asWeier(const CatalogEntry& e) {
    return dynamic_cast<const WeierstrassSurface*>(e.surface.get());
}

// 1. Symbolic Hopf coefficient vs the 9-point finite-difference oracle.
void criterion1() {
    auto t0 = Clock::now();
    bool ok = true;
    double worst = 0.0;
    for (const char* name : {"henneberg", "meeks"}) {
        auto entry = catalogGet(name);
        auto hopf = entry.surface->hopfSymbolic();
        std::vector<Cd> avoid;
        for (const auto& bp : entry.surface->branchPoints()) avoid.push_back(bp.point);
        for (const auto& u : entry.expected.umbilicPoints) avoid.push_back(u);
        avoid.push_back(Cd(0.0)); // pole of the data
        auto zs = sampleAnnulus(0.5, 2.0, 50, 42, avoid, 0.1);
        for (const auto& z : zs) {
            Cd sym = (*hopf)(z);
            double rel = std::abs(fdHopfOracle(*entry.surface, z) - sym) / std::abs(sym);
            worst = std::max(worst, rel);
            ok = ok && rel <= 1e-5;
        }
    }
    double dt = seconds(t0);
    ok = ok && dt < 5.0;
    std::ostringstream d;
    d << "worst rel " << worst << ", " << dt << " s";
    report(1, "Hopf coefficient: symbolic vs finite-difference oracle", ok, d.str());
}

// 2. Closed-form Weierstrass data, Hopf coefficients, branch and umbilic sets.
void criterion2() {
    bool ok = true;

    auto hen = catalogGet("henneberg");
    auto* hw = asWeier(hen);
    GaussRat half(BigRat(1, 2));
    auto hHopf = RationalFunction::fromExact(
        PolyQ({half, GaussRat(0), GaussRat(0), GaussRat(0), -half}),
        PolyQ::monomial(GaussRat(1), 4));
    ok = ok && RationalFunction::identicallyEqualExact(hw->hopf(), hHopf).value_or(false);
    // Conformal factor closed form (1 + |z|^2)^2 |z^4 - 1|^2 / (4 |z|^8).
    for (Cd z : {Cd(1.3, 0.2), Cd(-0.7, 0.9), Cd(0.3, -1.4)}) {
        double lam = std::abs(std::pow(z, 4) - 1.0) * (1.0 + std::norm(z)) /
                     (2.0 * std::pow(std::abs(z), 4));
        ok = ok && std::abs(hw->conformalFactor(z) - lam * lam) <= 1e-12 * lam * lam;
    }
    // Branch set {1, -1, i, -i} from the common zeros of (f, f g^2).
    auto bps = hw->branchPoints();
    ok = ok && bps.size() == 4;
    for (const auto& bp : bps) ok = ok && std::abs(std::pow(bp.point, 4) - Cd(1.0)) <= 1e-10;

    auto meeks = catalogGet("meeks");
    auto* mw = asWeier(meeks);
    GaussRat twoI(BigRat(0), BigRat(2));
    auto mHopf = RationalFunction::fromExact(PolyQ({twoI, twoI, -twoI}),
                                             PolyQ::monomial(GaussRat(1), 3));
    ok = ok && RationalFunction::identicallyEqualExact(mw->hopf(), mHopf).value_or(false);
    // Umbilic set {(1 +- sqrt 5)/2} from the Hopf numerator roots.
    auto roots = polyRoots(mw->hopf().num());
    ok = ok && roots.size() == 2;
    double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    for (const auto& [z, m] : roots)
        ok = ok && (std::abs(z - Cd(phi, 0.0)) <= 1e-10 ||
                    std::abs(z - Cd(1.0 - phi, 0.0)) <= 1e-10);

    report(2, "closed-form conformal factors, Hopf coefficients, branch/umbilic sets", ok);
}

// 3. Deck invariance of the immersions.
void criterion3() {
    bool ok = true;
    double worst = 0.0;
    for (const char* name : {"henneberg", "meeks"}) {
        auto rep = checkDeckInvariance(*catalogGet(name).surface, 100, 1e-8);
        worst = std::max(worst, rep.maxResidual);
        ok = ok && rep.passed && rep.samples == 100;
    }
    auto neg = checkDeckInvariance(*catalogGet("catenoid").surface, 100, 1e-8);
    ok = ok && !neg.passed && neg.maxResidual > 0.1;
    std::ostringstream d;
    d << "worst " << worst << ", catenoid residual " << neg.maxResidual;
    report(3, "deck invariance with catenoid negative control", ok, d.str());
}

// 4. The three transformation laws, exact and floating.
void criterion4() {
    bool ok = true;
    for (const char* name : {"henneberg", "meeks"}) {
        auto entry = catalogGet(name);
        auto* ws = asWeier(entry);
        ok = ok && gaussLawHoldsExact(*ws).value_or(false);
        ok = ok && fLawHoldsExact(*ws).value_or(false);
        ok = ok && hopfLawHoldsExact(ws->hopf()).value_or(false);
        ok = ok && checkGaussLaw(*ws, 100, 1e-12).passed;
        ok = ok && checkFLaw(*ws, 100, 1e-12).passed;
        ok = ok && hopfLawResidual(*entry.surface, 100, 1e-12).passed;
    }
    auto cat = catalogGet("catenoid");
    auto* cw = asWeier(cat);
    ok = ok && checkGaussLaw(*cw, 100, 1e-12).passed;
    ok = ok && !checkFLaw(*cw, 100, 1e-12).passed;
    report(4, "transformation laws exact and numeric, catenoid fails only the f law", ok);
}

// 5. The C0/z^2 annulus Hopf form fit.
void criterion5() {
    bool ok = true;
    auto fitCc = fitC0(*catalogGet("critical_catenoid").surface);
    ok = ok && fitCc.exactConstant && fitCc.residual == 0.0 && fitCc.c0.imag() == 0.0 &&
         fitCc.c0.real() != 0.0;
    auto fitDisk = fitC0(*catalogGet("equatorial_disk").surface);
    ok = ok && std::abs(fitDisk.c0) == 0.0;
    for (const char* name : {"henneberg", "meeks"})
        ok = ok && fitC0(*catalogGet(name).surface).residual > 0.1;
    report(5, "annulus Hopf form: fit_c0 positives and negatives", ok);
}

// 6. Impossibility certificate across parameters.
void criterion6() {
    auto t0 = Clock::now();
    bool ok = true;
    for (double R : {1.5, 2.0, 4.0}) {
        for (double c0 : {1.0, -1.0, 0.37}) {
            auto cert = impossibilityCertificate(R, Cd(c0, 0.0));
            ok = ok && !cert.consistent && cert.pullbackIsPlusConj;
            for (const auto& [z, res] : cert.mismatchSamples)
                ok = ok && std::abs(res - 2.0 * std::abs(c0) / std::norm(z)) <= 1e-12;
        }
        auto zero = impossibilityCertificate(R, Cd(0.0));
        ok = ok && zero.consistent;
        for (const auto& [z, res] : zero.mismatchSamples) ok = ok && res == 0.0;
    }
    double dt = seconds(t0);
    ok = ok && dt < 1.0;
    std::ostringstream d;
    d << dt << " s";
    report(6, "impossibility certificate mismatch law 2|C0|/|z|^2", ok, d.str());
}

// 7. Free boundary checks and the critical parameter.
void criterion7() {
    bool ok = true;
    for (const char* name : {"critical_catenoid", "equatorial_disk"}) {
        auto entry = catalogGet(name);
        ok = ok && checkFreeBoundary(*entry.surface, 64, 1e-8).passed;
        ok = ok && checkHopfRealOnBoundary(*entry.surface, 1e-8).passed;
    }
    auto cc = catalogGet("critical_catenoid");
    auto scaled = catalogGet("catenoid", {{"c", 2.0 * cc.parameters.at("c")},
                                          {"R", cc.parameters.at("R")}});
    ok = ok && !checkFreeBoundary(*scaled.surface, 64, 1e-8).passed;
    // Every coaxial catenoid has a rotationally symmetric Hopf form, real on
    // all circles, so the boundary-reality negative control is the Henneberg
    // surface restricted to an annulus instead.
    auto hen = catalogGet("henneberg");
    ok = ok && !checkHopfRealOnBoundary(*hen.surface, 1e-8, 2.0).passed;
    double s0a = criticalCatenoidS0(1e-12), s0b = criticalCatenoidS0(5e-13);
    ok = ok && std::abs(s0a - s0b) <= 1e-10;
    report(7, "free boundary checks and critical catenoid parameter stability", ok);
}

// 8. Branch point expansion at Henneberg z = 1.
void criterion8() {
    bool ok = true;
    auto entry = catalogGet("henneberg");
    auto* ws = asWeier(entry);
    auto exp = branchExpansion(*entry.surface, Cd(1.0), 0.005);
    ok = ok && exp.order == 1;
    ok = ok && exp.isotropyResidual / exp.leadingVector.squaredNorm() <= 1e-6;
    for (int j = 0; j < 8; ++j) {
        Cd z = Cd(1.0) + std::polar(1e-5, 2.0 * M_PI * j / 8.0);
        Vec3 n = ws->gaussMap(z);
        ok = ok && std::min((n - exp.limitNormal).norm(),
                            (n + exp.limitNormal).norm()) <= 1e-4;
    }
    for (const auto& bp : ws->branchPoints())
        ok = ok && std::abs(ws->hopf()(bp.point)) <= 1e-10;
    report(8, "branch expansion, isotropy, limit normal, Hopf zeros", ok);
}

// 9. Steklov spectra: closed forms, FD oracle, parity filter, disk case.
void criterion9() {
    bool ok = true;
    for (double L : {std::log(1.5), std::log(2.0), std::log(4.0)}) {
        CylinderGeometry geo{L, 1.0, 1.0};
        for (int k = 0; k <= 16; ++k) {
            Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(dtnModeMatrix(geo, k));
            double lo = es.eigenvalues()(0), hi = es.eigenvalues()(1);
            if (k == 0) {
                ok = ok && std::abs(lo) <= 1e-12 && std::abs(hi - 1.0 / L) <= 1e-12;
            } else {
                ok = ok && std::abs(lo - k * std::tanh(k * L)) <= 1e-12 * k;
                ok = ok && std::abs(hi - k / std::tanh(k * L)) <= 1e-12 * k;
            }
        }
        auto full = cylinderSpectrum(geo, 40, 64);
        auto quot = moebiusSpectrum(geo, 16, 64);
        for (const auto& e : quot.entries) {
            ok = ok && e.parity == e.mode % 2;
            bool found = false;
            for (const auto& f : full.entries)
                found = found || (f.mode == e.mode && f.parity == e.parity &&
                                  f.sigma == e.sigma);
            ok = ok && found;
        }
    }

    auto t0 = Clock::now();
    CylinderGeometry geo{std::log(2.0), 1.0, 1.0};
    auto fd = testsupport::fdSteklovEigenvalues(geo, 200, 200, 3);
    auto spec = cylinderSpectrum(geo, 3);
    std::vector<double> exact;
    for (const auto& e : spec.entries)
        for (int m = 0; m < e.multiplicity && exact.size() < 3; ++m)
            exact.push_back(e.sigma);
    double dt = seconds(t0);
    ok = ok && dt < 30.0;
    ok = ok && std::abs(fd[0] - exact[0]) <= 1e-2;
    for (int i = 1; i < 3; ++i) ok = ok && std::abs(fd[i] - exact[i]) / exact[i] <= 1e-2;

    ok = ok && std::abs(normalizedEigenvalue(diskSpectrum(3), 1) - 2.0 * M_PI) <= 1e-12;
    std::ostringstream d;
    d << "fd oracle " << dt << " s";
    report(9, "Steklov closed forms, FD oracle, Moebius parity filter, disk", ok, d.str());
}

// 10. Byte-identical CLI reports.
void criterion10() {
#ifdef WLAB_CLI_PATH
    std::string out1 = "acceptance_report_1.json", out2 = "acceptance_report_2.json";
    std::string base = std::string(WLAB_CLI_PATH) +
                       " check --surface meeks --suite all --out ";
    int rc1 = std::system((base + out1).c_str());
    int rc2 = std::system((base + out2).c_str());
    auto slurp = [](const std::string& p) {
        std::ifstream is(p, std::ios::binary);
        std::ostringstream ss;
        ss << is.rdbuf();
        return ss.str();
    };
    std::string a = slurp(out1), b = slurp(out2);
    bool ok = rc1 == rc2 && !a.empty() && a == b;
    std::remove(out1.c_str());
    std::remove(out2.c_str());
    report(10, "determinism: byte-identical CLI reports", ok);
#else
    report(10, "determinism: byte-identical CLI reports", false, "CLI path not set");
#endif
}

} // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    if (failures) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
