// wlab: command line front end for the minimal-surface toolkit.
//
// Default tolerances (every one overridable by flag):
//   minimal immersion (finite differences)  1e-4
//   free boundary                           1e-8
//   Hopf real on boundary                   1e-8
//   deck invariance                         1e-8
//   transformation laws                     1e-12

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "wlab/annulus_hopf.hpp"
#include "wlab/catalog.hpp"
#include "wlab/checks.hpp"
#include "wlab/moebius.hpp"
#include "wlab/report.hpp"
#include "wlab/steklov.hpp"

namespace {

using namespace wlab;

Cd parseComplex(const std::string& s) {
    // "a,b" or a bare real.
    auto comma = s.find(',');
    try {
        if (comma == std::string::npos) return Cd(std::stod(s), 0.0);
        return Cd(std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1)));
    } catch (const std::exception&) {
        throw CLI::ValidationError("expected a complex number as re[,im]: " + s);
    }
}

std::map<std::string, double> parseParams(const std::vector<std::string>& kvs) {
    std::map<std::string, double> out;
    for (const auto& kv : kvs) {
        auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw CLI::ValidationError("expected key=value parameter: " + kv);
        out[kv.substr(0, eq)] = std::stod(kv.substr(eq + 1));
    }
    return out;
}

void emit(const std::vector<JsonValue>& results, const std::string& surfaceName,
          const std::string& outPath) {
    if (outPath.empty()) {
        writeReport(results, surfaceName, std::cout);
    } else {
        std::ofstream os(outPath, std::ios::binary);
        if (!os) throw Error("cannot open output file: " + outPath);
        writeReport(results, surfaceName, os);
    }
}

int runCatalog() {
    for (const auto& name : catalogList()) {
        CatalogEntry e = catalogGet(name);
        std::cout << name;
        std::vector<std::string> tags;
        if (e.expected.deckInvariant) tags.push_back("deck-invariant");
        if (e.expected.freeBoundary) tags.push_back("free-boundary");
        if (e.expected.totallyGeodesic) tags.push_back("totally-geodesic");
        if (!e.expected.branchPoints.empty())
            tags.push_back("branch-points=" + std::to_string(e.expected.branchPoints.size()));
        for (size_t i = 0; i < tags.size(); ++i)
            std::cout << (i ? "," : "  [") << tags[i];
        if (!tags.empty()) std::cout << "]";
        std::cout << "\n";
    }
    return 0;
}

int runEval(const CatalogEntry& entry, const Cd& z, const std::string& outPath) {
    const SurfaceChart& s = *entry.surface;
    Vec3 x = s.position(z);
    CVec3 d = s.xz(z);

    JsonValue v = JsonValue::object();
    v.set("type", JsonValue::string("eval"));
    v.set("z", JsonValue::complexNumber(z));
    JsonValue pos = JsonValue::array();
    for (int i = 0; i < 3; ++i) pos.push(JsonValue::number(x(i)));
    v.set("position", std::move(pos));
    JsonValue xzv = JsonValue::array();
    for (int i = 0; i < 3; ++i) xzv.push(JsonValue::complexNumber(d(i)));
    v.set("xz", std::move(xzv));
    v.set("conformal_factor", JsonValue::number(s.conformalFactor(z)));
    try {
        Vec3 n = s.normal(z);
        JsonValue nv = JsonValue::array();
        for (int i = 0; i < 3; ++i) nv.push(JsonValue::number(n(i)));
        v.set("normal", std::move(nv));
    } catch (const BranchPointError&) {
        v.set("normal", JsonValue::string("branch point"));
    }
    if (auto hopf = s.hopfSymbolic())
        v.set("hopf", JsonValue::complexNumber((*hopf)(z)));
    emit({v}, entry.name, outPath);
    return 0;
}

struct CheckTols {
    double minimal = 1e-4;
    double freeBoundary = 1e-8;
    double hopfBoundary = 1e-8;
};

int runCheck(const CatalogEntry& entry, const std::string& suite, const CheckTols& tols,
             const GridSpec& grid, const std::string& outPath) {
    const SurfaceChart& s = *entry.surface;
    std::vector<JsonValue> results;
    bool allPassed = true;
    auto add = [&](const CheckReport& r) {
        results.push_back(toJson(r));
        allPassed = allPassed && r.passed;
    };

    if (suite == "minimal" || suite == "all")
        add(checkMinimalImmersion(s, grid, tols.minimal));
    if (suite == "free-boundary" || suite == "all")
        add(checkFreeBoundary(s, 64, tols.freeBoundary, grid.rMax));
    if (suite == "hopf-boundary" || suite == "all")
        add(checkHopfRealOnBoundary(s, tols.hopfBoundary, grid.rMax));
    emit(results, entry.name, outPath);
    return allPassed ? 0 : 1;
}

int runHopf(const CatalogEntry& entry, const Cd& z, const std::string& outPath) {
    const SurfaceChart& s = *entry.surface;
    auto hopf = s.hopfSymbolic();
    if (!hopf) throw Error("surface has no symbolic Hopf coefficient");
    Cd sym = (*hopf)(z);
    Cd fd = fdHopfOracle(s, z);

    JsonValue v = JsonValue::object();
    v.set("type", JsonValue::string("hopf"));
    v.set("z", JsonValue::complexNumber(z));
    v.set("symbolic", JsonValue::complexNumber(sym));
    v.set("finite_difference", JsonValue::complexNumber(fd));
    v.set("abs_difference", JsonValue::number(std::abs(sym - fd)));
    emit({v}, entry.name, outPath);
    return 0;
}

int runFitC0(const CatalogEntry& entry, const std::string& outPath) {
    HopfFitResult fit = fitC0(*entry.surface);
    AnnulusClass cls = classifyAnnulus(*entry.surface);
    JsonValue v = toJson(fit);
    v.set("classification", JsonValue::string(annulusClassName(cls)));
    emit({v}, entry.name, outPath);
    return 0;
}

int runMoebiusVerify(const CatalogEntry& entry, double tol, int samples,
                     const std::string& outPath) {
    auto* ws = dynamic_cast<const WeierstrassSurface*>(entry.surface.get());
    std::vector<JsonValue> results;
    bool allPassed = true;
    auto add = [&](CheckReport r, std::optional<bool> exact) {
        JsonValue v = toJson(r);
        if (exact) v.set("exact_identity", JsonValue::boolean(*exact));
        results.push_back(std::move(v));
        allPassed = allPassed && r.passed && exact.value_or(true);
    };

    add(checkDeckInvariance(*entry.surface, samples, 1e-8), std::nullopt);
    if (ws) {
        add(checkGaussLaw(*ws, samples, tol), gaussLawHoldsExact(*ws));
        add(checkFLaw(*ws, samples, tol), fLawHoldsExact(*ws));
        add(hopfLawResidual(*ws, samples, tol), hopfLawHoldsExact(ws->hopf()));
    } else if (auto hopf = entry.surface->hopfSymbolic()) {
        add(hopfLawResidual(*entry.surface, samples, tol), hopfLawHoldsExact(*hopf));
    }
    emit(results, entry.name, outPath);
    return allPassed ? 0 : 1;
}

int runImpossibility(double R, const Cd& c0, const std::string& outPath) {
    ImpossibilityCertificate cert = impossibilityCertificate(R, c0);
    emit({toJson(cert)}, "", outPath);
    std::cerr << "conclusion: "
              << (cert.consistent ? "consistent (C0 = 0, totally geodesic case)"
                                  : "C0 must be 0")
              << "\n";
    return 0;
}

int runSteklov(const CylinderGeometry& geo, int count, int maxMode, bool disk,
               const std::string& quotient, const std::string& outPath,
               const std::string& csvPath) {
    SteklovSpectrum spec;
    if (disk)
        spec = diskSpectrum(count);
    else if (quotient == "moebius")
        spec = moebiusSpectrum(geo, count, maxMode);
    else
        spec = cylinderSpectrum(geo, count, maxMode);

    if (!csvPath.empty()) {
        std::ofstream os(csvPath, std::ios::binary);
        if (!os) throw Error("cannot open output file: " + csvPath);
        writeSpectrumCsv(spec, os);
    }
    emit({toJson(spec)}, "", outPath);
    return 0;
}

int runMesh(const CatalogEntry& entry, const GridSpec& grid, const std::string& outPath) {
    std::ofstream os(outPath, std::ios::binary);
    if (!os) throw Error("cannot open output file: " + outPath);
    writeMeshObj(*entry.surface, grid, os);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weierstrass minimal-surface toolkit"};
    app.require_subcommand(1);

    std::string surfaceName, suite = "all", outPath, csvPath, zStr = "1", c0Str = "1";
    std::string quotient;
    std::vector<std::string> paramKvs;
    GridSpec grid{0.5, 2.0, 16, 32};
    CheckTols tols;
    double lawTol = 1e-12, R = 2.0;
    int samples = 100, count = 12, maxMode = 256;
    bool disk = false;
    CylinderGeometry geo;

    auto addSurfaceFlags = [&](CLI::App* cmd) {
        cmd->add_option("--surface", surfaceName, "catalog surface name")->required();
        cmd->add_option("--param", paramKvs, "surface parameter key=value");
    };
    auto addGridFlags = [&](CLI::App* cmd) {
        cmd->add_option("--rmin", grid.rMin);
        cmd->add_option("--rmax", grid.rMax);
        cmd->add_option("--nr", grid.nR);
        cmd->add_option("--ntheta", grid.nTheta);
    };

    CLI::App* cCatalog = app.add_subcommand("catalog", "list built-in surfaces");

    CLI::App* cEval = app.add_subcommand("eval", "evaluate a surface at a point");
    addSurfaceFlags(cEval);
    cEval->add_option("--z", zStr, "evaluation point re[,im]");
    cEval->add_option("--out", outPath);

    CLI::App* cCheck = app.add_subcommand("check", "run a check suite");
    addSurfaceFlags(cCheck);
    cCheck->add_option("--suite", suite)
        ->check(CLI::IsMember({"minimal", "free-boundary", "hopf-boundary", "all"}));
    cCheck->add_option("--tol-minimal", tols.minimal);
    cCheck->add_option("--tol-free-boundary", tols.freeBoundary);
    cCheck->add_option("--tol-hopf-boundary", tols.hopfBoundary);
    addGridFlags(cCheck);
    cCheck->add_option("--out", outPath);

    CLI::App* cHopf = app.add_subcommand("hopf", "symbolic vs finite-difference Hopf");
    addSurfaceFlags(cHopf);
    cHopf->add_option("--z", zStr);
    cHopf->add_option("--out", outPath);

    CLI::App* cFit = app.add_subcommand("fit-c0", "fit the annulus Hopf form C0/z^2");
    addSurfaceFlags(cFit);
    cFit->add_option("--out", outPath);

    CLI::App* cMv = app.add_subcommand("moebius-verify", "deck map and transformation laws");
    addSurfaceFlags(cMv);
    cMv->add_option("--tol", lawTol);
    cMv->add_option("--samples", samples);
    cMv->add_option("--out", outPath);

    CLI::App* cImp = app.add_subcommand("impossibility", "Hopf form pullback certificate");
    cImp->add_option("--R", R);
    cImp->add_option("--c0", c0Str, "constant C0 as re[,im]");
    cImp->add_option("--out", outPath);

    CLI::App* cStek = app.add_subcommand("steklov", "cylinder Steklov spectrum");
    cStek->add_option("--L", geo.L);
    cStek->add_option("--rho1", geo.rho1);
    cStek->add_option("--rho2", geo.rho2);
    cStek->add_option("--count", count);
    cStek->add_option("--max-mode", maxMode);
    cStek->add_option("--quotient", quotient)->check(CLI::IsMember({"moebius"}));
    cStek->add_flag("--disk", disk, "unit disk special case");
    cStek->add_option("--out", outPath);
    cStek->add_option("--csv", csvPath);

    CLI::App* cMesh = app.add_subcommand("mesh", "export a Wavefront OBJ mesh");
    addSurfaceFlags(cMesh);
    addGridFlags(cMesh);
    cMesh->add_option("--out", outPath)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (cCatalog->parsed()) return runCatalog();

        CatalogEntry entry;
        if (!surfaceName.empty()) entry = catalogGet(surfaceName, parseParams(paramKvs));

        if (cEval->parsed()) return runEval(entry, parseComplex(zStr), outPath);
        if (cCheck->parsed()) return runCheck(entry, suite, tols, grid, outPath);
        if (cHopf->parsed()) return runHopf(entry, parseComplex(zStr), outPath);
        if (cFit->parsed()) return runFitC0(entry, outPath);
        if (cMv->parsed()) return runMoebiusVerify(entry, lawTol, samples, outPath);
        if (cImp->parsed()) return runImpossibility(R, parseComplex(c0Str), outPath);
        if (cStek->parsed())
            return runSteklov(geo, count, maxMode, disk, quotient, outPath, csvPath);
        if (cMesh->parsed()) return runMesh(entry, grid, outPath);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const UnknownSurfaceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
