#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wlab/catalog.hpp"
#include "wlab/checks.hpp"

using namespace wlab;

TEST_CASE("catalog lists all built-in surfaces and rejects unknown names") {
    auto names = catalogList();
    CHECK(names.size() == 6);
    for (const auto& n : names) CHECK(catalogGet(n).surface != nullptr);
    CHECK_THROWS_AS(catalogGet("enneper"), UnknownSurfaceError);
}

TEST_CASE("catenoid parameter validation") {
    CHECK_THROWS_AS(catalogGet("catenoid", {{"c", -1.0}}), ParamRangeError);
    CHECK_THROWS_AS(catalogGet("catenoid", {{"R", 0.5}}), ParamRangeError);
}

TEST_CASE("critical catenoid parameter is stable under tolerance halving") {
    double s0a = criticalCatenoidS0(1e-12);
    double s0b = criticalCatenoidS0(5e-13);
    CHECK(std::abs(s0a - s0b) < 1e-10);
    // Known characterization: s0 solves coth(s) = s.
    CHECK(std::abs(1.0 / std::tanh(s0a) - s0a) < 1e-9);
}

TEST_CASE("critical catenoid scale ties to s0 and meets the sphere") {
    auto entry = catalogGet("critical_catenoid");
    double s0 = entry.parameters.at("s0");
    double c = entry.parameters.at("c");
    CHECK(c == doctest::Approx(1.0 / std::hypot(std::cosh(s0), s0)).epsilon(1e-12));
    CHECK(entry.parameters.at("R") == doctest::Approx(std::exp(s0)).epsilon(1e-12));

    // Outer boundary points sit on the unit sphere.
    Cd z = std::polar(std::exp(s0), 1.0);
    CHECK(entry.surface->position(z).norm() == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("critical catenoid and equatorial disk are free boundary surfaces") {
    for (const char* name : {"critical_catenoid", "equatorial_disk"}) {
        auto entry = catalogGet(name);
        auto report = checkFreeBoundary(*entry.surface, 32, 1e-8);
        INFO(name << " residual " << report.maxResidual);
        CHECK(report.passed);
    }
}

TEST_CASE("cerezo chart hits the unit circle on both boundary circles") {
    auto entry = catalogGet("cerezo");
    const auto& dom = entry.surface->domain();
    CHECK(dom.R == doctest::Approx(std::exp(1.0)));
    for (double r : {std::exp(1.0), std::exp(-1.0)}) {
        for (int j = 0; j < 12; ++j) {
            Cd w = std::polar(r, 2.0 * M_PI * j / 12.0 + 0.1);
            CHECK(entry.surface->position(w).norm() == doctest::Approx(1.0).epsilon(1e-9));
        }
    }
}

TEST_CASE("cerezo branch points are simple zeros of the derivative") {
    auto entry = catalogGet("cerezo");
    auto bps = entry.surface->branchPoints();
    REQUIRE(bps.size() == 2);
    for (const auto& bp : bps) {
        CHECK(bp.order == 1);
        // X_z tiny at the branch point, larger nearby.
        CHECK(entry.surface->xz(bp.point).norm() < 1e-8);
        CHECK(entry.surface->xz(bp.point + Cd(0.05, 0.0)).norm() > 1e-3);
    }
}

TEST_CASE("expected properties are internally consistent") {
    auto hen = catalogGet("henneberg");
    CHECK(hen.expected.deckInvariant);
    CHECK(hen.expected.branchPoints.size() == 4);

    auto meeks = catalogGet("meeks");
    double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    REQUIRE(meeks.expected.umbilicPoints.size() == 2);
    // Umbilic points are exactly the Hopf zeros.
    auto* ws = dynamic_cast<const WeierstrassSurface*>(meeks.surface.get());
    REQUIRE(ws != nullptr);
    for (const auto& u : meeks.expected.umbilicPoints)
        CHECK(std::abs(ws->hopf()(u)) < 1e-10);
    CHECK(std::abs(meeks.expected.umbilicPoints[1] - Cd(phi, 0.0)) < 1e-12);
}
