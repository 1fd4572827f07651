#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wlab/catalog.hpp"
#include "wlab/moebius.hpp"

using namespace wlab;

TEST_CASE("deck map basics") {
    CHECK(deck(Cd(1.0)) == Cd(-1.0));
    CHECK(deck(Cd(2.0)) == Cd(-0.5));
    CHECK_THROWS_AS(deck(Cd(0.0)), DomainError);
    // Involution on random points.
    auto zs = sampleAnnulus(0.5, 2.0, 20, 3);
    for (const auto& z : zs) CHECK(std::abs(deck(deck(z)) - z) < 1e-15);
}

TEST_CASE("deck map is fixed-point free on a grid") {
    double minDist = 1e300;
    for (int i = 0; i < 64; ++i)
        for (int j = 0; j < 64; ++j) {
            Cd z = std::polar(0.5 + 1.5 * i / 63.0, 2.0 * M_PI * j / 64.0);
            minDist = std::min(minDist, std::abs(deck(z) - z));
        }
    CHECK(minDist > 0.5);
}

TEST_CASE("deck invariance: Moebius surfaces pass, catenoid fails") {
    for (const char* name : {"henneberg", "meeks"}) {
        auto rep = checkDeckInvariance(*catalogGet(name).surface, 100, 1e-8);
        INFO(name << " residual " << rep.maxResidual);
        CHECK(rep.passed);
    }
    auto rep = checkDeckInvariance(*catalogGet("catenoid").surface, 50, 1e-8);
    CHECK(!rep.passed);
    CHECK(rep.maxResidual > 0.1);
}

TEST_CASE("gauss map law: numeric and exact") {
    for (const char* name : {"henneberg", "meeks", "catenoid"}) {
        auto entry = catalogGet(name);
        auto* ws = dynamic_cast<const WeierstrassSurface*>(entry.surface.get());
        REQUIRE(ws != nullptr);
        auto rep = checkGaussLaw(*ws, 100, 1e-12);
        INFO(name << " residual " << rep.maxResidual);
        CHECK(rep.passed); // the law constrains only g; all three satisfy it
        auto exact = gaussLawHoldsExact(*ws);
        if (exact) CHECK(*exact);
    }
}

TEST_CASE("f law: exact for the Moebius surfaces, sign failure for the catenoid") {
    for (const char* name : {"henneberg", "meeks"}) {
        auto entry = catalogGet(name);
        auto* ws = dynamic_cast<const WeierstrassSurface*>(entry.surface.get());
        REQUIRE(ws != nullptr);
        CHECK(checkFLaw(*ws, 100, 1e-12).passed);
        auto exact = fLawHoldsExact(*ws);
        REQUIRE(exact.has_value());
        CHECK(*exact);
    }
    auto cat = catalogGet("catenoid");
    auto* cw = dynamic_cast<const WeierstrassSurface*>(cat.surface.get());
    auto rep = checkFLaw(*cw, 50, 1e-12);
    CHECK(!rep.passed);
}

TEST_CASE("Hopf law: exact identities and the C0/z^2 obstruction") {
    for (const char* name : {"henneberg", "meeks"}) {
        auto entry = catalogGet(name);
        auto* ws = dynamic_cast<const WeierstrassSurface*>(entry.surface.get());
        REQUIRE(ws != nullptr);
        CHECK(hopfLawResidual(*entry.surface, 100, 1e-12).passed);
        auto exact = hopfLawHoldsExact(ws->hopf());
        REQUIRE(exact.has_value());
        CHECK(*exact);
    }

    Cd c0(0.37, 0.0);
    auto phi = RationalFunction::fromApprox(PolyC::constant(c0), PolyC::monomial(Cd(1.0), 2));
    auto zs = sampleAnnulus(0.6, 1.7, 40, 5);
    auto rep = hopfLawResidual(phi, zs, 1e-12);
    CHECK(!rep.passed);
    for (const auto& z : zs) {
        Cd zt = deck(z);
        double res = std::abs(phi(zt) / std::pow(std::conj(z), 4) + std::conj(phi(z)));
        CHECK(res == doctest::Approx(2.0 * std::abs(c0) / std::norm(z)).epsilon(1e-12));
    }
}

TEST_CASE("impossibility certificate") {
    auto cert = impossibilityCertificate(2.0, Cd(1.0));
    CHECK(cert.pullbackIsPlusConj);
    CHECK(!cert.consistent);
    REQUIRE(cert.mismatchSamples.size() == 16);
    for (const auto& [z, res] : cert.mismatchSamples)
        CHECK(res == doctest::Approx(2.0 / std::norm(z)).epsilon(1e-12));
    // First sample is z = 1 with mismatch 2.
    CHECK(std::abs(cert.mismatchSamples[0].first - Cd(1.0)) < 1e-15);
    CHECK(cert.mismatchSamples[0].second == doctest::Approx(2.0).epsilon(1e-13));

    auto zero = impossibilityCertificate(2.0, Cd(0.0));
    CHECK(zero.consistent);
    for (const auto& [z, res] : zero.mismatchSamples) CHECK(res == 0.0);

    auto c = impossibilityCertificate(1.5, Cd(-0.37, 0.0));
    bool sawI = false;
    for (const auto& [z, res] : c.mismatchSamples)
        if (std::abs(z - Cd(0.0, 1.0)) < 1e-12) {
            sawI = true;
            CHECK(res == doctest::Approx(0.74).epsilon(1e-12));
        }
    CHECK(sawI);

    CHECK_THROWS_AS(impossibilityCertificate(1.0, Cd(1.0)), ParamRangeError);
}
