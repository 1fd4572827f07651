#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "support/fd_steklov.hpp"
#include "wlab/steklov.hpp"

using namespace wlab;

TEST_CASE("mode matrices are symmetric with closed-form eigenvalues") {
    for (double L : {std::log(1.5), std::log(2.0), std::log(4.0)}) {
        CylinderGeometry geo{L, 1.0, 1.0};
        for (int k = 0; k <= 16; ++k) {
            Eigen::Matrix2d m = dtnModeMatrix(geo, k);
            CHECK(std::abs(m(0, 1) - m(1, 0)) < 1e-14);
            Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(m);
            double lo = es.eigenvalues()(0), hi = es.eigenvalues()(1);
            if (k == 0) {
                CHECK(std::abs(lo) < 1e-12);
                CHECK(hi == doctest::Approx(1.0 / L).epsilon(1e-12));
            } else {
                CHECK(lo == doctest::Approx(k * std::tanh(k * L)).epsilon(1e-12));
                CHECK(hi == doctest::Approx(k / std::tanh(k * L)).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("cylinder spectrum starts at zero and is sorted") {
    CylinderGeometry geo{1.0, 1.0, 1.0};
    auto spec = cylinderSpectrum(geo, 12);
    REQUIRE(!spec.entries.empty());
    CHECK(spec.entries[0].sigma == 0.0);
    CHECK(spec.entries[0].multiplicity == 1);
    for (size_t i = 1; i < spec.entries.size(); ++i) {
        CHECK(spec.entries[i].sigma >= spec.entries[i - 1].sigma);
        CHECK(spec.entries[i].sigma > 0.0);
    }
    CHECK(spec.boundaryLength == doctest::Approx(4.0 * M_PI));
    CHECK(normalizedEigenvalue(spec, 0) == 0.0);
    CHECK(normalizedEigenvalue(spec, 1) ==
          doctest::Approx(std::tanh(1.0) * 4.0 * M_PI).epsilon(1e-12));
}

TEST_CASE("moebius spectrum is the parity-filtered sub-multiset") {
    CylinderGeometry geo{std::log(2.0), 1.0, 1.0};
    auto full = cylinderSpectrum(geo, 40, 64);
    auto quot = moebiusSpectrum(geo, 16, 64);
    for (const auto& e : quot.entries) {
        CHECK(e.parity == e.mode % 2);
        bool found = false;
        for (const auto& f : full.entries)
            if (f.mode == e.mode && f.parity == e.parity &&
                std::abs(f.sigma - e.sigma) < 1e-14)
                found = true;
        CHECK(found);
    }
    // k = 0: only sigma = 0 survives; k = 1: coth, not tanh.
    CHECK(quot.entries[0].sigma == 0.0);
    bool sawMode1 = false;
    for (const auto& e : quot.entries)
        if (e.mode == 1) {
            sawMode1 = true;
            CHECK(e.sigma == doctest::Approx(1.0 / std::tanh(geo.L)).epsilon(1e-12));
            CHECK(e.multiplicity == 2);
        }
    CHECK(sawMode1);
}

TEST_CASE("weight and truncation errors") {
    CylinderGeometry uneven{1.0, 1.0, 2.0};
    CHECK_THROWS_AS(moebiusSpectrum(uneven, 4), WeightMismatchError);
    CylinderGeometry geo{1.0, 1.0, 1.0};
    CHECK_THROWS_AS(cylinderSpectrum(geo, 50, 3), TruncationError);
    CHECK_THROWS_AS(cylinderSpectrum(geo, 0), IndexError);
}

TEST_CASE("weighted boundary scales the spectrum") {
    CylinderGeometry geo{1.0, 2.0, 2.0};
    auto spec = cylinderSpectrum(geo, 6);
    CylinderGeometry unit{1.0, 1.0, 1.0};
    auto ref = cylinderSpectrum(unit, 6);
    for (size_t i = 0; i < spec.entries.size() && i < ref.entries.size(); ++i)
        CHECK(spec.entries[i].sigma ==
              doctest::Approx(ref.entries[i].sigma / 2.0).epsilon(1e-12));
}

TEST_CASE("disk special case: normalized first eigenvalue is 2 pi") {
    auto disk = diskSpectrum(5);
    CHECK(disk.entries[0].sigma == 0.0);
    CHECK(normalizedEigenvalue(disk, 1) == doctest::Approx(2.0 * M_PI).epsilon(1e-14));
    CHECK(normalizedEigenvalue(disk, 2) == doctest::Approx(2.0 * M_PI).epsilon(1e-14));
    CHECK(multiplicityReport(disk, 1) == 2);
}

TEST_CASE("multiplicity report counts cos/sin pairs") {
    CylinderGeometry geo{1.0, 1.0, 1.0};
    auto spec = cylinderSpectrum(geo, 12);
    CHECK(multiplicityReport(spec, 0) == 1);
    CHECK(multiplicityReport(spec, 1) == 2);
}

TEST_CASE("finite-difference oracle reproduces the lowest eigenvalues") {
    CylinderGeometry geo{std::log(2.0), 1.0, 1.0};
    auto fd = testsupport::fdSteklovEigenvalues(geo, 120, 120, 4);
    auto spec = cylinderSpectrum(geo, 4);
    std::vector<double> exact;
    for (const auto& e : spec.entries)
        for (int m = 0; m < e.multiplicity && exact.size() < 4; ++m)
            exact.push_back(e.sigma);
    REQUIRE(fd.size() >= 3);
    CHECK(std::abs(fd[0] - exact[0]) < 1e-2); // sigma0 = 0
    for (int i = 1; i < 3; ++i)
        CHECK(std::abs(fd[i] - exact[i]) / exact[i] < 1e-2);
}
