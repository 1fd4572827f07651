#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "wlab/surface.hpp"

namespace wlab {

struct ExpectedProperties {
    std::vector<BranchPoint> branchPoints;
    std::vector<Cd> umbilicPoints;
    bool deckInvariant = false;
    bool freeBoundary = false;
    bool totallyGeodesic = false;
};

struct CatalogEntry {
    std::string name;
    std::shared_ptr<SurfaceChart> surface;
    ExpectedProperties expected;
    std::map<std::string, double> parameters;
};

// Built-in surfaces: henneberg, meeks, catenoid (params c, R),
// critical_catenoid, equatorial_disk, cerezo.
CatalogEntry catalogGet(const std::string& name,
                        const std::map<std::string, double>& params = {});
std::vector<std::string> catalogList();

// Boundary parameter of the critical catenoid: the surface with boundary at
// |z| = e^{s0} meets the unit sphere orthogonally. Found by bisection on the
// conormal-orthogonality residual evaluated from the immersion itself.
double criticalCatenoidS0(double bisectTol = 1e-12);

} // namespace wlab
