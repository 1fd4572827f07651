#pragma once

#include <Eigen/Dense>
#include <functional>

#include "wlab/path.hpp"

namespace wlab {

using Vec3 = Eigen::Vector3d;
using CVec3 = Eigen::Vector3cd;

// Adaptive Gauss-Kronrod (G7, K15) integration of a complex 3-vector valued
// integrand along a contour, absolute tolerance per segment, bounded
// subdivision budget.
struct QuadratureOptions {
    double absTol = 1e-12;
    int maxSubdivisions = 10000;
};

CVec3 integrateAlong(const std::function<CVec3(const Cd&)>& integrand,
                     const PathInPlane& path,
                     const QuadratureOptions& opts = {});

// Scalar convenience overload.
Cd integrateScalar(const std::function<Cd(const Cd&)>& integrand,
                   const PathInPlane& path,
                   const QuadratureOptions& opts = {});

} // namespace wlab
