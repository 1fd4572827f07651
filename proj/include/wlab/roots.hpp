#pragma once

#include <utility>
#include <vector>

#include "wlab/complex_poly.hpp"

namespace wlab {

// Roots of p with multiplicities, counted so that multiplicities sum to
// degree(p). Aberth-Ehrlich simultaneous iteration with a companion-matrix
// fallback; clusters within kClusterTol are merged into one multiple root.
//
// Each returned root r satisfies |p(r)| <= tol * sum_k |a_k| |r|^k.
// Throws ConvergenceError if that bound cannot be met.
std::vector<std::pair<Cd, int>> polyRoots(const PolyC& p, double tol = 1e-10);

inline constexpr double kClusterTol = 1e-6;

} // namespace wlab
