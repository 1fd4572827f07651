#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "wlab/errors.hpp"

namespace wlab {

// Flat cylinder [-L, L] x S^1 with boundary weights rho1, rho2 on the two
// circles (densities for the weighted Steklov problem).
struct CylinderGeometry {
    double L = 1.0;
    double rho1 = 1.0;
    double rho2 = 1.0;
};

struct SteklovEigenvalue {
    double sigma = 0.0;
    int mode = 0;        // angular frequency k
    int parity = 0;      // 0 even in s, 1 odd in s (rho1 == rho2 only)
    int multiplicity = 1;
    double normalized = 0.0; // sigma times boundary length
};

struct SteklovSpectrum {
    CylinderGeometry geometry;
    double boundaryLength = 0.0;
    std::vector<SteklovEigenvalue> entries; // sorted by (sigma, mode, parity)
};

// 2x2 Dirichlet-to-Neumann block on angular mode k, symmetrized by the
// diag(rho)^{-1/2} similarity so eigenvalues come from a symmetric matrix.
Eigen::Matrix2d dtnModeMatrix(const CylinderGeometry& geo, int k);

// First `count` weighted Steklov eigenvalues of the cylinder; modes are
// scanned up to maxMode and k tanh(kL) monotonicity certifies completeness.
SteklovSpectrum cylinderSpectrum(const CylinderGeometry& geo, int count,
                                 int maxMode = 256);

// Spectrum of the Moebius quotient: the s-parity of an eigenfunction must
// match the parity of its angular mode. Needs rho1 == rho2.
SteklovSpectrum moebiusSpectrum(const CylinderGeometry& geo, int count,
                                int maxMode = 256);

// Unit disk comparison spectrum: 0, 1, 1, 2, 2, ...
SteklovSpectrum diskSpectrum(int count);

// sigma_index times boundaryLength; a negative boundaryLength means "use the
// spectrum's own". Index counts eigenvalues with multiplicity.
double normalizedEigenvalue(const SteklovSpectrum& spec, int index,
                            double boundaryLength = -1.0);

// Number of eigenvalues (with multiplicity) within tol of sigma_index.
int multiplicityReport(const SteklovSpectrum& spec, int index, double tol = 1e-9);

std::string multiplicitySummary(const SteklovSpectrum& spec, double tol = 1e-9);

} // namespace wlab
