#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "wlab/errors.hpp"

namespace wlab {

using Cd = std::complex<double>;

// Conformal map of the unit disk onto a starlike region given by its polar
// boundary radius rho(theta), normalized by F(0) = 0, F'(0) > 0. Boundary
// correspondence by Theodorsen iteration on n boundary points; the map itself
// is the truncated Taylor series recovered from the boundary values.
class RiemannMap {
public:
    RiemannMap(std::function<double(double)> rho, int boundaryPoints = 256,
               int seriesTerms = 96);

    // Disk -> region.
    Cd forward(const Cd& zeta) const;
    Cd forwardDeriv(const Cd& zeta) const;

    // Region -> disk, by Newton iteration on the series.
    Cd inverse(const Cd& w) const;
    // Derivative of the inverse at w.
    Cd inverseDeriv(const Cd& w) const;

    const std::vector<Cd>& coefficients() const { return coef_; }
    double boundaryFitResidual() const { return fitResidual_; }

private:
    std::vector<Cd> coef_; // coef_[k] multiplies zeta^k, coef_[0] ~ 0
    double fitResidual_ = 0.0;
};

} // namespace wlab
