#include "wlab/riemann_map.hpp"

#include <cmath>
#include <functional>

namespace wlab {

namespace {

// Discrete conjugation operator on the circle: u = sum a_k cos + b_k sin
// maps to sum a_k sin - b_k cos (zero mean). Direct DFT, n is small.
std::vector<double> conjugate(const std::vector<double>& u) {
    const int n = static_cast<int>(u.size());
    std::vector<double> a(n / 2 + 1, 0.0), b(n / 2 + 1, 0.0);
    for (int k = 1; k <= n / 2; ++k) {
        for (int j = 0; j < n; ++j) {
            double ang = 2.0 * M_PI * k * j / n;
            a[k] += u[j] * std::cos(ang);
            b[k] += u[j] * std::sin(ang);
        }
        a[k] *= 2.0 / n;
        b[k] *= 2.0 / n;
    }
    std::vector<double> v(n, 0.0);
    for (int j = 0; j < n; ++j) {
        double s = 0.0;
        for (int k = 1; k <= n / 2; ++k) {
            double ang = 2.0 * M_PI * k * j / n;
            s += a[k] * std::sin(ang) - b[k] * std::cos(ang);
        }
        v[j] = s;
    }
    return v;
}

} // namespace

RiemannMap::RiemannMap(std::function<double(double)> rho, int n, int terms) {
    // Theodorsen iteration for the boundary correspondence theta(phi).
    std::vector<double> phi(n), theta(n);
    for (int j = 0; j < n; ++j) phi[j] = theta[j] = 2.0 * M_PI * j / n;

    for (int iter = 0; iter < 200; ++iter) {
        std::vector<double> logr(n);
        for (int j = 0; j < n; ++j) logr[j] = std::log(rho(theta[j]));
        std::vector<double> conj = conjugate(logr);
        double delta = 0.0;
        for (int j = 0; j < n; ++j) {
            double next = phi[j] + conj[j];
            delta = std::max(delta, std::abs(next - theta[j]));
            theta[j] = next;
        }
        if (delta < 1e-14) break;
    }

    // Boundary values of F and their Taylor coefficients.
    std::vector<Cd> bv(n);
    for (int j = 0; j < n; ++j) bv[j] = std::polar(rho(theta[j]), theta[j]);
    terms = std::min(terms, n / 2);
    coef_.assign(terms + 1, Cd(0.0));
    for (int k = 0; k <= terms; ++k) {
        Cd s(0.0);
        for (int j = 0; j < n; ++j)
            s += bv[j] * std::polar(1.0, -2.0 * M_PI * k * j / n);
        coef_[k] = s / static_cast<double>(n);
    }

    for (int j = 0; j < n; ++j)
        fitResidual_ = std::max(fitResidual_,
                                std::abs(forward(std::polar(1.0, phi[j])) - bv[j]));
}

Cd RiemannMap::forward(const Cd& zeta) const {
    Cd acc(0.0);
    for (auto it = coef_.rbegin(); it != coef_.rend(); ++it) acc = acc * zeta + *it;
    return acc;
}

Cd RiemannMap::forwardDeriv(const Cd& zeta) const {
    Cd acc(0.0);
    for (int k = static_cast<int>(coef_.size()) - 1; k >= 1; --k)
        acc = acc * zeta + static_cast<double>(k) * coef_[k];
    return acc;
}

Cd RiemannMap::inverse(const Cd& w) const {
    Cd zeta = w / coef_[1];
    if (std::abs(zeta) > 1.0) zeta /= std::abs(zeta);
    for (int iter = 0; iter < 100; ++iter) {
        Cd r = forward(zeta) - w;
        if (std::abs(r) < 1e-14) return zeta;
        Cd d = forwardDeriv(zeta);
        if (std::abs(d) < 1e-300) throw ConvergenceError("RiemannMap::inverse: F' = 0");
        Cd next = zeta - r / d;
        if (std::abs(next) > 1.0 + 1e-9) next /= std::abs(next);
        zeta = next;
    }
    if (std::abs(forward(zeta) - w) > 1e-10)
        throw ConvergenceError("RiemannMap::inverse: Newton failed");
    return zeta;
}

Cd RiemannMap::inverseDeriv(const Cd& w) const {
    Cd zeta = inverse(w);
    return 1.0 / forwardDeriv(zeta);
}

} // namespace wlab
