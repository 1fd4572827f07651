#include "wlab/roots.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

namespace wlab {

namespace {

double coeffScaleAt(const PolyC& p, const Cd& z) {
    double s = 0.0, zp = 1.0, az = std::abs(z);
    for (const auto& a : p.c) {
        s += std::abs(a) * zp;
        zp *= az;
    }
    return s > 0 ? s : 1.0;
}

bool aberth(const std::vector<Cd>& a, std::vector<Cd>& z) {
    const int n = static_cast<int>(a.size()) - 1;
    PolyC p{std::vector<Cd>(a)};
    PolyC dp = p.derivative();

    for (int iter = 0; iter < 500; ++iter) {
        bool done = true;
        for (int i = 0; i < n; ++i) {
            Cd pz = p.eval(z[i]);
            Cd dpz = dp.eval(z[i]);
            Cd w;
            if (dpz == Cd(0.0)) {
                w = Cd(1e-8, 1e-8);
            } else {
                w = pz / dpz;
            }
            Cd s(0.0);
            for (int j = 0; j < n; ++j)
                if (j != i) {
                    Cd d = z[i] - z[j];
                    if (std::abs(d) < 1e-300) d = Cd(1e-300, 0);
                    s += 1.0 / d;
                }
            Cd denom = 1.0 - w * s;
            Cd step = (std::abs(denom) < 1e-300) ? w : w / denom;
            z[i] -= step;
            if (std::abs(step) > 1e-14 * (1.0 + std::abs(z[i]))) done = false;
            if (!std::isfinite(z[i].real()) || !std::isfinite(z[i].imag())) return false;
        }
        if (done) return true;
    }
    // Multiple roots converge slowly but the cluster centroid is accurate;
    // accept whatever the residual check at the end says.
    return true;
}

std::vector<Cd> companionRoots(const std::vector<Cd>& a) {
    const int n = static_cast<int>(a.size()) - 1;
    Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 1; i < n; ++i) C(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) C(i, n - 1) = -a[i] / a[n];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(C, false);
    std::vector<Cd> r(n);
    for (int i = 0; i < n; ++i) r[i] = es.eigenvalues()(i);
    return r;
}

} // namespace

std::vector<std::pair<Cd, int>> polyRoots(const PolyC& p, double tol) {
    if (p.isZero()) throw Error("polyRoots: zero polynomial");

    // Strip exact roots at the origin.
    std::vector<Cd> a = p.c;
    double scale0 = 0.0;
    for (const auto& ck : a) scale0 = std::max(scale0, std::abs(ck));
    int zeroMult = 0;
    while (a.size() > 1 && std::abs(a.front()) <= 1e-14 * scale0) {
        a.erase(a.begin());
        ++zeroMult;
    }

    std::vector<std::pair<Cd, int>> out;
    if (zeroMult > 0) out.emplace_back(Cd(0.0), zeroMult);

    const int n = static_cast<int>(a.size()) - 1;
    if (n >= 1) {
        // Cauchy-style initial radius.
        double r0 = 0.0;
        for (int k = 0; k < n; ++k) r0 = std::max(r0, std::abs(a[k] / a[n]));
        r0 = 1.0 + r0;
        std::vector<Cd> z(n);
        for (int i = 0; i < n; ++i) {
            double ang = 2.0 * M_PI * i / n + 0.4;
            z[i] = std::polar(std::min(r0, std::pow(r0, 1.0 / n) + 0.5), ang);
        }

        PolyC q{std::vector<Cd>(a)};
        bool ok = aberth(a, z);
        auto residualOk = [&](const std::vector<Cd>& zz) {
            for (const auto& r : zz)
                if (std::abs(q.eval(r)) > tol * coeffScaleAt(q, r)) return false;
            return true;
        };
        if (!ok || !residualOk(z)) z = companionRoots(a);

        // Cluster nearby iterates into multiple roots.
        std::vector<bool> used(n, false);
        std::vector<std::pair<Cd, int>> clusters;
        for (int i = 0; i < n; ++i) {
            if (used[i]) continue;
            Cd sum = z[i];
            int m = 1;
            used[i] = true;
            for (int j = i + 1; j < n; ++j) {
                if (!used[j] && std::abs(z[j] - z[i]) < kClusterTol * (1.0 + std::abs(z[i]))) {
                    sum += z[j];
                    ++m;
                    used[j] = true;
                }
            }
            clusters.emplace_back(sum / static_cast<double>(m), m);
        }
        for (auto& [r, m] : clusters) {
            if (std::abs(q.eval(r)) > tol * coeffScaleAt(q, r))
                throw ConvergenceError("polyRoots: residual above tolerance");
            out.emplace_back(r, m);
        }
    }

    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        if (x.first.real() != y.first.real()) return x.first.real() < y.first.real();
        return x.first.imag() < y.first.imag();
    });
    return out;
}

} // namespace wlab
