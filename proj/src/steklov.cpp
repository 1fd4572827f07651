#include "wlab/steklov.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace wlab {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

void validate(const CylinderGeometry& geo) {
    if (!(geo.L > 0.0)) throw ParamRangeError("cylinder needs L > 0");
    if (!(geo.rho1 > 0.0) || !(geo.rho2 > 0.0))
        throw ParamRangeError("boundary weights must be positive");
}

// Unweighted DtN block on mode k, acting on (u(+L), u(-L)).
Eigen::Matrix2d dtnUnweighted(const CylinderGeometry& geo, int k) {
    Eigen::Matrix2d d;
    if (k == 0) {
        double a = 1.0 / (2.0 * geo.L);
        d << a, -a, -a, a;
        return d;
    }
    // For u = (a cosh ks + b sinh ks) e^{ik theta}:
    // du/dn(+L) = k (coth(2kL) u(+L) - csch(2kL) u(-L)) and symmetrically.
    double x = 2.0 * k * geo.L;
    double coth = 1.0 / std::tanh(x);
    double csch = 1.0 / std::sinh(x);
    d << k * coth, -k * csch, -k * csch, k * coth;
    return d;
}

struct RawEntry {
    double sigma;
    int mode;
    int parity;
    int multiplicity;
};

std::vector<RawEntry> modeEigenvalues(const CylinderGeometry& geo, int k) {
    Eigen::Matrix2d m = dtnModeMatrix(geo, k);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(m);
    std::vector<RawEntry> out;
    int mult = k == 0 ? 1 : 2;
    for (int j = 0; j < 2; ++j) {
        Eigen::Vector2d v = es.eigenvectors().col(j);
        // Even in s means equal boundary traces (after unweighting, but the
        // similarity is diagonal and positive, so signs are unchanged).
        int parity = v(0) * v(1) >= 0.0 ? 0 : 1;
        out.push_back({es.eigenvalues()(j), k, parity, mult});
    }
    return out;
}

SteklovSpectrum assemble(const CylinderGeometry& geo, std::vector<RawEntry> raw,
                         int count, int maxMode, double boundaryLength) {
    std::sort(raw.begin(), raw.end(), [](const RawEntry& a, const RawEntry& b) {
        if (a.sigma != b.sigma) return a.sigma < b.sigma;
        if (a.mode != b.mode) return a.mode < b.mode;
        return a.parity < b.parity;
    });

    SteklovSpectrum spec;
    spec.geometry = geo;
    spec.boundaryLength = boundaryLength;
    int have = 0;
    double cutoff = 0.0;
    for (const auto& e : raw) {
        if (have >= count) break;
        spec.entries.push_back({e.sigma, e.mode, e.parity, e.multiplicity,
                                e.sigma * boundaryLength});
        have += e.multiplicity;
        cutoff = e.sigma;
    }
    if (have < count)
        throw TruncationError("maxMode too small for requested eigenvalue count");

    // Any mode k > maxMode has all eigenvalues at least
    // k tanh(kL) / max(rho), which is increasing in k.
    double rhoMax = std::max(geo.rho1, geo.rho2);
    int k1 = maxMode + 1;
    double nextMin = k1 * std::tanh(k1 * geo.L) / rhoMax;
    if (nextMin <= cutoff)
        throw TruncationError("maxMode too small to certify spectrum completeness");
    return spec;
}

} // namespace

Eigen::Matrix2d dtnModeMatrix(const CylinderGeometry& geo, int k) {
    validate(geo);
    if (k < 0) throw IndexError("mode index must be nonnegative");
    Eigen::Matrix2d d = dtnUnweighted(geo, k);
    Eigen::Vector2d w(1.0 / std::sqrt(geo.rho2), 1.0 / std::sqrt(geo.rho1));
    return w.asDiagonal() * d * w.asDiagonal();
}

SteklovSpectrum cylinderSpectrum(const CylinderGeometry& geo, int count, int maxMode) {
    validate(geo);
    if (count <= 0) throw IndexError("eigenvalue count must be positive");
    std::vector<RawEntry> raw;
    for (int k = 0; k <= maxMode; ++k)
        for (const auto& e : modeEigenvalues(geo, k)) raw.push_back(e);
    double length = kTwoPi * (geo.rho1 + geo.rho2);
    return assemble(geo, std::move(raw), count, maxMode, length);
}

SteklovSpectrum moebiusSpectrum(const CylinderGeometry& geo, int count, int maxMode) {
    validate(geo);
    if (geo.rho1 != geo.rho2)
        throw WeightMismatchError("Moebius quotient needs equal boundary weights");
    if (count <= 0) throw IndexError("eigenvalue count must be positive");

    // The deck map (s, theta) -> (-s, theta + pi) multiplies the angular
    // factor by (-1)^k, so invariant eigenfunctions have s-parity equal to
    // the parity of k.
    std::vector<RawEntry> raw;
    for (int k = 0; k <= maxMode; ++k)
        for (const auto& e : modeEigenvalues(geo, k))
            if (e.parity == k % 2) raw.push_back(e);
    // The two boundary circles descend to a single circle of half the total
    // length.
    double length = kTwoPi * geo.rho1;
    return assemble(geo, std::move(raw), count, maxMode, length);
}

SteklovSpectrum diskSpectrum(int count) {
    if (count <= 0) throw IndexError("eigenvalue count must be positive");
    SteklovSpectrum spec;
    spec.geometry = {};
    spec.boundaryLength = kTwoPi;
    int have = 0;
    for (int k = 0; have < count; ++k) {
        int mult = k == 0 ? 1 : 2;
        spec.entries.push_back(
            {static_cast<double>(k), k, 0, mult, k * spec.boundaryLength});
        have += mult;
    }
    return spec;
}

namespace {

double sigmaAt(const SteklovSpectrum& spec, int index) {
    if (index < 0) throw IndexError("eigenvalue index must be nonnegative");
    int pos = 0;
    for (const auto& e : spec.entries) {
        pos += e.multiplicity;
        if (index < pos) return e.sigma;
    }
    throw IndexError("eigenvalue index beyond the computed spectrum");
}

} // namespace

double normalizedEigenvalue(const SteklovSpectrum& spec, int index,
                            double boundaryLength) {
    double len = boundaryLength < 0.0 ? spec.boundaryLength : boundaryLength;
    return sigmaAt(spec, index) * len;
}

int multiplicityReport(const SteklovSpectrum& spec, int index, double tol) {
    double sigma = sigmaAt(spec, index);
    int n = 0;
    for (const auto& e : spec.entries)
        if (std::abs(e.sigma - sigma) <= tol * std::max(1.0, std::abs(sigma)))
            n += e.multiplicity;
    return n;
}

std::string multiplicitySummary(const SteklovSpectrum& spec, double tol) {
    std::ostringstream os;
    size_t i = 0;
    while (i < spec.entries.size()) {
        double sigma = spec.entries[i].sigma;
        int mult = 0;
        std::vector<int> modes;
        size_t j = i;
        while (j < spec.entries.size() &&
               std::abs(spec.entries[j].sigma - sigma) <= tol * std::max(1.0, sigma)) {
            mult += spec.entries[j].multiplicity;
            modes.push_back(spec.entries[j].mode);
            ++j;
        }
        os << "sigma=" << sigma << " multiplicity=" << mult << " modes=";
        for (size_t m = 0; m < modes.size(); ++m) os << (m ? "," : "") << modes[m];
        os << "\n";
        i = j;
    }
    return os.str();
}

} // namespace wlab
