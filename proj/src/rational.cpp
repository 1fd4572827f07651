#include "wlab/rational.hpp"

#include <cmath>
#include <sstream>

namespace wlab {

namespace {

double denScaleAt(const PolyC& d, const Cd& z) {
    double s = 0.0, zp = 1.0, az = std::abs(z);
    for (const auto& a : d.c) {
        s += std::abs(a) * zp;
        zp *= az;
    }
    return s > 0 ? s : 1.0;
}

// Cancel common roots of num and den (floating path). Leaves the input
// untouched when no cancellation is found.
void cancelCommonRoots(PolyC& num, PolyC& den) {
    if (num.isZero() || num.degree() < 1 || den.degree() < 1) {
        if (num.isZero()) den = PolyC::constant(Cd(1.0));
        return;
    }
    auto rn = polyRoots(num, 1e-8);
    auto rd = polyRoots(den, 1e-8);

    bool cancelled = false;
    for (auto& [zr, mr] : rd) {
        for (auto& [zn, mn] : rn) {
            if (mn > 0 && mr > 0 && std::abs(zn - zr) < kClusterTol * (1.0 + std::abs(zr))) {
                int k = std::min(mn, mr);
                mn -= k;
                mr -= k;
                cancelled = true;
            }
        }
    }
    if (!cancelled) return;

    auto rebuild = [](const std::vector<std::pair<Cd, int>>& roots, Cd lead) {
        PolyC p = PolyC::constant(lead);
        for (const auto& [r, m] : roots)
            for (int k = 0; k < m; ++k)
                p = p * PolyC(std::vector<Cd>{-r, Cd(1.0)});
        return p;
    };
    num = rebuild(rn, num.leading());
    den = rebuild(rd, den.leading());
    // Normalize denominator to monic form.
    Cd dl = den.leading();
    num = num.scaled(1.0 / dl);
    den = den.scaled(1.0 / dl);
}

} // namespace

RationalFunction RationalFunction::fromExact(PolyQ num, PolyQ den) {
    if (den.isZero()) throw Error("RationalFunction: zero denominator");
    RationalFunction r;
    r.exact_ = std::make_pair(std::move(num), std::move(den));
    r.refreshApprox();
    return r;
}

RationalFunction RationalFunction::fromApprox(PolyC num, PolyC den) {
    if (den.isZero()) throw Error("RationalFunction: zero denominator");
    RationalFunction r;
    r.exact_.reset();
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    return r;
}

void RationalFunction::refreshApprox() {
    num_ = toApprox(exact_->first);
    den_ = toApprox(exact_->second);
}

Cd RationalFunction::constantValue() const {
    if (!isConstant()) throw Error("constantValue: not a constant");
    if (num_.isZero()) return Cd(0.0);
    return num_.c[0] / den_.c[0];
}

Cd RationalFunction::operator()(const Cd& z) const {
    Cd d = den_.eval(z);
    if (std::abs(d) <= kPoleTol * denScaleAt(den_, z))
        throw PoleError("evaluation at a pole");
    return num_.eval(z) / d;
}

RationalFunction RationalFunction::derivative() const {
    if (exact_) {
        const auto& [n, d] = *exact_;
        PolyQ nn = n.derivative() * d - n * d.derivative();
        PolyQ dd = d * d;
        return fromExact(std::move(nn), std::move(dd)).simplified();
    }
    PolyC nn = num_.derivative() * den_ - num_ * den_.derivative();
    PolyC dd = den_ * den_;
    return fromApprox(std::move(nn), std::move(dd)).simplified();
}

RationalFunction RationalFunction::simplified() const {
    if (exact_) {
        const auto& [n, d] = *exact_;
        if (n.isZero()) return RationalFunction();
        PolyQ g = polyGcd(n, d);
        PolyQ nn = polyDivMod(n, g).first;
        PolyQ dd = polyDivMod(d, g).first;
        GaussRat inv = GaussRat(1) / dd.leading();
        return fromExact(nn.scaled(inv), dd.scaled(inv));
    }
    PolyC n = num_, d = den_;
    cancelCommonRoots(n, d);
    return fromApprox(std::move(n), std::move(d));
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    if (exact_ && o.exact_) {
        const auto& [an, ad] = *exact_;
        const auto& [bn, bd] = *o.exact_;
        return fromExact(an * bd + bn * ad, ad * bd);
    }
    return fromApprox(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-() const {
    if (exact_) return fromExact(-exact_->first, exact_->second);
    return fromApprox(-num_, den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    if (exact_ && o.exact_) {
        const auto& [an, ad] = *exact_;
        const auto& [bn, bd] = *o.exact_;
        return fromExact(an * bn, ad * bd);
    }
    return fromApprox(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::reciprocal() const {
    if (isZero()) throw Error("reciprocal of the zero function");
    if (exact_) return fromExact(exact_->second, exact_->first);
    return fromApprox(den_, num_);
}

RationalFunction RationalFunction::composeNegInv() const {
    if (exact_) {
        const auto& [n, d] = *exact_;
        int dn = std::max(n.degree(), 0), dd = d.degree();
        int m = std::max(dn, dd);
        PolyQ nn = n.reversedNegInv() * PolyQ::monomial(GaussRat(1), m - dn);
        PolyQ ddp = d.reversedNegInv() * PolyQ::monomial(GaussRat(1), m - dd);
        return fromExact(std::move(nn), std::move(ddp));
    }
    int dn = std::max(num_.degree(), 0), dd = den_.degree();
    int m = std::max(dn, dd);
    PolyC nn = num_.reversedNegInv() * PolyC::monomial(Cd(1.0), m - dn);
    PolyC ddp = den_.reversedNegInv() * PolyC::monomial(Cd(1.0), m - dd);
    return fromApprox(std::move(nn), std::move(ddp));
}

RationalFunction RationalFunction::conjugateCoeffs() const {
    if (exact_) return fromExact(exact_->first.conjugateCoeffs(), exact_->second.conjugateCoeffs());
    return fromApprox(num_.conjugateCoeffs(), den_.conjugateCoeffs());
}

std::optional<bool> RationalFunction::identicallyEqualExact(const RationalFunction& a,
                                                            const RationalFunction& b) {
    if (!a.exact_ || !b.exact_) return std::nullopt;
    const auto& [an, ad] = *a.exact_;
    const auto& [bn, bd] = *b.exact_;
    return (an * bd) == (bn * ad);
}

std::string RationalFunction::str() const {
    auto polyStr = [](const PolyC& p) {
        if (p.isZero()) return std::string("0");
        std::ostringstream os;
        bool first = true;
        for (int k = p.degree(); k >= 0; --k) {
            Cd c = p.coeff(k);
            if (c == Cd(0.0)) continue;
            if (!first) os << " + ";
            first = false;
            if (c.imag() == 0.0)
                os << c.real();
            else if (c.real() == 0.0)
                os << c.imag() << "i";
            else
                os << "(" << c.real() << (c.imag() >= 0 ? "+" : "") << c.imag() << "i)";
            if (k >= 1) os << "*z";
            if (k >= 2) os << "^" << k;
        }
        return os.str();
    };
    std::string n = polyStr(num_);
    if (den_.degree() == 0 && den_.coeff(0) == Cd(1.0)) return n;
    return "(" + n + ") / (" + polyStr(den_) + ")";
}

} // namespace wlab
