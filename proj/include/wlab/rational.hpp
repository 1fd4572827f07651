#pragma once

// Complex rational functions: quotient of polynomials with evaluation,
// symbolic derivative and simplification. Values carry an exact
// Gaussian-rational representation whenever it is available (all the catalog
// surfaces), next to the double-precision one used for numerics. Exactness
// propagates through arithmetic as long as both operands are exact.

#include <optional>
#include <string>
#include <utility>

#include "wlab/complex_poly.hpp"
#include "wlab/roots.hpp"

namespace wlab {

// Pole tolerance: 1e-12 times the local coefficient scale of the denominator.
inline constexpr double kPoleTol = 1e-12;

class RationalFunction {
public:
    RationalFunction() : num_(), den_(PolyC::constant(Cd(1.0))) {
        exact_ = std::make_pair(PolyQ(), PolyQ::constant(GaussRat(1)));
    }

    static RationalFunction fromExact(PolyQ num, PolyQ den);
    static RationalFunction fromApprox(PolyC num, PolyC den);
    static RationalFunction constant(const GaussRat& v) {
        return fromExact(PolyQ::constant(v), PolyQ::constant(GaussRat(1)));
    }
    static RationalFunction constant(const Cd& v) {
        return fromApprox(PolyC::constant(v), PolyC::constant(Cd(1.0)));
    }
    static RationalFunction identity() {
        return fromExact(PolyQ::identity(), PolyQ::constant(GaussRat(1)));
    }

    bool isExact() const { return exact_.has_value(); }
    bool isZero() const { return num_.isZero(); }
    bool isConstant() const { return num_.degree() <= 0 && den_.degree() == 0; }
    Cd constantValue() const;

    const PolyC& num() const { return num_; }
    const PolyC& den() const { return den_; }
    const std::optional<std::pair<PolyQ, PolyQ>>& exact() const { return exact_; }

    // Round-to-nearest evaluation num(z)/den(z); PoleError when |den(z)| is
    // below the pole tolerance.
    Cd operator()(const Cd& z) const;

    RationalFunction derivative() const;
    RationalFunction simplified() const;

    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-() const;
    RationalFunction operator-(const RationalFunction& o) const { return *this + (-o); }
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction reciprocal() const;

    // r(-1/z), exact when this is.
    RationalFunction composeNegInv() const;
    // Coefficient-wise conjugation, i.e. z -> conj(r(conj(z))).
    RationalFunction conjugateCoeffs() const;

    // Exact identity test by cross multiplication; nullopt when either side
    // has no exact representation.
    static std::optional<bool> identicallyEqualExact(const RationalFunction& a,
                                                     const RationalFunction& b);

    std::string str() const;

private:
    std::optional<std::pair<PolyQ, PolyQ>> exact_;
    PolyC num_, den_;

    void refreshApprox();
};

} // namespace wlab
