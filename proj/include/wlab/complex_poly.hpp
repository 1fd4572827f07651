#pragma once

// Polynomials over either double-precision complex numbers or exact Gaussian
// rationals. The exact instantiation backs the identity checks for the
// catalog surfaces, whose data has small integer coefficients.

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <vector>

#include "wlab/errors.hpp"

namespace wlab {

using Cd = std::complex<double>;
using BigRat = boost::multiprecision::cpp_rational;

// Exact complex number with rational real and imaginary parts.
struct GaussRat {
    BigRat re{0};
    BigRat im{0};

    GaussRat() = default;
    GaussRat(long r) : re(r) {}
    GaussRat(BigRat r) : re(std::move(r)) {}
    GaussRat(BigRat r, BigRat i) : re(std::move(r)), im(std::move(i)) {}

    static GaussRat i() { return GaussRat(BigRat(0), BigRat(1)); }

    bool isZero() const { return re == 0 && im == 0; }

    GaussRat operator-() const { return {-re, -im}; }
    GaussRat operator+(const GaussRat& o) const { return {re + o.re, im + o.im}; }
    GaussRat operator-(const GaussRat& o) const { return {re - o.re, im - o.im}; }
    GaussRat operator*(const GaussRat& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussRat operator/(const GaussRat& o) const {
        BigRat n = o.re * o.re + o.im * o.im;
        if (n == 0) throw Error("GaussRat: division by zero");
        return {(re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n};
    }
    bool operator==(const GaussRat& o) const { return re == o.re && im == o.im; }

    GaussRat conjugate() const { return {re, -im}; }

    Cd toComplex() const {
        return {static_cast<double>(re), static_cast<double>(im)};
    }
};

inline bool scalarIsZero(const Cd& c) { return c == Cd(0.0, 0.0); }
inline bool scalarIsZero(const GaussRat& c) { return c.isZero(); }
inline Cd scalarConj(const Cd& c) { return std::conj(c); }
inline GaussRat scalarConj(const GaussRat& c) { return c.conjugate(); }

// Dense polynomial, constant term first. Trailing exact zeros are trimmed so
// that degree() equals the index of the last nonzero coefficient.
template <class K>
struct Poly {
    std::vector<K> c;

    Poly() = default;
    explicit Poly(std::vector<K> coeffs) : c(std::move(coeffs)) { trim(); }
    static Poly constant(K v) { return Poly(std::vector<K>{std::move(v)}); }
    static Poly identity() { return Poly(std::vector<K>{K(0), K(1)}); }
    // c * z^n
    static Poly monomial(K v, int n) {
        std::vector<K> cs(n + 1, K(0));
        cs[n] = std::move(v);
        return Poly(std::move(cs));
    }

    void trim() {
        while (!c.empty() && scalarIsZero(c.back())) c.pop_back();
    }
    bool isZero() const { return c.empty(); }
    int degree() const { return c.empty() ? -1 : static_cast<int>(c.size()) - 1; }
    K leading() const { return c.empty() ? K(0) : c.back(); }
    K coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c.size())) ? c[k] : K(0);
    }

    K eval(const K& z) const {
        K acc(0);
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
        return acc;
    }

    Poly operator+(const Poly& o) const {
        std::vector<K> r(std::max(c.size(), o.c.size()), K(0));
        for (size_t k = 0; k < c.size(); ++k) r[k] = r[k] + c[k];
        for (size_t k = 0; k < o.c.size(); ++k) r[k] = r[k] + o.c[k];
        return Poly(std::move(r));
    }
    Poly operator-() const {
        std::vector<K> r(c.size());
        for (size_t k = 0; k < c.size(); ++k) r[k] = -c[k];
        return Poly(std::move(r));
    }
    Poly operator-(const Poly& o) const { return *this + (-o); }
    Poly operator*(const Poly& o) const {
        if (isZero() || o.isZero()) return Poly();
        std::vector<K> r(c.size() + o.c.size() - 1, K(0));
        for (size_t a = 0; a < c.size(); ++a)
            for (size_t b = 0; b < o.c.size(); ++b) r[a + b] = r[a + b] + c[a] * o.c[b];
        return Poly(std::move(r));
    }
    Poly scaled(const K& s) const {
        std::vector<K> r(c.size());
        for (size_t k = 0; k < c.size(); ++k) r[k] = c[k] * s;
        return Poly(std::move(r));
    }

    Poly derivative() const {
        if (c.size() <= 1) return Poly();
        std::vector<K> r(c.size() - 1);
        for (size_t k = 1; k < c.size(); ++k) r[k - 1] = c[k] * K(static_cast<long>(k));
        return Poly(std::move(r));
    }

    Poly conjugateCoeffs() const {
        std::vector<K> r(c.size());
        for (size_t k = 0; k < c.size(); ++k) r[k] = scalarConj(c[k]);
        return Poly(std::move(r));
    }

    // p(-1/z) * z^deg, a polynomial again (coefficient reversal with signs).
    Poly reversedNegInv() const {
        std::vector<K> r(c.rbegin(), c.rend());
        int d = degree();
        for (int k = 0; k <= d; ++k)
            if ((d - k) % 2 != 0) r[k] = -r[k];
        return Poly(std::move(r));
    }

    bool operator==(const Poly& o) const { return c == o.c; }
};

// Euclidean division, requires field coefficients.
template <class K>
std::pair<Poly<K>, Poly<K>> polyDivMod(const Poly<K>& a, const Poly<K>& b) {
    if (b.isZero()) throw Error("polyDivMod: division by zero polynomial");
    Poly<K> q, r = a;
    if (a.degree() < b.degree()) return {q, r};
    std::vector<K> qc(a.degree() - b.degree() + 1, K(0));
    while (!r.isZero() && r.degree() >= b.degree()) {
        int shift = r.degree() - b.degree();
        K factor = r.leading() / b.leading();
        qc[shift] = factor;
        r = r - (b * Poly<K>::monomial(factor, shift));
    }
    return {Poly<K>(std::move(qc)), r};
}

// Monic gcd by the Euclidean algorithm (exact coefficients only).
template <class K>
Poly<K> polyGcd(Poly<K> a, Poly<K> b) {
    if (a.isZero()) return b;
    if (b.isZero()) return a;
    while (!b.isZero()) {
        auto [q, r] = polyDivMod(a, b);
        a = b;
        b = r;
    }
    K inv = K(1) / a.leading();
    return a.scaled(inv);
}

using PolyC = Poly<Cd>;
using PolyQ = Poly<GaussRat>;

inline PolyC toApprox(const PolyQ& p) {
    std::vector<Cd> c(p.c.size());
    for (size_t k = 0; k < p.c.size(); ++k) c[k] = p.c[k].toComplex();
    return PolyC(std::move(c));
}

} // namespace wlab
