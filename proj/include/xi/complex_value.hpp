#pragma once

#include "xi/real.hpp"

namespace xi {

/// Complex value with arbitrary-precision components.
/// MPFR has no complex type, so the small amount of complex arithmetic the
/// project needs lives here. log/pow use the principal branch.
struct ComplexValue {
    Real re;
    Real im;

    ComplexValue() = default;
    ComplexValue(Real r) : re(std::move(r)), im(Real(0L, re.precision())) {}
    ComplexValue(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    ComplexValue(double r, double i = 0.0) : re(r), im(i) {}

    mpfr_prec_t precision() const { return std::max(re.precision(), im.precision()); }

    ComplexValue conj() const { return {re, -im}; }
    bool is_nan() const { return re.is_nan() || im.is_nan(); }

    ComplexValue operator-() const { return {-re, -im}; }

    friend ComplexValue operator+(const ComplexValue& a, const ComplexValue& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend ComplexValue operator-(const ComplexValue& a, const ComplexValue& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend ComplexValue operator*(const ComplexValue& a, const ComplexValue& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend ComplexValue operator*(const Real& a, const ComplexValue& b) {
        return {a * b.re, a * b.im};
    }
    friend ComplexValue operator*(const ComplexValue& a, const Real& b) { return b * a; }
    friend ComplexValue operator/(const ComplexValue& a, const ComplexValue& b) {
        // Smith's formula avoids overflow for wildly scaled components.
        if (abs(b.re) >= abs(b.im)) {
            Real r = b.im / b.re;
            Real den = b.re + b.im * r;
            return {(a.re + a.im * r) / den, (a.im - a.re * r) / den};
        }
        Real r = b.re / b.im;
        Real den = b.re * r + b.im;
        return {(a.re * r + a.im) / den, (a.im * r - a.re) / den};
    }
    friend ComplexValue operator/(const ComplexValue& a, const Real& b) {
        return {a.re / b, a.im / b};
    }
    friend ComplexValue operator+(const ComplexValue& a, long b) { return {a.re + b, a.im}; }
    friend ComplexValue operator-(const ComplexValue& a, long b) { return {a.re - b, a.im}; }
    friend ComplexValue operator*(const ComplexValue& a, long b) { return {a.re * b, a.im * b}; }
    friend ComplexValue operator/(const ComplexValue& a, long b) { return {a.re / b, a.im / b}; }
};

/// |z| computed without intermediate overflow.
inline Real abs(const ComplexValue& z) { return hypot(z.re, z.im); }
inline Real arg(const ComplexValue& z) { return atan2(z.im, z.re); }
inline Real norm2(const ComplexValue& z) { return z.re * z.re + z.im * z.im; }

inline ComplexValue exp(const ComplexValue& z) {
    Real m = exp(z.re);
    return {m * cos(z.im), m * sin(z.im)};
}

/// Principal logarithm.
inline ComplexValue log(const ComplexValue& z) { return {log(abs(z)), arg(z)}; }

inline ComplexValue sqrt(const ComplexValue& z) {
    // Principal square root via half-angle.
    Real m = sqrt(abs(z));
    Real a = arg(z) / 2L;
    return {m * cos(a), m * sin(a)};
}

/// Principal power z^w.
inline ComplexValue pow(const ComplexValue& z, const ComplexValue& w) {
    return exp(w * log(z));
}

/// x^w for real x > 0 (cheaper than the general branch computation).
inline ComplexValue pow_real_base(const Real& x, const ComplexValue& w) {
    Real lx = log(x);
    Real m = exp(w.re * lx);
    Real a = w.im * lx;
    return {m * cos(a), m * sin(a)};
}

inline ComplexValue pow(const ComplexValue& z, long n) {
    ComplexValue acc(Real(1L, z.precision()));
    ComplexValue base = z;
    unsigned long k = n < 0 ? -static_cast<unsigned long>(n) : static_cast<unsigned long>(n);
    while (k) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    if (n < 0) return ComplexValue(Real(1L, z.precision())) / acc;
    return acc;
}

}  // namespace xi
