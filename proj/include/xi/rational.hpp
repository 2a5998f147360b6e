#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "xi/complex_value.hpp"
#include "xi/real.hpp"

namespace xi {

/// Exact rational number. Thin layer over GMP's mpq_class: always reduced,
/// denominator positive (GMP canonical form).
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}
    Rational(long num, long den) : q_(num, den) { q_.canonicalize(); }
    Rational(const mpz_class& num, const mpz_class& den) : q_(num, den) { q_.canonicalize(); }
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }
    explicit Rational(const std::string& s) : q_(s) { q_.canonicalize(); }

    const mpq_class& raw() const { return q_; }
    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }

    bool is_zero() const { return q_ == 0; }
    int sign() const { return sgn(q_); }

    Real to_real(mpfr_prec_t prec = 0) const {
        Real r(prec ? prec : working_precision());
        mpfr_set_q(r.raw(), q_.get_mpq_t(), MPFR_RNDN);
        return r;
    }
    double to_double() const { return q_.get_d(); }
    std::string to_string() const { return q_.get_str(); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_)); }
    friend Rational operator/(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ / b.q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) { q_ /= o.q_; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }

private:
    mpq_class q_;
};

inline Rational pow(const Rational& a, long n) {
    mpz_class num, den;
    unsigned long k = n < 0 ? -static_cast<unsigned long>(n) : static_cast<unsigned long>(n);
    mpz_pow_ui(num.get_mpz_t(), a.numerator().get_mpz_t(), k);
    mpz_pow_ui(den.get_mpz_t(), a.denominator().get_mpz_t(), k);
    if (n < 0) return Rational(den, num);
    return Rational(num, den);
}

/// Exact binomial coefficient C(n, k) for integer n (possibly negative), k >= 0.
inline mpz_class binomial_z(long n, unsigned long k) {
    mpz_class r;
    if (n >= 0) {
        mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), k);
    } else {
        mpz_class top(n);
        mpz_bin_ui(r.get_mpz_t(), top.get_mpz_t(), k);
    }
    return r;
}

inline mpz_class factorial_z(unsigned long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

/// Pochhammer symbol (a)_n for rational a, exact.
inline Rational pochhammer(const Rational& a, unsigned long n) {
    Rational r(1);
    Rational t = a;
    for (unsigned long k = 0; k < n; ++k) {
        r *= t;
        t += Rational(1);
    }
    return r;
}

/// Generalized binomial coefficient C(a, k) = (a)(a-1)...(a-k+1)/k! for rational a.
inline Rational binomial_q(const Rational& a, unsigned long k) {
    Rational r(1);
    Rational t = a;
    for (unsigned long j = 0; j < k; ++j) {
        r *= t;
        t -= Rational(1);
    }
    return r / Rational(factorial_z(k), mpz_class(1));
}

/// Gaussian rational a + b*i with exact components; enough arithmetic for
/// evaluating rational-coefficient polynomials at complex rational points.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(Rational r) : re(std::move(r)) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    GaussianRational conj() const { return {re, -im}; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator*(const Rational& a, const GaussianRational& b) {
        return {a * b.re, a * b.im};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        Rational n = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
};

/// Dense univariate polynomial with exact rational coefficients,
/// lowest degree first. Trailing zero coefficients are trimmed, so
/// degree() is the index of the last nonzero coefficient.
class PolyExact {
public:
    PolyExact() = default;
    explicit PolyExact(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static PolyExact constant(Rational v) { return PolyExact({std::move(v)}); }
    static PolyExact x() { return PolyExact({Rational(0), Rational(1)}); }

    const std::vector<Rational>& coefficients() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }

    Rational coefficient(size_t k) const {
        return k < c_.size() ? c_[k] : Rational(0);
    }

    friend PolyExact operator+(const PolyExact& a, const PolyExact& b) {
        std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < r.size(); ++i) r[i] = a.coefficient(i) + b.coefficient(i);
        return PolyExact(std::move(r));
    }
    friend PolyExact operator-(const PolyExact& a, const PolyExact& b) {
        std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < r.size(); ++i) r[i] = a.coefficient(i) - b.coefficient(i);
        return PolyExact(std::move(r));
    }
    friend PolyExact operator*(const Rational& s, const PolyExact& p) {
        std::vector<Rational> r(p.c_.size());
        for (size_t i = 0; i < r.size(); ++i) r[i] = s * p.c_[i];
        return PolyExact(std::move(r));
    }
    friend PolyExact operator*(const PolyExact& a, const PolyExact& b) {
        if (a.is_zero() || b.is_zero()) return PolyExact();
        std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return PolyExact(std::move(r));
    }
    friend bool operator==(const PolyExact& a, const PolyExact& b) { return a.c_ == b.c_; }
    friend bool operator!=(const PolyExact& a, const PolyExact& b) { return !(a.c_ == b.c_); }

    /// Multiply by x and add: p <- p*x*s + q, used by recurrences.
    PolyExact shifted_scaled(const Rational& s) const {
        if (is_zero()) return PolyExact();
        std::vector<Rational> r(c_.size() + 1, Rational(0));
        for (size_t i = 0; i < c_.size(); ++i) r[i + 1] = s * c_[i];
        return PolyExact(std::move(r));
    }

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }
    GaussianRational eval(const GaussianRational& x) const {
        GaussianRational acc;
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + GaussianRational(c_[i]);
        return acc;
    }
    Real eval(const Real& x) const {
        Real acc(0L, x.precision());
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i].to_real(x.precision());
        return acc;
    }
    ComplexValue eval(const ComplexValue& z) const {
        ComplexValue acc(Real(0L, z.precision()));
        for (size_t i = c_.size(); i-- > 0;)
            acc = acc * z + ComplexValue(c_[i].to_real(z.precision()));
        return acc;
    }

    /// True when only coefficients of indices congruent to degree mod 2 are nonzero.
    bool has_pure_parity() const {
        if (is_zero()) return true;
        size_t par = c_.size() % 2 == 0 ? 1 : 0;  // parity of the degree
        for (size_t i = 0; i < c_.size(); ++i)
            if (i % 2 != par && !c_[i].is_zero()) return false;
        return true;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rational> c_;
};

}  // namespace xi
