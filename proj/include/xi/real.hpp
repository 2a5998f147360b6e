#pragma once

#include <mpfr.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace xi {

/// Default working precision in bits for newly constructed values.
/// Thread-local so that worker threads can raise it independently.
mpfr_prec_t working_precision();
void set_working_precision(mpfr_prec_t bits);

/// RAII guard that raises (or lowers) the thread-local working precision
/// for the duration of a scope.
class PrecisionGuard {
public:
    explicit PrecisionGuard(mpfr_prec_t bits) : saved_(working_precision()) {
        set_working_precision(bits);
    }
    ~PrecisionGuard() { set_working_precision(saved_); }
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

private:
    mpfr_prec_t saved_;
};

/// Arbitrary-precision floating-point value backed by MPFR.
///
/// Every value carries its own precision; binary operations allocate the
/// result at the larger of the two operand precisions, so precision is
/// sticky through computations. Round-to-nearest throughout.
class Real {
public:
    Real() : Real(working_precision()) { mpfr_set_zero(v_, 1); }
    explicit Real(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_nan(v_); }
    Real(double d) : Real(working_precision()) { mpfr_set_d(v_, d, MPFR_RNDN); }
    Real(int i) : Real(working_precision()) { mpfr_set_si(v_, i, MPFR_RNDN); }
    Real(long i) : Real(working_precision()) { mpfr_set_si(v_, i, MPFR_RNDN); }
    Real(unsigned long i) : Real(working_precision()) { mpfr_set_ui(v_, i, MPFR_RNDN); }
    Real(double d, mpfr_prec_t prec) : Real(prec) { mpfr_set_d(v_, d, MPFR_RNDN); }
    Real(long i, mpfr_prec_t prec) : Real(prec) { mpfr_set_si(v_, i, MPFR_RNDN); }

    Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    Real(Real&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }
    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }

    /// Rounds (or pads) the value to a new precision.
    Real at_precision(mpfr_prec_t prec) const {
        Real r(prec);
        mpfr_set(r.v_, v_, MPFR_RNDN);
        return r;
    }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    bool is_inf() const { return mpfr_inf_p(v_) != 0; }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    /// Exponent such that |x| is in [2^(e-1), 2^e); 0 for zero/NaN.
    long exponent() const {
        if (mpfr_zero_p(v_) || !mpfr_number_p(v_)) return 0;
        return static_cast<long>(mpfr_get_exp(v_));
    }

    /// Decimal serialization that round-trips exactly when re-parsed at
    /// the same precision (MPFR minimal-digit output).
    std::string to_decimal() const;
    static Real from_decimal(std::string_view s, mpfr_prec_t prec);

    Real operator-() const {
        Real r(precision());
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }

    Real& operator+=(const Real& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator-=(const Real& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator*=(const Real& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator/=(const Real& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator*=(long k) { mpfr_mul_si(v_, v_, k, MPFR_RNDN); return *this; }
    Real& operator/=(long k) { mpfr_div_si(v_, v_, k, MPFR_RNDN); return *this; }
    Real& operator+=(long k) { mpfr_add_si(v_, v_, k, MPFR_RNDN); return *this; }
    Real& operator-=(long k) { mpfr_sub_si(v_, v_, k, MPFR_RNDN); return *this; }

    friend Real operator+(const Real& a, const Real& b) { return binop(a, b, mpfr_add); }
    friend Real operator-(const Real& a, const Real& b) { return binop(a, b, mpfr_sub); }
    friend Real operator*(const Real& a, const Real& b) { return binop(a, b, mpfr_mul); }
    friend Real operator/(const Real& a, const Real& b) { return binop(a, b, mpfr_div); }

    friend Real operator+(const Real& a, long b) { Real r(a); r += b; return r; }
    friend Real operator-(const Real& a, long b) { Real r(a); r -= b; return r; }
    friend Real operator*(const Real& a, long b) { Real r(a); r *= b; return r; }
    friend Real operator/(const Real& a, long b) { Real r(a); r /= b; return r; }
    friend Real operator+(long a, const Real& b) { return b + a; }
    friend Real operator*(long a, const Real& b) { return b * a; }
    friend Real operator-(long a, const Real& b) {
        Real r(b.precision());
        mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator/(long a, const Real& b) {
        Real r(b.precision());
        mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN);
        return r;
    }

    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend bool operator!=(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) == 0; }
    friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
    friend bool operator<(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) < 0; }
    friend bool operator<=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) <= 0; }
    friend bool operator>(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) > 0; }
    friend bool operator>=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) >= 0; }
    friend bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) == 0; }

private:
    using BinFn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
    static Real binop(const Real& a, const Real& b, BinFn fn) {
        Real r(std::max(mpfr_get_prec(a.v_), mpfr_get_prec(b.v_)));
        fn(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }

    mpfr_t v_;
};

namespace detail {
template <int (*Fn)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t)>
inline Real unary(const Real& x) {
    Real r(x.precision());
    Fn(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}
}  // namespace detail

inline Real abs(const Real& x) { return detail::unary<mpfr_abs>(x); }
inline Real sqrt(const Real& x) { return detail::unary<mpfr_sqrt>(x); }
inline Real cbrt(const Real& x) { return detail::unary<mpfr_cbrt>(x); }
inline Real exp(const Real& x) { return detail::unary<mpfr_exp>(x); }
inline Real expm1(const Real& x) { return detail::unary<mpfr_expm1>(x); }
inline Real log(const Real& x) { return detail::unary<mpfr_log>(x); }
inline Real log1p(const Real& x) { return detail::unary<mpfr_log1p>(x); }
inline Real sin(const Real& x) { return detail::unary<mpfr_sin>(x); }
inline Real cos(const Real& x) { return detail::unary<mpfr_cos>(x); }
inline Real tan(const Real& x) { return detail::unary<mpfr_tan>(x); }
inline Real sinh(const Real& x) { return detail::unary<mpfr_sinh>(x); }
inline Real cosh(const Real& x) { return detail::unary<mpfr_cosh>(x); }
inline Real tanh(const Real& x) { return detail::unary<mpfr_tanh>(x); }
inline Real atan(const Real& x) { return detail::unary<mpfr_atan>(x); }
inline Real floor(const Real& x) { Real r(x.precision()); mpfr_floor(r.raw(), x.raw()); return r; }

inline Real atan2(const Real& y, const Real& x) {
    Real r(std::max(y.precision(), x.precision()));
    mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
    return r;
}
inline Real pow(const Real& b, const Real& e) {
    Real r(std::max(b.precision(), e.precision()));
    mpfr_pow(r.raw(), b.raw(), e.raw(), MPFR_RNDN);
    return r;
}
inline Real pow(const Real& b, long e) {
    Real r(b.precision());
    mpfr_pow_si(r.raw(), b.raw(), e, MPFR_RNDN);
    return r;
}
inline Real hypot(const Real& x, const Real& y) {
    Real r(std::max(x.precision(), y.precision()));
    mpfr_hypot(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
    return r;
}
inline Real fma(const Real& a, const Real& b, const Real& c) {
    Real r(std::max(a.precision(), std::max(b.precision(), c.precision())));
    mpfr_fma(r.raw(), a.raw(), b.raw(), c.raw(), MPFR_RNDN);
    return r;
}
inline Real max(const Real& a, const Real& b) { return a >= b ? a : b; }
inline Real min(const Real& a, const Real& b) { return a <= b ? a : b; }

/// pi at the stated (or working) precision.
Real const_pi(mpfr_prec_t prec = 0);
/// Euler-Mascheroni constant.
Real const_euler(mpfr_prec_t prec = 0);
/// log(2).
Real const_log2(mpfr_prec_t prec = 0);
/// Gamma function of a real argument.
inline Real gamma(const Real& x) { return detail::unary<mpfr_gamma>(x); }
/// log Gamma of a positive real argument.
inline Real lngamma(const Real& x) { return detail::unary<mpfr_lngamma>(x); }
/// Exact n! as a Real at the given precision.
Real factorial(unsigned long n, mpfr_prec_t prec = 0);
/// 2^k as a Real.
inline Real pow2(long k, mpfr_prec_t prec = 0) {
    Real r(prec ? prec : working_precision());
    mpfr_set_ui_2exp(r.raw(), 1, k, MPFR_RNDN);
    return r;
}
/// One ulp scale at precision p: 2^(1-p).
inline Real eps_at(mpfr_prec_t p) { return pow2(1 - static_cast<long>(p), p); }

}  // namespace xi
