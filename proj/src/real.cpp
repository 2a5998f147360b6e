#include "xi/real.hpp"

#include <cstdlib>
#include <cstring>

namespace xi {

namespace {
thread_local mpfr_prec_t g_working_prec = 192;
}

mpfr_prec_t working_precision() { return g_working_prec; }

void set_working_precision(mpfr_prec_t bits) {
    if (bits < MPFR_PREC_MIN) throw std::invalid_argument("precision too small");
    g_working_prec = bits;
}

std::string Real::to_decimal() const {
    if (mpfr_nan_p(v_)) return "nan";
    if (mpfr_inf_p(v_)) return mpfr_sgn(v_) < 0 ? "-inf" : "inf";
    if (mpfr_zero_p(v_)) return mpfr_signbit(v_) ? "-0" : "0";
    mpfr_exp_t e;
    // n_digits = 0 requests just enough digits for exact same-precision round-trip.
    char* s = mpfr_get_str(nullptr, &e, 10, 0, v_, MPFR_RNDN);
    std::string digits(s);
    mpfr_free_str(s);
    std::string sign;
    if (digits[0] == '-') {
        sign = "-";
        digits.erase(0, 1);
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    // mpfr exponent convention: value = 0.digits * 10^e.
    std::string mant = digits.substr(0, 1);
    if (digits.size() > 1) mant += "." + digits.substr(1);
    return sign + mant + "e" + std::to_string(static_cast<long>(e - 1));
}

Real Real::from_decimal(std::string_view s, mpfr_prec_t prec) {
    Real r(prec);
    std::string buf(s);
    if (buf == "nan") { mpfr_set_nan(r.v_); return r; }
    if (buf == "inf") { mpfr_set_inf(r.v_, 1); return r; }
    if (buf == "-inf") { mpfr_set_inf(r.v_, -1); return r; }
    if (mpfr_set_str(r.v_, buf.c_str(), 10, MPFR_RNDN) != 0 && r.is_nan())
        throw std::invalid_argument("unparseable decimal: " + buf);
    return r;
}

Real const_pi(mpfr_prec_t prec) {
    Real r(prec ? prec : working_precision());
    mpfr_const_pi(r.raw(), MPFR_RNDN);
    return r;
}

Real const_euler(mpfr_prec_t prec) {
    Real r(prec ? prec : working_precision());
    mpfr_const_euler(r.raw(), MPFR_RNDN);
    return r;
}

Real const_log2(mpfr_prec_t prec) {
    Real r(prec ? prec : working_precision());
    mpfr_const_log2(r.raw(), MPFR_RNDN);
    return r;
}

Real factorial(unsigned long n, mpfr_prec_t prec) {
    Real r(prec ? prec : working_precision());
    mpfr_fac_ui(r.raw(), n, MPFR_RNDN);
    return r;
}

}  // namespace xi
