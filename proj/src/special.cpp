#include "xi/special.hpp"

#include <mutex>
#include <vector>

namespace xi {

Real lambert_w(const Real& x) {
    if (x < 0L) throw std::domain_error("lambert_w: negative argument");
    mpfr_prec_t prec = std::max(x.precision(), working_precision());
    if (x.is_zero()) return Real(0L, prec);

    Real w(prec);
    double xd = x.to_double();
    if (xd > 2.718281828) {
        // Asymptotic seed: W = L1 - L2 + L2/L1 with L1 = log x, L2 = log log x.
        Real l1 = log(x.at_precision(prec));
        Real l2 = log(l1);
        w = l1 - l2 + l2 / l1;
    } else {
        // Small-range seed; Halley repairs the rest quickly.
        w = Real(xd / (1.0 + xd), prec);
    }

    Real tol = pow2(8 - static_cast<long>(prec), prec);
    for (int it = 0; it < 300; ++it) {
        Real ew = exp(w);
        Real r = w * ew - x.at_precision(prec);
        Real denom = ew * (w + 1L) - (w + 2L) * r / (2L * w + 2L);
        Real step = r / denom;
        w -= step;
        if (abs(step) <= tol * max(abs(w), Real(1L, prec))) break;
    }
    return w;
}

namespace {

std::vector<Rational> g_bernoulli{Rational(1)};
std::mutex g_bernoulli_mutex;

// Extends the memo table via the defining recurrence
// sum_{j=0}^{m} C(m+1, j) B_j = 0  (m >= 1).
void extend_bernoulli(int k) {
    for (int m = static_cast<int>(g_bernoulli.size()); m <= k; ++m) {
        Rational acc(0);
        for (int j = 0; j < m; ++j)
            acc += Rational(binomial_z(m + 1, j), mpz_class(1)) * g_bernoulli[j];
        g_bernoulli.push_back(-acc / Rational(m + 1));
    }
}

}  // namespace

Rational bernoulli(int k) {
    if (k < 0) throw std::domain_error("bernoulli: negative index");
    std::lock_guard<std::mutex> lock(g_bernoulli_mutex);
    extend_bernoulli(k);
    return g_bernoulli[k];
}

Real polygamma(int m, const Real& x) {
    if (m < 0) throw std::domain_error("polygamma: negative order");
    if (!(x > 0L)) throw std::domain_error("polygamma: argument must be positive");
    mpfr_prec_t prec = std::max(x.precision(), working_precision());
    mpfr_prec_t scratch = prec + 32;

    if (m == 0) {
        Real r(prec);
        mpfr_digamma(r.raw(), x.raw(), MPFR_RNDN);
        return r;
    }

    // Shift x upward until the Bernoulli tail converges fast:
    // threshold ~ bits * ln2 / (2 pi), padded.
    double thresh = 0.12 * static_cast<double>(scratch) + 6.0;
    Real z = x.at_precision(scratch);
    Real shift_sum(0L, scratch);
    Real mfact = factorial(static_cast<unsigned long>(m), scratch);
    while (z.to_double() < thresh) {
        // psi^{(m)}(z) = psi^{(m)}(z+1) + (-1)^m m! / z^{m+1}
        shift_sum += 1L / pow(z, m + 1L);
        z += 1L;
    }

    // Euler-Maclaurin expansion at large z:
    // psi^{(m)}(z) = (-1)^{m-1} [ (m-1)!/z^m + m!/(2 z^{m+1})
    //                + sum_k B_{2k} (2k+m-1)!/((2k)! z^{2k+m}) ].
    Real inv_z = 1L / z;
    Real inv_z2 = inv_z * inv_z;
    Real acc = factorial(static_cast<unsigned long>(m - 1), scratch) * pow(inv_z, static_cast<long>(m));
    acc += mfact * pow(inv_z, m + 1L) / 2L;
    Real term_base = pow(inv_z, static_cast<long>(m));
    Real tol = pow2(-static_cast<long>(scratch), scratch);
    Real prev_mag(0L, scratch);
    for (int k = 1; k < 4000; ++k) {
        // B_{2k} (2k+m-1)!/(2k)! z^{-2k-m}; the factorial ratio is the rising
        // product (2k+1)...(2k+m-1), exact and cheap at these sizes.
        Rational b = bernoulli(2 * k);
        Real num = Real(1L, scratch);
        for (int j = 2 * k + 1; j <= 2 * k + m - 1; ++j) num *= Real(static_cast<long>(j), scratch);
        term_base *= inv_z2;
        Real term = b.to_real(scratch) * num * term_base;
        Real mag = abs(term);
        if (k > 2 && mag > prev_mag && prev_mag > Real(0L, scratch)) break;  // asymptotic divergence guard
        acc += term;
        if (mag <= tol * abs(acc)) break;
        prev_mag = mag;
    }

    // psi^{(m)}(x) = (-1)^{m-1} * acc + (-1)^m m! * shift_sum
    Real sign = (m % 2 == 0) ? Real(-1L, scratch) : Real(1L, scratch);
    Real result = sign * acc + mfact * ((m % 2 == 0) ? shift_sum : -shift_sum);
    return result.at_precision(prec);
}

namespace {

// Stirling series for log Gamma, valid for large |z| with Re z > 0.
ComplexValue log_gamma_stirling(const ComplexValue& z, mpfr_prec_t prec) {
    ComplexValue lz = log(z);
    ComplexValue half(Real(1L, prec) / 2L);
    ComplexValue acc = (z - half) * lz - z;
    Real two_pi = const_pi(prec) * 2L;
    acc.re += log(two_pi) / 2L;
    ComplexValue inv = ComplexValue(Real(1L, prec)) / z;
    ComplexValue inv2 = inv * inv;
    ComplexValue zpow = inv;
    Real tol = pow2(-static_cast<long>(prec), prec);
    for (int k = 1; k < 2000; ++k) {
        Rational b = bernoulli(2 * k);
        Rational denom(static_cast<long>(2 * k) * (2 * k - 1));
        ComplexValue term = (b / denom).to_real(prec) * zpow;
        acc = acc + term;
        if (abs(term) <= tol * abs(acc)) break;
        zpow = zpow * inv2;
    }
    return acc;
}

}  // namespace

ComplexValue log_gamma_complex(const ComplexValue& z) {
    mpfr_prec_t prec = std::max(z.precision(), working_precision());
    mpfr_prec_t scratch = prec + 32;
    ComplexValue zz{z.re.at_precision(scratch), z.im.at_precision(scratch)};

    if (zz.im.is_zero() && zz.re <= 0L && floor(zz.re) == zz.re)
        throw std::domain_error("log_gamma_complex: pole at nonpositive integer");

    if (zz.re < Real(0.5, scratch)) {
        // Reflection: log Gamma(z) = log(pi / sin(pi z)) - log Gamma(1 - z).
        Real pi = const_pi(scratch);
        ComplexValue piz = ComplexValue(pi) * zz;
        // sin(a+bi) = sin a cosh b + i cos a sinh b
        ComplexValue s{sin(piz.re) * cosh(piz.im), cos(piz.re) * sinh(piz.im)};
        ComplexValue one(Real(1L, scratch));
        ComplexValue res = log(ComplexValue(pi)) - log(s) - log_gamma_complex(one - zz);
        return {res.re.at_precision(prec), res.im.at_precision(prec)};
    }

    // Recurrence shift into the Stirling regime.
    double thresh = 0.13 * static_cast<double>(scratch) + 8.0;
    ComplexValue shift(Real(0L, scratch));
    while (abs(zz).to_double() < thresh) {
        shift = shift + log(zz);
        zz = zz + 1L;
    }
    ComplexValue res = log_gamma_stirling(zz, scratch) - shift;
    return {res.re.at_precision(prec), res.im.at_precision(prec)};
}

ComplexValue gamma_complex(const ComplexValue& z) { return exp(log_gamma_complex(z)); }

Real gamma_abs2(const Real& a, const Real& b) {
    // Gamma(a+ib) Gamma(a-ib) = |Gamma(a+ib)|^2 = exp(2 Re log Gamma(a+ib)).
    ComplexValue lg = log_gamma_complex({a, b});
    return exp(lg.re * 2L);
}

Real zeta_real(const Real& s) {
    if (!(s > 1L)) throw std::domain_error("zeta_real: requires s > 1");
    Real r(std::max(s.precision(), working_precision()));
    mpfr_zeta(r.raw(), s.raw(), MPFR_RNDN);
    return r;
}

Real zeta_real(long s) {
    if (s <= 1) throw std::domain_error("zeta_real: requires s > 1");
    Real r(working_precision());
    mpfr_zeta_ui(r.raw(), static_cast<unsigned long>(s), MPFR_RNDN);
    return r;
}

}  // namespace xi
