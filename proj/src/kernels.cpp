#include "xi/kernels.hpp"

#include <array>
#include <stdexcept>

namespace xi {

namespace {

constexpr std::array<long, 7> kDelta = {1, 1, -1, 51, 849, -26199, 1341999};

// Successive series terms decay faster than e^{-3 pi n} once x >= 1, so the
// first omitted term doubled is a sound tail bound.
constexpr int kMaxTerms = 4000;

}  // namespace

KernelValue theta_ex(const Real& x, const Real& tol) {
    if (!(x > 0L)) throw std::domain_error("theta: argument must be positive");
    mpfr_prec_t prec = std::max(x.precision(), working_precision());
    if (x < 1L) {
        KernelValue base = theta_ex(1L / x, tol);
        Real scale = 1L / sqrt(x);
        return {scale * base.value, scale * base.tail_bound};
    }
    Real pi = const_pi(prec);
    Real acc(1L, prec);
    Real term(0L, prec);
    for (long n = 1; n <= kMaxTerms; ++n) {
        term = 2L * exp(-pi * Real(n * n, prec) * x);
        if (term <= tol / 2L) break;
        acc += term;
    }
    return {acc, term * 2L};
}

Real theta(const Real& x, const Real& tol) { return theta_ex(x, tol).value; }

KernelValue omega_ex(const Real& x, const Real& tol) {
    if (!(x > 0L)) throw std::domain_error("omega: argument must be positive");
    mpfr_prec_t prec = std::max(x.precision(), working_precision());
    if (x < 1L) {
        KernelValue base = omega_ex(1L / x, tol);
        Real scale = 1L / sqrt(x);
        return {scale * base.value, scale * base.tail_bound};
    }
    Real pi = const_pi(prec);
    Real pi2 = pi * pi;
    Real acc(0L, prec);
    Real bound(0L, prec);
    for (long n = 1; n <= kMaxTerms; ++n) {
        Real n2 = Real(n * n, prec);
        Real e = exp(-pi * n2 * x);
        Real term = (2L * pi2 * n2 * n2 * x * x - 3L * pi * n2 * x) * e;
        Real mag = (2L * pi2 * n2 * n2 * x * x + 3L * pi * n2 * x) * e;
        acc += term;
        if (mag <= tol / 2L) {
            bound = mag * 2L;
            break;
        }
    }
    return {acc, bound};
}

Real omega(const Real& x, const Real& tol) { return omega_ex(x, tol).value; }

ComplexValue omega_complex(const ComplexValue& z, const Real& tol) {
    if (!(z.re > 0L)) throw std::domain_error("omega_complex: Re z must be positive");
    mpfr_prec_t prec = std::max(z.precision(), working_precision());
    Real pi = const_pi(prec);
    Real pi2 = pi * pi;
    ComplexValue acc(Real(0L, prec));
    for (long n = 1; n <= kMaxTerms; ++n) {
        Real n2 = Real(n * n, prec);
        ComplexValue e = exp(ComplexValue(pi) * z * (-n2));
        ComplexValue poly = ComplexValue(2L * pi2 * n2 * n2) * z * z - ComplexValue(3L * pi * n2) * z;
        ComplexValue term = poly * e;
        acc = acc + term;
        if (abs(term) <= tol / 2L && n >= 2) break;
    }
    return acc;
}

KernelValue phi_ex(const Real& x, const Real& tol) {
    // Phi(-x) = Phi(x) holds exactly because we evaluate at |x|.
    Real ax = abs(x);
    Real arg = exp(ax * 2L);
    KernelValue om = omega_ex(arg, tol / 4L);
    Real scale = 2L * exp(ax / 2L);
    return {scale * om.value, scale * om.tail_bound};
}

Real phi(const Real& x, const Real& tol) { return phi_ex(x, tol).value; }

Real omega_tilde(const Real& t, const Real& tol) {
    if (!(abs(t) < 1L)) throw std::domain_error("omega_tilde: |t| must be < 1");
    Real arg = (1L - t) / (1L + t);
    return omega(arg, tol) / sqrt(1L + t);
}

ComplexValue omega_tilde_complex(const ComplexValue& t, const Real& tol) {
    mpfr_prec_t prec = std::max(t.precision(), working_precision());
    ComplexValue one(Real(1L, prec));
    ComplexValue arg = (one - t) / (one + t);
    ComplexValue om = omega_complex(arg, tol);
    ComplexValue half(Real(-1L, prec) / 2L);
    return om * pow(one + t, half);
}

Real kernel_w_const(mpfr_prec_t prec) {
    if (prec == 0) prec = working_precision();
    Real quarter = Real(1L, prec) / 4L;
    Real pi = const_pi(prec);
    return gamma(quarter) / (sqrt(Real(2L, prec)) * pow(pi, Real(3L, prec) / 4L));
}

Real kernel_omega_const(mpfr_prec_t prec) {
    if (prec == 0) prec = working_precision();
    Real quarter = Real(1L, prec) / 4L;
    Real pi = const_pi(prec);
    return pow(gamma(quarter), 8L) / (128L * pow(pi, 4L));
}

long kernel_delta(int n) {
    if (n < 0 || n >= static_cast<int>(kDelta.size()))
        throw std::out_of_range("kernel_delta: index outside stored table");
    return kDelta[static_cast<size_t>(n)];
}

int kernel_delta_table_size() { return static_cast<int>(kDelta.size()); }

Real omega_tilde_taylor_rho(int n, mpfr_prec_t prec) {
    if (prec == 0) prec = working_precision();
    if (n < 0 || n + 1 >= static_cast<int>(kDelta.size()))
        throw std::out_of_range("omega_tilde_taylor_rho: index outside stored delta table");
    Real om = kernel_omega_const(prec);
    Real acc = 4L * om * Real(kernel_delta(n + 1), prec);
    acc -= Real(32L * n * n + 8L * n + 3L, prec) * Real(kernel_delta(n), prec);
    if (n >= 1) {
        long f = (2L * n - 1) * (2L * n) * (4L * n - 1) * (4L * n - 3);
        acc += Real(f, prec) * Real(kernel_delta(n - 1), prec) / om;
    }
    return acc / 16L;
}

}  // namespace xi
