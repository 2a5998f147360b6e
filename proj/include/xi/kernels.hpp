#pragma once

#include "xi/complex_value.hpp"
#include "xi/real.hpp"

namespace xi {

/// Kernel evaluation result: truncated series value plus a rigorous bound on
/// the omitted tail (first omitted term times a geometric majorant factor).
struct KernelValue {
    Real value;
    Real tail_bound;
};

/// theta(x) = 1 + 2 sum_{n>=1} e^{-pi n^2 x}, x > 0.
/// For x < 1 the balanced functional equation theta(x) = x^{-1/2} theta(1/x)
/// is applied first. Throws std::domain_error for x <= 0.
KernelValue theta_ex(const Real& x, const Real& tol);
Real theta(const Real& x, const Real& tol);

/// omega(x) = sum_{n>=1} (2 pi^2 n^4 x^2 - 3 pi n^2 x) e^{-pi n^2 x}, x > 0.
/// Same functional-equation treatment below x = 1.
KernelValue omega_ex(const Real& x, const Real& tol);
Real omega(const Real& x, const Real& tol);

/// omega at a complex argument with Re z > 0 (series summed directly;
/// only used off the real axis for small |Im|/balanced arguments).
ComplexValue omega_complex(const ComplexValue& z, const Real& tol);

/// Phi(x) = 2 e^{x/2} omega(e^{2x}); even in x by construction (evaluated
/// at |x|).
KernelValue phi_ex(const Real& x, const Real& tol);
Real phi(const Real& x, const Real& tol);

/// Centered kernel omega~(t) = (1+t)^{-1/2} omega((1-t)/(1+t)), |t| < 1.
Real omega_tilde(const Real& t, const Real& tol);
/// Complex-argument variant for |t| < 1 (Taylor-coefficient contour work).
ComplexValue omega_tilde_complex(const ComplexValue& t, const Real& tol);

/// theta(1) = Gamma(1/4) / (sqrt(2) pi^{3/4}).
Real kernel_w_const(mpfr_prec_t prec = 0);
/// Omega = Gamma(1/4)^8 / (128 pi^4).
Real kernel_omega_const(mpfr_prec_t prec = 0);

/// Integer sequence delta(0..6) = 1, 1, -1, 51, 849, -26199, 1341999 from the
/// centered theta Taylor expansion. Indices beyond the stored table throw
/// std::out_of_range.
long kernel_delta(int n);
int kernel_delta_table_size();

/// rho(n) = (1/16) (4 Omega delta(n+1) - (32 n^2 + 8 n + 3) delta(n)
///          + (2n-1)(2n)(4n-1)(4n-3) Omega^{-1} delta(n-1)), delta(-1) := 0.
/// The Taylor expansion of omega~ is W sum_n rho(n) Omega^n u^{2n} / (2n)!.
Real omega_tilde_taylor_rho(int n, mpfr_prec_t prec = 0);

}  // namespace xi
