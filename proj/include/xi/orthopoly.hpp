#pragma once

#include <vector>

#include "xi/quadrature.hpp"
#include "xi/rational.hpp"

namespace xi {

/// The five polynomial families used by the expansions. MP_f is the symmetric
/// Meixner-Pollaczek family with lambda = 3/4, phi = pi/2; Hahn_g is the
/// continuous Hahn family with all four parameters 3/4 (paper normalization,
/// whose orthogonality constant is independent of n).
enum class FamilyTag { Hermite, ChebyshevU, LaguerreHalf, MP_f, Hahn_g };

/// Exact coefficients by the family's three-term recurrence.
PolyExact family_poly(FamilyTag tag, int n);

/// Exact coefficients from the explicit (hypergeometric/binomial) sum,
/// independent of the recurrence.
PolyExact explicit_form(FamilyTag tag, int n);

/// Numeric evaluation by forward recurrence at a complex point.
ComplexValue eval_family(FamilyTag tag, int n, const ComplexValue& z);
Real eval_family(FamilyTag tag, int n, const Real& x);

/// Evaluates f_0..f_n (or any family) at one point in a single recurrence
/// sweep; out[k] = value of the degree-k member.
void eval_family_all(FamilyTag tag, int n, const Real& x, std::vector<Real>& out);
void eval_family_all(FamilyTag tag, int n, const ComplexValue& z, std::vector<ComplexValue>& out);

/// Exact combination coefficients of the A.6 conversion identities:
/// g_n = sum_k g_from_f(n)[k] * f_{n-2k} and
/// f_n = sum_k f_from_g(n)[k] * g_{n-2k}.
std::vector<Rational> g_from_f(int n);
std::vector<Rational> f_from_g(int n);

/// The two exact binomial summation lemmas behind the conversions.
bool binomial_identity_1(int p, int q);
bool binomial_identity_2(int N, int m);

/// Exact coefficients lambda_k with x^n = sum_k lambda_k U_{n-2k}.
std::vector<Rational> chebyshev_monomial_expand(int n);

/// Numerical orthogonality check: integrates phi_m phi_n w over the family
/// domain and returns |integral - predicted| (0 off-diagonal, the stated
/// normalization on-diagonal).
Real orthogonality_residual(FamilyTag tag, int m, int n, const QuadratureSpec& spec);

/// The stated on-diagonal normalization constant for the family.
Real orthogonality_norm(FamilyTag tag, int n, mpfr_prec_t prec = 0);

/// Exact residuals of the difference equations at a Gaussian-rational point;
/// zero for every n when the table is correct.
GaussianRational fn_difference_residual(int n, const GaussianRational& x);
GaussianRational gn_difference_residual(int n, const GaussianRational& x);

}  // namespace xi
