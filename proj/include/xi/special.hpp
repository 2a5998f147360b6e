#pragma once

#include "xi/complex_value.hpp"
#include "xi/rational.hpp"
#include "xi/real.hpp"

namespace xi {

/// Principal branch W(x) for x >= 0, defined by W(x) e^{W(x)} = x.
/// Seeded with the large-x asymptotic expansion
/// W(x) = log x - log log x + log log x / log x + ..., refined by Halley
/// iteration to working precision. Throws std::domain_error for x < 0.
Real lambert_w(const Real& x);

/// Polygamma function psi^{(m)}(x) for x > 0, m >= 0.
/// Partial-fraction/recurrence shift into the asymptotic regime, then the
/// Euler-Maclaurin (Bernoulli) tail. Throws std::domain_error for x <= 0.
Real polygamma(int m, const Real& x);

/// Exact Bernoulli number B_k (B_1 = -1/2 convention; odd k > 1 give 0).
/// Memoized; safe for concurrent callers.
Rational bernoulli(int k);

/// Principal-branch log Gamma for complex z away from the poles.
/// For Re z < 1/2 the reflection formula is used; there exp(result) is
/// exact but the imaginary part may differ from the principal branch by a
/// multiple of 2*pi. Throws std::domain_error at nonpositive integers.
ComplexValue log_gamma_complex(const ComplexValue& z);

/// Gamma(z) = exp(log_gamma_complex(z)).
ComplexValue gamma_complex(const ComplexValue& z);

/// |Gamma(a + i b)|^2 = Gamma(a+ib) Gamma(a-ib), computed from one lngamma.
Real gamma_abs2(const Real& a, const Real& b);

/// Riemann zeta for real s > 1. Throws std::domain_error for s <= 1.
Real zeta_real(const Real& s);
Real zeta_real(long s);

}  // namespace xi
