#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "xi/complex_value.hpp"
#include "xi/real.hpp"

namespace xi {

enum class QuadRule { DoubleExponential, GaussKronrod };

/// Declares how an improper domain is remapped before the rule is applied.
/// LogSubstitution handles (0, inf) integrands with an essential singularity
/// of omega type (exp(-pi/x)) at 0: x = e^u makes both tails decay
/// doubly exponentially under the sinh-sinh map.
enum class DomainTransform { None, LogSubstitution };

struct QuadratureSpec {
    QuadRule rule = QuadRule::DoubleExponential;
    Real abs_tol = Real(1e-30);
    Real rel_tol = Real(1e-30);
    int max_refinements = 12;  // DE levels or GK subdivision count / 32
    DomainTransform transform = DomainTransform::None;

    static QuadratureSpec with_tol(const Real& tol) {
        QuadratureSpec s;
        s.abs_tol = tol;
        s.rel_tol = tol;
        return s;
    }
};

struct Integral {
    Real value;
    Real error;  // reported estimate, intended to bound the true error
};

/// Raised when the refinement/subdivision limit is exceeded before the
/// tolerance is met. Carries the partial result and its estimate.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(std::string what, Real partial, Real estimate)
        : std::runtime_error(std::move(what)),
          partial_result(std::move(partial)),
          error_estimate(std::move(estimate)) {}
    Real partial_result;
    Real error_estimate;
};

using RealFn = std::function<Real(const Real&)>;
using ComplexFn = std::function<ComplexValue(const Real&)>;

/// Integral over the finite interval (a, b).
Integral integrate(const RealFn& f, const Real& a, const Real& b, const QuadratureSpec& spec);

/// Integral over (0, inf).
Integral integrate_0_inf(const RealFn& f, const QuadratureSpec& spec);

/// Integral over (-inf, inf).
Integral integrate_real_line(const RealFn& f, const QuadratureSpec& spec);

/// Integral over (a, inf).
Integral integrate_a_inf(const RealFn& f, const Real& a, const QuadratureSpec& spec);

struct ComplexIntegral {
    ComplexValue value;
    Real error;
};

/// Complex-valued integrand over (0, inf); one kernel call per node.
ComplexIntegral integrate_complex_0_inf(const ComplexFn& f, const QuadratureSpec& spec);
ComplexIntegral integrate_complex(const ComplexFn& f, const Real& a, const Real& b,
                                  const QuadratureSpec& spec);

/// Gauss-Legendre rule on [-1, 1]; nodes/weights computed once per
/// (n, precision) pair and cached behind a mutex.
struct GLRule {
    std::vector<Real> nodes;    // ascending
    std::vector<Real> weights;
};
const GLRule& gauss_legendre(int n, mpfr_prec_t prec);

/// Fixed composite Gauss-Legendre sweep over given panel boundaries.
/// Deterministic; no adaptivity. Used for oscillatory inner products where
/// the caller controls the panelization.
Real composite_gauss(const RealFn& f, const std::vector<Real>& breakpoints, int points_per_panel,
                     mpfr_prec_t prec);

}  // namespace xi
