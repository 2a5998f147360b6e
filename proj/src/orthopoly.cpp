#include "xi/orthopoly.hpp"

#include <stdexcept>

#include "xi/special.hpp"

namespace xi {

namespace {

// Recurrence step: p_{n+1} = (a_n x) p_n + c_n p_{n-1}, coefficients exact.
struct Recurrence {
    Rational x_coeff;   // multiplies x p_n
    Rational prev_coeff;  // multiplies p_{n-1}
    Rational const_coeff;  // multiplies p_n (Laguerre only)
};

Recurrence recurrence_at(FamilyTag tag, int n) {
    switch (tag) {
        case FamilyTag::Hermite:
            return {Rational(2), Rational(-2 * n), Rational(0)};
        case FamilyTag::ChebyshevU:
            return {Rational(2), Rational(-1), Rational(0)};
        case FamilyTag::LaguerreHalf:
            // (n+1) L_{n+1} = (2n + 3/2 - x) L_n - (n + 1/2) L_{n-1}
            return {Rational(-1, n + 1), Rational(-(2 * n + 1), 2 * (n + 1)),
                    Rational(4 * n + 3, 2 * (n + 1))};
        case FamilyTag::MP_f:
            // (n+1) f_{n+1} = 2x f_n - (n + 1/2) f_{n-1}
            return {Rational(2, n + 1), Rational(-(2 * n + 1), 2 * (n + 1)), Rational(0)};
        case FamilyTag::Hahn_g:
            // (2n+3) g_{n+1} = 8x g_n - (2n+1) g_{n-1}
            return {Rational(8, 2 * n + 3), Rational(-(2 * n + 1), 2 * n + 3), Rational(0)};
    }
    throw std::logic_error("unreachable");
}

PolyExact degree_one(FamilyTag tag) {
    switch (tag) {
        case FamilyTag::Hermite:
        case FamilyTag::ChebyshevU:
        case FamilyTag::MP_f:
            return PolyExact({Rational(0), Rational(2)});
        case FamilyTag::LaguerreHalf:
            return PolyExact({Rational(3, 2), Rational(-1)});
        case FamilyTag::Hahn_g:
            return PolyExact({Rational(0), Rational(8, 3)});
    }
    throw std::logic_error("unreachable");
}

// Polynomial with Gaussian-rational coefficients; just enough arithmetic for
// assembling the convolution-form explicit formulas.
using GPoly = std::vector<GaussianRational>;

GPoly gp_mul(const GPoly& a, const GPoly& b) {
    GPoly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
    return r;
}

void gp_add_scaled(GPoly& acc, const GPoly& p, const GaussianRational& s) {
    if (acc.size() < p.size()) acc.resize(p.size());
    for (size_t i = 0; i < p.size(); ++i) acc[i] = acc[i] + s * p[i];
}

// binomial(-3/4 + sign * i x, k) as a polynomial in x.
GPoly binom_poly(int sign, int k) {
    GPoly r{GaussianRational(Rational(1))};
    for (int j = 0; j < k; ++j) {
        // factor: (-3/4 - j) + sign * i x
        GPoly f{GaussianRational(Rational(-3 - 4 * j, 4)),
                GaussianRational(Rational(0), Rational(sign))};
        r = gp_mul(r, f);
    }
    Rational kfact(factorial_z(static_cast<unsigned long>(k)), mpz_class(1));
    for (auto& c : r) c = GaussianRational(c.re / kfact, c.im / kfact);
    return r;
}

GaussianRational i_power(int n) {
    switch (((n % 4) + 4) % 4) {
        case 0: return GaussianRational(Rational(1));
        case 1: return GaussianRational(Rational(0), Rational(1));
        case 2: return GaussianRational(Rational(-1));
        default: return GaussianRational(Rational(0), Rational(-1));
    }
}

PolyExact finalize_real(GPoly p) {
    std::vector<Rational> c(p.size());
    for (size_t i = 0; i < p.size(); ++i) {
        if (!p[i].im.is_zero())
            throw std::logic_error("explicit form produced a non-real coefficient");
        c[i] = p[i].re;
    }
    return PolyExact(std::move(c));
}

}  // namespace

PolyExact family_poly(FamilyTag tag, int n) {
    if (n < 0) throw std::domain_error("family_poly: negative degree");
    PolyExact prev = PolyExact::constant(Rational(1));
    if (n == 0) return prev;
    PolyExact cur = degree_one(tag);
    for (int k = 1; k < n; ++k) {
        Recurrence rec = recurrence_at(tag, k);
        PolyExact next = cur.shifted_scaled(rec.x_coeff) + rec.prev_coeff * prev;
        if (!rec.const_coeff.is_zero()) next = next + rec.const_coeff * cur;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

PolyExact explicit_form(FamilyTag tag, int n) {
    if (n < 0) throw std::domain_error("explicit_form: negative degree");
    switch (tag) {
        case FamilyTag::Hermite: {
            std::vector<Rational> c(n + 1, Rational(0));
            mpz_class nf = factorial_z(n);
            for (int k = 0; 2 * k <= n; ++k) {
                mpz_class den = factorial_z(k) * factorial_z(n - 2 * k);
                mpz_class p2;
                mpz_ui_pow_ui(p2.get_mpz_t(), 2, static_cast<unsigned long>(n - 2 * k));
                Rational coeff(nf * p2, den);
                if (k % 2) coeff = -coeff;
                c[n - 2 * k] = coeff;
            }
            return PolyExact(std::move(c));
        }
        case FamilyTag::ChebyshevU: {
            std::vector<Rational> c(n + 1, Rational(0));
            for (int k = 0; 2 * k <= n; ++k) {
                mpz_class p2;
                mpz_ui_pow_ui(p2.get_mpz_t(), 2, static_cast<unsigned long>(n - 2 * k));
                Rational coeff(binomial_z(n - k, k) * p2, mpz_class(1));
                if (k % 2) coeff = -coeff;
                c[n - 2 * k] = coeff;
            }
            return PolyExact(std::move(c));
        }
        case FamilyTag::LaguerreHalf: {
            std::vector<Rational> c(n + 1, Rational(0));
            for (int k = 0; k <= n; ++k) {
                Rational coeff = binomial_q(Rational(2 * n + 1, 2), n - k) /
                                 Rational(factorial_z(k), mpz_class(1));
                if (k % 2) coeff = -coeff;
                c[k] = coeff;
            }
            return PolyExact(std::move(c));
        }
        case FamilyTag::MP_f: {
            // f_n(x) = i^n sum_k (-1)^k C(-3/4+ix, k) C(-3/4-ix, n-k)
            GPoly acc;
            for (int k = 0; k <= n; ++k) {
                GPoly term = gp_mul(binom_poly(+1, k), binom_poly(-1, n - k));
                GaussianRational s(Rational(k % 2 ? -1 : 1));
                gp_add_scaled(acc, term, s);
            }
            GaussianRational ip = i_power(n);
            for (auto& c : acc) c = ip * c;
            return finalize_real(std::move(acc));
        }
        case FamilyTag::Hahn_g: {
            // g_n(x) = i^n sum_k (-1)^k (n+1)!/((3/2)_k (3/2)_{n-k})
            //          C(-3/4+ix, k) C(-3/4-ix, n-k)
            GPoly acc;
            Rational nfact(factorial_z(static_cast<unsigned long>(n + 1)), mpz_class(1));
            for (int k = 0; k <= n; ++k) {
                Rational s = nfact / (pochhammer(Rational(3, 2), k) *
                                      pochhammer(Rational(3, 2), n - k));
                if (k % 2) s = -s;
                GPoly term = gp_mul(binom_poly(+1, k), binom_poly(-1, n - k));
                gp_add_scaled(acc, term, GaussianRational(s));
            }
            GaussianRational ip = i_power(n);
            for (auto& c : acc) c = ip * c;
            return finalize_real(std::move(acc));
        }
    }
    throw std::logic_error("unreachable");
}

namespace {

template <typename V>
V eval_recurrence(FamilyTag tag, int n, const V& x, std::vector<V>* all) {
    mpfr_prec_t prec = std::max(x.precision(), working_precision());
    V prev = V(Real(1L, prec));
    if (all) {
        all->clear();
        all->push_back(prev);
    }
    if (n == 0) return prev;
    PolyExact d1 = family_poly(tag, 1);
    V cur = d1.eval(x);
    if (all) all->push_back(cur);
    for (int k = 1; k < n; ++k) {
        Recurrence rec = recurrence_at(tag, k);
        V next = rec.x_coeff.to_real(prec) * (x * cur) + rec.prev_coeff.to_real(prec) * prev;
        if (!rec.const_coeff.is_zero()) next = next + rec.const_coeff.to_real(prec) * cur;
        prev = cur;
        cur = next;
        if (all) all->push_back(cur);
    }
    return cur;
}

}  // namespace

ComplexValue eval_family(FamilyTag tag, int n, const ComplexValue& z) {
    return eval_recurrence<ComplexValue>(tag, n, z, nullptr);
}

Real eval_family(FamilyTag tag, int n, const Real& x) {
    return eval_recurrence<Real>(tag, n, x, nullptr);
}

void eval_family_all(FamilyTag tag, int n, const Real& x, std::vector<Real>& out) {
    eval_recurrence<Real>(tag, n, x, &out);
}

void eval_family_all(FamilyTag tag, int n, const ComplexValue& z, std::vector<ComplexValue>& out) {
    eval_recurrence<ComplexValue>(tag, n, z, &out);
}

std::vector<Rational> g_from_f(int n) {
    std::vector<Rational> r;
    for (int k = 0; 2 * k <= n; ++k) {
        int m = n - 2 * k;  // target f index
        mpz_class p2;
        mpz_ui_pow_ui(p2.get_mpz_t(), 2, static_cast<unsigned long>(m));
        Rational coeff = Rational(p2 * factorial_z(n - k), factorial_z(k)) /
                         pochhammer(Rational(3, 2), m);
        r.push_back(coeff);
    }
    return r;
}

std::vector<Rational> f_from_g(int n) {
    mpz_class p2;
    mpz_ui_pow_ui(p2.get_mpz_t(), 2, static_cast<unsigned long>(n));
    Rational front = pochhammer(Rational(3, 2), n) /
                     Rational(p2 * factorial_z(static_cast<unsigned long>(n + 1)), mpz_class(1));
    std::vector<Rational> r;
    for (int k = 0; 2 * k <= n; ++k) {
        Rational coeff = front * Rational((n - 2 * k + 1) * binomial_z(n + 1, k), mpz_class(1));
        if (k % 2) coeff = -coeff;
        r.push_back(coeff);
    }
    return r;
}

bool binomial_identity_1(int p, int q) {
    if (p < 0 || q < 0) throw std::domain_error("binomial_identity_1: negative input");
    Rational lhs(0);
    for (int k = 0; 2 * k <= p; ++k) {
        mpz_class p4;
        mpz_ui_pow_ui(p4.get_mpz_t(), 4, static_cast<unsigned long>(k));
        Rational term(factorial_z(p + q - k), p4 * factorial_z(k) * factorial_z(p - 2 * k));
        lhs += (k % 2) ? -term : term;
    }
    mpz_class p2;
    mpz_ui_pow_ui(p2.get_mpz_t(), 2, static_cast<unsigned long>(p));
    Rational rhs(factorial_z(q) * binomial_z(p + 2 * q + 1, p), p2);
    return lhs == rhs;
}

bool binomial_identity_2(int N, int m) {
    if (N < 0 || m < 0) throw std::domain_error("binomial_identity_2: negative input");
    Rational lhs(0);
    for (int k = 0; k <= N; ++k) {
        mpz_class t = mpz_class(N - 2 * k) * binomial_z(N, k) *
                      binomial_z(N + m - 2 * k, static_cast<unsigned long>(2 * m + 1));
        lhs += Rational(t, mpz_class(1));
    }
    Rational rhs = Rational(mpz_class(N) * binomial_z(N - 1, m), mpz_class(1)) *
                   pow(Rational(2), N - m);
    return lhs == rhs;
}

std::vector<Rational> chebyshev_monomial_expand(int n) {
    // x^n = 1/((n+1) 2^n) sum_k (n-2k+1) C(n+1, k) U_{n-2k}
    mpz_class p2;
    mpz_ui_pow_ui(p2.get_mpz_t(), 2, static_cast<unsigned long>(n));
    Rational front(mpz_class(1), mpz_class(n + 1) * p2);
    std::vector<Rational> r;
    for (int k = 0; 2 * k <= n; ++k)
        r.push_back(front * Rational(mpz_class(n - 2 * k + 1) * binomial_z(n + 1, k), mpz_class(1)));
    return r;
}

Real orthogonality_norm(FamilyTag tag, int n, mpfr_prec_t prec) {
    if (prec == 0) prec = working_precision();
    Real pi = const_pi(prec);
    switch (tag) {
        case FamilyTag::Hermite:
            return pow2(n, prec) * factorial(static_cast<unsigned long>(n), prec) * sqrt(pi);
        case FamilyTag::ChebyshevU:
            return pi / 2L;
        case FamilyTag::LaguerreHalf:
            return gamma(Real(n, prec) + Real(3L, prec) / 2L) /
                   factorial(static_cast<unsigned long>(n), prec);
        case FamilyTag::MP_f:
            return pow(pi, Real(3L, prec) / 2L) *
                   pochhammer(Rational(3, 2), static_cast<unsigned long>(n)).to_real(prec) /
                   (2L * sqrt(Real(2L, prec)) * factorial(static_cast<unsigned long>(n), prec));
        case FamilyTag::Hahn_g:
            return pow(pi, 3L) / 16L;
    }
    throw std::logic_error("unreachable");
}

Real orthogonality_residual(FamilyTag tag, int m, int n, const QuadratureSpec& spec) {
    mpfr_prec_t prec = std::max(spec.abs_tol.precision(), working_precision());
    Real predicted = (m == n) ? orthogonality_norm(tag, n, prec) : Real(0L, prec);

    Integral got;
    switch (tag) {
        case FamilyTag::Hermite: {
            RealFn f = [&](const Real& x) {
                return eval_family(tag, m, x) * eval_family(tag, n, x) * exp(-x * x);
            };
            got = integrate_real_line(f, spec);
            break;
        }
        case FamilyTag::ChebyshevU: {
            RealFn f = [&](const Real& x) {
                return eval_family(tag, m, x) * eval_family(tag, n, x) * sqrt(1L - x * x);
            };
            got = integrate(f, Real(-1L, prec), Real(1L, prec), spec);
            break;
        }
        case FamilyTag::LaguerreHalf: {
            RealFn f = [&](const Real& x) {
                return eval_family(tag, m, x) * eval_family(tag, n, x) * exp(-x) * sqrt(x);
            };
            got = integrate_0_inf(f, spec);
            break;
        }
        case FamilyTag::MP_f:
        case FamilyTag::Hahn_g: {
            long wpow = (tag == FamilyTag::MP_f) ? 1 : 2;
            RealFn f = [&](const Real& x) {
                Real w = gamma_abs2(Real(3L, prec) / 4L, x);
                return eval_family(tag, m, x) * eval_family(tag, n, x) * pow(w, wpow);
            };
            got = integrate_real_line(f, spec);
            break;
        }
        default:
            throw std::logic_error("unreachable");
    }
    return abs(got.value - predicted);
}

namespace {

GaussianRational gr_i() { return GaussianRational(Rational(0), Rational(1)); }

}  // namespace

GaussianRational fn_difference_residual(int n, const GaussianRational& x) {
    PolyExact fn = family_poly(FamilyTag::MP_f, n);
    GaussianRational i = gr_i();
    GaussianRational ix = i * x;
    GaussianRational q34(Rational(3, 4));
    GaussianRational two_n34(Rational(2 * (4 * n + 3), 4));  // 2(n + 3/4)
    return two_n34 * fn.eval(x) - (q34 - ix) * fn.eval(x + i) - (q34 + ix) * fn.eval(x - i);
}

GaussianRational gn_difference_residual(int n, const GaussianRational& x) {
    PolyExact gn = family_poly(FamilyTag::Hahn_g, n);
    GaussianRational i = gr_i();
    GaussianRational ix = i * x;
    GaussianRational q34(Rational(3, 4));
    GaussianRational a(Rational((n + 1) * (n + 1)) + Rational(1, 8));
    GaussianRational two(Rational(2));
    GaussianRational lhs = (a - two * x * x) * gn.eval(x);
    GaussianRational p = q34 - ix;
    GaussianRational q = q34 + ix;
    return lhs - p * p * gn.eval(x + i) - q * q * gn.eval(x - i);
}

}  // namespace xi
