#include "xi/quadrature.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "xi/rational.hpp"

namespace xi {

namespace {

// ---------------------------------------------------------------------------
// Double-exponential rules. One generic driver handles the three standard
// node maps (tanh-sinh, exp-sinh variant via log substitution, sinh-sinh).
// The driver sums levels with h = h0 / 2^k, reusing previous levels' nodes,
// and stops when successive level sums agree within the target.
// ---------------------------------------------------------------------------

struct DENode {
    Real x;
    Real w;  // includes the map Jacobian, not the level step h
};

enum class DEMap { TanhSinh, SinhSinh };

// Abscissa and weight of the DE map at parameter t.
DENode de_node(DEMap map, const Real& t, const Real& a, const Real& b, mpfr_prec_t prec) {
    Real half_pi = const_pi(prec) / 2L;
    Real u = half_pi * sinh(t);
    Real du = half_pi * cosh(t);
    switch (map) {
        case DEMap::TanhSinh: {
            // x = c + d tanh(u); near the endpoints compute the offset
            // 2/(e^{2u}+1) directly to keep x - endpoint accurate.
            Real c = (a + b) / 2L;
            Real d = (b - a) / 2L;
            Real e2u = exp(u * 2L);
            Real off = 2L / (e2u + 1L);  // = 1 - tanh(u)
            Real x = (t.sign() >= 0) ? b - d * off : a + d * (2L - off);
            Real sech2 = (4L * e2u) / ((e2u + 1L) * (e2u + 1L));
            return {x, d * du * sech2};
        }
        case DEMap::SinhSinh: {
            Real x = sinh(u);
            return {x, du * cosh(u)};
        }
    }
    throw std::logic_error("unreachable");
}

Real de_t_cap(mpfr_prec_t prec) {
    // Weight decays like exp(-(pi/2) e^t); cap where it is far below 2^-prec.
    double target = 0.75 * static_cast<double>(prec) + 60.0;
    return Real(std::log(2.0 * target / 3.141592653589793) + 0.15, prec);
}

struct DEDriver {
    DEMap map;
    Real a, b;           // used by TanhSinh only
    mpfr_prec_t prec;

    // Evaluates one term; integrand evaluated through `eval`, which accumulates
    // into however many component sums the caller wants (real or complex).
    template <typename AddTerm>
    void sweep_level(int level, const AddTerm& add) const {
        // Level 0 takes every integer t; level k adds odd multiples of h.
        Real h = pow2(-level, prec);
        Real cap = de_t_cap(prec);
        long jmax = (cap / h).to_long() + 1;
        long step = (level == 0) ? 1 : 2;
        long jstart = (level == 0) ? 0 : 1;
        for (long j = jstart; j <= jmax; j += step) {
            Real t = Real(j, prec) * h;
            add(de_node(map, t, a, b, prec));
            if (j != 0) add(de_node(map, -t, a, b, prec));
        }
    }
};

struct LevelSums {
    std::vector<Real> parts;      // component partial sums (1 for real, 2 for complex)
    Real abs_sum;                 // sum of |terms|, for the roundoff floor
};

template <typename Eval>
Integral de_integrate_generic(const DEDriver& drv, const Eval& eval, int ncomp,
                              const QuadratureSpec& spec, std::vector<Real>* out_parts) {
    mpfr_prec_t prec = drv.prec;
    std::vector<Real> total(ncomp, Real(0L, prec));
    Real abs_total(0L, prec);
    Real prev_norm(0L, prec), prev_prev_norm(0L, prec);
    Real diff_norm(0L, prec);
    bool have_prev = false;
    Real h = Real(1L, prec);

    int max_levels = std::max(spec.max_refinements, 3);
    for (int level = 0; level <= max_levels; ++level) {
        if (level > 0) h = h / 2L;
        std::vector<Real> lvl(ncomp, Real(0L, prec));
        Real lvl_abs(0L, prec);
        drv.sweep_level(level, [&](const DENode& node) {
            eval(node, lvl, lvl_abs);
        });
        std::vector<Real> new_total(ncomp, Real(0L, prec));
        if (level == 0) {
            for (int c = 0; c < ncomp; ++c) new_total[c] = lvl[c] * h;
            abs_total = lvl_abs * h;
        } else {
            // Previous total used step 2h on the same lattice.
            for (int c = 0; c < ncomp; ++c) new_total[c] = total[c] / 2L + lvl[c] * h;
            abs_total = abs_total / 2L + lvl_abs * h;
        }
        Real norm(0L, prec);
        for (int c = 0; c < ncomp; ++c) norm = max(norm, abs(new_total[c] - total[c]));
        prev_prev_norm = prev_norm;
        prev_norm = diff_norm;
        diff_norm = norm;
        total = std::move(new_total);

        if (level >= 2) {
            Real target = max(spec.abs_tol, spec.rel_tol * abs_total);
            if (diff_norm <= target / 4L || diff_norm.is_zero()) {
                Real floor_term = abs_total * eps_at(prec) * 8L;
                if (out_parts) *out_parts = total;
                return {total[0], diff_norm + floor_term};
            }
        }
        have_prev = true;
        (void)have_prev;
        (void)prev_prev_norm;
    }
    Real floor_term = abs_total * eps_at(prec) * 8L;
    throw QuadratureError("double-exponential refinement limit exceeded", total[0],
                          diff_norm + floor_term);
}

Integral de_integrate(const DEDriver& drv, const RealFn& f, const QuadratureSpec& spec) {
    auto eval = [&](const DENode& node, std::vector<Real>& acc, Real& acc_abs) {
        Real term = f(node.x) * node.w;
        if (term.is_nan()) return;  // endpoint underflow artifacts contribute nothing
        acc[0] += term;
        acc_abs += abs(term);
    };
    return de_integrate_generic(drv, eval, 1, spec, nullptr);
}

// ---------------------------------------------------------------------------
// Gauss-Legendre and Gauss-Kronrod node construction.
// Exact Legendre/Stieltjes polynomial coefficients feed Newton refinement at
// the requested precision, so rules are available at any precision.
// ---------------------------------------------------------------------------

PolyExact legendre_poly(int n) {
    PolyExact p0 = PolyExact::constant(Rational(1));
    if (n == 0) return p0;
    PolyExact p1 = PolyExact::x();
    for (int k = 1; k < n; ++k) {
        // (k+1) P_{k+1} = (2k+1) x P_k - k P_{k-1}
        PolyExact xp = p1.shifted_scaled(Rational(2 * k + 1, k + 1));
        PolyExact next = xp - Rational(k, k + 1) * p0;
        p0 = std::move(p1);
        p1 = std::move(next);
    }
    return p1;
}

PolyExact derivative(const PolyExact& p) {
    std::vector<Rational> d;
    const auto& c = p.coefficients();
    for (size_t i = 1; i < c.size(); ++i) d.push_back(Rational(static_cast<long>(i)) * c[i]);
    return PolyExact(std::move(d));
}

Real newton_root(const PolyExact& p, const PolyExact& dp, Real x, mpfr_prec_t prec) {
    Real tol = pow2(8 - static_cast<long>(prec), prec);
    for (int it = 0; it < 200; ++it) {
        Real step = p.eval(x) / dp.eval(x);
        x -= step;
        if (abs(step) <= tol * max(Real(1L, prec), abs(x))) break;
    }
    return x;
}

struct GKRule {
    std::vector<Real> nodes;      // all 15, ascending
    std::vector<Real> kweights;   // Kronrod weights
    std::vector<Real> gweights;   // Gauss weights on the 7 embedded nodes, 0 elsewhere
};

std::map<std::pair<int, mpfr_prec_t>, GLRule> g_gl_cache;
std::mutex g_gl_mutex;
std::map<mpfr_prec_t, GKRule> g_gk_cache;
std::mutex g_gk_mutex;

GLRule build_gauss_legendre(int n, mpfr_prec_t prec) {
    PolyExact pn = legendre_poly(n);
    PolyExact dpn = derivative(pn);
    GLRule rule;
    for (int i = 1; i <= n; ++i) {
        double seed = std::cos(3.141592653589793 * (i - 0.25) / (n + 0.5));
        Real x = newton_root(pn, dpn, Real(seed, prec), prec);
        Real d = dpn.eval(x);
        Real w = 2L / ((1L - x * x) * d * d);
        rule.nodes.push_back(-x);  // seeds run from +1 side; store ascending
        rule.weights.push_back(w);
    }
    std::vector<size_t> idx(rule.nodes.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(),
              [&](size_t a, size_t b) { return rule.nodes[a] < rule.nodes[b]; });
    GLRule sorted;
    for (size_t i : idx) {
        sorted.nodes.push_back(rule.nodes[i]);
        sorted.weights.push_back(rule.weights[i]);
    }
    return sorted;
}

// Stieltjes polynomial E_8: monic even octic orthogonal to degrees < 8
// against the signed weight P_7(x) dx on [-1,1]. Its coefficients solve a
// 4x4 exact rational system of moment conditions.
PolyExact stieltjes_e8() {
    PolyExact p7 = legendre_poly(7);
    auto moment = [&](int k) {  // integral of x^k P_7 over [-1,1]
        Rational m(0);
        const auto& c = p7.coefficients();
        for (size_t i = 0; i < c.size(); ++i) {
            long deg = static_cast<long>(i) + k;
            if (deg % 2 == 0) m += c[i] * Rational(2, deg + 1);
        }
        return m;
    };
    // Unknowns a0, a2, a4, a6 of E8 = x^8 + a6 x^6 + a4 x^4 + a2 x^2 + a0.
    // Conditions: <E8, x^j> = 0 for odd j in {1,3,5,7}.
    const int odd[4] = {1, 3, 5, 7};
    Rational A[4][5];
    for (int r = 0; r < 4; ++r) {
        int j = odd[r];
        for (int c = 0; c < 4; ++c) A[r][c] = moment(j + 2 * c);
        A[r][4] = -moment(j + 8);
    }
    for (int col = 0; col < 4; ++col) {  // exact Gaussian elimination
        int piv = col;
        while (A[piv][col].is_zero()) ++piv;
        for (int k = 0; k < 5; ++k) std::swap(A[col][k], A[piv][k]);
        for (int r = 0; r < 4; ++r) {
            if (r == col || A[r][col].is_zero()) continue;
            Rational ratio = A[r][col] / A[col][col];
            for (int k = col; k < 5; ++k) A[r][k] -= ratio * A[col][k];
        }
    }
    std::vector<Rational> coeffs(9, Rational(0));
    for (int c = 0; c < 4; ++c) coeffs[2 * c] = A[c][4] / A[c][c];
    coeffs[8] = Rational(1);
    return PolyExact(std::move(coeffs));
}

GKRule build_gauss_kronrod(mpfr_prec_t prec) {
    mpfr_prec_t scratch = prec + 64;
    GLRule g7 = build_gauss_legendre(7, scratch);
    PolyExact e8 = stieltjes_e8();
    PolyExact de8 = derivative(e8);

    // E8 roots: scan for sign changes in double, refine with Newton.
    std::vector<Real> knodes;
    double prev = e8.eval(Rational(-999, 1000)).to_double();
    double xprev = -0.999;
    for (int i = 1; i <= 2000; ++i) {
        double x = -0.999 + 1.998 * i / 2000.0;
        double v = e8.eval(Real(x, 64)).to_double();
        if (prev == 0.0) prev = 1e-300;
        if (v * prev < 0) knodes.push_back(newton_root(e8, de8, Real(0.5 * (x + xprev), scratch), scratch));
        prev = v;
        xprev = x;
    }
    if (knodes.size() != 8) throw std::logic_error("Stieltjes E8 root count != 8");

    GKRule rule;
    std::vector<std::pair<Real, bool>> all;  // node, is_gauss
    for (const Real& x : g7.nodes) all.push_back({x, true});
    for (const Real& x : knodes) all.push_back({x, false});
    std::sort(all.begin(), all.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    // Kronrod weights from moment equations in y = x^2: the rule is symmetric
    // with 8 distinct |x| values, exact through degree 22.
    std::vector<Real> ypow;  // distinct |nodes|
    std::vector<int> group(all.size());
    std::vector<Real> uniq;
    for (size_t i = 0; i < all.size(); ++i) {
        Real ax = abs(all[i].first);
        int found = -1;
        for (size_t u = 0; u < uniq.size(); ++u)
            if (abs(uniq[u] - ax) < pow2(-static_cast<long>(scratch) / 2, scratch)) found = static_cast<int>(u);
        if (found < 0) {
            uniq.push_back(ax);
            found = static_cast<int>(uniq.size()) - 1;
        }
        group[i] = found;
    }
    size_t m = uniq.size();  // 8
    // Solve sum_u c_u * y_u^j = integral x^{2j} = 2/(2j+1), where c_u counts
    // both symmetric nodes (node 0 appears once).
    std::vector<std::vector<Real>> M(m, std::vector<Real>(m + 1, Real(0L, scratch)));
    for (size_t j = 0; j < m; ++j) {
        for (size_t u = 0; u < m; ++u) M[j][u] = pow(uniq[u] * uniq[u], static_cast<long>(j));
        M[j][m] = Real(2L, scratch) / Real(static_cast<long>(2 * j + 1), scratch);
    }
    for (size_t col = 0; col < m; ++col) {
        size_t piv = col;
        for (size_t r = col + 1; r < m; ++r)
            if (abs(M[r][col]) > abs(M[piv][col])) piv = r;
        std::swap(M[col], M[piv]);
        for (size_t r = 0; r < m; ++r) {
            if (r == col) continue;
            Real ratio = M[r][col] / M[col][col];
            for (size_t k = col; k <= m; ++k) M[r][k] -= ratio * M[col][k];
        }
    }
    std::vector<Real> csum(m, Real(0L, scratch));
    for (size_t u = 0; u < m; ++u) csum[u] = M[u][m] / M[u][u];
    // Split the pair sums into per-node weights.
    std::vector<int> count(m, 0);
    for (size_t i = 0; i < all.size(); ++i) count[group[i]]++;
    for (size_t i = 0; i < all.size(); ++i) {
        rule.nodes.push_back(all[i].first.at_precision(prec));
        Real w = csum[group[i]] / Real(count[group[i]], scratch);
        rule.kweights.push_back(w.at_precision(prec));
        Real gw(0L, prec);
        if (all[i].second) {
            for (size_t k = 0; k < g7.nodes.size(); ++k)
                if (g7.nodes[k] == all[i].first) gw = g7.weights[k].at_precision(prec);
        }
        rule.gweights.push_back(gw);
    }
    return rule;
}

const GKRule& gauss_kronrod(mpfr_prec_t prec) {
    std::lock_guard<std::mutex> lock(g_gk_mutex);
    auto it = g_gk_cache.find(prec);
    if (it == g_gk_cache.end()) it = g_gk_cache.emplace(prec, build_gauss_kronrod(prec)).first;
    return it->second;
}

struct Segment {
    Real a, b;
    Real value;  // K15
    Real err;    // |K15 - G7|
};

Segment gk_segment(const RealFn& f, const Real& a, const Real& b, mpfr_prec_t prec) {
    const GKRule& rule = gauss_kronrod(prec);
    Real c = (a + b) / 2L;
    Real d = (b - a) / 2L;
    Real k(0L, prec), g(0L, prec);
    for (size_t i = 0; i < rule.nodes.size(); ++i) {
        Real fx = f(c + d * rule.nodes[i]);
        k += rule.kweights[i] * fx;
        if (!rule.gweights[i].is_zero()) g += rule.gweights[i] * fx;
    }
    return {a, b, k * d, abs(k - g) * abs(d)};
}

Integral gk_adaptive(const RealFn& f, const Real& a, const Real& b, const QuadratureSpec& spec) {
    mpfr_prec_t prec = std::max(spec.abs_tol.precision(), working_precision());
    std::vector<Segment> segs{gk_segment(f, a, b, prec)};
    int max_segments = std::max(spec.max_refinements, 2) * 32;
    while (true) {
        Real total(0L, prec), err(0L, prec);
        size_t worst = 0;
        for (size_t i = 0; i < segs.size(); ++i) {
            total += segs[i].value;
            err += segs[i].err;
            if (segs[i].err > segs[worst].err) worst = i;
        }
        Real target = max(spec.abs_tol, spec.rel_tol * abs(total));
        if (err <= target) return {total, err};
        if (static_cast<int>(segs.size()) >= max_segments)
            throw QuadratureError("Gauss-Kronrod subdivision limit exceeded", total, err);
        Segment s = segs[worst];
        Real mid = (s.a + s.b) / 2L;
        segs[worst] = gk_segment(f, s.a, mid, prec);
        segs.push_back(gk_segment(f, mid, s.b, prec));
    }
}

}  // namespace

Integral integrate(const RealFn& f, const Real& a, const Real& b, const QuadratureSpec& spec) {
    mpfr_prec_t prec = std::max({spec.abs_tol.precision(), a.precision(), b.precision(),
                                 working_precision()});
    if (spec.rule == QuadRule::GaussKronrod) return gk_adaptive(f, a, b, spec);
    DEDriver drv{DEMap::TanhSinh, a, b, prec};
    return de_integrate(drv, f, spec);
}

Integral integrate_0_inf(const RealFn& f, const QuadratureSpec& spec) {
    mpfr_prec_t prec = std::max(spec.abs_tol.precision(), working_precision());
    // x = e^u maps to the whole line; sinh-sinh then gives double-exponential
    // decay at both ends for kernels with omega-type behavior at 0.
    RealFn g = [&f](const Real& u) {
        Real x = exp(u);
        return f(x) * x;
    };
    if (spec.rule == QuadRule::GaussKronrod) {
        // Rational compactification u = v/(1-v^2) for the adaptive rule.
        RealFn h = [&g](const Real& v) {
            Real one_m = 1L - v * v;
            Real u = v / one_m;
            Real jac = (1L + v * v) / (one_m * one_m);
            return g(u) * jac;
        };
        Real lo(-1.0, prec), hi(1.0, prec);
        return gk_adaptive(h, lo, hi, spec);
    }
    DEDriver drv{DEMap::SinhSinh, Real(0L, prec), Real(0L, prec), prec};
    return de_integrate(drv, g, spec);
}

Integral integrate_real_line(const RealFn& f, const QuadratureSpec& spec) {
    mpfr_prec_t prec = std::max(spec.abs_tol.precision(), working_precision());
    if (spec.rule == QuadRule::GaussKronrod) {
        RealFn h = [&f](const Real& v) {
            Real one_m = 1L - v * v;
            Real u = v / one_m;
            Real jac = (1L + v * v) / (one_m * one_m);
            return f(u) * jac;
        };
        Real lo(-1.0, prec), hi(1.0, prec);
        return gk_adaptive(h, lo, hi, spec);
    }
    DEDriver drv{DEMap::SinhSinh, Real(0L, prec), Real(0L, prec), prec};
    return de_integrate(drv, f, spec);
}

Integral integrate_a_inf(const RealFn& f, const Real& a, const QuadratureSpec& spec) {
    RealFn shifted = [&f, &a](const Real& u) { return f(a + u); };
    return integrate_0_inf(shifted, spec);
}

ComplexIntegral integrate_complex_0_inf(const ComplexFn& f, const QuadratureSpec& spec) {
    mpfr_prec_t prec = std::max(spec.abs_tol.precision(), working_precision());
    DEDriver drv{DEMap::SinhSinh, Real(0L, prec), Real(0L, prec), prec};
    auto eval = [&](const DENode& node, std::vector<Real>& acc, Real& acc_abs) {
        Real x = exp(node.x);
        ComplexValue term = f(x);
        Real w = node.w * x;
        acc[0] += term.re * w;
        acc[1] += term.im * w;
        acc_abs += abs(term) * abs(w);
    };
    std::vector<Real> parts;
    auto eval_wrap = [&](const DENode& n, std::vector<Real>& a, Real& s) { eval(n, a, s); };
    Integral first = de_integrate_generic(drv, eval_wrap, 2, spec, &parts);
    return {{parts[0], parts[1]}, first.error};
}

ComplexIntegral integrate_complex(const ComplexFn& f, const Real& a, const Real& b,
                                  const QuadratureSpec& spec) {
    mpfr_prec_t prec = std::max({spec.abs_tol.precision(), a.precision(), b.precision(),
                                 working_precision()});
    DEDriver drv{DEMap::TanhSinh, a, b, prec};
    auto eval = [&](const DENode& node, std::vector<Real>& acc, Real& acc_abs) {
        ComplexValue term = f(node.x);
        acc[0] += term.re * node.w;
        acc[1] += term.im * node.w;
        acc_abs += abs(term) * abs(node.w);
    };
    std::vector<Real> parts;
    Integral first = de_integrate_generic(drv, eval, 2, spec, &parts);
    return {{parts[0], parts[1]}, first.error};
}

const GLRule& gauss_legendre(int n, mpfr_prec_t prec) {
    std::lock_guard<std::mutex> lock(g_gl_mutex);
    auto key = std::make_pair(n, prec);
    auto it = g_gl_cache.find(key);
    if (it == g_gl_cache.end()) it = g_gl_cache.emplace(key, build_gauss_legendre(n, prec)).first;
    return it->second;
}

Real composite_gauss(const RealFn& f, const std::vector<Real>& breakpoints, int points_per_panel,
                     mpfr_prec_t prec) {
    const GLRule& rule = gauss_legendre(points_per_panel, prec);
    Real total(0L, prec);
    for (size_t p = 0; p + 1 < breakpoints.size(); ++p) {
        Real c = (breakpoints[p] + breakpoints[p + 1]) / 2L;
        Real d = (breakpoints[p + 1] - breakpoints[p]) / 2L;
        Real acc(0L, prec);
        for (size_t i = 0; i < rule.nodes.size(); ++i)
            acc += rule.weights[i] * f(c + d * rule.nodes[i]);
        total += acc * d;
    }
    return total;
}

}  // namespace xi
