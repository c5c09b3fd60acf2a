#pragma once

#include <polydisc/interval.hpp>
#include <polydisc/numeric.hpp>
#include <polydisc/resultant.hpp>

#include <vector>

namespace polydisc {

namespace detail {

inline int sign_variations(const UniPoly& p) {
    int v = 0, last = 0;
    for (const auto& c : p.coeffs()) {
        int s = c.sign();
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

/// Descartes test count for the open interval (0,1): variations of
/// (1+x)^d p(1/(1+x)).
inline int var_01(const UniPoly& p) { return sign_variations(p.reversed().taylor_shift(1)); }

inline void vca(const UniPoly& q, const Rational& a, const Rational& b,
                std::vector<RatInterval>& out) {
    int v = var_01(q);
    if (v == 0) return;
    if (v == 1) {
        out.emplace_back(a, b);
        return;
    }
    Rational m = (a + b) / 2;
    // left: q(x/2), right: left shifted by 1
    UniPoly left = q;
    {
        std::vector<Rational> c = left.coeffs();
        Rational f = 1;
        for (std::size_t i = 1; i < c.size(); ++i) {
            f /= 2;
            c[i] *= f;
        }
        left = UniPoly(q.var(), std::move(c));
    }
    UniPoly right = left.taylor_shift(1);
    if (left.evaluate(1) == 0) {
        out.push_back(RatInterval::point(m));
        // divide the bisection-point root out of both children
        left = left.divrem(UniPoly(q.var(), {Rational(-1), Rational(1)})).first;
        std::vector<Rational> rc(right.coeffs().begin() + 1, right.coeffs().end());
        right = UniPoly(q.var(), std::move(rc));
    }
    vca(left, a, m, out);
    vca(right, m, b, out);
}

}  // namespace detail

/// Disjoint rational intervals, one per real root, collectively covering
/// all real roots of a squarefree polynomial (Descartes bisection).
/// Exact rational roots found at bisection points come back as point
/// intervals [r, r].
inline std::vector<RatInterval> real_root_isolation(const UniPoly& g) {
    if (g.is_zero()) throw error("real_root_isolation: zero polynomial");
    if (g.degree() == 0) return {};
    Rational M = two_pow(ceil_log2(cauchy_root_bound(g)));
    // map (0, 1) onto (-M, M): q(x) = g(2*M*x - M)
    UniPoly q;
    {
        std::vector<Rational> c = g.coeffs();
        Rational f = 1;
        for (std::size_t i = 1; i < c.size(); ++i) {
            f *= 2 * M;
            c[i] *= f;
        }
        q = UniPoly(g.var(), std::move(c)).taylor_shift(Rational(-1, 2));
    }
    std::vector<RatInterval> out;
    if (g.evaluate(-M) == 0 || g.evaluate(M) == 0)
        throw error("real_root_isolation: root bound not strict");
    detail::vca(q, -M, M, out);
    std::sort(out.begin(), out.end(),
              [](const RatInterval& x, const RatInterval& y) { return x.lo < y.lo; });
    return out;
}

/// Number of distinct real roots of a squarefree polynomial.
inline long count_real_roots(const UniPoly& g) {
    return static_cast<long>(real_root_isolation(g).size());
}

namespace detail {

/// Univariate polynomial with Gaussian rational coefficients, as a
/// (re, im) pair.
struct CUniPoly {
    UniPoly re, im;

    static CUniPoly from_real(const UniPoly& p) { return {p, UniPoly(p.var())}; }

    friend CUniPoly operator*(const CUniPoly& a, const CUniPoly& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend CUniPoly operator+(const CUniPoly& a, const CUniPoly& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend CUniPoly operator*(const Rational& c, const CUniPoly& a) {
        return {c * a.re, c * a.im};
    }
};

}  // namespace detail

/// Number of complex roots of r on the unit circle, counted with
/// multiplicity. Real points z of (z-i)/(z+i) sweep the circle except the
/// point 1 (the image of infinity), so per squarefree factor q the count
/// is the number of distinct real roots of gcd(Re, Im) of the numerator of
/// q((z-i)/(z+i)), plus one when q(1) = 0.
inline long count_circle_roots(const UniPoly& r) {
    if (r.is_zero()) throw error("count_circle_roots: zero polynomial");
    if (r.degree() == 0) return 0;
    auto dec = squarefree_decomposition(r);
    long total = 0;
    const std::string& v = r.var();
    for (const auto& [q, mult] : dec.factors) {
        long d = q.degree();
        detail::CUniPoly A{UniPoly(v, {Rational(0), Rational(1)}), UniPoly(v, {Rational(-1)})};
        detail::CUniPoly B{UniPoly(v, {Rational(0), Rational(1)}), UniPoly(v, {Rational(1)})};
        detail::CUniPoly N{UniPoly::constant(v, q.coeff(static_cast<std::size_t>(d))),
                           UniPoly(v)};
        detail::CUniPoly Bpow{UniPoly::constant(v, 1), UniPoly(v)};
        for (long l = d - 1; l >= 0; --l) {
            Bpow = Bpow * B;
            N = N * A + q.coeff(static_cast<std::size_t>(l)) * Bpow;
        }
        long cnt = 0;
        if (N.re.is_zero() && N.im.is_zero()) throw error("count_circle_roots: internal");
        UniPoly g = gcd_univariate(N.re, N.im);
        if (g.degree() > 0) cnt = count_real_roots(squarefree_part(g));
        if (q.evaluate(Rational(1)) == 0) ++cnt;
        total += static_cast<long>(mult) * cnt;
    }
    return total;
}

}  // namespace polydisc
