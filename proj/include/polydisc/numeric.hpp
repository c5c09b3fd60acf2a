#pragma once

#include <polydisc/poly.hpp>

#include <optional>
#include <vector>

namespace polydisc {

template <unsigned Digits>
using MpFloat = boost::multiprecision::number<boost::multiprecision::gmp_float<Digits>>;

/// Minimal complex type over an arbitrary real scalar.
template <typename F>
struct Cx {
    F re{0};
    F im{0};

    Cx() = default;
    Cx(F r) : re(std::move(r)) {}
    Cx(F r, F i) : re(std::move(r)), im(std::move(i)) {}

    F abs2() const { return re * re + im * im; }

    friend Cx operator+(const Cx& a, const Cx& b) { return {a.re + b.re, a.im + b.im}; }
    friend Cx operator-(const Cx& a, const Cx& b) { return {a.re - b.re, a.im - b.im}; }
    friend Cx operator-(const Cx& a) { return {-a.re, -a.im}; }
    friend Cx operator*(const Cx& a, const Cx& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Cx operator/(const Cx& a, const Cx& b) {
        F d = b.abs2();
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
    Cx& operator+=(const Cx& o) { *this = *this + o; return *this; }
    Cx& operator-=(const Cx& o) { *this = *this - o; return *this; }
};

/// Exact conversion of a binary float value to a rational.
template <typename F>
Rational exact_rational(const F& x) {
    Rational q;
    mpq_set_f(q.backend().data(), x.backend().data());
    return q;
}

/// floor(x * 2^bits) / 2^bits, exact; truncation error in [0, 2^-bits).
template <typename F>
Rational dyadic_truncate(const F& x, long bits) {
    F scaled = x;
    if (bits >= 0) {
        mpf_mul_2exp(scaled.backend().data(), scaled.backend().data(),
                     static_cast<unsigned long>(bits));
    } else {
        mpf_div_2exp(scaled.backend().data(), scaled.backend().data(),
                     static_cast<unsigned long>(-bits));
    }
    Int z;
    mpz_set_f(z.backend().data(), scaled.backend().data());
    Rational q(z);
    return q * two_pow(-bits);
}

/// 1 + max |a_i| / |a_d| (all roots have modulus below this).
inline Rational cauchy_root_bound(const UniPoly& f) {
    if (f.degree() < 1) throw error("cauchy_root_bound: degree < 1");
    Rational m = 0;
    const Rational& lc = f.leading_coeff();
    for (long i = 0; i < f.degree(); ++i)
        m = std::max(m, abs(f.coeff(static_cast<std::size_t>(i)) / lc));
    return 1 + m;
}

/// Some root of f lies within the returned radius of x: the classical
/// bound min_i |x - z_i| <= d * |f(x) / f'(x)|, made rational from above.
/// nullopt when f'(x) = 0 and f(x) != 0.
inline std::optional<Rational> inclusion_radius(const UniPoly& f, const UniPoly& fd,
                                                const GaussianRational& x) {
    GaussianRational fx = f.evaluate(x);
    if (fx.is_zero()) return Rational(0);
    GaussianRational gx = fd.evaluate(x);
    if (gx.is_zero()) return std::nullopt;
    Rational d(f.degree());
    return ub_sqrt(d * d * fx.norm() / gx.norm());
}

namespace detail {

/// Deterministic initial configuration: points on a slightly eccentric
/// square perimeter of the root-bound radius (no transcendental calls).
template <typename F>
std::vector<Cx<F>> aberth_initial(long d, const F& radius) {
    std::vector<Cx<F>> z;
    z.reserve(static_cast<std::size_t>(d));
    for (long k = 0; k < d; ++k) {
        Rational u((2 * k + 1), 2 * d);  // in (0,1)
        Rational s = 4 * u;
        int side = static_cast<int>(floor_int(s));
        Rational t = s - side;
        Rational px, py;
        switch (side) {
            case 0: px = 1; py = -1 + 2 * t; break;
            case 1: px = 1 - 2 * t; py = 1; break;
            case 2: px = -1; py = 1 - 2 * t; break;
            default: px = -1 + 2 * t; py = -1; break;
        }
        F jitter = radius * (F(1) + F(k + 1) / F(8 * d + 3));
        z.push_back({jitter * F(px), jitter * F(py)});
    }
    return z;
}

}  // namespace detail

/// Aberth-Ehrlich simultaneous iteration at fixed precision. Returns true
/// when the corrections dropped below ~2^-(precision-12). `roots` may carry
/// a warm start of matching size.
template <typename F>
bool aberth(const UniPoly& f, std::vector<Cx<F>>& roots, unsigned max_iters = 400) {
    long d = f.degree();
    if (d < 1) throw error("aberth: degree < 1");
    std::vector<Cx<F>> c, cd;
    c.reserve(static_cast<std::size_t>(d) + 1);
    for (long i = 0; i <= d; ++i) c.push_back({F(f.coeff(static_cast<std::size_t>(i)))});
    for (long i = 1; i <= d; ++i) cd.push_back({F(i) * c[static_cast<std::size_t>(i)].re});

    auto eval = [](const std::vector<Cx<F>>& cf, const Cx<F>& z) {
        Cx<F> acc{F(0)};
        for (std::size_t i = cf.size(); i-- > 0;) acc = acc * z + cf[i];
        return acc;
    };

    if (roots.size() != static_cast<std::size_t>(d)) {
        F radius = F(cauchy_root_bound(f));
        roots = detail::aberth_initial<F>(d, radius);
    }

    const long prec_bits = static_cast<long>(std::numeric_limits<F>::digits);
    F tol = F(two_pow(-(prec_bits - 12)));
    F tiny = F(two_pow(-(prec_bits + 16)));

    for (unsigned it = 0; it < max_iters; ++it) {
        F worst = 0;
        for (std::size_t i = 0; i < roots.size(); ++i) {
            Cx<F> p = eval(c, roots[i]);
            if (p.abs2() == 0) continue;
            Cx<F> pd = eval(cd, roots[i]);
            if (pd.abs2() == 0) {
                roots[i].re += tiny + tiny;  // nudge off the critical point
                worst = F(1);
                continue;
            }
            Cx<F> N = p / pd;
            Cx<F> S{F(0)};
            bool collision = false;
            for (std::size_t j = 0; j < roots.size(); ++j) {
                if (j == i) continue;
                Cx<F> diff = roots[i] - roots[j];
                if (diff.abs2() == 0) {
                    collision = true;
                    break;
                }
                S += Cx<F>{F(1)} / diff;
            }
            if (collision) {
                roots[i].im += tiny + tiny;
                worst = F(1);
                continue;
            }
            Cx<F> denom = Cx<F>{F(1)} - N * S;
            Cx<F> w = (denom.abs2() == 0) ? N : N / denom;
            roots[i] -= w;
            F scale = F(1) + sqrt(roots[i].abs2());
            F rel = sqrt(w.abs2()) / scale;
            if (rel > worst) worst = rel;
        }
        if (worst < tol) return true;
    }
    return false;
}

/// Root approximations as exact dyadic Gaussian rationals, each with a
/// certified inclusion radius (a true root lies within radius of point).
/// Conjugate symmetry is enforced: real-tagged points have im = 0 and
/// complex points come in mirrored pairs (conj_index links them).
struct NumericRoots {
    std::vector<GaussianRational> points;
    std::vector<Rational> radii;
    std::vector<long> conj_index;  // -1 for real roots
    unsigned digits = 0;
};

namespace detail {

template <unsigned Digits>
std::optional<NumericRoots> approximate_roots_at(const UniPoly& f, const UniPoly& fd,
                                                 const NumericRoots* warm) {
    using F = MpFloat<Digits>;
    long d = f.degree();
    std::vector<Cx<F>> z;
    if (warm && warm->points.size() == static_cast<std::size_t>(d)) {
        z.reserve(warm->points.size());
        for (const auto& p : warm->points) z.push_back({F(p.re), F(p.im)});
    }
    if (!aberth<F>(f, z)) return std::nullopt;

    const long prec_bits = static_cast<long>(std::numeric_limits<F>::digits);
    const long keep_bits = prec_bits - 8;
    F real_tol = F(two_pow(-(2 * prec_bits / 3)));

    std::vector<GaussianRational> pts(z.size());
    std::vector<long> conj(z.size(), -2);
    // real classification
    for (std::size_t i = 0; i < z.size(); ++i) {
        F m = F(1) + sqrt(z[i].abs2());
        if (abs(z[i].im) < real_tol * m) {
            pts[i] = GaussianRational(dyadic_truncate(z[i].re, keep_bits));
            conj[i] = -1;
        }
    }
    // conjugate pairing for the rest
    for (std::size_t i = 0; i < z.size(); ++i) {
        if (conj[i] != -2 || z[i].im < 0) continue;
        std::optional<std::size_t> best;
        F bestd = 0;
        for (std::size_t j = 0; j < z.size(); ++j) {
            if (conj[j] != -2 || z[j].im >= 0) continue;
            F dist = (z[j] - Cx<F>{z[i].re, -z[i].im}).abs2();
            if (!best || dist < bestd) {
                best = j;
                bestd = dist;
            }
        }
        if (!best) return std::nullopt;
        GaussianRational g(dyadic_truncate(z[i].re, keep_bits), dyadic_truncate(z[i].im, keep_bits));
        pts[i] = g;
        pts[*best] = g.conj();
        conj[i] = static_cast<long>(*best);
        conj[*best] = static_cast<long>(i);
    }
    for (std::size_t i = 0; i < z.size(); ++i)
        if (conj[i] == -2) return std::nullopt;  // unpaired root, precision too low

    NumericRoots out;
    out.points = std::move(pts);
    out.conj_index = std::move(conj);
    out.digits = Digits;
    out.radii.resize(out.points.size());
    Rational trunc_err = two_pow(-keep_bits + 1);
    for (std::size_t i = 0; i < out.points.size(); ++i) {
        auto r = inclusion_radius(f, fd, out.points[i]);
        if (!r) return std::nullopt;
        out.radii[i] = *r + trunc_err;
    }
    return out;
}

}  // namespace detail

/// Precision-ladder driver; level 0..4 = 25, 50, 100, 200, 400 digits.
inline std::optional<NumericRoots> approximate_roots(const UniPoly& f, unsigned level,
                                                     const NumericRoots* warm = nullptr) {
    UniPoly fd = f.derivative();
    switch (level) {
        case 0: return detail::approximate_roots_at<25>(f, fd, warm);
        case 1: return detail::approximate_roots_at<50>(f, fd, warm);
        case 2: return detail::approximate_roots_at<100>(f, fd, warm);
        case 3: return detail::approximate_roots_at<200>(f, fd, warm);
        case 4: return detail::approximate_roots_at<400>(f, fd, warm);
        default: throw error("approximate_roots: precision ladder exhausted");
    }
}

inline constexpr unsigned kMaxPrecisionLevel = 4;

}  // namespace polydisc
