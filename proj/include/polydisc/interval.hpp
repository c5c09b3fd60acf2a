#pragma once

#include <polydisc/poly.hpp>

#include <array>
#include <vector>

namespace polydisc {

enum class IntervalSign { contains_zero, strictly_positive, strictly_negative };

/// Closed rational interval [lo, hi]; all endpoint arithmetic exact.
struct RatInterval {
    Rational lo{0};
    Rational hi{0};

    RatInterval() = default;
    RatInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw error("RatInterval: lo > hi");
    }
    static RatInterval point(const Rational& x) { return {x, x}; }

    Rational width() const { return hi - lo; }
    Rational mid() const { return (lo + hi) / 2; }
    bool is_point() const { return lo == hi; }

    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    bool contains(const RatInterval& o) const { return lo <= o.lo && o.hi <= hi; }

    friend RatInterval operator+(const RatInterval& a, const RatInterval& b) {
        return {a.lo + b.lo, a.hi + b.hi};
    }
    friend RatInterval operator-(const RatInterval& a, const RatInterval& b) {
        return {a.lo - b.hi, a.hi - b.lo};
    }
    friend RatInterval operator-(const RatInterval& a) { return {-a.hi, -a.lo}; }
    friend RatInterval operator*(const RatInterval& a, const RatInterval& b) {
        std::array<Rational, 4> p{a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
        Rational lo = p[0], hi = p[0];
        for (int i = 1; i < 4; ++i) {
            if (p[i] < lo) lo = p[i];
            if (p[i] > hi) hi = p[i];
        }
        return {lo, hi};
    }
    friend RatInterval operator*(const Rational& c, const RatInterval& a) {
        return c >= 0 ? RatInterval{c * a.lo, c * a.hi} : RatInterval{c * a.hi, c * a.lo};
    }
    friend RatInterval operator+(const RatInterval& a, const Rational& c) {
        return {a.lo + c, a.hi + c};
    }
};

inline IntervalSign classify(const RatInterval& i) {
    if (i.lo > 0) return IntervalSign::strictly_positive;
    if (i.hi < 0) return IntervalSign::strictly_negative;
    return IntervalSign::contains_zero;
}

/// Axes-parallel box in C with rational endpoints.
struct ComplexBox {
    RatInterval re;
    RatInterval im;

    ComplexBox() = default;
    ComplexBox(RatInterval r, RatInterval i) : re(std::move(r)), im(std::move(i)) {}

    /// Max side length.
    Rational width() const { return std::max(re.width(), im.width()); }

    /// Max absolute value over endpoint components.
    Rational magnitude() const {
        Rational m = abs(re.lo);
        for (const Rational& v : {re.hi, im.lo, im.hi}) m = std::max(m, abs(v));
        return m;
    }

    GaussianRational midpoint() const { return {re.mid(), im.mid()}; }

    bool contains(const GaussianRational& z) const {
        return re.contains(z.re) && im.contains(z.im);
    }
    bool contains(const ComplexBox& o) const { return re.contains(o.re) && im.contains(o.im); }

    /// Open-box disjointness: touching boundaries count as disjoint.
    bool disjoint(const ComplexBox& o) const {
        return re.hi <= o.re.lo || o.re.hi <= re.lo || im.hi <= o.im.lo || o.im.hi <= im.lo;
    }

    ComplexBox intersect(const ComplexBox& o) const {
        Rational rlo = std::max(re.lo, o.re.lo), rhi = std::min(re.hi, o.re.hi);
        Rational ilo = std::max(im.lo, o.im.lo), ihi = std::min(im.hi, o.im.hi);
        if (rlo > rhi || ilo > ihi) throw error("intersect: empty intersection");
        return {{rlo, rhi}, {ilo, ihi}};
    }

    ComplexBox conjugate() const { return {re, -im}; }

    friend ComplexBox operator+(const ComplexBox& a, const ComplexBox& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend ComplexBox operator-(const ComplexBox& a, const ComplexBox& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend ComplexBox operator*(const ComplexBox& a, const ComplexBox& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }

    static ComplexBox point(const GaussianRational& z) {
        return {RatInterval::point(z.re), RatInterval::point(z.im)};
    }
};

/// Interval enclosure of {p(x1, x2) : (x1, x2) in B} for real bivariate p,
/// by nested Horner evaluation (inner in x1, outer in x2).
inline RatInterval box_eval(const MultiPoly& p, const ComplexBox& B) {
    auto i1 = p.var_index("x1");
    auto i2 = p.var_index("x2");
    long d1 = 0, d2 = 0;
    for (const auto& [m, c] : p.terms()) {
        if (i1) d1 = std::max<long>(d1, m[*i1]);
        if (i2) d2 = std::max<long>(d2, m[*i2]);
    }
    // coefficient grid a[j][k] of x1^j x2^k
    std::vector<std::vector<Rational>> a(static_cast<std::size_t>(d1) + 1,
                                         std::vector<Rational>(static_cast<std::size_t>(d2) + 1, Rational(0)));
    for (const auto& [m, c] : p.terms()) {
        std::size_t j = i1 ? m[*i1] : 0;
        std::size_t k = i2 ? m[*i2] : 0;
        a[j][k] += c;
    }
    const RatInterval& X1 = B.re;
    const RatInterval& X2 = B.im;
    std::vector<RatInterval> inx2(static_cast<std::size_t>(d2) + 1);
    for (long k = 0; k <= d2; ++k) {
        RatInterval acc = RatInterval::point(a[static_cast<std::size_t>(d1)][static_cast<std::size_t>(k)]);
        for (long j = d1 - 1; j >= 0; --j)
            acc = acc * X1 + a[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
        inx2[static_cast<std::size_t>(k)] = acc;
    }
    RatInterval acc = inx2[static_cast<std::size_t>(d2)];
    for (long k = d2 - 1; k >= 0; --k) acc = acc * X2 + inx2[static_cast<std::size_t>(k)];
    return acc;
}

/// Complex-interval enclosure of g over a box (Horner with box arithmetic).
inline ComplexBox box_eval(const UniPoly& g, const ComplexBox& B) {
    ComplexBox acc = ComplexBox::point(GaussianRational{Rational(0)});
    for (long k = g.degree(); k >= 0; --k) {
        acc = acc * B;
        acc.re = acc.re + g.coeff(static_cast<std::size_t>(k));
    }
    return acc;
}

/// Complex-interval enclosure of a multivariate polynomial over a box per
/// coordinate; term-by-term with powers by repeated squaring.
inline ComplexBox box_eval(const MultiPoly& p, const std::vector<ComplexBox>& boxes) {
    if (boxes.size() != p.vars().size()) throw error("box_eval: arity mismatch");
    ComplexBox acc = ComplexBox::point(GaussianRational{Rational(0)});
    for (const auto& [m, c] : p.terms()) {
        ComplexBox t = ComplexBox::point(GaussianRational{c});
        for (std::size_t i = 0; i < m.size(); ++i) {
            ComplexBox b = boxes[i];
            std::uint32_t e = m[i];
            ComplexBox pw = ComplexBox::point(GaussianRational{Rational(1)});
            while (e) {
                if (e & 1) pw = pw * b;
                b = b * b;
                e >>= 1;
            }
            t = t * pw;
        }
        acc = acc + t;
    }
    return acc;
}

}  // namespace polydisc
