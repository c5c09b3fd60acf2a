#pragma once

#include <polydisc/poly.hpp>

#include <utility>
#include <vector>

namespace polydisc {

/// Exact polynomial division; throws if b does not divide a.
inline MultiPoly exact_divide(const MultiPoly& a, const MultiPoly& b) {
    if (b.is_zero()) throw error("exact_divide: division by zero");
    if (b.is_constant()) return Rational(1) / b.constant_value() * a;
    VarList ctx = MultiPoly::unify_vars(a.vars(), b.vars());
    MultiPoly r = a.in_context(ctx), bb = b.in_context(ctx), q(ctx);
    const auto& [lm, lc] = bb.leading();
    while (!r.is_zero()) {
        const auto& [rm, rc] = r.leading();
        Monomial qm(ctx.size());
        for (std::size_t i = 0; i < ctx.size(); ++i) {
            if (rm[i] < lm[i]) throw error("exact_divide: not divisible");
            qm[i] = rm[i] - lm[i];
        }
        Rational qc = rc / lc;
        MultiPoly t(ctx);
        t.add_term(qm, qc);
        q += t;
        r -= t * bb;
        if (!r.is_zero() && grevlex_greater(r.leading().first, rm))
            throw error("exact_divide: not divisible");
    }
    return q;
}

inline MultiPoly pow(const MultiPoly& p, unsigned long e) {
    MultiPoly r = MultiPoly::constant(1, p.vars());
    MultiPoly b = p;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

namespace detail {

/// Dense coefficient view of p in one variable; index = power of var,
/// entries keep the full context with that variable's exponent zeroed.
struct DenseView {
    VarList ctx;
    std::size_t vidx;
    std::vector<MultiPoly> c;

    long deg() const { return static_cast<long>(c.size()) - 1; }
    const MultiPoly& lc() const { return c.back(); }

    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }

    MultiPoly assemble(const std::string& var) const {
        MultiPoly out(ctx);
        for (std::size_t k = 0; k < c.size(); ++k) {
            for (const auto& [m, coe] : c[k].terms()) {
                Monomial mm = m;
                mm[vidx] = static_cast<std::uint32_t>(k);
                out.add_term(mm, coe);
            }
        }
        return out;
    }
};

inline DenseView dense_in(const MultiPoly& p, const std::string& var, const VarList& ctx) {
    DenseView v;
    v.ctx = ctx;
    MultiPoly pe = p.in_context(ctx);
    auto idx = pe.var_index(var);
    if (!idx) throw error("dense_in: variable missing from context");
    v.vidx = *idx;
    long d = pe.degree_in(var);
    v.c.assign(static_cast<std::size_t>(std::max<long>(d, 0)) + 1, MultiPoly(ctx));
    for (const auto& [m, coe] : pe.terms()) {
        Monomial mm = m;
        std::uint32_t k = mm[v.vidx];
        mm[v.vidx] = 0;
        v.c[k].add_term(mm, coe);
    }
    v.trim();
    return v;
}

/// Pseudo-remainder: lc(B)^(deg A - deg B + 1) * A = Q*B + R.
inline DenseView prem(const DenseView& A, const DenseView& B) {
    DenseView R = A;
    long db = B.deg();
    long e = A.deg() - db + 1;
    while (!R.c.empty() && R.deg() >= db) {
        long k = R.deg() - db;
        MultiPoly lcR = R.lc();
        std::vector<MultiPoly> nr(static_cast<std::size_t>(R.deg()), MultiPoly(R.ctx));
        for (long i = 0; i < R.deg(); ++i) {
            MultiPoly t = B.lc() * R.c[static_cast<std::size_t>(i)];
            if (i >= k) t -= lcR * B.c[static_cast<std::size_t>(i - k)];
            nr[static_cast<std::size_t>(i)] = std::move(t);
        }
        R.c = std::move(nr);
        R.trim();
        --e;
    }
    if (e > 0) {
        MultiPoly f = pow(B.lc(), static_cast<unsigned long>(e));
        for (auto& coe : R.c) coe *= f;
    }
    return R;
}

}  // namespace detail

/// Resultant of p and q with respect to var, by the subresultant
/// polynomial remainder sequence.
inline MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, const std::string& var) {
    if (p.is_zero() || q.is_zero()) throw error("resultant: zero input");
    VarList ctx = MultiPoly::unify_vars(MultiPoly::unify_vars(p.vars(), q.vars()), {var});
    detail::DenseView A = detail::dense_in(p, var, ctx);
    detail::DenseView B = detail::dense_in(q, var, ctx);
    long a = A.deg(), b = B.deg();
    if (a <= 0 && b <= 0) throw error("no elimination variable");
    int s = 1;
    if (a < b) {
        std::swap(A, B);
        std::swap(a, b);
        if ((a & 1) && (b & 1)) s = -s;
    }
    if (b == 0) {
        MultiPoly r = pow(B.c[0], static_cast<unsigned long>(a));
        return s < 0 ? -r : r;
    }
    MultiPoly g = MultiPoly::constant(1, ctx), h = MultiPoly::constant(1, ctx);
    while (true) {
        long d = a - b;
        if ((a & 1) && (b & 1)) s = -s;
        detail::DenseView R = detail::prem(A, B);
        A = B;
        a = b;
        MultiPoly denom = g * pow(h, static_cast<unsigned long>(d));
        for (auto& coe : R.c) coe = exact_divide(coe, denom);
        R.trim();
        B = R;
        b = B.deg();
        g = A.lc();
        if (d > 0) h = exact_divide(pow(g, static_cast<unsigned long>(d)),
                                    pow(h, static_cast<unsigned long>(d - 1)));
        if (B.c.empty()) return MultiPoly::constant(0, ctx);
        if (b == 0) {
            MultiPoly r = exact_divide(pow(B.c[0], static_cast<unsigned long>(a)),
                                       pow(h, static_cast<unsigned long>(a - 1)));
            return s < 0 ? -r : r;
        }
    }
}

namespace detail {

/// Integer-primitive scaling: p = factor * (primitive integer polynomial).
inline std::pair<std::vector<Int>, Rational> to_int_primitive(const UniPoly& p) {
    if (p.is_zero()) return {{}, Rational(0)};
    Int l = 1;
    for (const auto& c : p.coeffs()) {
        Int d = den(c), g;
        mpz_gcd(g.backend().data(), l.backend().data(), d.backend().data());
        l = l / g * d;
    }
    std::vector<Int> v;
    v.reserve(p.coeffs().size());
    Int content = 0;
    for (const auto& c : p.coeffs()) {
        Int x = num(c) * (l / den(c));
        v.push_back(x);
        Int g;
        mpz_gcd(g.backend().data(), content.backend().data(), x.backend().data());
        content = g;
    }
    if (v.back() < 0) content = -content;
    for (auto& x : v) x /= content;
    return {v, Rational(content, l)};
}

inline long ideg(const std::vector<Int>& v) { return static_cast<long>(v.size()) - 1; }

inline void itrim(std::vector<Int>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

inline std::vector<Int> iprem(std::vector<Int> R, const std::vector<Int>& B) {
    long db = ideg(B);
    long e = ideg(R) - db + 1;
    while (!R.empty() && ideg(R) >= db) {
        long k = ideg(R) - db;
        Int lcR = R.back();
        std::vector<Int> nr(static_cast<std::size_t>(ideg(R)), Int(0));
        for (long i = 0; i < ideg(R); ++i) {
            Int t = B.back() * R[static_cast<std::size_t>(i)];
            if (i >= k) t -= lcR * B[static_cast<std::size_t>(i - k)];
            nr[static_cast<std::size_t>(i)] = std::move(t);
        }
        R = std::move(nr);
        itrim(R);
        --e;
    }
    if (e > 0) {
        Int f = 1;
        for (long i = 0; i < e; ++i) f *= B.back();
        for (auto& x : R) x *= f;
    }
    return R;
}

inline std::vector<Int> iprimitive(std::vector<Int> v) {
    Int g = 0;
    for (const auto& x : v) {
        Int t;
        mpz_gcd(t.backend().data(), g.backend().data(), x.backend().data());
        g = t;
    }
    if (g != 0) {
        if (v.back() < 0) g = -g;
        for (auto& x : v) x /= g;
    }
    return v;
}

inline Int ipow(Int b, long e) {
    Int r = 1;
    for (long i = 0; i < e; ++i) r *= b;
    return r;
}

}  // namespace detail

/// Monic gcd over Q via a primitive subresultant remainder sequence.
inline UniPoly gcd_univariate(const UniPoly& p, const UniPoly& q) {
    if (p.is_zero() && q.is_zero()) throw error("gcd: both inputs zero");
    if (p.is_zero()) return q.monic();
    if (q.is_zero()) return p.monic();
    const std::string& v = p.var().empty() ? q.var() : p.var();
    auto [A, fa] = detail::to_int_primitive(p);
    auto [B, fb] = detail::to_int_primitive(q);
    if (detail::ideg(A) < detail::ideg(B)) std::swap(A, B);
    Int g = 1, h = 1;
    while (true) {
        long d = detail::ideg(A) - detail::ideg(B);
        std::vector<Int> R = detail::iprem(A, B);
        if (R.empty()) {
            std::vector<Int> res = detail::iprimitive(B);
            std::vector<Rational> rc(res.begin(), res.end());
            return UniPoly(v, std::move(rc)).monic();
        }
        if (detail::ideg(R) == 0) return UniPoly(v, {Rational(1)});
        A = std::move(B);
        Int denom = g * detail::ipow(h, d);
        for (auto& x : R) x /= denom;
        B = std::move(R);
        g = A.back();
        if (d > 0) h = detail::ipow(g, d) / detail::ipow(h, d - 1);
    }
}

struct SquarefreeDecomposition {
    Rational content;  // p = content * prod factors[i]^mult[i]
    std::vector<std::pair<UniPoly, int>> factors;  // monic, pairwise coprime, ascending multiplicity
};

/// Yun's algorithm; exact over Q.
inline SquarefreeDecomposition squarefree_decomposition(const UniPoly& p) {
    if (p.is_zero()) throw error("squarefree_decomposition: zero polynomial");
    SquarefreeDecomposition out;
    out.content = p.leading_coeff();
    if (p.degree() == 0) return out;
    UniPoly pm = p.monic();
    UniPoly dp = pm.derivative();
    UniPoly g = gcd_univariate(pm, dp);
    if (g.degree() == 0) {
        out.factors.emplace_back(pm, 1);
        return out;
    }
    UniPoly w = pm.divrem(g).first;
    UniPoly y = dp.divrem(g).first;
    UniPoly z = y - w.derivative();
    int i = 1;
    while (w.degree() > 0) {
        UniPoly gi = z.is_zero() ? w.monic() : gcd_univariate(w, z);
        if (gi.degree() > 0) out.factors.emplace_back(gi, i);
        w = w.divrem(gi).first;
        if (z.is_zero()) {
            y = UniPoly::constant(p.var(), 0);
        } else {
            y = z.divrem(gi).first;
        }
        z = y - w.derivative();
        ++i;
    }
    return out;
}

/// p divided by gcd(p, p'), monic.
inline UniPoly squarefree_part(const UniPoly& p) {
    if (p.is_zero()) throw error("squarefree_part: zero polynomial");
    if (p.degree() == 0) return UniPoly::constant(p.var(), 1);
    UniPoly g = gcd_univariate(p, p.derivative());
    return p.divrem(g).first.monic();
}

}  // namespace polydisc
