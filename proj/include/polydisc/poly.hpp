#pragma once

#include <polydisc/rational.hpp>

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace polydisc {

using Monomial = std::vector<std::uint32_t>;
using VarList  = std::vector<std::string>;

inline std::uint64_t total_degree(const Monomial& m) {
    return std::accumulate(m.begin(), m.end(), std::uint64_t{0});
}

/// Canonical variable order: alphabetic prefix, then numeric suffix
/// (so z2 < z10 and t < x1 < z1).
inline bool var_less(const std::string& a, const std::string& b) {
    auto split = [](const std::string& s) {
        std::size_t i = s.size();
        while (i > 0 && std::isdigit(static_cast<unsigned char>(s[i - 1]))) --i;
        long n = -1;
        if (i < s.size()) n = std::stol(s.substr(i));
        return std::pair<std::string, long>(s.substr(0, i), n);
    };
    auto [pa, na] = split(a);
    auto [pb, nb] = split(b);
    if (pa != pb) return pa < pb;
    return na < nb;
}

/// Graded reverse lexicographic order with the later variable in the
/// context the more significant one (z1 < z2 < ... < zn).
/// Returns true when a > b.
inline bool grevlex_greater(const Monomial& a, const Monomial& b) {
    std::uint64_t da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

/// Display order: graded, ties broken lexicographically with the first
/// variable most significant (prints z1*z2 - 3*z1 - 3*z2 + 8).
inline bool display_greater(const Monomial& a, const Monomial& b) {
    std::uint64_t da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] > b[i];
    }
    return false;
}

struct GrevlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_greater(a, b); }
};

/// Multivariate polynomial with exact rational coefficients.
/// Terms are stored in descending grevlex order; no zero coefficient is
/// ever stored and the zero polynomial has an empty term map.
class MultiPoly {
public:
    using TermMap = std::map<Monomial, Rational, GrevlexGreater>;

    MultiPoly() = default;
    explicit MultiPoly(VarList vars) : vars_(std::move(vars)) {}

    static MultiPoly constant(const Rational& c, VarList vars = {}) {
        MultiPoly p(std::move(vars));
        if (c != 0) p.terms_[Monomial(p.vars_.size(), 0)] = c;
        return p;
    }

    static MultiPoly variable(const std::string& name, VarList vars) {
        MultiPoly p(std::move(vars));
        Monomial m(p.vars_.size(), 0);
        auto it = std::find(p.vars_.begin(), p.vars_.end(), name);
        if (it == p.vars_.end()) throw error("variable '" + name + "' not in context");
        m[static_cast<std::size_t>(it - p.vars_.begin())] = 1;
        p.terms_[std::move(m)] = 1;
        return p;
    }

    const VarList& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
    }

    Rational constant_value() const {
        if (terms_.empty()) return 0;
        if (!is_constant()) throw error("constant_value: polynomial is not constant");
        return terms_.begin()->second;
    }

    long degree() const {
        long d = -1;
        for (const auto& [m, c] : terms_) d = std::max<long>(d, static_cast<long>(total_degree(m)));
        return d;
    }

    long degree_in(const std::string& var) const {
        auto idx = var_index(var);
        if (!idx) return terms_.empty() ? -1 : 0;
        long d = terms_.empty() ? -1 : 0;
        for (const auto& [m, c] : terms_) d = std::max<long>(d, m[*idx]);
        return d;
    }

    /// Leading term in grevlex.
    const std::pair<const Monomial, Rational>& leading() const {
        if (terms_.empty()) throw error("leading term of zero polynomial");
        return *terms_.begin();
    }

    void add_term(const Monomial& m, const Rational& c) {
        if (c == 0) return;
        if (m.size() != vars_.size()) throw error("add_term: exponent length mismatch");
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    /// Index of var in this context, if present.
    std::optional<std::size_t> var_index(const std::string& var) const {
        auto it = std::find(vars_.begin(), vars_.end(), var);
        if (it == vars_.end()) return std::nullopt;
        return static_cast<std::size_t>(it - vars_.begin());
    }

    /// Re-expresses the polynomial over a superset context.
    MultiPoly in_context(const VarList& target) const {
        std::vector<std::size_t> pos(vars_.size());
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            auto it = std::find(target.begin(), target.end(), vars_[i]);
            if (it == target.end()) throw error("in_context: target misses variable " + vars_[i]);
            pos[i] = static_cast<std::size_t>(it - target.begin());
        }
        MultiPoly out(target);
        for (const auto& [m, c] : terms_) {
            Monomial nm(target.size(), 0);
            for (std::size_t i = 0; i < m.size(); ++i) nm[pos[i]] = m[i];
            out.terms_.emplace(std::move(nm), c);
        }
        return out;
    }

    /// Drops context variables that occur in no term.
    MultiPoly without_unused_vars() const {
        std::vector<bool> used(vars_.size(), false);
        for (const auto& [m, c] : terms_)
            for (std::size_t i = 0; i < m.size(); ++i)
                if (m[i]) used[i] = true;
        VarList nv;
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (used[i]) nv.push_back(vars_[i]);
        if (nv.size() == vars_.size()) return *this;
        MultiPoly out(nv);
        for (const auto& [m, c] : terms_) {
            Monomial nm;
            nm.reserve(nv.size());
            for (std::size_t i = 0; i < m.size(); ++i)
                if (used[i]) nm.push_back(m[i]);
            out.terms_.emplace(std::move(nm), c);
        }
        return out;
    }

    MultiPoly operator-() const {
        MultiPoly out(vars_);
        for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
        return out;
    }

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) { return combine(a, b, false); }
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return combine(a, b, true); }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        VarList ctx = unify_vars(a.vars_, b.vars_);
        MultiPoly ae = a.in_context(ctx), be = b.in_context(ctx);
        MultiPoly out(ctx);
        for (const auto& [ma, ca] : ae.terms_) {
            for (const auto& [mb, cb] : be.terms_) {
                Monomial m(ctx.size());
                for (std::size_t i = 0; i < ctx.size(); ++i) m[i] = ma[i] + mb[i];
                out.add_term(m, ca * cb);
            }
        }
        return out;
    }

    friend MultiPoly operator*(const Rational& c, const MultiPoly& p) {
        MultiPoly out(p.vars_);
        if (c == 0) return out;
        for (const auto& [m, k] : p.terms_) out.terms_.emplace(m, c * k);
        return out;
    }

    MultiPoly& operator+=(const MultiPoly& o) { *this = *this + o; return *this; }
    MultiPoly& operator-=(const MultiPoly& o) { *this = *this - o; return *this; }
    MultiPoly& operator*=(const MultiPoly& o) { *this = *this * o; return *this; }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        if (a.vars_ == b.vars_) return a.terms_ == b.terms_;
        VarList ctx = unify_vars(a.vars_, b.vars_);
        return a.in_context(ctx).terms_ == b.in_context(ctx).terms_;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    /// Exact evaluation at a Gaussian-rational point (one value per context variable).
    GaussianRational evaluate(const std::vector<GaussianRational>& point) const {
        if (point.size() != vars_.size()) throw error("evaluate: point arity mismatch");
        GaussianRational acc{Rational(0)};
        for (const auto& [m, c] : terms_) {
            GaussianRational t{c};
            for (std::size_t i = 0; i < m.size(); ++i) {
                GaussianRational p{Rational(1)};
                GaussianRational base = point[i];
                std::uint32_t e = m[i];
                while (e) {
                    if (e & 1) p *= base;
                    base *= base;
                    e >>= 1;
                }
                t *= p;
            }
            acc += t;
        }
        return acc;
    }

    /// Exact composition: every occurrence of var is replaced by q (Horner in var).
    MultiPoly substitute(const std::string& var, const MultiPoly& q) const {
        auto idx = var_index(var);
        if (!idx) return *this;
        long dv = degree_in(var);
        if (dv <= 0) return *this;
        // coefficient polynomials of var^k, exponent of var zeroed
        std::vector<MultiPoly> coef(static_cast<std::size_t>(dv) + 1, MultiPoly(vars_));
        for (const auto& [m, c] : terms_) {
            Monomial mm = m;
            std::uint32_t k = mm[*idx];
            mm[*idx] = 0;
            coef[k].add_term(mm, c);
        }
        VarList ctx = unify_vars(vars_, q.vars());
        MultiPoly acc = coef.back().in_context(ctx);
        MultiPoly qe = q.in_context(ctx);
        for (long k = dv - 1; k >= 0; --k) {
            acc = acc * qe + coef[static_cast<std::size_t>(k)].in_context(ctx);
        }
        return acc.without_unused_vars();
    }

    /// Sum of absolute values of the coefficients.
    Rational l1_norm() const {
        Rational s = 0;
        for (const auto& [m, c] : terms_) s += abs(c);
        return s;
    }

    /// Max bit-size over all coefficients (0 for the zero polynomial).
    std::size_t coeff_bit_size() const {
        std::size_t t = 0;
        for (const auto& [m, c] : terms_) t = std::max(t, bit_size(c));
        return t;
    }

    static VarList unify_vars(const VarList& a, const VarList& b) {
        VarList out = a;
        for (const auto& v : b)
            if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
        std::sort(out.begin(), out.end(), var_less);
        return out;
    }

private:
    static MultiPoly combine(const MultiPoly& a, const MultiPoly& b, bool subtract) {
        VarList ctx = unify_vars(a.vars_, b.vars_);
        MultiPoly out = a.in_context(ctx);
        MultiPoly be = b.in_context(ctx);
        for (const auto& [m, c] : be.terms_) out.add_term(m, subtract ? Rational(-c) : c);
        return out;
    }

    VarList vars_;
    TermMap terms_;
};

/// Dense univariate polynomial over the rationals; coeffs[i] is the
/// coefficient of var^i and the top coefficient is nonzero.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::string var) : var_(std::move(var)) {}
    UniPoly(std::string var, std::vector<Rational> coeffs)
        : var_(std::move(var)), coeffs_(std::move(coeffs)) {
        normalize();
    }

    static UniPoly constant(const std::string& var, const Rational& c) {
        return UniPoly(var, {c});
    }

    const std::string& var() const { return var_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

    const Rational& leading_coeff() const {
        if (coeffs_.empty()) throw error("leading coefficient of zero polynomial");
        return coeffs_.back();
    }

    Rational coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

    void set_coeff(std::size_t k, const Rational& c) {
        if (k >= coeffs_.size()) coeffs_.resize(k + 1, Rational(0));
        coeffs_[k] = c;
        normalize();
    }

    UniPoly operator-() const {
        UniPoly out(var_);
        out.coeffs_ = coeffs_;
        for (auto& c : out.coeffs_) c = -c;
        return out;
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        UniPoly out(a.var_.empty() ? b.var_ : a.var_);
        out.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out.coeffs_[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out.coeffs_[i] += b.coeffs_[i];
        out.normalize();
        return out;
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return UniPoly(a.var_.empty() ? b.var_ : a.var_);
        UniPoly out(a.var_.empty() ? b.var_ : a.var_);
        out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        out.normalize();
        return out;
    }

    friend UniPoly operator*(const Rational& c, const UniPoly& p) {
        UniPoly out(p.var_);
        if (c == 0) return out;
        out.coeffs_ = p.coeffs_;
        for (auto& x : out.coeffs_) x *= c;
        return out;
    }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    /// Euclidean division over Q; divisor must be nonzero.
    std::pair<UniPoly, UniPoly> divrem(const UniPoly& d) const {
        if (d.is_zero()) throw error("division by zero polynomial");
        UniPoly q(var_), r = *this;
        long dd = d.degree();
        const Rational& lc = d.leading_coeff();
        while (!r.is_zero() && r.degree() >= dd) {
            long k = r.degree() - dd;
            Rational c = r.leading_coeff() / lc;
            q.set_coeff(static_cast<std::size_t>(k), q.coeff(static_cast<std::size_t>(k)) + c);
            for (long i = 0; i <= dd; ++i)
                r.coeffs_[static_cast<std::size_t>(k + i)] -= c * d.coeffs_[static_cast<std::size_t>(i)];
            r.normalize();
        }
        return {q, r};
    }

    UniPoly derivative() const {
        UniPoly out(var_);
        if (coeffs_.size() <= 1) return out;
        out.coeffs_.resize(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            out.coeffs_[i - 1] = Rational(static_cast<long>(i)) * coeffs_[i];
        out.normalize();
        return out;
    }

    UniPoly monic() const {
        if (is_zero()) return *this;
        return Rational(1) / leading_coeff() * *this;
    }

    Rational evaluate(const Rational& x) const {
        Rational acc = 0;
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
        return acc;
    }

    GaussianRational evaluate(const GaussianRational& z) const {
        GaussianRational acc{Rational(0)};
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * z + GaussianRational(coeffs_[i]);
        return acc;
    }

    /// p(x + c), exact Taylor shift.
    UniPoly taylor_shift(const Rational& c) const {
        UniPoly out = *this;
        long d = degree();
        if (d < 1 || c == 0) return out;
        // synthetic division ladder
        for (long i = 0; i < d; ++i) {
            for (long j = d - 1; j >= i; --j) {
                out.coeffs_[static_cast<std::size_t>(j)] +=
                    c * out.coeffs_[static_cast<std::size_t>(j + 1)];
            }
        }
        return out;
    }

    /// Coefficient list reversed: x^d * p(1/x).
    UniPoly reversed() const {
        UniPoly out(var_);
        out.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
        out.normalize();
        return out;
    }

    MultiPoly to_multi() const {
        MultiPoly out({var_});
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] == 0) continue;
            out.add_term({static_cast<std::uint32_t>(i)}, coeffs_[i]);
        }
        return out;
    }

    /// Conversion from a polynomial that uses at most one variable.
    static UniPoly from_multi(const MultiPoly& p, const std::string& var) {
        UniPoly out(var);
        auto idx = p.var_index(var);
        for (const auto& [m, c] : p.terms()) {
            std::uint32_t e = 0;
            for (std::size_t i = 0; i < m.size(); ++i) {
                if (m[i] == 0) continue;
                if (!idx || i != *idx)
                    throw error("from_multi: polynomial is not univariate in " + var);
                e = m[i];
            }
            out.set_coeff(e, out.coeff(e) + c);
        }
        return out;
    }

    std::size_t coeff_bit_size() const {
        std::size_t t = 0;
        for (const auto& c : coeffs_) t = std::max(t, bit_size(c));
        return t;
    }

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::string var_;
    std::vector<Rational> coeffs_;
};

/// Real and imaginary parts of g(x1 + i*x2) as bivariate polynomials.
inline std::pair<MultiPoly, MultiPoly> complex_split(const UniPoly& g) {
    VarList xs{"x1", "x2"};
    MultiPoly x1 = MultiPoly::variable("x1", xs);
    MultiPoly x2 = MultiPoly::variable("x2", xs);
    MultiPoly re = MultiPoly::constant(0, xs), im = MultiPoly::constant(0, xs);
    for (long k = g.degree(); k >= 0; --k) {
        MultiPoly nre = re * x1 - im * x2;
        MultiPoly nim = re * x2 + im * x1;
        re = std::move(nre);
        im = std::move(nim);
        re += MultiPoly::constant(g.coeff(static_cast<std::size_t>(k)), xs);
    }
    return {re, im};
}

/// C(g) = Re(g)^2 + Im(g)^2 - 1 in Q[x1, x2]; vanishes where |g| = 1.
inline MultiPoly circle_distance_poly(const UniPoly& g) {
    auto [re, im] = complex_split(g);
    return re * re + im * im - MultiPoly::constant(1, {"x1", "x2"});
}

}  // namespace polydisc
