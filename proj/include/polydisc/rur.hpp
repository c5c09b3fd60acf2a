#pragma once

#include <polydisc/groebner.hpp>
#include <polydisc/resultant.hpp>

#include <map>
#include <optional>
#include <vector>

namespace polydisc {

/// Univariate representation of a zero-dimensional variety: the
/// separating form t = sum a_k z_k, a squarefree monic f with
/// f(t(p)) = 0, and coordinate polynomials z_k = g_k(t) on the variety.
struct UnivariateRepresentation {
    VarList vars;
    std::vector<Rational> a;
    UniPoly f;                   // monic, squarefree, variable "t"
    std::vector<UniPoly> g;      // one per variable, degree < deg f
    GroebnerBasis gb_radical;    // reduced GB of the radical ideal

    /// t = sum a_k z_k as a polynomial over the z-context.
    MultiPoly separating_form() const {
        MultiPoly s(vars);
        for (std::size_t k = 0; k < vars.size(); ++k)
            s += MultiPoly::constant(a[k], vars) * MultiPoly::variable(vars[k], vars);
        return s;
    }
};

namespace detail {

using Mat = std::vector<std::vector<Rational>>;  // Mat[j] = column j

inline std::vector<Rational> mat_vec(const Mat& M, const std::vector<Rational>& v) {
    std::vector<Rational> out(M.empty() ? 0 : M[0].size(), Rational(0));
    for (std::size_t j = 0; j < M.size(); ++j) {
        if (v[j] == 0) continue;
        for (std::size_t i = 0; i < out.size(); ++i) out[i] += M[j][i] * v[j];
    }
    return out;
}

/// Exact Gaussian elimination solving A x = b for several right-hand
/// sides at once; throws when A is singular.
inline std::vector<std::vector<Rational>> solve_linear(const Mat& cols,
                                                       const std::vector<std::vector<Rational>>& rhs) {
    std::size_t n = cols.size();
    std::size_t m = n + rhs.size();
    std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(m, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) rows[i][j] = cols[j][i];
        for (std::size_t r = 0; r < rhs.size(); ++r) rows[i][n + r] = rhs[r][i];
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && rows[p][c] == 0) ++p;
        if (p == n) throw error("solve_linear: singular matrix");
        std::swap(rows[c], rows[p]);
        Rational inv = Rational(1) / rows[c][c];
        for (std::size_t j = c; j < m; ++j) rows[c][j] *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || rows[i][c] == 0) continue;
            Rational f = rows[i][c];
            for (std::size_t j = c; j < m; ++j) rows[i][j] -= f * rows[c][j];
        }
    }
    std::vector<std::vector<Rational>> out(rhs.size(), std::vector<Rational>(n));
    for (std::size_t r = 0; r < rhs.size(); ++r)
        for (std::size_t i = 0; i < n; ++i) out[r][i] = rows[i][n + r];
    return out;
}

/// Coordinates and multiplication matrices of Q[z]/I over the staircase
/// monomial basis.
class QuotientAlgebra {
public:
    explicit QuotientAlgebra(const GroebnerBasis& gb) : gb_(gb) {
        auto st = staircase(gb);
        if (!st) throw not_zero_dimensional("ideal not zero-dimensional");
        basis_monos_ = std::move(*st);
        for (std::size_t i = 0; i < basis_monos_.size(); ++i) index_[basis_monos_[i]] = i;
    }

    std::size_t dim() const { return basis_monos_.size(); }
    const std::vector<Monomial>& monomials() const { return basis_monos_; }
    const GroebnerBasis& gb() const { return gb_; }

    std::vector<Rational> coords(const MultiPoly& p) const {
        MultiPoly r = detail::reduce_full(p.in_context(gb_.vars), gb_.basis, nullptr);
        std::vector<Rational> v(dim(), Rational(0));
        for (const auto& [m, c] : r.terms()) {
            auto it = index_.find(m);
            if (it == index_.end()) throw error("coords: remainder not on staircase");
            v[it->second] = c;
        }
        return v;
    }

    /// Multiplication-by-h matrix on the quotient (columns = images of
    /// the basis monomials).
    Mat mult_matrix(const MultiPoly& h) const {
        Mat M(dim());
        for (std::size_t j = 0; j < dim(); ++j) {
            MultiPoly bj(gb_.vars);
            bj.add_term(basis_monos_[j], 1);
            M[j] = coords(h * bj);
        }
        return M;
    }

    std::vector<Rational> unit_coords() const {
        Monomial one(gb_.vars.size(), 0);
        auto it = index_.find(one);
        if (it == index_.end()) throw error("unit_coords: 1 is reducible (unit ideal)");
        std::vector<Rational> v(dim(), Rational(0));
        v[it->second] = 1;
        return v;
    }

private:
    GroebnerBasis gb_;
    std::vector<Monomial> basis_monos_;
    std::map<Monomial, std::size_t, GrevlexGreater> index_;
};

/// Minimal polynomial of the vector v0 under M via the Krylov sequence;
/// also returns the Krylov columns v0, M v0, ..., M^(d-1) v0.
inline std::pair<UniPoly, Mat> krylov_minpoly(const Mat& M, const std::vector<Rational>& v0,
                                              const std::string& var) {
    std::size_t D = v0.size();
    Mat krylov;
    std::vector<std::vector<Rational>> echelon;       // reduced rows
    std::vector<std::vector<Rational>> combo;         // echelon[r] = sum combo[r][j] * krylov[j]
    std::vector<std::size_t> pivot;
    std::vector<Rational> v = v0;
    for (std::size_t step = 0; step <= D; ++step) {
        std::vector<Rational> r = v;
        std::vector<Rational> beta(step + 1, Rational(0));
        beta[step] = 1;
        for (std::size_t e = 0; e < echelon.size(); ++e) {
            if (r[pivot[e]] == 0) continue;
            Rational f = r[pivot[e]] / echelon[e][pivot[e]];
            for (std::size_t i = 0; i < D; ++i) r[i] -= f * echelon[e][i];
            for (std::size_t j = 0; j < combo[e].size(); ++j) beta[j] -= f * combo[e][j];
        }
        bool zero = true;
        for (const auto& x : r)
            if (x != 0) {
                zero = false;
                break;
            }
        if (zero) {
            // dependence: sum beta_j M^j v0 = 0, beta_step = 1
            return {UniPoly(var, std::vector<Rational>(beta.begin(), beta.end())), krylov};
        }
        std::size_t p = 0;
        while (r[p] == 0) ++p;
        echelon.push_back(std::move(r));
        combo.push_back(std::move(beta));
        pivot.push_back(p);
        krylov.push_back(v);
        if (step == D) break;
        v = mat_vec(M, v);
    }
    throw error("krylov_minpoly: no dependence found");
}

struct RadicalResult {
    GroebnerBasis gb;
    std::vector<MultiPoly> added;  // squarefree elimination polynomials appended
};

/// Adds sqfree(e_k)(z_k) for every variable whose elimination polynomial
/// e_k (minimal polynomial of z_k in the quotient) is not squarefree.
/// The result is a radical ideal with the same variety.
inline RadicalResult radicalize_gb(const GroebnerBasis& gb0) {
    QuotientAlgebra Q(gb0);
    if (Q.dim() == 0) return {gb0, {}};
    RadicalResult out;
    std::vector<MultiPoly> extra;
    for (std::size_t k = 0; k < gb0.vars.size(); ++k) {
        Mat Mk = Q.mult_matrix(MultiPoly::variable(gb0.vars[k], gb0.vars));
        auto [ek, K] = krylov_minpoly(Mk, Q.unit_coords(), gb0.vars[k]);
        UniPoly sq = squarefree_part(ek);
        if (sq.degree() != ek.degree()) {
            extra.push_back(sq.to_multi().in_context(gb0.vars));
        }
    }
    if (extra.empty()) {
        out.gb = gb0;
        return out;
    }
    std::vector<MultiPoly> gens = gb0.generators;
    for (const auto& e : extra) gens.push_back(e);
    out.gb = groebner(Ideal::of(gens));
    out.added = std::move(extra);
    return out;
}

}  // namespace detail

/// Radical of a zero-dimensional ideal, same variety.
inline Ideal radicalize(const Ideal& ideal) {
    GroebnerBasis gb = groebner(ideal);
    if (!quotient_dimension(gb)) throw not_zero_dimensional("ideal not zero-dimensional");
    auto rad = detail::radicalize_gb(gb);
    if (rad.added.empty()) return ideal;
    std::vector<MultiPoly> gens = ideal.generators;
    for (const auto& e : rad.added) gens.push_back(e);
    return Ideal::of(gens);
}

/// Univariate representation of V(<polys>). The ideal is radicalized
/// first; separating forms are tried over the deterministic sequence
/// a_k = j^(k-1), j = 0, 1, 2, ... and accepted when the minimal
/// polynomial of t reaches the quotient dimension.
inline UnivariateRepresentation univ_r(const std::vector<MultiPoly>& polys) {
    Ideal ideal = Ideal::of(polys);
    GroebnerBasis gb0 = groebner(ideal);
    auto qd = quotient_dimension(gb0);
    if (!qd) throw not_zero_dimensional("ideal not zero-dimensional");
    if (*qd == 0) throw error("empty variety has no univariate representation");
    auto rad = detail::radicalize_gb(gb0);
    detail::QuotientAlgebra Q(rad.gb);
    std::size_t D = Q.dim();
    std::size_t n = rad.gb.vars.size();

    std::vector<detail::Mat> Mk(n);
    for (std::size_t k = 0; k < n; ++k)
        Mk[k] = Q.mult_matrix(MultiPoly::variable(rad.gb.vars[k], rad.gb.vars));

    unsigned long bound = static_cast<unsigned long>(n) * static_cast<unsigned long>(D) *
                              (static_cast<unsigned long>(D) - 1) / 2 + 1;
    for (unsigned long trial = 0; trial <= bound; ++trial) {
        std::vector<Rational> a(n);
        Rational p = 1;
        for (std::size_t k = 0; k < n; ++k) {
            a[k] = p;
            p *= Rational(static_cast<long>(trial));
        }
        detail::Mat Mt(D, std::vector<Rational>(D, Rational(0)));
        for (std::size_t k = 0; k < n; ++k) {
            if (a[k] == 0) continue;
            for (std::size_t j = 0; j < D; ++j)
                for (std::size_t i = 0; i < D; ++i) Mt[j][i] += a[k] * Mk[k][j][i];
        }
        auto [f, krylov] = detail::krylov_minpoly(Mt, Q.unit_coords(), "t");
        if (static_cast<std::size_t>(f.degree()) != D) continue;

        std::vector<std::vector<Rational>> rhs(n);
        for (std::size_t k = 0; k < n; ++k)
            rhs[k] = Q.coords(MultiPoly::variable(rad.gb.vars[k], rad.gb.vars));
        auto sols = detail::solve_linear(krylov, rhs);

        UnivariateRepresentation ur;
        ur.vars = rad.gb.vars;
        ur.a = std::move(a);
        ur.f = f.monic();
        for (std::size_t k = 0; k < n; ++k) ur.g.emplace_back("t", std::move(sols[k]));
        ur.gb_radical = rad.gb;
        // radical ideal plus separating form must give a squarefree f
        if (gcd_univariate(ur.f, ur.f.derivative()).degree() != 0)
            throw error("univ_r: minimal polynomial not squarefree");
        return ur;
    }
    throw error("univ_r: separating form search exceeded its bound");
}

}  // namespace polydisc
