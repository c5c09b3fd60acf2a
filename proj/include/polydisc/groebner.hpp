#pragma once

#include <polydisc/poly.hpp>

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

namespace polydisc {

struct not_zero_dimensional : error {
    using error::error;
};

/// Generating set of a polynomial ideal over a fixed variable context.
struct Ideal {
    VarList vars;
    std::vector<MultiPoly> generators;

    static Ideal of(const std::vector<MultiPoly>& gens) {
        if (gens.empty()) throw error("ideal: no generators");
        VarList ctx;
        for (const auto& g : gens) ctx = MultiPoly::unify_vars(ctx, g.vars());
        Ideal i;
        i.vars = ctx;
        bool any = false;
        for (const auto& g : gens) {
            i.generators.push_back(g.in_context(ctx));
            any = any || !g.is_zero();
        }
        if (!any) throw error("ideal: all generators zero");
        return i;
    }
};

namespace detail {

inline bool mono_divides(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) m[i] = std::max(a[i], b[i]);
    return m;
}

inline Monomial mono_div(const Monomial& a, const Monomial& b) {
    Monomial m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) m[i] = a[i] - b[i];
    return m;
}

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) m[i] = a[i] + b[i];
    return m;
}

inline MultiPoly mono_poly(const Monomial& m, const Rational& c, const VarList& ctx) {
    MultiPoly p(ctx);
    p.add_term(m, c);
    return p;
}

}  // namespace detail

/// Reduced Groebner basis (degrevlex) with the exact change-of-basis:
/// basis[j] = sum_i transform[j][i] * generators[i].
class GroebnerBasis {
public:
    VarList vars;
    std::vector<MultiPoly> generators;
    std::vector<MultiPoly> basis;
    std::vector<std::vector<MultiPoly>> transform;
    std::string order = "degrevlex";

    bool is_unit_ideal() const {
        return basis.size() == 1 && basis[0].is_constant() && !basis[0].is_zero();
    }
};

struct NormalFormResult {
    MultiPoly remainder;
    std::vector<MultiPoly> cofactors_basis;       // over gb.basis
    std::vector<MultiPoly> cofactors_generators;  // over gb.generators
};

namespace detail {

/// Full reduction of p against the (monic) divisors; returns the reduced
/// remainder, recording per-divisor cofactors when requested.
inline MultiPoly reduce_full(const MultiPoly& p, const std::vector<MultiPoly>& divisors,
                             std::vector<MultiPoly>* cof) {
    const VarList& ctx = p.vars();
    MultiPoly w = p, rem(ctx);
    while (!w.is_zero()) {
        const auto& [lm, lc] = w.leading();
        bool hit = false;
        for (std::size_t k = 0; k < divisors.size(); ++k) {
            const MultiPoly& b = divisors[k];
            if (b.is_zero()) continue;
            const auto& [bm, bc] = b.leading();
            if (!mono_divides(bm, lm)) continue;
            Monomial q = mono_div(lm, bm);
            Rational qc = lc / bc;
            MultiPoly qp = mono_poly(q, qc, ctx);
            w -= qp * b;
            if (cof) (*cof)[k] += qp;
            hit = true;
            break;
        }
        if (!hit) {
            rem.add_term(lm, lc);
            MultiPoly lt = mono_poly(lm, lc, ctx);
            w -= lt;
        }
    }
    return rem;
}

}  // namespace detail

/// Buchberger with sugar selection and both classical criteria; exact
/// arithmetic throughout, cofactor transform maintained.
inline GroebnerBasis groebner(const Ideal& ideal) {
    const VarList& ctx = ideal.vars;
    GroebnerBasis gb;
    gb.vars = ctx;
    gb.generators = ideal.generators;

    std::vector<MultiPoly> basis;
    std::vector<std::vector<MultiPoly>> tf;
    std::vector<long> sugar;

    auto push_elem = [&](MultiPoly p, std::vector<MultiPoly> row, long sug) {
        Rational lc = p.leading().second;
        p = Rational(1) / lc * p;
        for (auto& r : row) r = Rational(1) / lc * r;
        basis.push_back(std::move(p));
        tf.push_back(std::move(row));
        sugar.push_back(sug);
    };

    for (std::size_t i = 0; i < ideal.generators.size(); ++i) {
        const MultiPoly& g = ideal.generators[i];
        if (g.is_zero()) continue;
        std::vector<MultiPoly> row(ideal.generators.size(), MultiPoly(ctx));
        row[i] = MultiPoly::constant(1, ctx);
        push_elem(g, std::move(row), g.degree());
    }

    struct Pair {
        long sugar;
        Monomial lcm;
        std::size_t i, j;
    };
    auto pair_less = [](const Pair& a, const Pair& b) {
        if (a.sugar != b.sugar) return a.sugar < b.sugar;
        if (a.lcm != b.lcm) return !grevlex_greater(a.lcm, b.lcm);
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };
    std::vector<Pair> queue;
    std::set<std::pair<std::size_t, std::size_t>> pending;

    auto add_pairs_for = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            Monomial l = detail::mono_lcm(basis[i].leading().first, basis[j].leading().first);
            long di = static_cast<long>(total_degree(detail::mono_div(l, basis[i].leading().first)));
            long dj = static_cast<long>(total_degree(detail::mono_div(l, basis[j].leading().first)));
            long s = std::max(sugar[i] + di, sugar[j] + dj);
            queue.push_back(Pair{s, std::move(l), i, j});
            pending.insert({i, j});
        }
    };
    for (std::size_t j = 0; j < basis.size(); ++j) add_pairs_for(j);

    while (!queue.empty()) {
        auto it = std::min_element(queue.begin(), queue.end(), pair_less);
        Pair pr = *it;
        queue.erase(it);
        pending.erase({pr.i, pr.j});

        const Monomial& li = basis[pr.i].leading().first;
        const Monomial& lj = basis[pr.j].leading().first;
        // product criterion
        if (pr.lcm == detail::mono_mul(li, lj)) continue;
        // chain criterion
        bool skip = false;
        for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (!detail::mono_divides(basis[k].leading().first, pr.lcm)) continue;
            auto key_ik = std::minmax(pr.i, k);
            auto key_jk = std::minmax(pr.j, k);
            if (!pending.count({key_ik.first, key_ik.second}) &&
                !pending.count({key_jk.first, key_jk.second}))
                skip = true;
        }
        if (skip) continue;

        MultiPoly mi = detail::mono_poly(detail::mono_div(pr.lcm, li), 1, ctx);
        MultiPoly mj = detail::mono_poly(detail::mono_div(pr.lcm, lj), 1, ctx);
        MultiPoly s = mi * basis[pr.i] - mj * basis[pr.j];
        std::vector<MultiPoly> cof(basis.size(), MultiPoly(ctx));
        MultiPoly r = detail::reduce_full(s, basis, &cof);
        if (r.is_zero()) continue;

        std::vector<MultiPoly> row(gb.generators.size(), MultiPoly(ctx));
        for (std::size_t g = 0; g < gb.generators.size(); ++g) {
            MultiPoly acc = mi * tf[pr.i][g] - mj * tf[pr.j][g];
            for (std::size_t k = 0; k < basis.size(); ++k)
                if (!cof[k].is_zero()) acc -= cof[k] * tf[k][g];
            row[g] = std::move(acc);
        }
        push_elem(std::move(r), std::move(row), pr.sugar);
        add_pairs_for(basis.size() - 1);
    }

    // interreduce, maintaining the transform
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            std::vector<MultiPoly> others;
            std::vector<std::size_t> omap;
            for (std::size_t k = 0; k < basis.size(); ++k) {
                if (k == i) continue;
                others.push_back(basis[k]);
                omap.push_back(k);
            }
            std::vector<MultiPoly> cof(others.size(), MultiPoly(ctx));
            MultiPoly r = detail::reduce_full(basis[i], others, &cof);
            if (r == basis[i]) continue;
            changed = true;
            if (r.is_zero()) {
                basis.erase(basis.begin() + static_cast<long>(i));
                tf.erase(tf.begin() + static_cast<long>(i));
                sugar.erase(sugar.begin() + static_cast<long>(i));
                --i;
                continue;
            }
            Rational lc = r.leading().second;
            std::vector<MultiPoly> row(gb.generators.size(), MultiPoly(ctx));
            for (std::size_t g = 0; g < gb.generators.size(); ++g) {
                MultiPoly acc = tf[i][g];
                for (std::size_t k = 0; k < others.size(); ++k)
                    if (!cof[k].is_zero()) acc -= cof[k] * tf[omap[k]][g];
                row[g] = Rational(1) / lc * acc;
            }
            basis[i] = Rational(1) / lc * r;
            tf[i] = std::move(row);
        }
    }

    // deterministic order: ascending leading monomial
    std::vector<std::size_t> idx(basis.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return !grevlex_greater(basis[a].leading().first, basis[b].leading().first) &&
               basis[a].leading().first != basis[b].leading().first;
    });
    for (std::size_t i : idx) {
        gb.basis.push_back(basis[i]);
        gb.transform.push_back(tf[i]);
    }
    return gb;
}

/// Remainder and exact cofactors of p modulo the basis; remainder == 0
/// iff p is in the ideal.
inline NormalFormResult normal_form(const MultiPoly& p, const GroebnerBasis& gb) {
    MultiPoly pe = p.in_context(MultiPoly::unify_vars(p.vars(), gb.vars));
    if (pe.vars() != gb.vars) throw error("normal_form: polynomial uses foreign variables");
    NormalFormResult out;
    out.cofactors_basis.assign(gb.basis.size(), MultiPoly(gb.vars));
    out.remainder = detail::reduce_full(pe, gb.basis, &out.cofactors_basis);
    out.cofactors_generators.assign(gb.generators.size(), MultiPoly(gb.vars));
    for (std::size_t k = 0; k < gb.basis.size(); ++k) {
        if (out.cofactors_basis[k].is_zero()) continue;
        for (std::size_t g = 0; g < gb.generators.size(); ++g)
            out.cofactors_generators[g] += out.cofactors_basis[k] * gb.transform[k][g];
    }
    return out;
}

/// Monomials irreducible modulo the leading terms, in ascending grevlex;
/// nullopt when the quotient is infinite-dimensional.
inline std::optional<std::vector<Monomial>> staircase(const GroebnerBasis& gb) {
    std::size_t n = gb.vars.size();
    std::vector<Monomial> lts;
    for (const auto& b : gb.basis) lts.push_back(b.leading().first);
    if (gb.is_unit_ideal()) return std::vector<Monomial>{};
    // zero-dimensional iff every variable has a pure-power leading term
    std::vector<std::uint32_t> cap(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
        bool found = false;
        for (const auto& m : lts) {
            bool pure = m[v] > 0;
            for (std::size_t w = 0; pure && w < n; ++w)
                if (w != v && m[w] > 0) pure = false;
            if (pure && (!found || m[v] < cap[v])) {
                cap[v] = m[v];
                found = true;
            }
        }
        if (!found) return std::nullopt;
    }
    std::vector<Monomial> out;
    Monomial cur(n, 0);
    while (true) {
        bool reducible = false;
        for (const auto& m : lts)
            if (detail::mono_divides(m, cur)) {
                reducible = true;
                break;
            }
        if (!reducible) out.push_back(cur);
        // next point in the box prod [0, cap_v)
        std::size_t v = 0;
        while (v < n) {
            if (++cur[v] < cap[v]) break;
            cur[v] = 0;
            ++v;
        }
        if (v == n) break;
    }
    std::sort(out.begin(), out.end(),
              [](const Monomial& a, const Monomial& b) { return grevlex_greater(b, a); });
    return out;
}

/// Dimension of the quotient algebra; nullopt means "infinite".
inline std::optional<long> quotient_dimension(const GroebnerBasis& gb) {
    auto st = staircase(gb);
    if (!st) return std::nullopt;
    return static_cast<long>(st->size());
}

/// Test-support check: every S-polynomial of the basis reduces to zero and
/// the transform identity holds exactly.
inline bool verify_groebner(const GroebnerBasis& gb) {
    for (std::size_t i = 0; i < gb.basis.size(); ++i) {
        MultiPoly acc(gb.vars);
        for (std::size_t g = 0; g < gb.generators.size(); ++g)
            acc += gb.transform[i][g] * gb.generators[g];
        if (acc != gb.basis[i]) return false;
    }
    for (std::size_t i = 0; i < gb.basis.size(); ++i) {
        for (std::size_t j = i + 1; j < gb.basis.size(); ++j) {
            Monomial l = detail::mono_lcm(gb.basis[i].leading().first, gb.basis[j].leading().first);
            MultiPoly mi = detail::mono_poly(detail::mono_div(l, gb.basis[i].leading().first), 1, gb.vars);
            MultiPoly mj = detail::mono_poly(detail::mono_div(l, gb.basis[j].leading().first), 1, gb.vars);
            MultiPoly s = mi * gb.basis[i] - mj * gb.basis[j];
            if (!detail::reduce_full(s, gb.basis, nullptr).is_zero()) return false;
        }
    }
    return true;
}

}  // namespace polydisc
