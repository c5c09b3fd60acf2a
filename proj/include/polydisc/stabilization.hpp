#pragma once

#include <polydisc/stabilizability.hpp>

#include <optional>
#include <vector>

namespace polydisc {

struct not_stabilizable : error {
    using error::error;
};

/// Rational approximations of the variety's parameter values, each box
/// refined until some coordinate is certified strictly outside the unit
/// disc; gamma_i is the exact midpoint of the final box.
struct ApproxSpectrum {
    std::vector<GaussianRational> gammas;
    std::vector<std::size_t> var_index;  // k_i (0-based): |g_{k_i}(gamma_i)| > 1 certified
    Rational eps;                        // |gamma_i - root_i| <= eps per coordinate
    UniPoly f_tilde;                     // prod (t - gamma_i)
};

struct StabilityCertificate {
    Rational lower_bound;      // L: |s~(lambda)| >= L on the closed polydisc
    Rational correction_norm;  // N: |correction(lambda)| <= N on the closed polydisc
    Rational eps_used;
};

struct StabilityResult {
    MultiPoly s;
    std::vector<MultiPoly> cofactors;  // over the original generators
    MultiPoly s_tilde;
    UniPoly h0;
    StabilityCertificate certificate;
    unsigned membership_power = 1;  // s = base^power when the input ideal is not radical
    ApproxSpectrum spectrum;
    std::optional<UnivariateRepresentation> ur;
    std::string note;
};

namespace detail {

struct HalvingBudget {
    Rational eps;
    unsigned long remaining;

    void halve(const char* what) {
        if (remaining == 0) throw not_stabilizable(what);
        eps /= 2;
        --remaining;
    }
};

/// Per-box loop of the construction: test the circle-distance enclosures
/// in variable order, refine on failure, take the exact midpoint on the
/// first strictly positive hit.
inline ApproxSpectrum approx_spectrum_impl(const UnivariateRepresentation& ur,
                                           RootTracker& tracker,
                                           const std::vector<MultiPoly>& C,
                                           HalvingBudget& budget) {
    std::size_t n = ur.vars.size();
    std::size_t d = tracker.size();
    ApproxSpectrum sp;
    sp.gammas.resize(d);
    sp.var_index.resize(d);
    for (std::size_t i = 0; i < d; ++i) {
        std::optional<std::size_t> hit;
        while (!hit) {
            for (std::size_t k = 0; k < n; ++k) {
                if (classify(box_eval(C[k], tracker.boxes()[i])) == IntervalSign::strictly_positive) {
                    hit = k;
                    break;
                }
            }
            if (!hit) {
                budget.halve("not stabilizable or cap exceeded");
                tracker.refine(i, budget.eps);
            }
        }
        GaussianRational gamma = tracker.boxes()[i].midpoint();
        // the box test already bounds |g| above 1 at every box point, the
        // exact midpoint inequality is re-checked all the same
        while (ur.g[*hit].evaluate(gamma).norm() <= 1) {
            budget.halve("not stabilizable or cap exceeded");
            tracker.refine(i, budget.eps);
            gamma = tracker.boxes()[i].midpoint();
        }
        sp.gammas[i] = gamma;
        sp.var_index[i] = *hit;
    }
    // eps must dominate every |gamma_i - root_i|; the box half-width does
    Rational worst = budget.eps;
    for (std::size_t i = 0; i < d; ++i)
        worst = std::max(worst, tracker.boxes()[i].width() / 2);
    sp.eps = worst;

    detail::CUniPoly ft{UniPoly::constant("t", 1), UniPoly("t")};
    for (const auto& gma : sp.gammas) {
        detail::CUniPoly lin{UniPoly("t", {-gma.re, Rational(1)}), UniPoly("t", {-gma.im})};
        ft = ft * lin;
    }
    if (!ft.im.is_zero()) throw error("approx_spectrum: conjugate symmetry violated");
    sp.f_tilde = ft.re;
    return sp;
}

}  // namespace detail

/// Construction step: the approximately-factored stable polynomial, the
/// Euclidean quotient h0, and the corrected s back in the z variables.
inline std::tuple<MultiPoly, UniPoly, MultiPoly> build_stable(const UnivariateRepresentation& ur,
                                                              const ApproxSpectrum& spec) {
    std::size_t n = ur.vars.size();
    MultiPoly s_tilde = MultiPoly::constant(1, ur.vars);
    for (std::size_t k = 0; k < n; ++k) {
        detail::CUniPoly rk{UniPoly::constant(ur.vars[k], 1), UniPoly(ur.vars[k])};
        for (std::size_t i = 0; i < spec.gammas.size(); ++i) {
            if (spec.var_index[i] != k) continue;
            GaussianRational w = ur.g[k].evaluate(spec.gammas[i]);
            detail::CUniPoly lin{UniPoly(ur.vars[k], {-w.re, Rational(1)}),
                                 UniPoly(ur.vars[k], {-w.im})};
            rk = rk * lin;
        }
        if (!rk.im.is_zero()) throw error("build_stable: conjugate symmetry violated");
        s_tilde *= rk.re.to_multi();
    }
    // s~ with every z_k replaced by g_k(t), then the Euclidean quotient by f~
    MultiPoly st = s_tilde;
    for (std::size_t k = 0; k < n; ++k)
        st = st.substitute(ur.vars[k], ur.g[k].to_multi());
    UniPoly s_tilde_t = st.is_constant() ? UniPoly::constant("t", st.is_zero() ? Rational(0) : st.constant_value())
                                         : UniPoly::from_multi(st, "t");
    auto [h0, rem] = s_tilde_t.divrem(spec.f_tilde);
    if (!rem.is_zero()) throw error("build_stable: division by f~ not exact");
    UniPoly corr_t = h0 * (spec.f_tilde - ur.f);
    MultiPoly s = s_tilde - corr_t.to_multi().substitute("t", ur.separating_form());
    return {s_tilde, h0, s};
}

/// Exact rational stability certificate: L = prod_i lb_i with lb_i a
/// lower bound on |g_{k_i}(gamma_i)| - 1, and N the l1 norm of the
/// correction term in the z variables. L > N proves |s| > 0 on the
/// closed unit polydisc.
inline std::tuple<bool, Rational, Rational> certify_stable(const MultiPoly& /*s*/,
                                                           const UnivariateRepresentation& ur,
                                                           const ApproxSpectrum& spec,
                                                           const UniPoly& h0) {
    Rational L = 1;
    for (std::size_t i = 0; i < spec.gammas.size(); ++i) {
        Rational M = ur.g[spec.var_index[i]].evaluate(spec.gammas[i]).norm();
        if (M <= 1) return {false, Rational(0), Rational(0)};
        Rational U = (M + 1) / 2;  // upper bound on sqrt(M)
        L *= (M - 1) / (1 + U);
    }
    UniPoly corr_t = h0 * (spec.f_tilde - ur.f);
    Rational N = corr_t.to_multi().substitute("t", ur.separating_form()).l1_norm();
    return {L > N, L, N};
}

struct StablePolyOptions {
    std::optional<Rational> initial_eps;
    unsigned long max_halvings = 64;
};

/// Full construction: certify stabilizability, then iterate
/// approximate-factor / correct / certify with eps halving until the
/// rational certificate closes; cofactors come from the exact normal
/// form against the original generators.
inline StabilityResult stable_polynomial(const std::vector<MultiPoly>& polys,
                                         const StablePolyOptions& opts = {}) {
    Ideal ideal = Ideal::of(polys);
    GroebnerBasis gb = groebner(ideal);
    auto qd = quotient_dimension(gb);
    if (!qd) throw not_zero_dimensional("ideal not zero-dimensional");

    StabilityResult out;
    if (*qd == 0) {
        // empty variety: 1 is a stable member of the unit ideal
        out.s = MultiPoly::constant(1, ideal.vars);
        auto nf = normal_form(out.s, gb);
        if (!nf.remainder.is_zero()) throw error("stable_polynomial: internal membership failure");
        out.cofactors = nf.cofactors_generators;
        out.s_tilde = out.s;
        out.h0 = UniPoly::constant("t", 0);
        out.certificate = {Rational(1), Rational(0), Rational(0)};
        out.spectrum.f_tilde = UniPoly::constant("t", 1);
        out.note = "empty variety";
        return out;
    }

    UnivariateRepresentation ur = univ_r(polys);
    RootTracker tracker(ur.f);
    auto alg1 = detail::run_algorithm1(ur, tracker);
    if (!alg1.stabilizable) throw not_stabilizable("system not stabilizable");

    std::vector<MultiPoly> C;
    for (std::size_t k = 0; k < ur.vars.size(); ++k) C.push_back(circle_distance_poly(ur.g[k]));

    detail::HalvingBudget budget{opts.initial_eps ? *opts.initial_eps : tracker.min_width(),
                                 opts.max_halvings};
    while (true) {
        ApproxSpectrum sp = detail::approx_spectrum_impl(ur, tracker, C, budget);
        auto [s_tilde, h0, s] = build_stable(ur, sp);
        auto [ok, L, N] = certify_stable(s, ur, sp, h0);
        if (ok) {
            out.s = s;
            out.s_tilde = s_tilde;
            out.h0 = h0;
            out.certificate = {L, N, sp.eps};
            out.spectrum = std::move(sp);
            break;
        }
        budget.halve("not stabilizable or cap exceeded");
        tracker.refine_all(budget.eps);
    }

    // exact membership; non-radical ideals may need a power of s
    MultiPoly candidate = out.s;
    for (unsigned power = 1; power <= static_cast<unsigned>(*qd) + 1; ++power) {
        auto nf = normal_form(candidate, gb);
        if (nf.remainder.is_zero()) {
            out.cofactors = nf.cofactors_generators;
            out.membership_power = power;
            if (power > 1) {
                out.s = candidate;
                Rational base = out.certificate.lower_bound - out.certificate.correction_norm;
                out.certificate.lower_bound = pow_rat(base, power);
                out.certificate.correction_norm = 0;
                out.note = "ideal not radical: returned a power of the constructed polynomial";
            }
            out.ur = std::move(ur);
            return out;
        }
        candidate = candidate * out.s;
    }
    throw error("stable_polynomial: membership failed up to the quotient-dimension power");
}

/// Approximate spectrum as a standalone operation (the spec's interface):
/// refines the given isolation to certify each root outside the polydisc
/// in some coordinate and returns exact midpoints.
inline ApproxSpectrum approx_spectrum(const UnivariateRepresentation& ur,
                                      const IsolationResult& boxes, const Rational& eps,
                                      unsigned long max_halvings = 64) {
    if (!(boxes.polynomial == ur.f)) throw error("approx_spectrum: isolation does not match ur.f");
    RootTracker tracker(ur.f);
    // adopt the caller's refinement level, matching boxes by the root
    // they enclose
    for (const ComplexBox& cb : boxes.boxes) {
        for (std::size_t i = 0; i < tracker.size(); ++i) {
            if (tracker.boxes()[i].disjoint(cb)) continue;
            if (tracker.boxes()[i].width() > cb.width()) tracker.refine(i, cb.width());
            break;
        }
    }
    std::vector<MultiPoly> C;
    for (std::size_t k = 0; k < ur.vars.size(); ++k) C.push_back(circle_distance_poly(ur.g[k]));
    detail::HalvingBudget budget{eps, max_halvings};
    return detail::approx_spectrum_impl(ur, tracker, C, budget);
}

}  // namespace polydisc
