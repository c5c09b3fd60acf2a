#pragma once

#include <polydisc/isolate.hpp>
#include <polydisc/real_roots.hpp>
#include <polydisc/rur.hpp>

#include <optional>
#include <vector>

namespace polydisc {

/// Number of points of V(I) with |z_k| = 1, via the elimination
/// polynomial r_k = Res_t(f, z_k - g_k) whose root multiplicities count
/// the points sharing a z_k coordinate.
inline long circle_count(const UnivariateRepresentation& ur, std::size_t k) {
    const std::string& zk = ur.vars.at(k);
    MultiPoly fz = ur.f.to_multi();
    MultiPoly lin = MultiPoly::variable(zk, {zk, "t"}) - ur.g[k].to_multi().in_context({zk, "t"});
    MultiPoly rk = resultant(fz, lin, "t");
    return count_circle_roots(UniPoly::from_multi(rk, zk));
}

/// One solution enclosure: a box per coordinate, with the coordinates
/// certified to sit exactly on the unit circle flagged.
struct WitnessPoint {
    std::vector<ComplexBox> coords;
    std::vector<bool> on_circle;
    ComplexBox t_box;
};

struct StabilizabilityVerdict {
    bool stabilizable = false;
    std::vector<WitnessPoint> witnesses;
    std::vector<long> circle_counts;
    std::optional<UnivariateRepresentation> ur;
    std::string note;
};

namespace detail {

struct Algorithm1State {
    bool stabilizable = false;
    std::vector<std::size_t> survivors;
    std::vector<std::vector<bool>> circle_flag;  // [box][var]
    std::vector<long> l;
    Rational eps;
};

/// The box-refinement loop: for each variable, refine all boxes until at
/// most l_k of them keep 0 in the enclosure of C(g_k), then drop the
/// certified-outside boxes. Counting runs over all d boxes (discarded
/// ones included) because l_k counts every point of V(I) on the circle.
inline Algorithm1State run_algorithm1(const UnivariateRepresentation& ur, RootTracker& tracker) {
    std::size_t n = ur.vars.size();
    std::size_t d = tracker.size();
    Algorithm1State st;
    st.circle_flag.assign(d, std::vector<bool>(n, false));
    st.eps = tracker.min_width();

    std::vector<MultiPoly> C;
    C.reserve(n);
    for (std::size_t k = 0; k < n; ++k) C.push_back(circle_distance_poly(ur.g[k]));

    std::vector<bool> live(d, true);
    std::size_t live_count = d;
    for (std::size_t k = 0; k < n; ++k) {
        st.l.push_back(circle_count(ur, k));
        while (true) {
            long zero_boxes = 0;
            for (std::size_t i = 0; i < d; ++i)
                if (classify(box_eval(C[k], tracker.boxes()[i])) == IntervalSign::contains_zero)
                    ++zero_boxes;
            if (zero_boxes <= st.l[k]) break;
            st.eps /= 2;
            tracker.refine_all(st.eps);
        }
        for (std::size_t i = 0; i < d; ++i) {
            IntervalSign sign = classify(box_eval(C[k], tracker.boxes()[i]));
            if (sign == IntervalSign::contains_zero) st.circle_flag[i][k] = true;
            if (live[i] && sign == IntervalSign::strictly_positive) {
                live[i] = false;
                --live_count;
            }
        }
        if (live_count == 0) {
            st.stabilizable = true;
            return st;
        }
    }
    for (std::size_t i = 0; i < d; ++i)
        if (live[i]) st.survivors.push_back(i);
    st.stabilizable = false;
    return st;
}

inline WitnessPoint make_witness(const UnivariateRepresentation& ur, const ComplexBox& box,
                                 const std::vector<bool>& flags) {
    WitnessPoint w;
    w.t_box = box;
    for (std::size_t k = 0; k < ur.vars.size(); ++k) {
        auto [re, im] = complex_split(ur.g[k]);
        w.coords.push_back(ComplexBox{box_eval(re, box), box_eval(im, box)});
        w.on_circle.push_back(flags[k]);
    }
    return w;
}

}  // namespace detail

/// Decides V(<polys>) intersect closed-unit-polydisc = empty, with
/// certified witnesses when the answer is no.
inline StabilizabilityVerdict is_stabilizable(const std::vector<MultiPoly>& polys) {
    Ideal ideal = Ideal::of(polys);
    GroebnerBasis gb = groebner(ideal);
    auto qd = quotient_dimension(gb);
    if (!qd) throw not_zero_dimensional("ideal not zero-dimensional");
    StabilizabilityVerdict v;
    if (*qd == 0) {
        v.stabilizable = true;
        v.note = "empty variety";
        v.circle_counts.assign(ideal.vars.size(), 0);
        return v;
    }
    v.ur = univ_r(polys);
    RootTracker tracker(v.ur->f);
    auto st = detail::run_algorithm1(*v.ur, tracker);
    v.circle_counts = st.l;
    v.stabilizable = st.stabilizable;
    if (!st.stabilizable) {
        for (std::size_t i : st.survivors)
            v.witnesses.push_back(detail::make_witness(*v.ur, tracker.boxes()[i], st.circle_flag[i]));
    }
    return v;
}

}  // namespace polydisc
