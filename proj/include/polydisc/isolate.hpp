#pragma once

#include <polydisc/interval.hpp>
#include <polydisc/numeric.hpp>

#include <algorithm>
#include <optional>
#include <vector>

namespace polydisc {

/// Certified isolating boxes: pairwise disjoint, exactly one complex root
/// of the (squarefree) polynomial in each, and none missed.
struct IsolationResult {
    UniPoly polynomial;
    std::vector<ComplexBox> boxes;
};

namespace detail {

inline Rational snap_ceil(const Rational& x, const Rational& h) { return ceil_int(x / h) * h; }

inline Rational floor_pow2_leq(const Rational& q) {
    if (q <= 0) throw error("floor_pow2_leq: argument must be positive");
    long s = ceil_log2(q);
    Rational p = two_pow(s);
    while (p > q) p /= 2;
    return p;
}

struct SnappedBox {
    GaussianRational center;
    ComplexBox box;
};

/// Open box of half-width h around the snapped center; fails when the
/// certified disc around `point` does not fit strictly inside.
inline std::optional<SnappedBox> snap_box(const GaussianRational& point, const Rational& radius,
                                          const Rational& h, bool is_real) {
    GaussianRational c;
    if (radius == 0) {
        c = point;  // exact root, center on it
    } else {
        c.re = snap_ceil(point.re, h);
        c.im = is_real ? Rational(0) : snap_ceil(point.im, h);
    }
    if (abs(c.re - point.re) + radius >= h) return std::nullopt;
    if (abs(c.im - point.im) + radius >= h) return std::nullopt;
    return SnappedBox{c, ComplexBox{{c.re - h, c.re + h}, {c.im - h, c.im + h}}};
}

/// Mirrors boxes of conjugate pairs so that the pair stays symmetric.
inline void mirror_conjugates(std::vector<std::optional<SnappedBox>>& snapped,
                              const NumericRoots& nr) {
    for (std::size_t i = 0; i < snapped.size(); ++i) {
        long j = nr.conj_index[i];
        if (j < 0 || static_cast<std::size_t>(j) < i) continue;
        if (nr.points[i].im > 0) {
            if (snapped[i])
                snapped[static_cast<std::size_t>(j)] =
                    SnappedBox{snapped[i]->center.conj(), snapped[i]->box.conjugate()};
        } else if (snapped[static_cast<std::size_t>(j)]) {
            snapped[i] = SnappedBox{snapped[static_cast<std::size_t>(j)]->center.conj(),
                                    snapped[static_cast<std::size_t>(j)]->box.conjugate()};
        }
    }
}

enum class RegionTest { inside, outside, unresolved };

/// Where a root (known to lie within `radius` of `point`) sits relative to
/// an open region box.
inline RegionTest region_classify(const GaussianRational& point, const Rational& radius,
                                  const ComplexBox& region) {
    if (radius == 0) {
        bool strictly_in = point.re > region.re.lo && point.re < region.re.hi &&
                           point.im > region.im.lo && point.im < region.im.hi;
        return strictly_in ? RegionTest::inside : RegionTest::outside;
    }
    bool in = point.re - radius > region.re.lo && point.re + radius < region.re.hi &&
              point.im - radius > region.im.lo && point.im + radius < region.im.hi;
    if (in) return RegionTest::inside;
    bool out = point.re + radius <= region.re.lo || point.re - radius >= region.re.hi ||
               point.im + radius <= region.im.lo || point.im - radius >= region.im.hi;
    if (out) return RegionTest::outside;
    return RegionTest::unresolved;
}

}  // namespace detail

/// Tracks the numeric approximations behind a set of certified isolating
/// boxes, so that repeated refinement stays cheap and deterministic.
/// Boxes only ever shrink (each refined box is intersected with its
/// predecessor) and conjugate pairs are refined symmetrically.
class RootTracker {
public:
    explicit RootTracker(const UniPoly& f) : f_(f), fd_(f.derivative()) {
        if (f.degree() < 1) throw error("no roots to isolate");
        if (f.degree() == 1) {
            NumericRoots nr;
            nr.points = {GaussianRational(-f.coeff(0) / f.coeff(1))};
            nr.radii = {Rational(0)};
            nr.conj_index = {-1};
            nr_ = nr;
            level_ = 0;
        } else {
            escalate(0);
        }
        initial_isolate();
    }

    const UniPoly& poly() const { return f_; }
    const std::vector<ComplexBox>& boxes() const { return boxes_; }
    std::size_t size() const { return boxes_.size(); }
    long conj_partner(std::size_t i) const { return nr_.conj_index[i]; }

    Rational min_width() const {
        Rational w = boxes_.at(0).width();
        for (const auto& b : boxes_) w = std::min(w, b.width());
        return w;
    }

    /// Shrinks box i (and its conjugate partner) to width <= eps, nested
    /// inside the current box.
    void refine(std::size_t i, const Rational& eps) {
        std::size_t lead = i;
        long partner = nr_.conj_index[i];
        if (partner >= 0 && nr_.points[i].im < 0) lead = static_cast<std::size_t>(partner);
        Rational h = detail::floor_pow2_leq(eps / 2);
        while (true) {
            // precision must comfortably resolve the target width
            while (nr_.radii[lead] * 4 >= h) escalate(level_ + 1);
            auto sb = detail::snap_box(nr_.points[lead], nr_.radii[lead], h,
                                       nr_.conj_index[lead] == -1);
            if (!sb) {
                h /= 2;  // grid offset collision, a finer grid resolves it
                continue;
            }
            boxes_[lead] = sb->box.intersect(boxes_[lead]);
            if (partner >= 0) {
                std::size_t other = (lead == i) ? static_cast<std::size_t>(partner) : i;
                boxes_[other] = sb->box.conjugate().intersect(boxes_[other]);
            }
            return;
        }
    }

    void refine_all(const Rational& eps) {
        for (std::size_t i = 0; i < boxes_.size(); ++i)
            if (boxes_[i].width() > eps) refine(i, eps);
    }

    IsolationResult result() const { return {f_, boxes_}; }

private:
    void escalate(unsigned level) {
        for (unsigned l = level; l <= kMaxPrecisionLevel; ++l) {
            auto nr = approximate_roots(f_, l, nr_.points.empty() ? nullptr : &nr_);
            if (nr) {
                nr_ = std::move(*nr);
                level_ = l;
                return;
            }
        }
        throw error("isolation failed: precision ladder exhausted");
    }

    void initial_isolate() {
        while (true) {
            Rational span = 1;
            for (const auto& p : nr_.points)
                span = std::max({span, abs(p.re), abs(p.im)});
            for (const auto& r : nr_.radii) span = std::max(span, r);
            Rational h0 = two_pow(ceil_log2(1 + span));
            if (try_grids(h0)) {
                sort_boxes();
                return;
            }
            escalate(level_ + 1);
        }
    }

    /// Largest grid step (descending powers of two) for which the snapped
    /// boxes certify: disc containment, pairwise disjointness, and
    /// disjointness of the doubled boxes (strong separation).
    bool try_grids(Rational h) {
        while (true) {
            for (const auto& r : nr_.radii)
                if (r * 4 >= h) return false;  // needs more precision first
            std::vector<std::optional<detail::SnappedBox>> snapped(nr_.points.size());
            bool ok = true;
            for (std::size_t i = 0; ok && i < nr_.points.size(); ++i) {
                long cj = nr_.conj_index[i];
                if (cj >= 0 && nr_.points[i].im < 0) continue;  // mirrored from partner
                snapped[i] = detail::snap_box(nr_.points[i], nr_.radii[i], h, cj == -1);
                if (!snapped[i]) ok = false;
            }
            if (ok) {
                detail::mirror_conjugates(snapped, nr_);
                for (std::size_t i = 0; ok && i < snapped.size(); ++i) {
                    for (std::size_t j = i + 1; ok && j < snapped.size(); ++j) {
                        ComplexBox di{{snapped[i]->box.re.lo - snapped[i]->box.width() / 2,
                                       snapped[i]->box.re.hi + snapped[i]->box.width() / 2},
                                      {snapped[i]->box.im.lo - snapped[i]->box.width() / 2,
                                       snapped[i]->box.im.hi + snapped[i]->box.width() / 2}};
                        ComplexBox dj{{snapped[j]->box.re.lo - snapped[j]->box.width() / 2,
                                       snapped[j]->box.re.hi + snapped[j]->box.width() / 2},
                                      {snapped[j]->box.im.lo - snapped[j]->box.width() / 2,
                                       snapped[j]->box.im.hi + snapped[j]->box.width() / 2}};
                        if (!di.disjoint(dj)) ok = false;
                    }
                }
                if (ok) {
                    boxes_.clear();
                    for (auto& s : snapped) boxes_.push_back(s->box);
                    return true;
                }
            }
            h /= 2;
        }
    }

    void sort_boxes() {
        std::vector<std::size_t> idx(boxes_.size());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
            if (boxes_[a].re.lo != boxes_[b].re.lo) return boxes_[a].re.lo < boxes_[b].re.lo;
            return boxes_[a].im.lo < boxes_[b].im.lo;
        });
        std::vector<std::size_t> inv(idx.size());
        for (std::size_t i = 0; i < idx.size(); ++i) inv[idx[i]] = i;
        NumericRoots nnr;
        std::vector<ComplexBox> nb;
        for (std::size_t i : idx) {
            nb.push_back(boxes_[i]);
            nnr.points.push_back(nr_.points[i]);
            nnr.radii.push_back(nr_.radii[i]);
            long cj = nr_.conj_index[i];
            nnr.conj_index.push_back(cj < 0 ? -1 : static_cast<long>(inv[static_cast<std::size_t>(cj)]));
        }
        nnr.digits = nr_.digits;
        nr_ = std::move(nnr);
        boxes_ = std::move(nb);
    }

    UniPoly f_, fd_;
    NumericRoots nr_;
    unsigned level_ = 0;
    std::vector<ComplexBox> boxes_;
};

/// Isolates the complex roots of a squarefree polynomial: disjoint
/// rational-endpoint boxes, one root each. With `region`, only roots
/// strictly inside the open region are reported (boxes clipped to it);
/// with `eps`, all box widths are at most eps.
inline IsolationResult isolate(const UniPoly& f, std::optional<ComplexBox> region = std::nullopt,
                               std::optional<Rational> eps = std::nullopt) {
    if (f.degree() < 1) throw error("no roots to isolate");
    RootTracker tracker(f);
    if (eps) {
        if (*eps <= 0) throw error("isolate: eps must be positive");
        tracker.refine_all(*eps);
    }
    if (!region) return tracker.result();

    // classify each tracked root against the region, tightening as needed
    IsolationResult out{f, {}};
    for (std::size_t i = 0; i < tracker.size(); ++i) {
        Rational shrink = eps ? *eps : tracker.boxes()[i].width();
        for (int rounds = 0;; ++rounds) {
            if (rounds > 200) throw error("isolate: root unresolved against region boundary");
            const ComplexBox& b = tracker.boxes()[i];
            GaussianRational mid = b.midpoint();
            Rational halfw = b.width() / 2;
            // the box certifies the root within halfw of its midpoint
            auto cls = detail::region_classify(mid, b.re.is_point() && b.im.is_point() ? Rational(0) : halfw,
                                               *region);
            if (cls == detail::RegionTest::inside) {
                out.boxes.push_back(b.intersect(*region));
                break;
            }
            if (cls == detail::RegionTest::outside) break;
            shrink /= 2;
            tracker.refine(i, shrink);
        }
    }
    return out;
}

/// Shrinks an isolating box around its single root to width <= eps.
inline ComplexBox refine(const UniPoly& f, const ComplexBox& B, const Rational& eps) {
    IsolationResult r = isolate(f, B, eps);
    if (r.boxes.empty()) throw error("empty refinement");
    if (r.boxes.size() > 1) throw error("refine: box does not isolate a single root");
    return r.boxes[0];
}

}  // namespace polydisc
