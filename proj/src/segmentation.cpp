#include "astf/segmentation.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <cmath>
#include <limits>

namespace astf::seg {

namespace {

using metrics::CellClass;
using SliceData = LossEvaluator::SliceData;

constexpr double kInf = std::numeric_limits<double>::infinity();

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

// Quarter-point offsets (as cell fractions) of the class's visual locations.
struct VisualQuarters {
    std::optional<double> rising;
    std::optional<double> falling;
};

VisualQuarters visual_quarters(CellClass cls) {
    switch (cls) {
        case CellClass::C1:
        case CellClass::C2: return {};
        case CellClass::C3:
        case CellClass::C7: return {std::nullopt, 0.75};
        case CellClass::C4:
        case CellClass::C8: return {0.25, std::nullopt};
        case CellClass::C5:
        case CellClass::C9: return {0.25, 0.75};
        case CellClass::C6:
        case CellClass::C10: return {0.75, 0.25};
    }
    return {};
}

std::pair<int, int> clamped_range(const SegmentationConfig& cfg, std::int64_t span) {
    const int cap = static_cast<int>(std::min<std::int64_t>(
        span, std::numeric_limits<int>::max()));
    return {std::min(cfg.n_min, cap), std::min(cfg.n_max, cap)};
}

}  // namespace

LossEvaluator::LossEvaluator(const StateSequence& seq)
    : span_(seq.span()),
      initial_state_(seq.bits.empty() ? 0 : seq.bits.front()),
      cscps_(extract_cscps(seq)) {
    locations_.reserve(cscps_.size());
    for (const Cscp& c : cscps_) locations_.push_back(c.location);
    // 1-bit count from the run lengths between transitions.
    std::int64_t prev = 0;
    int state = initial_state_;
    for (const Cscp& c : cscps_) {
        if (state) ones_ += c.location - prev;
        prev = c.location;
        state = c.kind == CscpKind::Rising ? 1 : 0;
    }
    if (state) ones_ += span_ - prev;
}

int LossEvaluator::state_at(std::int64_t t) const {
    const auto flips =
        std::upper_bound(locations_.begin(), locations_.end(), t) -
        locations_.begin();
    return initial_state_ ^ static_cast<int>(flips & 1);
}

LossEvaluator::SliceData LossEvaluator::slice_data(std::int64_t lo,
                                                   std::int64_t hi) const {
    SliceData out;
    const auto first = std::lower_bound(locations_.begin(), locations_.end(), lo);
    double rising_sum = 0, falling_sum = 0;
    std::size_t rising_n = 0, falling_n = 0;
    std::size_t count = 0;
    CscpKind first_kind = CscpKind::Rising, last_kind = CscpKind::Rising;
    bool rising_at_lo = false;
    for (auto it = first; it != locations_.end() && *it <= hi; ++it) {
        const Cscp& c = cscps_[it - locations_.begin()];
        if (!cscp_in_slice(c, lo, hi)) continue;
        if (c.location == lo && c.kind == CscpKind::Rising) rising_at_lo = true;
        if (count == 0) first_kind = c.kind;
        last_kind = c.kind;
        ++count;
        if (c.kind == CscpKind::Rising) {
            rising_sum += static_cast<double>(c.location);
            ++rising_n;
        } else {
            falling_sum += static_cast<double>(c.location);
            ++falling_n;
        }
    }
    if (rising_n) out.rising_mean = rising_sum / static_cast<double>(rising_n);
    if (falling_n) out.falling_mean = falling_sum / static_cast<double>(falling_n);

    const int entry = rising_at_lo ? 0 : state_at(lo);
    if (count == 0) {
        out.cls = entry ? CellClass::C2 : CellClass::C1;
    } else if (count == 1) {
        out.cls = first_kind == CscpKind::Rising ? CellClass::C4 : CellClass::C3;
    } else if (count == 2) {
        out.cls = first_kind == CscpKind::Rising ? CellClass::C5 : CellClass::C6;
    } else if (first_kind == CscpKind::Falling && last_kind == CscpKind::Falling) {
        out.cls = CellClass::C7;
    } else if (first_kind == CscpKind::Rising && last_kind == CscpKind::Rising) {
        out.cls = CellClass::C8;
    } else if (first_kind == CscpKind::Rising) {
        out.cls = CellClass::C9;
    } else {
        out.cls = CellClass::C10;
    }
    return out;
}

double LossEvaluator::sim_term(const SliceData& d, std::size_t cell_index,
                               std::size_t n) const {
    const VisualQuarters q = visual_quarters(d.cls);
    const double T = static_cast<double>(span_);
    double term = 0.0;
    if (q.rising) {
        assert(d.rising_mean && "visual rising location without data partner");
        term += std::abs(*d.rising_mean / T -
                         (static_cast<double>(cell_index) + *q.rising) /
                             static_cast<double>(n));
    }
    if (q.falling) {
        assert(d.falling_mean && "visual falling location without data partner");
        term += std::abs(*d.falling_mean / T -
                         (static_cast<double>(cell_index) + *q.falling) /
                             static_cast<double>(n));
    }
    return term;
}

double LossEvaluator::loss_of(const std::vector<SliceData>& data,
                              const std::vector<double>& spans,
                              const metrics::LossWeights& w) const {
    const std::size_t n = data.size();
    double sim = 0.0, dr_sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sim += sim_term(data[i], i, n);
        dr_sum += metrics::visual_duty_ratio(data[i].cls);
    }
    const double actual =
        static_cast<double>(ones_) / static_cast<double>(span_);
    const double dif = std::abs(actual - dr_sum / static_cast<double>(n));
    return w.w1 * sim + w.w2 * dif + w.w3 * metrics::cv_of_spans(spans);
}

double LossEvaluator::evaluate(const Segmentation& seg,
                               const metrics::LossWeights& w) const {
    const std::size_t n = seg.slice_count();
    std::vector<SliceData> data(n);
    std::vector<double> spans(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::int64_t lo = seg.slice_lo(i);
        const std::int64_t hi = seg.slice_hi(i);
        data[i] = slice_data(lo, hi);
        spans[i] = static_cast<double>(hi - lo);
    }
    return loss_of(data, spans, w);
}

Segmentation segment_equal(std::int64_t span, int n) {
    if (n < 1 || static_cast<std::int64_t>(n) > span)
        throw std::invalid_argument("slice count out of range for span");
    Segmentation seg;
    seg.span = span;
    seg.dividing_points.reserve(static_cast<std::size_t>(n) - 1);
    for (int i = 1; i < n; ++i)
        seg.dividing_points.push_back(std::llround(
            static_cast<double>(i) * static_cast<double>(span) / n));
    return seg;
}

Stage1Result bssva_stage1(const LossEvaluator& ev, const SegmentationConfig& cfg) {
    const auto [n_lo, n_hi] = clamped_range(cfg, ev.span());
    Stage1Result best;
    best.loss = kInf;
    for (int n = n_lo; n <= n_hi; ++n) {
        Segmentation seg = segment_equal(ev.span(), n);
        const double l = ev.evaluate(seg, cfg.weights);
        if (l < best.loss) {
            best.loss = l;
            best.n = n;
            best.segmentation = std::move(seg);
        }
    }
    return best;
}

std::vector<CandidateMove> candidate_moves(const LossEvaluator& ev,
                                           const Segmentation& seg,
                                           const std::vector<bool>& active) {
    const auto& locs = ev.cscp_locations();
    const auto& cs = ev.cscps();
    std::vector<CandidateMove> out;
    const std::size_t points = seg.dividing_points.size();
    for (std::size_t pi = 0; pi < points; ++pi) {
        if (!active[pi]) continue;
        const std::int64_t d = seg.dividing_points[pi];
        const std::int64_t lo = seg.slice_lo(pi);
        const std::int64_t hi = seg.slice_hi(pi + 1);

        // Nearest rising edge belonging to the slice before d: all such edges
        // lie in [lo, d), so the nearest is the largest.
        auto it = std::lower_bound(locs.begin(), locs.end(), d);
        for (auto r = it; r != locs.begin();) {
            --r;
            if (*r < lo) break;
            const Cscp& c = cs[r - locs.begin()];
            if (c.kind == CscpKind::Rising) {
                if (c.location > lo && c.location != d)
                    out.push_back({pi, c.location});
                break;
            }
        }
        // Nearest falling edge belonging to the slice after d: all such edges
        // lie in (d, hi], so the nearest is the smallest.
        for (auto f = std::upper_bound(locs.begin(), locs.end(), d);
             f != locs.end() && *f <= hi; ++f) {
            const Cscp& c = cs[f - locs.begin()];
            if (c.kind == CscpKind::Falling) {
                if (c.location < hi && c.location != d)
                    out.push_back({pi, c.location});
                break;
            }
        }
    }
    return out;
}

SegmentationResult bssva_stage2(const LossEvaluator& ev, const Stage1Result& seed,
                                const SegmentationConfig& cfg) {
    SegmentationResult result;
    Segmentation cur = seed.segmentation;
    double accepted = seed.loss;
    std::vector<bool> active(cur.dividing_points.size(), true);

    for (;;) {
        const auto cands = candidate_moves(ev, cur, active);
        if (cands.empty()) break;

        // Candidates are generated in ascending (point index, location)
        // order, so keeping the first strict minimum realizes the tie-break.
        double best_loss = kInf;
        const CandidateMove* best = nullptr;
        for (const CandidateMove& m : cands) {
            Segmentation trial = cur;
            trial.dividing_points[m.point_index] = m.new_location;
            const double l = ev.evaluate(trial, cfg.weights);
            if (l < best_loss) {
                best_loss = l;
                best = &m;
            }
        }
        if (!(best_loss < accepted)) break;
        cur.dividing_points[best->point_index] = best->new_location;
        active[best->point_index] = false;
        accepted = best_loss;
        ++result.iterations;
    }

    result.segmentation = std::move(cur);
    result.loss = accepted;
    result.slice_count = static_cast<int>(result.segmentation.slice_count());
    return result;
}

SegmentationResult bssva(const StateSequence& seq, const SegmentationConfig& cfg) {
    const auto t0 = std::chrono::steady_clock::now();
    LossEvaluator ev(seq);
    const Stage1Result seed = bssva_stage1(ev, cfg);
    SegmentationResult result = bssva_stage2(ev, seed, cfg);
    result.elapsed_s = seconds_since(t0);
    return result;
}

SegmentationResult segment_el(const StateSequence& seq,
                              const SegmentationConfig& cfg) {
    const auto t0 = std::chrono::steady_clock::now();
    LossEvaluator ev(seq);
    const Stage1Result s1 = bssva_stage1(ev, cfg);
    SegmentationResult result;
    result.segmentation = s1.segmentation;
    result.loss = s1.loss;
    result.slice_count = s1.n;
    result.elapsed_s = seconds_since(t0);
    return result;
}

SegmentationResult segment_sw(const StateSequence& seq,
                              const SegmentationConfig& cfg) {
    const auto t0 = std::chrono::steady_clock::now();
    LossEvaluator ev(seq);
    const auto [n_lo, n_hi] = clamped_range(cfg, ev.span());
    const auto& locs = ev.cscp_locations();
    const std::int64_t T = ev.span();

    SegmentationResult result;
    result.loss = kInf;
    for (int n = n_lo; n <= n_hi; ++n) {
        const double target = static_cast<double>(T) / n;
        Segmentation seg;
        seg.span = T;
        std::int64_t prev = 0;
        for (int k = 1; k < n; ++k) {
            const double p = static_cast<double>(prev) + target;
            std::int64_t cut = std::llround(p);
            // Snap to the CSCP boundary nearest to the running target when one
            // lies within half a target span; earlier location wins ties.
            auto it = std::lower_bound(locs.begin(), locs.end(),
                                       static_cast<std::int64_t>(std::ceil(p)));
            std::int64_t snap = -1;
            double snap_dist = target / 2.0;
            if (it != locs.begin()) {
                const std::int64_t c = *(it - 1);
                const double dist = std::abs(p - static_cast<double>(c));
                if (dist <= snap_dist) {
                    snap = c;
                    snap_dist = dist;
                }
            }
            if (it != locs.end()) {
                const std::int64_t c = *it;
                const double dist = std::abs(static_cast<double>(c) - p);
                if (dist <= snap_dist && (snap < 0 || dist < snap_dist)) snap = c;
            }
            if (snap >= 0) cut = snap;
            cut = std::max(cut, prev + 1);
            cut = std::min(cut, T - static_cast<std::int64_t>(n - k));
            seg.dividing_points.push_back(cut);
            prev = cut;
        }
        const double l = ev.evaluate(seg, cfg.weights);
        if (l < result.loss) {
            result.loss = l;
            result.segmentation = std::move(seg);
            result.slice_count = n;
        }
    }
    result.elapsed_s = seconds_since(t0);
    return result;
}

namespace {

// Mutable slice table shared by the BU/TD/FP reference bodies. Hypothetical
// merge and split losses are computed without materializing the modified
// segmentation; the span passes mirror metrics::cv_of_spans so recorded
// losses match a direct recomputation.
class SliceTable {
public:
    SliceTable(const LossEvaluator& ev, const metrics::LossWeights& w,
               Segmentation seg)
        : ev_(ev), w_(w), seg_(std::move(seg)) {
        const std::size_t n = seg_.slice_count();
        data_.resize(n);
        spans_.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            data_[i] = ev_.slice_data(seg_.slice_lo(i), seg_.slice_hi(i));
            spans_[i] = static_cast<double>(seg_.slice_hi(i) - seg_.slice_lo(i));
        }
    }

    std::size_t slice_count() const { return data_.size(); }
    const Segmentation& segmentation() const { return seg_; }
    std::int64_t slice_lo(std::size_t i) const { return seg_.slice_lo(i); }
    std::int64_t slice_hi(std::size_t i) const { return seg_.slice_hi(i); }

    double loss() const { return ev_.loss_of(data_, spans_, w_); }

    // Loss after removing dividing point j (merging slices j and j+1).
    double merge_loss(std::size_t j, SliceData& merged) const {
        const std::size_t n = data_.size();
        merged = ev_.slice_data(slice_lo(j), slice_hi(j + 1));
        double sim = 0.0, dr_sum = 0.0, span_sum = 0.0;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            const SliceData& d = hypothetical_merge_at(i, j, merged);
            sim += ev_.sim_term(d, i, n - 1);
            dr_sum += metrics::visual_duty_ratio(d.cls);
            span_sum += merged_span(i, j);
        }
        const double mean = span_sum / static_cast<double>(n - 1);
        double sqdev = 0.0;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            const double t = merged_span(i, j);
            sqdev += (t - mean) * (t - mean);
        }
        const double cv = std::sqrt(sqdev / static_cast<double>(n - 1)) / mean;
        return combine(sim, dr_sum, n - 1, cv);
    }

    void apply_merge(std::size_t j, const SliceData& merged) {
        data_[j] = merged;
        spans_[j] += spans_[j + 1];
        data_.erase(data_.begin() + static_cast<std::ptrdiff_t>(j) + 1);
        spans_.erase(spans_.begin() + static_cast<std::ptrdiff_t>(j) + 1);
        seg_.dividing_points.erase(seg_.dividing_points.begin() +
                                   static_cast<std::ptrdiff_t>(j));
    }

    // Loss after splitting slice s at interior point c.
    double split_loss(std::size_t s, std::int64_t c, SliceData& left,
                      SliceData& right) const {
        const std::size_t n = data_.size();
        left = ev_.slice_data(slice_lo(s), c);
        right = ev_.slice_data(c, slice_hi(s));
        double sim = 0.0, dr_sum = 0.0, span_sum = 0.0;
        for (std::size_t i = 0; i < n + 1; ++i) {
            const SliceData& d = hypothetical_split_at(i, s, left, right);
            sim += ev_.sim_term(d, i, n + 1);
            dr_sum += metrics::visual_duty_ratio(d.cls);
            span_sum += split_span(i, s, c);
        }
        const double mean = span_sum / static_cast<double>(n + 1);
        double sqdev = 0.0;
        for (std::size_t i = 0; i < n + 1; ++i) {
            const double t = split_span(i, s, c);
            sqdev += (t - mean) * (t - mean);
        }
        const double cv = std::sqrt(sqdev / static_cast<double>(n + 1)) / mean;
        return combine(sim, dr_sum, n + 1, cv);
    }

    void apply_split(std::size_t s, std::int64_t c, const SliceData& left,
                     const SliceData& right) {
        const double left_span = static_cast<double>(c - slice_lo(s));
        const double right_span = static_cast<double>(slice_hi(s) - c);
        data_[s] = left;
        spans_[s] = left_span;
        data_.insert(data_.begin() + static_cast<std::ptrdiff_t>(s) + 1, right);
        spans_.insert(spans_.begin() + static_cast<std::ptrdiff_t>(s) + 1,
                      right_span);
        auto it = std::lower_bound(seg_.dividing_points.begin(),
                                   seg_.dividing_points.end(), c);
        seg_.dividing_points.insert(it, c);
    }

    // Index of the longest slice, earliest on ties.
    std::size_t longest_slice() const {
        std::size_t best = 0;
        for (std::size_t i = 1; i < spans_.size(); ++i)
            if (spans_[i] > spans_[best]) best = i;
        return best;
    }

private:
    const LossEvaluator& ev_;
    const metrics::LossWeights& w_;
    Segmentation seg_;
    std::vector<SliceData> data_;
    std::vector<double> spans_;

    const SliceData& hypothetical_merge_at(std::size_t i, std::size_t j,
                                           const SliceData& merged) const {
        if (i < j) return data_[i];
        if (i == j) return merged;
        return data_[i + 1];
    }
    double merged_span(std::size_t i, std::size_t j) const {
        if (i < j) return spans_[i];
        if (i == j) return spans_[j] + spans_[j + 1];
        return spans_[i + 1];
    }
    const SliceData& hypothetical_split_at(std::size_t i, std::size_t s,
                                           const SliceData& left,
                                           const SliceData& right) const {
        if (i < s) return data_[i];
        if (i == s) return left;
        if (i == s + 1) return right;
        return data_[i - 1];
    }
    double split_span(std::size_t i, std::size_t s, std::int64_t c) const {
        if (i < s) return spans_[i];
        if (i == s) return static_cast<double>(c - slice_lo(s));
        if (i == s + 1) return static_cast<double>(slice_hi(s) - c);
        return spans_[i - 1];
    }
    double combine(double sim, double dr_sum, std::size_t n, double cv) const {
        const double actual = static_cast<double>(ev_.ones()) /
                              static_cast<double>(ev_.span());
        const double dif = std::abs(actual - dr_sum / static_cast<double>(n));
        return w_.w1 * sim + w_.w2 * dif + w_.w3 * cv;
    }
};

}  // namespace

SegmentationResult segment_bu(const StateSequence& seq,
                              const SegmentationConfig& cfg) {
    const auto t0 = std::chrono::steady_clock::now();
    LossEvaluator ev(seq);
    const auto [n_lo, n_hi] = clamped_range(cfg, ev.span());
    const int initial = static_cast<int>(
        std::min<std::int64_t>(500, ev.span()));

    SliceTable table(ev, cfg.weights, segment_equal(ev.span(), initial));

    SegmentationResult result;
    result.loss = kInf;
    auto record = [&](double loss) {
        const int n = static_cast<int>(table.slice_count());
        if (n >= n_lo && n <= n_hi && loss < result.loss) {
            result.loss = loss;
            result.segmentation = table.segmentation();
            result.slice_count = n;
        }
    };
    record(table.loss());

    while (static_cast<int>(table.slice_count()) > n_lo) {
        double best_loss = kInf;
        std::size_t best_j = 0;
        SliceData best_merged;
        for (std::size_t j = 0; j + 1 < table.slice_count(); ++j) {
            SliceData merged;
            const double l = table.merge_loss(j, merged);
            if (l < best_loss) {
                best_loss = l;
                best_j = j;
                best_merged = merged;
            }
        }
        table.apply_merge(best_j, best_merged);
        record(best_loss);
    }
    result.elapsed_s = seconds_since(t0);
    return result;
}

SegmentationResult segment_td(const StateSequence& seq,
                              const SegmentationConfig& cfg) {
    const auto t0 = std::chrono::steady_clock::now();
    LossEvaluator ev(seq);
    const auto [n_lo, n_hi] = clamped_range(cfg, ev.span());
    const auto& locs = ev.cscp_locations();

    Segmentation whole;
    whole.span = ev.span();
    SliceTable table(ev, cfg.weights, whole);
    std::vector<bool> used(locs.size(), false);

    SegmentationResult result;
    result.loss = kInf;
    auto record = [&](double loss) {
        const int n = static_cast<int>(table.slice_count());
        if (n >= n_lo && n <= n_hi && loss < result.loss) {
            result.loss = loss;
            result.segmentation = table.segmentation();
            result.slice_count = n;
        }
    };
    record(table.loss());

    while (static_cast<int>(table.slice_count()) < n_hi) {
        double best_loss = kInf;
        std::size_t best_slice = 0;
        std::int64_t best_cut = -1;
        std::size_t best_cscp = locs.size();
        SliceData best_left, best_right;

        for (std::size_t ci = 0; ci < locs.size(); ++ci) {
            if (used[ci]) continue;
            const std::int64_t c = locs[ci];
            const auto& pts = table.segmentation().dividing_points;
            const std::size_t s = static_cast<std::size_t>(
                std::upper_bound(pts.begin(), pts.end(), c) - pts.begin());
            if (c <= table.slice_lo(s) || c >= table.slice_hi(s)) {
                used[ci] = true;  // coincides with an existing boundary
                continue;
            }
            SliceData left, right;
            const double l = table.split_loss(s, c, left, right);
            if (l < best_loss) {
                best_loss = l;
                best_slice = s;
                best_cut = c;
                best_cscp = ci;
                best_left = left;
                best_right = right;
            }
        }
        if (best_cut < 0) {
            // No CSCP boundary available: split the longest slice midway.
            const std::size_t s = table.longest_slice();
            const std::int64_t lo = table.slice_lo(s);
            const std::int64_t hi = table.slice_hi(s);
            if (hi - lo < 2) break;
            const std::int64_t c = lo + (hi - lo) / 2;
            SliceData left, right;
            best_loss = table.split_loss(s, c, left, right);
            table.apply_split(s, c, left, right);
        } else {
            used[best_cscp] = true;
            table.apply_split(best_slice, best_cut, best_left, best_right);
        }
        record(best_loss);
    }
    result.elapsed_s = seconds_since(t0);
    return result;
}

SegmentationResult segment_fp(const StateSequence& seq,
                              const SegmentationConfig& cfg) {
    const auto t0 = std::chrono::steady_clock::now();
    LossEvaluator ev(seq);
    const auto [n_lo, n_hi] = clamped_range(cfg, ev.span());

    Segmentation seg;
    seg.span = ev.span();
    seg.dividing_points = ev.cscp_locations();
    SliceTable table(ev, cfg.weights, std::move(seg));

    // Too many feature points: greedily drop the one whose removal hurts least.
    while (static_cast<int>(table.slice_count()) > n_hi) {
        double best_loss = kInf;
        std::size_t best_j = 0;
        SliceData best_merged;
        for (std::size_t j = 0; j + 1 < table.slice_count(); ++j) {
            SliceData merged;
            const double l = table.merge_loss(j, merged);
            if (l < best_loss) {
                best_loss = l;
                best_j = j;
                best_merged = merged;
            }
        }
        table.apply_merge(best_j, best_merged);
    }
    // Too few: add equal-division points inside the longest slices.
    while (static_cast<int>(table.slice_count()) < n_lo) {
        const std::size_t s = table.longest_slice();
        const std::int64_t lo = table.slice_lo(s);
        const std::int64_t hi = table.slice_hi(s);
        if (hi - lo < 2) break;
        const std::int64_t c = lo + (hi - lo) / 2;
        SliceData left, right;
        table.split_loss(s, c, left, right);
        table.apply_split(s, c, left, right);
    }

    SegmentationResult result;
    result.segmentation = table.segmentation();
    result.loss = table.loss();
    result.slice_count = static_cast<int>(table.slice_count());
    result.elapsed_s = seconds_since(t0);
    return result;
}

SegmentFn algorithm_by_name(const std::string& name) {
    if (name == "bssva") return &bssva;
    if (name == "el") return &segment_el;
    if (name == "sw") return &segment_sw;
    if (name == "bu") return &segment_bu;
    if (name == "td") return &segment_td;
    if (name == "fp") return &segment_fp;
    throw std::invalid_argument("unknown algorithm: " + name);
}

const std::vector<std::string>& algorithm_names() {
    static const std::vector<std::string> names = {"bssva", "el", "sw",
                                                   "bu",    "td", "fp"};
    return names;
}

}  // namespace astf::seg
