#include "astf/metrics.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>

namespace astf::metrics {

bool LossWeights::valid() const {
    auto in_range = [](double w) { return w > 0.0 && w <= 1.0; };
    return in_range(w1) && in_range(w2) && in_range(w3) &&
           std::abs(w1 + w2 + w3 - 1.0) <= 1e-9;
}

CellClass classify_slice(const std::vector<Cscp>& cscps, int entry_state) {
    if (cscps.empty()) return entry_state ? CellClass::C2 : CellClass::C1;

    const CscpKind first = cscps.front().kind;
    const CscpKind last = cscps.back().kind;
    const bool first_rising = first == CscpKind::Rising;
    if ((entry_state == 0) != first_rising)
        throw std::invalid_argument("state mismatch");

    if (cscps.size() == 1)
        return first_rising ? CellClass::C4 : CellClass::C3;
    if (cscps.size() == 2)
        return first_rising ? CellClass::C5 : CellClass::C6;
    if (first == CscpKind::Falling && last == CscpKind::Falling) return CellClass::C7;
    if (first == CscpKind::Rising && last == CscpKind::Rising) return CellClass::C8;
    if (first == CscpKind::Rising && last == CscpKind::Falling) return CellClass::C9;
    return CellClass::C10;
}

int slice_entry_state(const StateSequence& seq, const std::vector<Cscp>& all_cscps,
                      std::int64_t lo) {
    for (const Cscp& c : all_cscps) {
        if (c.location == lo) return c.kind == CscpKind::Rising ? 0 : seq.bits[lo];
        if (c.location > lo) break;
    }
    return seq.bits[lo];
}

std::vector<TaggedLocation> visual_cscp_locations(CellClass cls, double c_lo,
                                                  double c_hi) {
    const double q1 = c_lo + (c_hi - c_lo) * 0.25;
    const double q3 = c_lo + (c_hi - c_lo) * 0.75;
    switch (cls) {
        case CellClass::C1:
        case CellClass::C2:
            return {};
        case CellClass::C3:
        case CellClass::C7:
            return {{CscpKind::Falling, q3}};
        case CellClass::C4:
        case CellClass::C8:
            return {{CscpKind::Rising, q1}};
        case CellClass::C5:
        case CellClass::C9:
            return {{CscpKind::Rising, q1}, {CscpKind::Falling, q3}};
        case CellClass::C6:
        case CellClass::C10:
            return {{CscpKind::Falling, q1}, {CscpKind::Rising, q3}};
    }
    return {};
}

std::vector<TaggedLocation> aggregate_data_locations(const std::vector<Cscp>& cscps) {
    double rising_sum = 0, falling_sum = 0;
    std::size_t rising_n = 0, falling_n = 0;
    for (const Cscp& c : cscps) {
        if (c.kind == CscpKind::Rising) {
            rising_sum += static_cast<double>(c.location);
            ++rising_n;
        } else {
            falling_sum += static_cast<double>(c.location);
            ++falling_n;
        }
    }
    std::vector<TaggedLocation> out;
    if (rising_n) out.push_back({CscpKind::Rising, rising_sum / rising_n});
    if (falling_n) out.push_back({CscpKind::Falling, falling_sum / falling_n});
    return out;
}

double visual_duty_ratio(CellClass cls) {
    switch (cls) {
        case CellClass::C1: return 0.0;
        case CellClass::C2: return 1.0;
        case CellClass::C3:
        case CellClass::C4:
        case CellClass::C7:
        case CellClass::C8: return 0.75;
        case CellClass::C5:
        case CellClass::C6:
        case CellClass::C9:
        case CellClass::C10: return 0.5;
    }
    return 0.0;
}

double cv_of_spans(const std::vector<double>& spans) {
    const double n = static_cast<double>(spans.size());
    double sum = 0.0;
    for (double t : spans) sum += t;
    const double mean = sum / n;
    double sqdev = 0.0;
    for (double t : spans) sqdev += (t - mean) * (t - mean);
    return std::sqrt(sqdev / n) / mean;
}

double sim_cd(const StateSequence& seq, const Segmentation& seg,
              const VisualGeometry& geom) {
    const auto all = extract_cscps(seq);
    const double T = static_cast<double>(seg.span);
    const double L = geom.axis_length;
    const std::size_t n = seg.slice_count();
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const std::int64_t lo = seg.slice_lo(i);
        const std::int64_t hi = seg.slice_hi(i);
        const auto slice = cscps_in_slice(all, lo, hi);
        const CellClass cls = classify_slice(slice, slice_entry_state(seq, all, lo));
        const double c_lo = static_cast<double>(i) * L / static_cast<double>(n);
        const double c_hi = static_cast<double>(i + 1) * L / static_cast<double>(n);
        const auto visual = visual_cscp_locations(cls, c_lo, c_hi);
        const auto aggregated = aggregate_data_locations(slice);
        for (const TaggedLocation& v : visual) {
            const TaggedLocation* paired = nullptr;
            for (const TaggedLocation& d : aggregated)
                if (d.kind == v.kind) paired = &d;
            assert(paired && "visual location without a data-space partner");
            sum += std::abs(paired->position / T - v.position / L);
        }
    }
    return sum;
}

double dif_dr(const StateSequence& seq, const Segmentation& seg) {
    const auto all = extract_cscps(seq);
    const std::size_t n = seg.slice_count();
    double visual_sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const std::int64_t lo = seg.slice_lo(i);
        const std::int64_t hi = seg.slice_hi(i);
        const auto slice = cscps_in_slice(all, lo, hi);
        const CellClass cls = classify_slice(slice, slice_entry_state(seq, all, lo));
        visual_sum += visual_duty_ratio(cls);
    }
    const double ones = static_cast<double>(
        std::count(seq.bits.begin(), seq.bits.end(), std::uint8_t{1}));
    const double actual = ones / static_cast<double>(seg.span);
    return std::abs(actual - visual_sum / static_cast<double>(n));
}

double cv_ts(const Segmentation& seg) {
    const std::size_t n = seg.slice_count();
    std::vector<double> spans(n);
    for (std::size_t i = 0; i < n; ++i)
        spans[i] = static_cast<double>(seg.slice_hi(i) - seg.slice_lo(i));
    return cv_of_spans(spans);
}

double loss(const StateSequence& seq, const Segmentation& seg,
            const VisualGeometry& geom, const LossWeights& w) {
    if (!w.valid()) throw std::invalid_argument("invalid loss weights");
    return w.w1 * sim_cd(seq, seg, geom) + w.w2 * dif_dr(seq, seg) +
           w.w3 * cv_ts(seg);
}

}  // namespace astf::metrics
