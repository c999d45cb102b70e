#include "astf/abstraction.hpp"

#include <algorithm>
#include <cmath>

namespace astf::abstraction {

const char* to_string(StrengthLevel level) {
    switch (level) {
        case StrengthLevel::None: return "none";
        case StrengthLevel::Low: return "low";
        case StrengthLevel::Medium: return "medium";
        case StrengthLevel::High: return "high";
    }
    return "?";
}

StrengthLevel strength_level_from_string(const std::string& s) {
    if (s == "none") return StrengthLevel::None;
    if (s == "low") return StrengthLevel::Low;
    if (s == "medium") return StrengthLevel::Medium;
    if (s == "high") return StrengthLevel::High;
    throw std::invalid_argument("unknown strength level: " + s);
}

StrengthLevel strength_level(double mean_strength_dbm, const StrengthThresholds& th) {
    if (mean_strength_dbm >= th.high_dbm) return StrengthLevel::High;
    if (mean_strength_dbm >= th.low_dbm) return StrengthLevel::Medium;
    return StrengthLevel::Low;
}

namespace {

double median(std::vector<double> v) {
    const std::size_t mid = v.size() / 2;
    std::nth_element(v.begin(), v.begin() + mid, v.end());
    if (v.size() % 2 == 0) {
        const double lower = *std::max_element(v.begin(), v.begin() + mid);
        return (lower + v[mid]) / 2.0;
    }
    return v[mid];
}

}  // namespace

SignalAbstraction abstract_signal(const StateSequence& seq, const Segmentation& seg,
                                  const std::vector<SignalRecord>& records,
                                  const std::vector<AnomalyRecord>& anomalies,
                                  const StrengthThresholds& th) {
    for (const auto& r : records)
        if (r.signal_id != seq.signal_id)
            throw std::invalid_argument("signal_id mismatch in records");
    for (const auto& a : anomalies)
        if (a.signal_id != seq.signal_id)
            throw std::invalid_argument("signal_id mismatch in anomalies");

    SignalAbstraction out;
    out.signal_id = seq.signal_id;
    out.segmentation = seg;
    if (!records.empty()) {
        std::vector<double> freqs, widths;
        freqs.reserve(records.size());
        widths.reserve(records.size());
        for (const auto& r : records) {
            freqs.push_back(r.center_freq_hz);
            widths.push_back(r.bandwidth_hz);
        }
        out.center_freq_hz = median(std::move(freqs));
        out.bandwidth_hz = median(std::move(widths));
    }

    const auto all_cscps = extract_cscps(seq);
    const std::size_t n = seg.slice_count();
    out.cells.resize(n);
    StrengthLevel prev_level = StrengthLevel::Low;
    for (std::size_t i = 0; i < n; ++i) {
        const std::int64_t lo = seg.slice_lo(i);
        const std::int64_t hi = seg.slice_hi(i);
        CellAbstraction& cell = out.cells[i];
        cell.cell_index = static_cast<int>(i);

        const auto slice = cscps_in_slice(all_cscps, lo, hi);
        cell.cell_class = metrics::classify_slice(
            slice, metrics::slice_entry_state(seq, all_cscps, lo));

        if (cell.cell_class == metrics::CellClass::C1) {
            cell.strength_level = StrengthLevel::None;
        } else {
            double sum = 0;
            std::size_t count = 0;
            for (const auto& r : records) {
                const std::int64_t t = r.timestamp - seq.start_time;
                if (t >= lo && t < hi && seq.bits[static_cast<std::size_t>(t)]) {
                    sum += r.strength_dbm;
                    ++count;
                }
            }
            cell.strength_level =
                count ? strength_level(sum / static_cast<double>(count), th)
                      : prev_level;
            prev_level = cell.strength_level;
        }

        for (const auto& a : anomalies) {
            const std::int64_t t = a.timestamp - seq.start_time;
            if (t < lo || t >= hi) continue;
            if (a.kind == AnomalyKind::Frequency || a.kind == AnomalyKind::Bandwidth)
                cell.anomaly_time_axis = true;
            else
                cell.anomaly_freq_axis = true;
        }
    }
    return out;
}

}  // namespace astf::abstraction
