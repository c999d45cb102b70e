#pragma once

#include <string>
#include <vector>

#include "astf/core.hpp"
#include "astf/metrics.hpp"

namespace astf::abstraction {

enum class StrengthLevel { None, Low, Medium, High };

const char* to_string(StrengthLevel level);
StrengthLevel strength_level_from_string(const std::string& s);

struct StrengthThresholds {
    double high_dbm = -50.0;
    double low_dbm = -70.0;

    bool valid() const { return high_dbm > low_dbm; }
};

struct CellAbstraction {
    int cell_index = 0;
    metrics::CellClass cell_class = metrics::CellClass::C1;
    StrengthLevel strength_level = StrengthLevel::None;
    bool anomaly_time_axis = false;  // frequency or bandwidth anomaly in the slice
    bool anomaly_freq_axis = false;  // strength or SNR anomaly in the slice
};

struct SignalAbstraction {
    std::string signal_id;
    double center_freq_hz = 0.0;  // median over the signal's records
    double bandwidth_hz = 0.0;    // median over the signal's records
    Segmentation segmentation;
    std::vector<CellAbstraction> cells;
};

// High at or above high_dbm, medium at or above low_dbm, low below.
StrengthLevel strength_level(double mean_strength_dbm, const StrengthThresholds& th);

// Per-slice class, strength level over appearing-state records, and anomaly
// cue flags. Cells without appearing records inherit the previous cell's
// level (low when there is none).
SignalAbstraction abstract_signal(const StateSequence& seq, const Segmentation& seg,
                                  const std::vector<SignalRecord>& records,
                                  const std::vector<AnomalyRecord>& anomalies,
                                  const StrengthThresholds& th);

}  // namespace astf::abstraction
