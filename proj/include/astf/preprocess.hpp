#pragma once

#include <map>
#include <string>
#include <vector>

#include "astf/core.hpp"

namespace astf::preprocess {

struct PreprocessConfig {
    double noise_margin_db = 6.0;
    int min_bandwidth_bins = 3;
    double track_overlap_ratio = 0.5;
    int state_window_s = 5;
    double pauta_k = 3.0;
    std::int64_t track_timeout_s = 60;  // close a track after this many silent seconds

    bool valid() const {
        return noise_margin_db > 0 && min_bandwidth_bins >= 1 &&
               track_overlap_ratio > 0 && track_overlap_ratio <= 1;
    }
};

// Median of all per-bin amplitudes across all frames.
double estimate_noise_floor(const std::vector<FrequencyFrame>& frames);

// Per-frame threshold detections linked into tracks with stable signal ids.
// A detection is a maximal run of at least min_bandwidth_bins contiguous bins
// at or above noise_floor + noise_margin_db.
std::vector<SignalRecord> identify_signals(const std::vector<FrequencyFrame>& frames,
                                           const PreprocessConfig& cfg);

// Bit at second t is 1 iff at least one record for the signal exists in the
// trailing window (t - state_window_s, t].
StateSequence binarize_states(const std::string& signal_id,
                              const std::vector<SignalRecord>& records,
                              std::int64_t capture_start, std::int64_t capture_span,
                              const PreprocessConfig& cfg);

// Pauta criterion per characteristic: values strictly outside mu +/- k*sigma
// over the signal's whole period (population sigma). Fewer than two records
// yields no anomaly claims.
std::vector<AnomalyRecord> detect_anomalies(const std::vector<SignalRecord>& records,
                                            const PreprocessConfig& cfg);

// Records grouped by signal id, each group sorted by timestamp.
std::map<std::string, std::vector<SignalRecord>> group_by_signal(
    const std::vector<SignalRecord>& records);

}  // namespace astf::preprocess
