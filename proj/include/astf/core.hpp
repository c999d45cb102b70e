#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace astf {

// One timestamped sweep of per-bin amplitudes.
struct FrequencyFrame {
    std::int64_t timestamp = 0;      // seconds since epoch
    double start_freq_hz = 0.0;
    double bin_width_hz = 0.0;
    std::vector<double> amplitudes;  // dBm, one per bin
};

// Per-second record of one signal's four basic characteristics.
struct SignalRecord {
    std::int64_t timestamp = 0;
    std::string signal_id;
    double center_freq_hz = 0.0;
    double bandwidth_hz = 0.0;
    double strength_dbm = 0.0;
    double snr_db = 0.0;
};

// 1 Hz binary communication-state sequence for one signal.
struct StateSequence {
    std::string signal_id;
    std::int64_t start_time = 0;
    std::vector<std::uint8_t> bits;  // 0 or 1, one per second

    std::int64_t span() const { return static_cast<std::int64_t>(bits.size()); }
};

enum class CscpKind { Rising, Falling };

// Communication state change point at boundary index b in [1, T-1]:
// the transition between second b-1 and second b.
struct Cscp {
    std::int64_t location = 0;
    CscpKind kind = CscpKind::Rising;

    bool operator==(const Cscp&) const = default;
};

// Ordered dividing points partitioning [0, T) into n slices.
// Slice i spans seconds [d_{i-1}, d_i) with d_0 = 0 and d_n = T.
struct Segmentation {
    std::int64_t span = 0;                     // T
    std::vector<std::int64_t> dividing_points;  // strictly increasing, in (0, T)

    std::size_t slice_count() const { return dividing_points.size() + 1; }
    std::int64_t slice_lo(std::size_t i) const {
        return i == 0 ? 0 : dividing_points[i - 1];
    }
    std::int64_t slice_hi(std::size_t i) const {
        return i + 1 == slice_count() ? span : dividing_points[i];
    }
    bool valid() const;
};

enum class AnomalyKind { Frequency, Bandwidth, Strength, Snr };

struct AnomalyRecord {
    std::int64_t timestamp = 0;
    std::string signal_id;
    AnomalyKind kind = AnomalyKind::Frequency;
};

const char* to_string(CscpKind k);
const char* to_string(AnomalyKind k);

// One Cscp per adjacent bit pair that differs, ordered by location.
// Kinds strictly alternate; constant sequences yield an empty list.
std::vector<Cscp> extract_cscps(const StateSequence& seq);

// Belonging rule for a CSCP at boundary b and slice [lo, hi):
//   lo < b < hi        -> belongs
//   rising at b == lo  -> belongs (signal appears on the later side)
//   falling at b == hi -> belongs (signal appears on the earlier side)
// Every CSCP belongs to exactly one slice of any segmentation.
bool cscp_in_slice(const Cscp& c, std::int64_t lo, std::int64_t hi);

std::vector<Cscp> cscps_in_slice(const std::vector<Cscp>& cscps,
                                 std::int64_t lo, std::int64_t hi);

}  // namespace astf
