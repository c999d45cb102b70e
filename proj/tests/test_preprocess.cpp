#include <doctest.h>

#include "astf/preprocess.hpp"

using namespace astf;
using namespace astf::preprocess;

namespace {

FrequencyFrame frame(std::int64_t ts, std::vector<double> amps,
                     double start = 100e6, double bw = 1e3) {
    FrequencyFrame f;
    f.timestamp = ts;
    f.start_freq_hz = start;
    f.bin_width_hz = bw;
    f.amplitudes = std::move(amps);
    return f;
}

// 16 quiet bins with an optional elevated run [lo, hi).
FrequencyFrame quiet_with(std::int64_t ts, int lo = -1, int hi = -1,
                          double level = -60.0) {
    std::vector<double> amps(16, -100.0);
    for (int i = lo; i >= 0 && i < hi; ++i) amps[static_cast<std::size_t>(i)] = level;
    return frame(ts, std::move(amps));
}

}  // namespace

TEST_CASE("estimate_noise_floor is the median of every bin") {
    CHECK(estimate_noise_floor({frame(0, {-90, -100, -80})}) ==
          doctest::Approx(-90.0));
    // Even count: mean of the two middle values, across frames.
    CHECK(estimate_noise_floor({frame(0, {-90, -100}), frame(1, {-80, -70})}) ==
          doctest::Approx(-85.0));
    CHECK_THROWS_AS(estimate_noise_floor({}), std::invalid_argument);
}

TEST_CASE("identify_signals finds threshold runs of sufficient width") {
    PreprocessConfig cfg;  // margin 6 dB, min 3 bins
    std::vector<FrequencyFrame> frames;
    // Mostly quiet frames keep the median at -100 dBm.
    for (int t = 0; t < 20; ++t) frames.push_back(quiet_with(t));
    frames.push_back(quiet_with(20, 4, 8));   // 4 bins above threshold
    frames.push_back(quiet_with(21, 4, 6));   // only 2 bins: too narrow
    auto records = identify_signals(frames, cfg);
    REQUIRE(records.size() == 1);
    const auto& r = records[0];
    CHECK(r.timestamp == 20);
    // bins 4..7 of a 1 kHz grid starting at 100 MHz
    CHECK(r.center_freq_hz == doctest::Approx(100e6 + 6e3));
    CHECK(r.bandwidth_hz == doctest::Approx(4e3));
    CHECK(r.strength_dbm == doctest::Approx(-60.0));
    CHECK(r.snr_db == doctest::Approx(40.0));
}

TEST_CASE("identify_signals rejects inconsistent bin grids") {
    PreprocessConfig cfg;
    std::vector<FrequencyFrame> frames{quiet_with(0), quiet_with(1)};
    frames[1].bin_width_hz *= 2;
    CHECK_THROWS_AS(identify_signals(frames, cfg), std::invalid_argument);
}

TEST_CASE("track linking keeps ids stable across overlapping detections") {
    PreprocessConfig cfg;
    std::vector<FrequencyFrame> frames;
    for (int t = 0; t < 30; ++t) frames.push_back(quiet_with(t));
    frames.push_back(quiet_with(30, 4, 8));
    frames.push_back(quiet_with(31, 5, 9));    // shifted one bin: still >50% overlap
    frames.push_back(quiet_with(32, 12, 16));  // disjoint band: a second signal
    auto records = identify_signals(frames, cfg);
    REQUIRE(records.size() == 3);
    CHECK(records[0].signal_id == records[1].signal_id);
    CHECK(records[2].signal_id != records[0].signal_id);
}

TEST_CASE("a silent gap beyond the timeout starts a new track") {
    PreprocessConfig cfg;  // 60 s timeout
    std::vector<FrequencyFrame> frames;
    for (int t = 0; t < 200; ++t) frames.push_back(quiet_with(t));
    frames[0] = quiet_with(0, 4, 8);
    frames[50] = quiet_with(50, 4, 8);    // within timeout: same track
    frames[150] = quiet_with(150, 4, 8);  // 100 s gap: new track
    auto records = identify_signals(frames, cfg);
    REQUIRE(records.size() == 3);
    CHECK(records[0].signal_id == records[1].signal_id);
    CHECK(records[2].signal_id != records[1].signal_id);
}

TEST_CASE("binarize_states holds each record for the state window") {
    PreprocessConfig cfg;  // 5 s window
    std::vector<SignalRecord> records(1);
    records[0].timestamp = 1003;
    records[0].signal_id = "S000";
    auto seq = binarize_states("S000", records, 1000, 12, cfg);
    CHECK(seq.start_time == 1000);
    CHECK(seq.span() == 12);
    CHECK(seq.bits == std::vector<std::uint8_t>{0, 0, 0, 1, 1, 1, 1, 1, 0, 0, 0, 0});
}

TEST_CASE("binarize_states clips the hold window at the capture end") {
    PreprocessConfig cfg;
    std::vector<SignalRecord> records(1);
    records[0].timestamp = 8;
    auto seq = binarize_states("S000", records, 0, 10, cfg);
    CHECK(seq.bits == std::vector<std::uint8_t>{0, 0, 0, 0, 0, 0, 0, 0, 1, 1});
}

TEST_CASE("binarize_states rejects records outside the capture span") {
    PreprocessConfig cfg;
    std::vector<SignalRecord> records(1);
    records[0].timestamp = 99;
    CHECK_THROWS_AS(binarize_states("S000", records, 100, 10, cfg),
                    std::invalid_argument);
    records[0].timestamp = 110;
    CHECK_THROWS_AS(binarize_states("S000", records, 100, 10, cfg),
                    std::invalid_argument);
}

TEST_CASE("detect_anomalies flags values strictly outside three sigma") {
    PreprocessConfig cfg;
    std::vector<SignalRecord> records;
    for (int i = 0; i < 100; ++i) {
        SignalRecord r;
        r.timestamp = i;
        r.signal_id = "S000";
        r.center_freq_hz = 100e6 + (i % 2 ? 500.0 : -500.0);
        r.bandwidth_hz = 4e3;
        r.strength_dbm = -60.0;
        r.snr_db = 40.0;
        records.push_back(r);
    }
    CHECK(detect_anomalies(records, cfg).empty());

    records[40].center_freq_hz = 105e6;  // far outside mu +/- 3 sigma
    auto anomalies = detect_anomalies(records, cfg);
    REQUIRE(anomalies.size() == 1);
    CHECK(anomalies[0].timestamp == 40);
    CHECK(anomalies[0].kind == AnomalyKind::Frequency);
}

TEST_CASE("detect_anomalies needs at least two records") {
    PreprocessConfig cfg;
    std::vector<SignalRecord> one(1);
    one[0].center_freq_hz = 1e9;
    CHECK(detect_anomalies({}, cfg).empty());
    CHECK(detect_anomalies(one, cfg).empty());
}

TEST_CASE("group_by_signal sorts each group by timestamp") {
    std::vector<SignalRecord> records(4);
    records[0] = {5, "B"};
    records[1] = {3, "A"};
    records[2] = {1, "B"};
    records[3] = {2, "A"};
    auto groups = group_by_signal(records);
    REQUIRE(groups.size() == 2);
    CHECK(groups["A"][0].timestamp == 2);
    CHECK(groups["A"][1].timestamp == 3);
    CHECK(groups["B"][0].timestamp == 1);
    CHECK(groups["B"][1].timestamp == 5);
}
