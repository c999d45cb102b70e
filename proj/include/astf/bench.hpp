#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "astf/core.hpp"
#include "astf/segmentation.hpp"

namespace astf::bench {

inline constexpr std::int64_t kWeekSeconds = 604800;
inline constexpr std::int64_t kMonthSeconds = 2592000;
inline constexpr double kModerateCscpsPerDay = 5.0;
inline constexpr double kHighCscpsPerDay = 10.0;

struct GeneratorConfig {
    std::int64_t span_s = kWeekSeconds;
    double cscps_per_day = kModerateCscpsPerDay;
    std::uint64_t seed = 0;
};

// Alternating-state renewal process. State durations are exponential with
// mean 86400/cscps_per_day, clamped to at least 5 s so generated sequences
// stay reachable from the binarization hold window.
StateSequence generate_sequence(const GeneratorConfig& cfg);

struct BenchGroup {
    std::string span_name;        // "week" | "month"
    std::string complexity_name;  // "moderate" | "high"
    std::int64_t span_s = 0;
    double cscps_per_day = 0;
};

const std::vector<BenchGroup>& default_groups();

struct BenchOptions {
    int signals_per_group = 8;
    int runs_per_signal = 10;
    std::uint64_t base_seed = 42;
    std::vector<std::string> algorithms;  // empty -> all six
    seg::SegmentationConfig seg_cfg;
    std::vector<BenchGroup> groups;  // empty -> default four
};

struct BenchRow {
    std::string algorithm;
    std::string group_span;
    std::string group_complexity;
    std::uint64_t signal_seed = 0;
    int run = 0;
    double loss = 0;
    double time_s = 0;
    bool failed = false;
    std::string error;
};

struct BenchReport {
    std::vector<BenchRow> rows;
};

struct GroupSummary {
    std::string algorithm;
    std::string group_span;
    std::string group_complexity;
    double avg_loss = 0;
    double avg_time_s = 0;
    int runs = 0;
    int failures = 0;
};

// Deterministic per-signal seed for (group index, signal index).
std::uint64_t signal_seed(std::uint64_t base_seed, std::size_t group_index,
                          std::size_t signal_index);

// Runs every algorithm runs_per_signal times on every generated signal.
// Wall time covers the segmentation call only. Failed runs are kept as
// marked rows and excluded from averages.
BenchReport run_benchmark(const BenchOptions& opts, std::ostream* progress = nullptr);

std::vector<GroupSummary> summarize(const BenchReport& report);

std::string report_csv(const BenchReport& report);
std::string summary_table(const std::vector<GroupSummary>& summaries);

}  // namespace astf::bench
