#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "astf/abstraction.hpp"
#include "astf/core.hpp"
#include "astf/segmentation.hpp"

namespace astf::io {

// Thrown for malformed input data; the CLI maps it to exit code 2.
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Spectrum CSV: one frame per row, `timestamp,start_freq_hz,bin_width_hz,a0,...`
std::vector<FrequencyFrame> read_spectrum_csv(const std::filesystem::path& path);
void write_spectrum_csv(const std::filesystem::path& path,
                        const std::vector<FrequencyFrame>& frames);

// Signal record CSV with header
// `timestamp,signal_id,center_freq_hz,bandwidth_hz,strength_dbm,snr_db`
void write_records_csv(const std::filesystem::path& path,
                       const std::vector<SignalRecord>& records);
std::vector<SignalRecord> read_records_csv(const std::filesystem::path& path);

// State sequence text format: header `signal_id,start_time,T`, then the bit
// string on the next line.
std::string sequence_to_text(const StateSequence& seq);
StateSequence sequence_from_text(const std::string& text);
void write_sequence(const std::filesystem::path& path, const StateSequence& seq);
StateSequence read_sequence(const std::filesystem::path& path);

// All .seq files in a directory, or the single file itself.
std::vector<StateSequence> read_sequences(const std::filesystem::path& path);

std::string anomalies_to_json(const std::vector<AnomalyRecord>& anomalies);
std::vector<AnomalyRecord> anomalies_from_json(const std::string& text);

// Segmentation result object:
// {signal_id, T, n, dividing_points, loss, algorithm, weights}
std::string segmentations_to_json(
    const std::vector<std::string>& signal_ids,
    const std::vector<seg::SegmentationResult>& results,
    const std::string& algorithm, const metrics::LossWeights& weights);
struct NamedSegmentation {
    std::string signal_id;
    Segmentation segmentation;
    double loss = 0;
    std::string algorithm;
};
std::vector<NamedSegmentation> segmentations_from_json(const std::string& text);

std::string abstractions_to_json(
    const std::vector<abstraction::SignalAbstraction>& abstractions);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& content);

}  // namespace astf::io
