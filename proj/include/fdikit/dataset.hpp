#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fdikit {

// Columnar time series of known signals, one scenario per dataset.
struct TimeSeriesDataset {
    std::vector<std::string> columns;
    std::vector<double> t;
    std::vector<std::vector<double>> data;  // data[c][sample]
    std::string label = "NF";               // fault id or NF
    std::optional<double> onset;            // seconds, faulty scenarios only
    std::uint64_t seed = 0;
    std::string config_hash;

    std::size_t size() const { return t.size(); }
    int column_index(const std::string& name) const;  // -1 when absent
    const std::vector<double>& channel(const std::string& name) const;
    double sample_rate() const;  // from the first two timestamps

    // All channels same length, timestamps strictly increasing, values finite.
    void validate() const;
};

// CSV with a header row (t first, then channel names) plus a JSON sidecar
// <path>.meta.json carrying label, onset, seed, sample rate and config hash.
void write_dataset_csv(const TimeSeriesDataset& ds, const std::string& path);
TimeSeriesDataset read_dataset_csv(const std::string& path);

// Formats a double so that parsing recovers the identical value.
std::string format_double(double value);

// Writes content to path via a temp file + rename.
void write_file_atomic(const std::string& path, const std::string& content);

// Central difference at the series' own rate; one-sided at the ends.
std::vector<double> central_difference(const std::vector<double>& values, double dt);

}  // namespace fdikit
