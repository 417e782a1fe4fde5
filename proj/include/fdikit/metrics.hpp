#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fdikit/decision.hpp"
#include "fdikit/structural.hpp"

namespace fdikit::metrics {

// Residual x scenario alarm probabilities, percent. An optional delta matrix
// holds the change against the fixed-threshold baseline.
struct SensitivityMatrix {
    std::vector<std::string> residual_names;   // rows
    std::vector<std::string> scenario_labels;  // columns: fault ids, possibly NF
    std::vector<double> s;
    std::vector<double> baseline_delta;  // empty or same shape

    double at(int i, int j) const {
        return s[static_cast<std::size_t>(i) * scenario_labels.size() + j];
    }
};

// True fault (rows) x diagnosis mode (columns, NF first) probabilities.
struct IsolationPerformanceMatrix {
    std::vector<std::string> scenarios;  // rows, NF first when present
    std::vector<std::string> modes;      // "NF" then fault names
    std::vector<double> p;
    std::vector<double> baseline_delta;

    double at(int i, int j) const { return p[static_cast<std::size_t>(i) * modes.size() + j]; }
};

struct MetricsReport {
    double s_fa = 0.0, s_md = 0.0, p_fa = 0.0, p_md = 0.0, p_d = 0.0;  // percent
    std::string scenario_label;
    std::string config_hash;
};

// Per-sample consistency-based diagnosis outcomes for one scenario dataset,
// restricted to the evaluated samples (post-onset for faulty scenarios).
struct DiagnosisTrace {
    std::string scenario;  // fault id or NF
    std::vector<std::string> fault_names;
    std::vector<bool> nf_in_d;                  // per sample
    std::vector<std::vector<bool>> fault_in_d;  // per sample, per fault
};

// Indices of the samples that probabilities are estimated over: all samples
// for nominal scenarios, post-onset samples for faulty ones.
std::vector<std::size_t> evaluated_samples(const std::vector<double>& t,
                                           const std::optional<double>& onset);

// traces[i][k]: residual i on scenario k; all rows must share the scenario
// ordering. Alarm probability counts FaultDetected only, so out-of-range
// samples are non-alarms.
SensitivityMatrix sensitivity_matrix(
    const std::vector<std::vector<decision::DecisionTrace>>& traces,
    const std::vector<std::optional<double>>& onsets);

IsolationPerformanceMatrix isolation_performance(const std::vector<DiagnosisTrace>& diag_traces,
                                                 const std::vector<std::string>& fault_names);

// The five scalar comparison metrics. The sensitivity matrix must provide a
// column for every fault of the signature matrix and the diagnosis traces
// must cover NF plus every fault; a signature matrix that is all ones or all
// zeros has no pairs to average over and is rejected.
MetricsReport scalar_metrics(const SensitivityMatrix& sens,
                             const structural::FaultSignatureMatrix& fsm,
                             const std::vector<DiagnosisTrace>& diag_traces,
                             const structural::IsolabilityMatrix& iso);

// CSV with row/column headers; delta columns appended when present.
std::string matrix_csv(const SensitivityMatrix& m);
std::string matrix_csv(const IsolationPerformanceMatrix& m);

// Aligned text, each cell "value (delta)" when a baseline delta exists.
std::string matrix_text(const SensitivityMatrix& m);
std::string matrix_text(const IsolationPerformanceMatrix& m);

std::string report_json(const MetricsReport& report);

}  // namespace fdikit::metrics
