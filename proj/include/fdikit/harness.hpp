#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fdikit/dataset.hpp"
#include "fdikit/decision.hpp"
#include "fdikit/ensemble.hpp"
#include "fdikit/metrics.hpp"
#include "fdikit/pnn.hpp"
#include "fdikit/simulator.hpp"
#include "fdikit/structural.hpp"

namespace fdikit::harness {

struct ScenarioSpec {
    std::string fault = "NF";                      // fault id or NF
    std::optional<sim::FaultProfile> profile;      // absent for NF
};

struct ResidualChoice {
    std::vector<std::string> mso;  // equation names
    std::string residual_equation;
};

struct ExperimentConfig {
    std::string system = "two_tank";  // three_tank | two_tank | cubic_toy | external_csv
    std::string model_file;
    std::string output_dir = "out";
    std::uint64_t seed = 0;
    sim::SimConfig sim;
    int train_runs = 2;
    double validation_fraction = 0.2;
    std::vector<ScenarioSpec> scenarios;

    bool auto_residuals = true;
    std::optional<int> budget;                   // cap on selected residuals
    std::vector<ResidualChoice> residual_choices;  // used when !auto_residuals
    std::vector<std::string> sensors;            // channels eligible as residual targets

    int members = 10;
    int hidden_dim = 8;
    double sigma_floor = 1e-3;
    pnn::TrainConfig train;

    double p_fa = 0.01;
    double epsilon = 1.0;
    bool ablation_ood = true;
    bool ablation_adaptive_j = true;

    // external_csv only: per-scenario file groups resampled onto one grid.
    struct ExternalGroup {
        std::string label;
        std::vector<std::string> paths;
        double target_rate = 0.0;  // 0 = highest input rate
    };
    std::vector<ExternalGroup> external_train;
    std::vector<ExternalGroup> external_eval;

    int jobs = 1;
    std::string config_hash;  // computed on load/normalization

    static ExperimentConfig load(const std::string& path);
    static ExperimentConfig from_json_text(const std::string& text);
    std::string to_json() const;
    void validate() const;
    decision::DecisionConfig decision_config() const;
};

// Resampled merge of one scenario's CSV files onto a uniform grid at
// target_rate (0 = the highest input rate); lower-rate channels are linearly
// interpolated. Channels may not repeat across files.
TimeSeriesDataset ingest_external(const std::vector<std::string>& csv_paths,
                                  double target_rate = 0.0);

// Structural artifacts shared by train/evaluate.
struct Analysis {
    structural::StructuralModel model;
    std::vector<std::vector<int>> family;      // all MSO sets
    std::vector<int> selected;                 // indices into family
    std::vector<structural::ResidualSpec> specs;  // one per selected row
    std::vector<std::string> residual_names;   // r0, r1, ...
    std::vector<std::string> targets;          // predicted channel per residual
    std::vector<std::vector<std::string>> inputs;  // exogenous channels per residual
    structural::FaultSignatureMatrix fsm;      // selected rows only
    structural::IsolabilityMatrix iso;
};

Analysis analyze(const ExperimentConfig& cfg);

// Pipeline stages; each writes its artifacts under cfg.output_dir and reads
// what the previous stages persisted.
void run_simulate(const ExperimentConfig& cfg);
void run_analyze(const ExperimentConfig& cfg);
void run_train(const ExperimentConfig& cfg);
void run_evaluate(const ExperimentConfig& cfg);
// Restricted evaluation: writes traces for one scenario only, skipping the
// aggregate matrices (they need the full grid).
void run_evaluate(const ExperimentConfig& cfg, const std::string& only_scenario);
void run_ablate(const ExperimentConfig& cfg);
void run_report(const ExperimentConfig& cfg);

// CLI entry; returns the process exit status (0 ok, 1 bad input, 2 failure).
int cli(int argc, const char* const* argv);

}  // namespace fdikit::harness
