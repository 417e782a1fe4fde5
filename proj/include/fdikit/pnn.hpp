#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fdikit/dataset.hpp"

namespace fdikit::pnn {

// Single-layer gated recurrent regressor (LSTM cell) with separate affine
// heads for the predictive mean and standard deviation. When target_name
// appears among input_names, that slot is fed back autoregressively from the
// model's own mean prediction.
struct PnnArchitecture {
    std::vector<std::string> input_names;
    std::string target_name;
    int hidden_dim = 8;
    double sigma_floor = 1e-3;  // standardized units

    int input_dim() const { return static_cast<int>(input_names.size()); }
    int feedback_slot() const;  // index of target_name in input_names, or -1
    void validate() const;
};

struct Normalization {
    std::vector<double> input_mean, input_std;
    double target_mean = 0.0, target_std = 1.0;
};

// Flat parameter vector layout. Gate rows are stacked [i; f; g; o]. The mean
// partition covers the recurrent cell and the mean head; the std head starts
// at sigma_begin.
struct ParamLayout {
    int hidden = 0, input = 0;
    int w_in = 0, u_rec = 0, bias = 0, w_mu = 0, b_mu = 0, w_sigma = 0, b_sigma = 0;
    int sigma_begin = 0, total = 0;

    static ParamLayout make(int hidden_dim, int input_dim);
};

struct TrainConfig {
    int horizon = 64;         // H, samples
    int horizon_init = 8;     // H_init
    int horizon_step = 8;     // delta H per warm-up epoch
    int warmup_epochs = 30;   // tau_w, MSE phase
    int nll_epochs = 15;      // tau, NLL phase
    int batch_size = 16;
    double learning_rate = 1e-2;
    double weight_decay = 0.0;
    std::uint64_t seed = 1;
    bool truncated_bptt = false;
    int bptt_span = 0;  // chunk length when truncated_bptt is set

    void validate() const;
};

struct PnnModel {
    PnnArchitecture arch;
    Normalization norm;
    std::vector<double> theta;
    std::uint64_t seed = 0;
    std::string config_hash;

    ParamLayout layout() const { return ParamLayout::make(arch.hidden_dim, arch.input_dim()); }
    std::span<const double> theta_mu() const;
    std::span<const double> theta_sigma() const;
};

// Fresh model with seeded initialization; the std head starts near
// sigma_hat = 1 in standardized units.
PnnModel init_model(const PnnArchitecture& arch, const Normalization& norm, std::uint64_t seed);

struct Prediction {
    double mu;
    double sigma;  // >= sigma_floor * target_std, in target units
};

// Autoregressive rollout over the first `horizon` samples; the first feedback
// value is teacher-forced from the data, every later one is the model's own
// prediction. Exogenous inputs always come from the data.
std::vector<Prediction> predict_rollout(const PnnModel& model, const TimeSeriesDataset& ds,
                                        int horizon);

double loss_mse(std::span<const double> targets, std::span<const double> means);
double loss_nll(std::span<const double> targets, std::span<const double> means,
                std::span<const double> stds);

enum class LossKind { Mse, Nll };

struct EpochLog {
    int phase;    // 1 = MSE warm-up, 2 = NLL
    int epoch;    // 1-based within phase
    int horizon;  // H_curr used this epoch
    double loss;
};

struct TrainResult {
    PnnModel model;
    std::vector<EpochLog> log;
};

// Two-phase schedule: warm-up epochs minimize MSE over a growing horizon and
// update only the mean partition; afterwards the NLL is minimized at full
// horizon updating only the std head. Adam with L2 weight decay on the
// active partition. Throws runtime_failure naming the epoch on divergence.
TrainResult train_member(const std::vector<TimeSeriesDataset>& datasets,
                         const PnnArchitecture& arch, const TrainConfig& cfg);

// Max relative error between analytic gradients and central finite
// differences (step 1e-5) on >= `sample_params` parameters, via a full
// autoregressive rollout of length `horizon` starting at `start`.
double grad_check(const PnnModel& model, const TimeSeriesDataset& ds, std::size_t start,
                  int horizon, LossKind kind, int sample_params = 60);

// Versioned JSON checkpoint with architecture, normalization and parameters.
void save_checkpoint(const PnnModel& model, const std::string& path);
PnnModel load_checkpoint(const std::string& path);

// Training-set standardization statistics for the architecture's channels.
Normalization fit_normalization(const std::vector<TimeSeriesDataset>& datasets,
                                const PnnArchitecture& arch);

}  // namespace fdikit::pnn
