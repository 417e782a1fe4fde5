#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fdikit/dataset.hpp"

namespace fdikit::sim {

enum class FaultKind { Additive, Multiplicative, Leakage, Clogging };
enum class FaultShape { Step, Ramp };

FaultKind fault_kind_from_string(const std::string& s);
std::string to_string(FaultKind kind);
FaultShape fault_shape_from_string(const std::string& s);
std::string to_string(FaultShape shape);

struct FaultProfile {
    std::string fault_id;
    FaultKind kind = FaultKind::Additive;
    double magnitude = 0.0;
    double onset = 0.0;                 // seconds
    FaultShape shape = FaultShape::Step;
    double ramp_duration = 0.0;         // seconds, Ramp only

    // Activation in [0, 1]: 0 before onset, shape-dependent afterwards.
    double activation(double t) const;
    // Fault signal value at time t (magnitude scaled by activation).
    double value(double t) const { return magnitude * activation(t); }
};

struct SimConfig {
    double duration = 200.0;     // seconds
    double dt = 0.01;            // RK4 step, seconds
    double sample_rate = 10.0;   // Hz; sample_rate * dt <= 1
    std::map<std::string, double> params;     // physical constants, all > 0
    std::map<std::string, double> noise_std;  // per-sensor Gaussian std
    std::uint64_t seed = 0;
    std::string input_profile = "prbs";  // steps | chirp | prbs | constant | zero

    void validate() const;
    double param(const std::string& name, double fallback) const;
    double noise(const std::string& sensor) const;
};

// Three-tank system: valve flows driven by pressure differences, tank
// pressures integrated from flow imbalances; additive fault signals enter
// the equation carrying their name. Emits y1 (= p1), y2 (= q2), y3 (= q0)
// and the commanded inflow q0. Faults: fV1 fV2 fV3 fT1 fT2 fT3.
TimeSeriesDataset simulate_three_tank(const SimConfig& cfg,
                                      const std::optional<FaultProfile>& fault = std::nullopt);

// Two linear reservoirs in series with a level-controlled pump. Emits u and
// y1..y4. Faults: Fa (actuator), Fh1 Fh2 Ff1 Ff2 (sensors), Fl1 Fl2 Fl3
// (leakages), Fc1 Fc2 (clogging).
TimeSeriesDataset simulate_two_tank(const SimConfig& cfg,
                                    const std::optional<FaultProfile>& fault = std::nullopt);

const std::vector<std::string>& two_tank_fault_catalog();
const std::vector<std::string>& three_tank_fault_catalog();

// 1-D toy regression: y = x^3 + xi(x), train x uniform on [-2, 2], test on
// [-3, 3]; xi zero-mean Gaussian with std noise_scale * (1 + |x|).
std::pair<TimeSeriesDataset, TimeSeriesDataset> make_cubic_toy(int n_train, int n_test,
                                                               std::uint64_t seed,
                                                               double noise_scale = 0.1);

}  // namespace fdikit::sim
