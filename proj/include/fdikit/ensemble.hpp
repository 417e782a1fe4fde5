#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace fdikit::ensemble {

// One member's Gaussian prediction for a single input.
struct MemberPrediction {
    double mu;
    double var;  // predicted variance, >= 0
};

// Mixture moments of the ensemble prediction with the total variance split
// into its aleatoric and epistemic parts; var_star == u_ale + u_epi exactly.
struct UncertaintyBreakdown {
    double mu_star;
    double var_star;
    double u_ale;
    double u_epi;
};

UncertaintyBreakdown aggregate(const std::vector<MemberPrediction>& members);

// Per-time-step aggregation of M member series (members[m][t]).
std::vector<UncertaintyBreakdown> aggregate_series(
    const std::vector<std::vector<MemberPrediction>>& members);

// Sample moments of the uniformly weighted Gaussian mixture; the Monte Carlo
// oracle for aggregate().
std::pair<double, double> mixture_moment_check(const std::vector<MemberPrediction>& members,
                                               std::int64_t n_samples, std::uint64_t seed);

// 99th-percentile scale of raw epistemic uncertainty over nominal training
// traces; dividing by it puts the out-of-range threshold at epsilon = 1.
double epistemic_threshold(const std::vector<double>& nominal_u_epi, double quantile = 0.99);

}  // namespace fdikit::ensemble
