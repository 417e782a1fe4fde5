#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fdikit/structural.hpp"

namespace fdikit::decision {

// Inverse standard-normal CDF via Wichura's rational approximations;
// |Phi(inv_norm_cdf(p)) - p| < 1e-9 on (0, 1).
double inv_norm_cdf(double p);

enum class Decision : std::uint8_t { OutOfRange = 0, NoConclusion = 1, FaultDetected = 2 };

std::string to_string(Decision d);

struct DecisionConfig {
    double p_fa = 0.01;    // target per-sample false alarm rate
    double alpha = 0.0;    // threshold multiplier; derived from p_fa
    double epsilon = 1.0;  // limit on normalized epistemic uncertainty

    static DecisionConfig from_false_alarm_rate(double p_fa, double epsilon = 1.0);
    void validate() const;
};

// Three-way decision: epistemic uncertainty above epsilon rejects the sample
// outright; otherwise the residual is tested against the adaptive threshold
// J = alpha * sigma_star.
Decision classify(double r, double sigma_star, double u_epi, const DecisionConfig& cfg);

// Empirical (1 - p_fa) quantile of |r| over nominal training residuals; the
// baseline detector alarms on |r| > J_fixed with no out-of-range branch.
double fixed_threshold(const std::vector<double>& training_residuals, double p_fa);

struct DecisionTrace {
    std::string residual_name;
    std::string scenario;  // fault id or NF
    std::vector<double> t;
    std::vector<double> r;
    std::vector<double> threshold;  // J at each sample
    std::vector<double> u_epi;      // normalized
    std::vector<Decision> decision;
};

// A diagnosis is a set of fault indices; the empty set stands for NF.
struct DiagnosisSet {
    std::vector<std::vector<int>> diagnoses;  // sorted sets, family sorted
    bool contains_nf() const;
    bool contains(const std::vector<int>& faults) const;
};

// Minimal hitting sets of the conflicts raised by alarming, non-rejected
// residuals. Out-of-range residuals contribute no conflict. Throws when an
// alarming residual has an all-false sensitivity row.
DiagnosisSet minimal_diagnoses(const std::vector<bool>& alarms, const std::vector<bool>& ood,
                               const structural::FaultSignatureMatrix& fsm);

struct SingleFaultDiagnoses {
    bool nf = false;           // NF consistent (no active conflicts)
    std::vector<bool> fault;   // fault j alone explains every conflict
};

SingleFaultDiagnoses single_fault_diagnoses(const std::vector<bool>& alarms,
                                            const std::vector<bool>& ood,
                                            const structural::FaultSignatureMatrix& fsm);

// Minimal hitting sets of arbitrary conflict sets over n elements; exposed
// for reuse and oracle testing.
std::vector<std::vector<int>> minimal_hitting_sets(const std::vector<std::vector<int>>& conflicts,
                                                   int n_elements);

}  // namespace fdikit::decision
