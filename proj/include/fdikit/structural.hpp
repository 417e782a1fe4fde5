#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fdikit::structural {

// Bipartite structural model: equations vs. variables, with known signals and
// fault signals attached to the equations they appear in. Dynamic states and
// their derivatives are separate unknowns joined by an explicit
// differential-constraint equation, so the graph stays purely algebraic.
class StructuralModel {
  public:
    struct DynamicPair {
        int state;       // unknown index of the integrated variable
        int derivative;  // unknown index of its time derivative
        int equation;    // the differential-constraint equation linking them
    };

    StructuralModel() = default;
    explicit StructuralModel(std::string name) : name_(std::move(name)) {}

    void declare_unknown(const std::string& name);
    void declare_known(const std::string& name);
    void declare_fault(const std::string& name);

    // Adds an equation incident to the named variables; each name must be a
    // declared unknown, known, or fault. Returns the equation index.
    int add_equation(const std::string& name, const std::vector<std::string>& variables);

    // Adds a differential-constraint equation derivative = d(state)/dt.
    int add_differential_constraint(const std::string& name, const std::string& state,
                                    const std::string& derivative);

    // Throws validation_error if any structural invariant is broken.
    void validate() const;

    const std::string& name() const { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

    int num_equations() const { return static_cast<int>(equations_.size()); }
    int num_unknowns() const { return static_cast<int>(unknowns_.size()); }
    int num_knowns() const { return static_cast<int>(knowns_.size()); }
    int num_faults() const { return static_cast<int>(faults_.size()); }

    const std::vector<std::string>& equations() const { return equations_; }
    const std::vector<std::string>& unknowns() const { return unknowns_; }
    const std::vector<std::string>& knowns() const { return knowns_; }
    const std::vector<std::string>& faults() const { return faults_; }
    const std::vector<DynamicPair>& dynamic_pairs() const { return dynamic_pairs_; }

    const std::vector<int>& equation_unknowns(int eq) const { return eq_unknowns_[eq]; }
    const std::vector<int>& equation_knowns(int eq) const { return eq_knowns_[eq]; }
    const std::vector<int>& equation_faults(int eq) const { return eq_faults_[eq]; }

    int equation_index(const std::string& name) const;
    int unknown_index(const std::string& name) const;
    int known_index(const std::string& name) const;
    int fault_index(const std::string& name) const;

    // The differential-constraint info for an equation, if it is one.
    std::optional<DynamicPair> dynamic_pair_of(int eq) const;

  private:
    std::string name_;
    std::vector<std::string> equations_;
    std::vector<std::string> unknowns_;
    std::vector<std::string> knowns_;
    std::vector<std::string> faults_;
    std::vector<std::vector<int>> eq_unknowns_;
    std::vector<std::vector<int>> eq_knowns_;
    std::vector<std::vector<int>> eq_faults_;
    std::vector<DynamicPair> dynamic_pairs_;
};

// Canonical Dulmage-Mendelsohn split into under-, exactly- and
// over-determined parts. All index vectors are sorted.
struct DmPartition {
    std::vector<int> under_equations, under_unknowns;
    std::vector<int> exact_equations, exact_unknowns;
    std::vector<int> over_equations, over_unknowns;

    int redundancy() const {
        return static_cast<int>(over_equations.size()) - static_cast<int>(over_unknowns.size());
    }
};

DmPartition dm_decompose(const StructuralModel& model);

// Size of a maximum matching between the given equations and the unknowns
// they touch. Equations outside [0, num_equations) are rejected.
int maximum_matching_size(const StructuralModel& model, const std::vector<int>& equations);

// Equations of the over-determined part of the subsystem induced by
// `equations`. Result is sorted.
std::vector<int> overdetermined_part(const StructuralModel& model, const std::vector<int>& equations);

// Structural redundancy |E| - |var(E)| of an equation set that equals its own
// over-determined part.
int structural_redundancy(const StructuralModel& model, const std::vector<int>& equations);

// All minimally structurally over-determined sets of the model, each sorted,
// the family sorted lexicographically. Empty family when redundancy is zero.
std::vector<std::vector<int>> enumerate_msos(const StructuralModel& model);

struct FaultSignatureMatrix {
    int rows = 0;  // residual candidates (MSO sets)
    int cols = 0;  // faults, in model declaration order
    std::vector<std::uint8_t> t;
    std::vector<std::string> fault_names;

    bool at(int i, int j) const { return t[static_cast<std::size_t>(i) * cols + j] != 0; }
};

struct IsolabilityMatrix {
    int n = 0;  // faults
    std::vector<std::uint8_t> i;
    std::vector<std::string> fault_names;

    bool at(int a, int b) const { return i[static_cast<std::size_t>(a) * n + b] != 0; }
    bool operator==(const IsolabilityMatrix& other) const { return n == other.n && i == other.i; }
};

// T_ij = fault j occurs in an equation of mso i.
FaultSignatureMatrix fault_signature(const std::vector<std::vector<int>>& msos,
                                     const StructuralModel& model);

// I_ab = every residual sensitive to fault a is also sensitive to fault b,
// i.e. fault b cannot be rejected when fault a is the true fault.
IsolabilityMatrix isolability(const FaultSignatureMatrix& fsm);

// Smallest set of rows whose induced isolability equals the whole family's,
// searched in (size, lexicographic) order. With a budget that is too small to
// reach full isolability, returns the budget-sized subset preserving the most
// non-isolability distinctions, lexicographic tie-break.
std::vector<int> select_tests(const std::vector<std::vector<int>>& msos,
                              const FaultSignatureMatrix& fsm,
                              std::optional<int> budget = std::nullopt);

enum class Causality { Algebraic, Integral, Derivative };

struct Assignment {
    int equation;
    int variable;  // unknown solved by this equation
    Causality causality;
};

// One MSO set plus a residual-equation choice, the resulting computation
// sequence and the fault-sensitivity row it realizes.
struct ResidualSpec {
    std::vector<int> mso;  // sorted equation indices
    int residual_equation = -1;
    std::vector<Assignment> sequence;
    std::vector<std::uint8_t> sensitivity;  // over model faults

    bool sensitive_to(int fault) const { return sensitivity[fault] != 0; }
};

// Matches every unknown of mso \ {residual_equation} to exactly one equation
// and orders the assignments for sequential evaluation. Differential
// constraints are matched with integral causality whenever a complete
// matching allows it. Throws runtime_failure naming the unmatched variables
// when no complete matching exists.
ResidualSpec compute_matching(const StructuralModel& model, const std::vector<int>& mso,
                              int residual_equation);

// Known channels the residual consumes and the one it predicts: the target is
// the first known of the residual equation, inputs are the remaining knowns
// over the whole MSO in declaration order.
std::string residual_target(const StructuralModel& model, const ResidualSpec& spec);
std::vector<std::string> residual_inputs(const StructuralModel& model, const ResidualSpec& spec);

}  // namespace fdikit::structural
