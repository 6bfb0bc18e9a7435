// gate.hpp — Probability tables, gate fidelity, and the frequency-matching machinery

#pragma once

#include <Eigen/Dense>

#include <vector>

#include "cqo/params.hpp"
#include "cqo/rwa.hpp"

namespace cqo {

// Transition probabilities P_{out <- in}; rows index input states, columns
// output states, both in the order {|up 0>, |up 1>, |down 0>, |down 1>}
// where |0>, |1> is the eta0_b-rotated basis of qubit B.
struct ProbabilityTable {
    Eigen::Matrix4d values = Eigen::Matrix4d::Identity();
    double at_time{0.0};

    bool rows_normalized(double tol = 1e-10) const;
    bool block_diagonal(double tol = 0.0) const;
};

struct FidelityReport {
    double fidelity{0.0};
    double error{1.0};  // 1 - fidelity
    double at_time{0.0};
};

// Ideal gate tables. The CNOT targets are the two block-swap permutation
// tables (upper block swapped at the plus resonance, lower at the minus);
// the controlled-U targets carry the target rotation angle theta, with
// theta = pi reproducing the corresponding CNOT table.
struct GateTarget {
    enum class Kind { CnotPlus, CnotMinus, CuPlus, CuMinus };
    Kind kind{Kind::CnotPlus};
    double theta{M_PI};

    Eigen::Matrix4d table() const;

    static GateTarget cnot_plus() { return {Kind::CnotPlus, M_PI}; }
    static GateTarget cnot_minus() { return {Kind::CnotMinus, M_PI}; }
    static GateTarget cu_plus(double theta) { return {Kind::CuPlus, theta}; }
    static GateTarget cu_minus(double theta) { return {Kind::CuMinus, theta}; }
};

// Positive integers parameterizing the synchronization condition: n counts
// non-Rabi periods inside the half Rabi period, l selects the flip of the
// Rabi oscillation used as operation time, m later repetitions.
struct MatchingIndices {
    int n{1};
    int l{1};
    int m{1};

    void validate() const {
        if (n < 1 || l < 1 || m < 1) {
            throw std::invalid_argument("MatchingIndices: n, l, m must be >= 1");
        }
    }
};

// Block-diagonal table populated from the driven closed forms at time t.
ProbabilityTable probability_table_rwa(const SystemParams& p, const Drive& d,
                                       double t);

// F = (1/4) Tr(table * ideal), the quarter-trace overlap with the target.
FidelityReport fidelity(const ProbabilityTable& table, const GateTarget& target);

// Required frequency ratio Omega_nR / Omega_R = 2 (n + l - 1) / (2l - 1).
double matching_ratio(const MatchingIndices& idx);

// Drive amplitude realizing the matching condition:
//   V_B = (2l-1) / sqrt((2n-1)(2n+4l-3)) * (8 J eps_b / delta_b).
double vb_cnot(const SystemParams& p, const MatchingIndices& idx);

// Rabi and non-Rabi frequencies at V_B = vb_cnot; their ratio equals
// matching_ratio(idx).
struct CnotFrequencies {
    double rabi{0.0};
    double non_rabi{0.0};
};

CnotFrequencies cnot_frequencies(const SystemParams& p,
                                 const MatchingIndices& idx);

// Gate operation times (k - 1/2) * 2 pi / omega_r for k = l, l+1, ...
// The first entry is the designed t_OP.
std::vector<double> operation_times(double omega_r, int l, int count);

// Residual non-Rabi amplitude at the matching point:
//   sin^2(eta_nR) = (1/4) ((2l-1)/(n+l-1))^2.
double cu_suppression(const MatchingIndices& idx);

// Controlled-U truth table at time t for the chosen resonance branch.
// within_suppression is false when sin^2(eta_nR) exceeds the threshold,
// as a warning only; the table is produced either way.
struct CuTruthTable {
    ProbabilityTable table;
    double non_rabi_amplitude{0.0};  // sin^2(eta_nR) at these parameters
    bool within_suppression{true};
};

CuTruthTable cu_truth_table(const SystemParams& p, const Drive& d,
                            ResonanceBranch branch, double t,
                            double suppression_threshold = 0.05);

} // namespace cqo
