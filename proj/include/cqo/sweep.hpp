// sweep.hpp — Synchronization search, matching-condition root finding, and parameter sweeps

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cqo/gate.hpp"
#include "cqo/oracle.hpp"

namespace cqo {

enum class Backend { RwaClosedForm, NumericOracle };

// One synchronized CNOT operation point: drive amplitude from the matching
// condition, the resulting frequencies, the designed operation time, and the
// gate fidelity evaluated there.
struct SyncResult {
    MatchingIndices indices;
    ResonanceBranch branch{ResonanceBranch::Plus};
    double v_b{0.0};
    double omega{0.0};  // resonant drive frequency of the chosen branch
    double omega_r{0.0};
    double omega_nr{0.0};
    double t_op{0.0};
    double fidelity_rwa{0.0};
    std::optional<double> fidelity_oracle;
    RegimeReport regime;
};

SyncResult find_sync(const SystemParams& p, const MatchingIndices& idx,
                     Backend backend = Backend::RwaClosedForm,
                     ResonanceBranch branch = ResonanceBranch::Plus,
                     const IntegrationConfig& cfg = {});

// Bisection root of Omega_nR(v_b) - matching_ratio * Omega_R(v_b) = 0 on
// v_b in (0, v_upper]. Independent numerical route to the closed form.
double solve_vb_numeric(const SystemParams& p, const MatchingIndices& idx,
                        double v_upper = 0.0);  // 0 -> default bracket

struct SweepAxis {
    std::string name;  // one of {v_b, omega, t, j, eps_b, delta_b}
    double min{0.0};
    double max{0.0};
    int points{1};
    bool log_scale{false};
};

struct SweepObjective {
    enum class Kind { Fidelity, TransitionProbability };
    Kind kind{Kind::Fidelity};
    GateTarget target;                        // for Fidelity
    ControlState control{ControlState::Up};   // for TransitionProbability
};

struct SweepSpec {
    std::vector<SweepAxis> axes;
    Backend backend{Backend::RwaClosedForm};
    SweepObjective objective;
    double base_time{0.0};  // evaluation time when t is not an axis
    IntegrationConfig integration;

    void validate() const;
};

// Row-major grid over the axes; per-point failures are stored as missing
// values and the sweep continues.
struct SweepGrid {
    std::vector<SweepAxis> axes;
    std::vector<std::vector<double>> coordinates;
    std::vector<std::optional<double>> values;

    std::size_t size() const { return values.size(); }
};

SweepGrid sweep(const SystemParams& p, const Drive& drive_template,
                const SweepSpec& spec);

// Optional restriction of best_operation_point to one axis interval.
struct SweepWindow {
    std::string axis;
    double min{0.0};
    double max{0.0};
};

struct BestPoint {
    std::vector<double> coordinates;
    double value{0.0};
    std::size_t index{0};
};

// Argmax of the objective; ties are broken by smaller t, then smaller v_b.
BestPoint best_operation_point(const SweepGrid& grid,
                               const std::optional<SweepWindow>& window = {});

} // namespace cqo
