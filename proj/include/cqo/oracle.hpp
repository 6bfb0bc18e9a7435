// oracle.hpp — Exact Schrodinger integration of the driven system, used to validate every closed form

#pragma once

#include <optional>
#include <vector>

#include "cqo/gate.hpp"
#include "cqo/ops.hpp"
#include "cqo/params.hpp"

namespace cqo {

struct IntegrationConfig {
    double rel_tol{1e-10};           // local error per unit time, relative part
    double abs_tol{1e-12};           // local error per unit time, absolute part
    double max_step_fraction{0.02};  // of min(2 pi / omega, 2 pi / omega0_b)
    double max_norm_drift{1e-9};     // integration aborts beyond this
    int grid_points{2};              // output samples, both endpoints included

    void validate() const {
        if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) {
            throw std::invalid_argument("IntegrationConfig: tolerances must be > 0");
        }
        if (!(max_step_fraction > 0.0) || !(max_norm_drift > 0.0)) {
            throw std::invalid_argument(
                "IntegrationConfig: max_step_fraction and max_norm_drift must be > 0");
        }
        if (grid_points < 2) {
            throw std::invalid_argument("IntegrationConfig: grid_points must be >= 2");
        }
    }
};

// States and populations on the requested output grid. Populations are kept in
// both the lab basis and the eta0_b-rotated {|0>, |1>} basis of qubit B; the
// norm is monitored, never renormalized.
struct EvolutionTrace {
    std::vector<double> times;
    std::vector<Eigen::VectorXcd> states;
    std::vector<Eigen::VectorXd> lab_populations;
    std::vector<Eigen::VectorXd> rotated_populations;
    double norm_drift{0.0};  // max |norm - 1| seen at accepted steps
    long accepted_steps{0};
    long rejected_steps{0};
};

// Integrates i d/dt psi = H(t) psi for the full 4x4 system under
// full_hamiltonian. psi0 must be normalized; t_final >= 0.
EvolutionTrace evolve(const SystemParams& p, const Drive& d,
                      const ops::Vector4& psi0, double t_final,
                      const IntegrationConfig& cfg = {});

// Same for the 2x2 conditional system with control state s.
EvolutionTrace evolve_conditional(const SystemParams& p, const Drive& d,
                                  ControlState s, const ops::Vector2& psi0,
                                  double t_final,
                                  const IntegrationConfig& cfg = {});

// Lab-frame 4-vector for control state s with qubit B prepared in the
// eta0_b-rotated basis state |rotated_index> (0 or 1).
ops::Vector4 prepare_input(const SystemParams& p, ControlState s,
                           int rotated_index);

// Numerically evolved counterpart of the closed-form probability table:
// each of the four inputs is propagated to time t and measured in the
// rotated basis. Requires delta_a = 0 (conditional-table semantics).
ProbabilityTable oracle_table(const SystemParams& p, const Drive& d, double t,
                              const IntegrationConfig& cfg = {});

// Transition probability |s0> -> |s1> at time t from a single evolution.
double oracle_transition(const SystemParams& p, const Drive& d, ControlState s,
                         double t, const IntegrationConfig& cfg = {});

struct SpectroscopyResult {
    std::vector<double> omegas;
    std::vector<double> response;      // max transition probability per omega
    std::vector<double> peak_omegas;   // refined local maxima
    std::vector<double> peak_heights;
};

// Sweeps the drive frequency and records, for each omega, the largest
// conditional transition probability reached within one nominal Rabi period.
// Requires delta_a = 0 and a nonzero v_b in the drive template.
SpectroscopyResult spectroscopy(const SystemParams& p, const Drive& drive_template,
                                double omega_min, double omega_max, int points,
                                const IntegrationConfig& cfg = {});

} // namespace cqo
