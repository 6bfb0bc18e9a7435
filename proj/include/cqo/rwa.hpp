// rwa.hpp — Rotating-wave effective Hamiltonians and driven conditional oscillations

#pragma once

#include "cqo/ops.hpp"
#include "cqo/params.hpp"
#include "cqo/static_dynamics.hpp"

namespace cqo {

// Quantities shared by both conditional branches in the rotating frame.
struct RwaContext {
    double omega0_b{0.0};        // sqrt(eps_b^2 + delta_b^2), qubit-B splitting
    double eta0_b{0.0};          // atan2(delta_b, eps_b), lab->rotated basis angle
    double shift{0.0};           // 2 J eps_b / omega0_b, conditional detuning shift
    double drive_strength{0.0};  // delta_b v_b / (2 omega0_b), sigma_x coefficient
};

// Throws std::invalid_argument if eps_b^2 + delta_b^2 = 0.
RwaContext rwa_context(const SystemParams& p, const Drive& d);

// Static rotating-frame matrix for control state s:
//   [(omega0_b + 2sJ eps_b/omega0_b - omega) sigma_z + s eps_a sigma_0
//    + (v_b/2)(delta_b/omega0_b) sigma_x] / 2.
ops::Matrix2 effective_hamiltonian(const SystemParams& p, const Drive& d,
                                   ControlState s);

// Driven oscillation frame: omega = sqrt(detuning^2 + drive_strength^2) with
// detuning = omega - omega0_b - 2sJ eps_b/omega0_b, and eta chosen so that
// sin(eta) = drive_strength / omega. Throws when the frame is degenerate
// (undriven and exactly on resonance).
ConditionalFrame driven_frame(const SystemParams& p, const Drive& d,
                              ControlState s);

// P_{|s1> <- |s0>}(t) = sin^2(eta_{B:s}) sin^2(Omega_{B:s} t / 2).
double transition_probability(const SystemParams& p, const Drive& d,
                              ControlState s, double t);

// Amplitude angle of the off-resonant branch: atan2(delta_b v_b, 8 J eps_b).
double non_rabi_angle(const SystemParams& p, const Drive& d);

struct ResonantFrequencies {
    double plus_branch{0.0};   // omega0_b + 2 J eps_b / omega0_b
    double minus_branch{0.0};  // omega0_b - 2 J eps_b / omega0_b
};

ResonantFrequencies resonant_frequencies(const SystemParams& p);

enum class ResonanceBranch { Plus, Minus };

// Which control state sits exactly on resonance at the given branch frequency.
inline constexpr ControlState resonant_state(ResonanceBranch b) {
    return b == ResonanceBranch::Plus ? ControlState::Up : ControlState::Down;
}

// Both conditional frames evaluated with omega locked to a branch resonance.
struct OscillationPair {
    ConditionalFrame rabi;      // resonant branch, eta = pi/2
    ConditionalFrame non_rabi;  // off-resonant branch
    ResonanceBranch branch{ResonanceBranch::Plus};
};

OscillationPair resonant_pair(const SystemParams& p, double v_b,
                              ResonanceBranch branch);

// Validity ratios of the rotating-wave treatment. Advisory: callers may warn
// but must not block on out-of-regime parameters.
struct RegimeReport {
    double drive_shift_ratio{0.0};    // |eps_b v_b| / omega0_b^2
    double control_drive_ratio{0.0};  // |v_a / eps_a|
    double coupling_drive_ratio{0.0}; // |2J / v_b|
    double threshold{0.2};
    bool in_regime{false};
};

RegimeReport regime_check(const SystemParams& p, const Drive& d,
                          double threshold = 0.2);

} // namespace cqo
