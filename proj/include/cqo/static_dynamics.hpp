// static_dynamics.hpp — Closed-form conditional evolution without applied fields

#pragma once

#include "cqo/params.hpp"

namespace cqo {

// Mixing angle and oscillation frequency of one conditional branch.
struct ConditionalFrame {
    double eta{0.0};    // in (-pi, pi]
    double omega{0.0};  // >= 0
};

// Real initial amplitudes a|up> + b|down>, a^2 + b^2 = 1.
struct InitialAmplitudes {
    double a{1.0};
    double b{0.0};

    void validate() const {
        if (!std::isfinite(a) || !std::isfinite(b) ||
            std::abs(a * a + b * b - 1.0) > 1e-12) {
            throw std::invalid_argument(
                "InitialAmplitudes: a^2 + b^2 must equal 1 within 1e-12");
        }
    }
};

// Frame of the undriven conditional Hamiltonian for control state s:
//   eta = atan2(delta_b, eps_b + 2sJ), omega = sqrt((eps_b + 2sJ)^2 + delta_b^2).
// Throws std::invalid_argument when both arguments vanish (undefined mixing angle).
ConditionalFrame static_frame(const SystemParams& p, ControlState s);

// Occupation probability P_{s,up}(t) of qubit B's |up> state; P_down = 1 - P_up.
double static_occupation(const SystemParams& p, ControlState s,
                         const InitialAmplitudes& init, double t);

// Parameter fragment where the undriven non-Rabi frequency is exactly twice the
// Rabi frequency: J = (sqrt(3)/4) delta_b, eps_b = 2J.
struct StaticCnotPoint {
    double coupling{0.0};
    double eps_b{0.0};
};

StaticCnotPoint static_cnot_point(double delta_b);

} // namespace cqo
