// params.hpp — Device parameters, drive fields, and the control-state labels

#pragma once

#include <cmath>
#include <stdexcept>

namespace cqo {

// All energies and frequencies are angular frequencies with hbar = 1.
struct SystemParams {
    double eps_a{0.0};     // energy bias of qubit A
    double delta_a{0.0};   // transition amplitude of qubit A
    double eps_b{0.0};     // energy bias of qubit B
    double delta_b{0.0};   // transition amplitude of qubit B
    double coupling{0.0};  // sigma_z x sigma_z interaction strength J

    void validate() const {
        if (!std::isfinite(eps_a) || !std::isfinite(delta_a) ||
            !std::isfinite(eps_b) || !std::isfinite(delta_b) ||
            !std::isfinite(coupling)) {
            throw std::invalid_argument("SystemParams: all fields must be finite");
        }
    }
};

// Harmonic field V_i(t) = V_i cos(omega t) applied to each qubit.
struct Drive {
    double v_a{0.0};
    double v_b{0.0};
    double omega{0.0};

    void validate() const {
        if (!std::isfinite(v_a) || !std::isfinite(v_b) || !std::isfinite(omega)) {
            throw std::invalid_argument("Drive: all fields must be finite");
        }
        if (omega < 0.0) {
            throw std::invalid_argument("Drive: omega must be >= 0");
        }
    }

    double value_a(double t) const { return v_a * std::cos(omega * t); }
    double value_b(double t) const { return v_b * std::cos(omega * t); }
};

// State of the control qubit A; sign enters the conditional Hamiltonians.
enum class ControlState { Up, Down };

inline constexpr double control_sign(ControlState s) {
    return s == ControlState::Up ? +1.0 : -1.0;
}

inline constexpr ControlState other(ControlState s) {
    return s == ControlState::Up ? ControlState::Down : ControlState::Up;
}

} // namespace cqo
