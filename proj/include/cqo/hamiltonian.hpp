// hamiltonian.hpp — Full and conditional Hamiltonians of the coupled pair, plus exact propagators

#pragma once

#include "cqo/ops.hpp"
#include "cqo/params.hpp"

namespace cqo {

using ops::Matrix2;
using ops::Matrix4;

// Single-qubit Hamiltonian [(eps + v cos(wt)) sigma_z - delta sigma_x] / 2.
Matrix2 qubit_hamiltonian(double eps, double delta, double drive_value);

// H = H_A x s0 + s0 x H_B + J sz x sz in the basis {|uu>, |ud>, |du>, |dd>}.
Matrix4 full_hamiltonian(const SystemParams& p, const Drive& d, double t);

// Effective qubit-B Hamiltonian for control qubit A frozen in state s:
//   [(eps_b + 2sJ + V_B(t)) sigma_z + s (eps_a + V_A(t)) sigma_0 - delta_b sigma_x] / 2.
// Intended for negligible delta_a; the caller decides whether that holds.
Matrix2 conditional_hamiltonian(const SystemParams& p, const Drive& d,
                                ControlState s, double t);

// exp(-i h t) for a time-independent Hermitian h, via eigendecomposition.
// Throws std::invalid_argument if h is not Hermitian within 1e-14 relative.
Matrix2 propagator(const Matrix2& h, double t);
Matrix4 propagator(const Matrix4& h, double t);

} // namespace cqo
