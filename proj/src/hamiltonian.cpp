#include "cqo/hamiltonian.hpp"

#include <Eigen/Eigenvalues>

namespace cqo {

Matrix2 qubit_hamiltonian(double eps, double delta, double drive_value) {
    Matrix2 h;
    const double z = 0.5 * (eps + drive_value);
    const double x = -0.5 * delta;
    h << z, x,
         x, -z;
    return h;
}

Matrix4 full_hamiltonian(const SystemParams& p, const Drive& d, double t) {
    p.validate();
    d.validate();
    const Matrix2 ha = qubit_hamiltonian(p.eps_a, p.delta_a, d.value_a(t));
    const Matrix2 hb = qubit_hamiltonian(p.eps_b, p.delta_b, d.value_b(t));
    return ops::kron(ha, ops::sigma_0()) + ops::kron(ops::sigma_0(), hb) +
           p.coupling * ops::kron(ops::sigma_z(), ops::sigma_z());
}

Matrix2 conditional_hamiltonian(const SystemParams& p, const Drive& d,
                                ControlState s, double t) {
    p.validate();
    d.validate();
    const double sign = control_sign(s);
    const double z = 0.5 * (p.eps_b + 2.0 * sign * p.coupling + d.value_b(t));
    const double c = 0.5 * sign * (p.eps_a + d.value_a(t));
    const double x = -0.5 * p.delta_b;
    Matrix2 h;
    h << z + c, x,
         x, -z + c;
    return h;
}

namespace {

template <typename Matrix>
Matrix hermitian_expm(const Matrix& h, double t, const char* who) {
    ops::require_hermitian(h, who);
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error(std::string(who) + ": eigendecomposition failed");
    }
    const auto& vecs = solver.eigenvectors();
    const auto& vals = solver.eigenvalues();
    Matrix phases = Matrix::Zero();
    for (Eigen::Index k = 0; k < vals.size(); ++k) {
        phases(k, k) = std::exp(ops::Complex(0.0, -vals(k) * t));
    }
    return vecs * phases * vecs.adjoint();
}

} // namespace

Matrix2 propagator(const Matrix2& h, double t) {
    return hermitian_expm(h, t, "propagator");
}

Matrix4 propagator(const Matrix4& h, double t) {
    return hermitian_expm(h, t, "propagator");
}

} // namespace cqo
