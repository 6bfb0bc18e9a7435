// ops.hpp — Pauli matrices, Kronecker products, and Hermiticity checks for 2x2/4x4 kernels

#pragma once

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

#include <complex>
#include <stdexcept>

namespace cqo::ops {

using Complex = std::complex<double>;
using Matrix2 = Eigen::Matrix2cd;
using Matrix4 = Eigen::Matrix4cd;
using Vector2 = Eigen::Vector2cd;
using Vector4 = Eigen::Vector4cd;

enum class Pauli { X, Y, Z, Id };

// Basis ordering is {|up>, |down>} with sigma_z |up> = +|up>.
inline Matrix2 pauli(Pauli which) {
    Matrix2 m;
    switch (which) {
        case Pauli::X:  m << 0, 1, 1, 0; break;
        case Pauli::Y:  m << 0, Complex(0, -1), Complex(0, 1), 0; break;
        case Pauli::Z:  m << 1, 0, 0, -1; break;
        case Pauli::Id: m << 1, 0, 0, 1; break;
    }
    return m;
}

inline Matrix2 sigma_x() { return pauli(Pauli::X); }
inline Matrix2 sigma_y() { return pauli(Pauli::Y); }
inline Matrix2 sigma_z() { return pauli(Pauli::Z); }
inline Matrix2 sigma_0() { return pauli(Pauli::Id); }

// Two-qubit product in the basis {|uu>, |ud>, |du>, |dd>}.
inline Matrix4 kron(const Matrix2& a, const Matrix2& b) {
    return Eigen::kroneckerProduct(a, b);
}

template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
    return m.cwiseAbs().maxCoeff();
}

template <typename Derived>
bool is_hermitian(const Eigen::MatrixBase<Derived>& m, double rel_tol = 1e-14) {
    const double scale = max_abs(m);
    if (scale == 0.0) return true;
    return max_abs(m - m.adjoint()) <= rel_tol * scale;
}

template <typename Derived>
void require_hermitian(const Eigen::MatrixBase<Derived>& m, const char* who,
                       double rel_tol = 1e-14) {
    if (!is_hermitian(m, rel_tol)) {
        throw std::invalid_argument(std::string(who) + ": matrix is not Hermitian");
    }
}

} // namespace cqo::ops
