#pragma once

#include <complex>

#include <Eigen/Dense>

namespace uqfi {

using cplx = std::complex<double>;

// Basis ordering is |00>,|01>,|10>,|11> with the leftmost factor most
// significant (qubit 1 = Alice, qubit 2 = Bob).
using Density2 = Eigen::Matrix2cd;
using Density4 = Eigen::Matrix4cd;
using Matrix8 = Eigen::Matrix<cplx, 8, 8>;

inline constexpr double kHermTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kPsdTol = 1e-12;

namespace pauli {
Density2 x();
Density2 y();
Density2 z();
}  // namespace pauli

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

/// max_ij |M_ij - conj(M_ji)|
double hermiticity_error(const Eigen::MatrixXcd& m);

/// max_ij |A_ij - B_ij|
double max_abs_diff(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

/// Smallest eigenvalue of the Hermitian part of m.
double min_eigenvalue(const Eigen::MatrixXcd& m);

/// Tr_B of a (dim_a*dim_b)-square operator on A (x) B.
Eigen::MatrixXcd partial_trace_second(const Eigen::MatrixXcd& m, int dim_a, int dim_b);

}  // namespace uqfi
