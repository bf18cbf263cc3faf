#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace dunkl {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Default relative tolerance for rank and subspace decisions.
inline constexpr double kDefaultTol = 1e-9;

namespace linalg {

/// Numerical rank of the column span, singular values relative to the largest.
int rank(const Matrix& columns, double tol = kDefaultTol);

/// Inner product <x, y>_G = y^* G x (linear in the first slot).
cplx inner(const Vector& x, const Vector& y, const Matrix& gram);
double norm(const Vector& x, const Matrix& gram);

/// G-orthonormal basis of the subspace {x : <x, n>_G = 0 for every column n}.
Matrix annihilator_basis(const Matrix& normals, const Matrix& gram, double tol = kDefaultTol);

/// G-orthonormal basis of span(columns), dropping dependent directions.
Matrix orthonormal_span(const Matrix& columns, const Matrix& gram, double tol = kDefaultTol);

/// G-orthogonal projection onto span(basis); basis must be G-orthonormal.
Matrix projector(const Matrix& basis, const Matrix& gram);

bool is_hermitian(const Matrix& m, double tol = kDefaultTol);

/// Frobenius norm of the commutator AB - BA.
double commutator_norm(const Matrix& a, const Matrix& b);

struct Signature {
  int positive = 0;
  int negative = 0;
  int zero = 0;
};

/// Inertia of a Hermitian matrix; eigenvalues with |λ| <= tol·max|λ| count as zero.
Signature signature(const Matrix& hermitian, double tol, std::vector<double>* eigenvalues = nullptr);

}  // namespace linalg
}  // namespace dunkl
