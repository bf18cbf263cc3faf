#include "dunkl/linalg.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace dunkl::linalg {

int rank(const Matrix& columns, double tol) {
  if (columns.size() == 0) return 0;
  Eigen::JacobiSVD<Matrix> svd(columns);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  int r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(i) > tol * s(0)) ++r;
  }
  return r;
}

cplx inner(const Vector& x, const Vector& y, const Matrix& gram) {
  return (y.adjoint() * gram * x)(0, 0);
}

double norm(const Vector& x, const Matrix& gram) {
  return std::sqrt(std::max(0.0, inner(x, x, gram).real()));
}

Matrix orthonormal_span(const Matrix& columns, const Matrix& gram, double tol) {
  const Eigen::Index dim = gram.rows();
  Matrix basis(dim, 0);
  double scale = 0.0;
  for (Eigen::Index j = 0; j < columns.cols(); ++j) {
    scale = std::max(scale, norm(columns.col(j), gram));
  }
  if (scale == 0.0) return basis;
  for (Eigen::Index j = 0; j < columns.cols(); ++j) {
    Vector v = columns.col(j);
    // two passes of modified Gram-Schmidt
    for (int pass = 0; pass < 2; ++pass) {
      for (Eigen::Index b = 0; b < basis.cols(); ++b) {
        v -= inner(v, basis.col(b), gram) * basis.col(b);
      }
    }
    const double nv = norm(v, gram);
    if (nv > tol * scale) {
      basis.conservativeResize(Eigen::NoChange, basis.cols() + 1);
      basis.col(basis.cols() - 1) = v / nv;
    }
  }
  return basis;
}

Matrix annihilator_basis(const Matrix& normals, const Matrix& gram, double tol) {
  const Eigen::Index dim = gram.rows();
  if (normals.cols() == 0) {
    return orthonormal_span(Matrix::Identity(dim, dim), gram, tol);
  }
  // rows n^* G; the annihilator is their Euclidean null space
  Matrix rows = normals.adjoint() * gram;
  Eigen::JacobiSVD<Matrix> svd(rows, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  int r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(0) > 0.0 && s(i) > tol * s(0)) ++r;
  }
  Matrix null = svd.matrixV().rightCols(dim - r);
  return orthonormal_span(null, gram, tol);
}

Matrix projector(const Matrix& basis, const Matrix& gram) {
  return basis * basis.adjoint() * gram;
}

bool is_hermitian(const Matrix& m, double tol) {
  const double scale = std::max(1.0, m.norm());
  return (m - m.adjoint()).norm() <= tol * scale;
}

double commutator_norm(const Matrix& a, const Matrix& b) {
  return (a * b - b * a).norm();
}

Signature signature(const Matrix& hermitian, double tol, std::vector<double>* eigenvalues) {
  Matrix sym = 0.5 * (hermitian + hermitian.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(sym, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& ev = solver.eigenvalues();
  double largest = 0.0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) largest = std::max(largest, std::abs(ev(i)));
  Signature sig;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (std::abs(ev(i)) <= tol * largest) {
      ++sig.zero;
    } else if (ev(i) > 0) {
      ++sig.positive;
    } else {
      ++sig.negative;
    }
  }
  if (eigenvalues) eigenvalues->assign(ev.data(), ev.data() + ev.size());
  return sig;
}

}  // namespace dunkl::linalg
