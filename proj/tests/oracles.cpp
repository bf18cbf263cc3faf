#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace oracle {

double log_gamma(double x) {
  static const double c[9] = {0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
                              771.32342877765313,   -176.61502916214059,   12.507343278686905,
                              -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
  if (x < 0.5) return std::log(std::numbers::pi / std::abs(std::sin(std::numbers::pi * x))) - log_gamma(1.0 - x);
  x -= 1.0;
  double a = c[0];
  const double t = x + 7.5;
  for (int i = 1; i < 9; ++i) a += c[i] / (x + i);
  return 0.5 * std::log(2.0 * std::numbers::pi) + (x + 0.5) * std::log(t) - t + std::log(a);
}

double beta(double a, double b) { return std::exp(log_gamma(a) + log_gamma(b) - log_gamma(a + b)); }

int rank(const Matrix& columns, double tol) {
  if (columns.cols() == 0) return 0;
  Eigen::JacobiSVD<Matrix> svd(columns);
  const auto s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  int r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > tol * s(0)) ++r;
  return r;
}

namespace {

Matrix pick(const Matrix& normals, const std::vector<int>& idx) {
  Matrix m(normals.rows(), static_cast<Eigen::Index>(idx.size()));
  for (size_t i = 0; i < idx.size(); ++i) m.col(static_cast<Eigen::Index>(i)) = normals.col(idx[i]);
  return m;
}

}  // namespace

std::set<std::vector<int>> lattice_members(const Matrix& normals, const Matrix& gram) {
  const int m = static_cast<int>(normals.cols());
  // functionals x -> <x, n>_G as rows of n^* G
  const Matrix rows = normals.adjoint() * gram;
  std::set<std::vector<int>> out;
  for (long mask = 0; mask < (1L << m); ++mask) {
    std::vector<int> sub;
    for (int i = 0; i < m; ++i)
      if (mask & (1L << i)) sub.push_back(i);
    Matrix a(static_cast<Eigen::Index>(sub.size()), rows.cols());
    for (size_t i = 0; i < sub.size(); ++i) a.row(static_cast<Eigen::Index>(i)) = rows.row(sub[i]);
    Matrix kernel = Matrix::Identity(rows.cols(), rows.cols());
    if (!sub.empty()) {
      Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeFullV);
      const int r = rank(a.adjoint());
      kernel = svd.matrixV().rightCols(rows.cols() - r);
    }
    std::vector<int> members;
    for (int h = 0; h < m; ++h) {
      if (kernel.cols() == 0 || (rows.row(h) * kernel).norm() <= 1e-8 * rows.row(h).norm())
        members.push_back(h);
    }
    out.insert(members);
  }
  return out;
}

std::vector<std::vector<int>> components(const Matrix& normals, const std::vector<int>& subset) {
  const int k = static_cast<int>(subset.size());
  const int total = rank(pick(normals, subset));
  // masks containing element 0 enumerate each 2-partition once
  for (long mask = 1; mask < (1L << k) - 1; mask += 2) {
    std::vector<int> a, b;
    for (int i = 0; i < k; ++i) (mask & (1L << i) ? a : b).push_back(subset[static_cast<size_t>(i)]);
    if (rank(pick(normals, a)) + rank(pick(normals, b)) == total) {
      auto left = components(normals, a);
      auto right = components(normals, b);
      left.insert(left.end(), right.begin(), right.end());
      std::sort(left.begin(), left.end());
      return left;
    }
  }
  return {subset};
}

}  // namespace oracle
