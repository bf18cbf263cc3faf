#include <cmath>
#include <random>
#include <string>

#include "dunkl/arrangement.hpp"

namespace dunkl::catalog {

namespace {

void check_mu(const std::vector<double>& mu) {
  if (mu.size() < 3) {
    throw Error(ErrorCode::InvalidInput, "need at least three weights for a Lauricella arrangement");
  }
  for (double m : mu) {
    if (!(m > 0.0 && m < 1.0)) {
      throw Error(ErrorCode::WeightOutOfRange, "weight " + std::to_string(m) + " is outside (0,1)");
    }
  }
}

}  // namespace

std::vector<std::pair<int, int>> lauricella_pairs(int points) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < points; ++i) {
    for (int j = i + 1; j < points; ++j) pairs.emplace_back(i, j);
  }
  return pairs;
}

std::vector<int> lauricella_flat_members(int points, const std::vector<int>& subset) {
  std::vector<int> out;
  const auto pairs = lauricella_pairs(points);
  for (size_t h = 0; h < pairs.size(); ++h) {
    bool a = false, b = false;
    for (int s : subset) {
      a = a || s == pairs[h].first;
      b = b || s == pairs[h].second;
    }
    if (a && b) out.push_back(static_cast<int>(h));
  }
  return out;
}

Matrix lauricella_embedding(const std::vector<double>& mu) {
  check_mu(mu);
  const Eigen::Index m = static_cast<Eigen::Index>(mu.size());
  Matrix d = Matrix::Zero(m, m);
  for (Eigen::Index i = 0; i < m; ++i) d(i, i) = mu[static_cast<size_t>(i)];
  Matrix spanning = Matrix::Zero(m, m - 1);
  for (Eigen::Index k = 0; k + 1 < m; ++k) {
    spanning(k, k) = mu[static_cast<size_t>(k + 1)];
    spanning(k + 1, k) = -mu[static_cast<size_t>(k)];
  }
  return linalg::orthonormal_span(spanning, d);
}

Arrangement lauricella_arrangement(const std::vector<double>& mu) {
  const Matrix e = lauricella_embedding(mu);
  const Eigen::Index m = static_cast<Eigen::Index>(mu.size());
  Matrix d = Matrix::Zero(m, m);
  for (Eigen::Index i = 0; i < m; ++i) d(i, i) = mu[static_cast<size_t>(i)];
  std::vector<Vector> normals;
  std::vector<double> kappas;
  for (auto [i, j] : lauricella_pairs(static_cast<int>(m))) {
    Vector n = Vector::Zero(m);
    n(i) = mu[static_cast<size_t>(j)];
    n(j) = -mu[static_cast<size_t>(i)];
    normals.push_back(e.adjoint() * d * n);
    kappas.push_back(mu[static_cast<size_t>(i)] + mu[static_cast<size_t>(j)]);
  }
  return Arrangement(static_cast<int>(m - 1), normals, kappas);
}

Arrangement coxeter_A(int n, double kappa) {
  if (n < 1) throw Error(ErrorCode::InvalidInput, "coxeter_A needs n >= 1");
  if (!(kappa > 0.0)) throw Error(ErrorCode::WeightOutOfRange, "weight must be positive");
  const Eigen::Index m = n + 1;
  Matrix spanning = Matrix::Zero(m, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    spanning(k, k) = 1.0;
    spanning(k + 1, k) = -1.0;
  }
  const Matrix e = linalg::orthonormal_span(spanning, Matrix::Identity(m, m));
  std::vector<Vector> normals;
  for (auto [i, j] : lauricella_pairs(static_cast<int>(m))) {
    Vector v = Vector::Zero(m);
    v(i) = 1.0;
    v(j) = -1.0;
    normals.push_back(e.adjoint() * v);
  }
  return Arrangement(n, normals, std::vector<double>(normals.size(), kappa));
}

Arrangement boolean(int dim, const std::vector<double>& kappas) {
  if (dim < 1 || static_cast<int>(kappas.size()) != dim) {
    throw Error(ErrorCode::InvalidInput, "boolean arrangement needs one weight per coordinate");
  }
  std::vector<Vector> normals;
  for (int i = 0; i < dim; ++i) normals.push_back(Vector::Unit(dim, i));
  return Arrangement(dim, normals, kappas);
}

Arrangement random_generic(int dim, int m, std::uint64_t seed) {
  if (dim < 1 || m < dim) throw Error(ErrorCode::InvalidInput, "random_generic needs m >= dim >= 1");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> weight(0.2, 0.9);
  std::vector<Vector> normals;
  std::vector<double> kappas;
  for (int h = 0; h < m; ++h) {
    Vector v(dim);
    for (int i = 0; i < dim; ++i) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      v(i) = cplx(re, im);
    }
    normals.push_back(v);
    kappas.push_back(weight(rng));
  }
  return Arrangement(dim, normals, kappas);
}

Arrangement direct_sum(const Arrangement& a, const Arrangement& b) {
  const int n = a.dim() + b.dim();
  Matrix g = Matrix::Zero(n, n);
  g.topLeftCorner(a.dim(), a.dim()) = a.gram();
  g.bottomRightCorner(b.dim(), b.dim()) = b.gram();
  std::vector<Vector> normals;
  std::vector<double> kappas;
  for (const auto& h : a.hyperplanes()) {
    Vector v = Vector::Zero(n);
    v.head(a.dim()) = h.normal;
    normals.push_back(v);
    kappas.push_back(h.kappa);
  }
  for (const auto& h : b.hyperplanes()) {
    Vector v = Vector::Zero(n);
    v.tail(b.dim()) = h.normal;
    normals.push_back(v);
    kappas.push_back(h.kappa);
  }
  return Arrangement(g, normals, kappas, std::min(a.tol(), b.tol()));
}

}  // namespace dunkl::catalog
