#include "dunkl/quadrature.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include <Eigen/Eigenvalues>

#include "dunkl/error.hpp"

namespace dunkl::quadrature {

namespace {

Rule golub_welsch(int n, double a, double b) {
  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(n > 1 ? n - 1 : 0);
  const double ab = a + b;
  for (int k = 0; k < n; ++k) {
    const double s = 2.0 * k + ab;
    diag(k) = (k == 0) ? (b - a) / (ab + 2.0) : (b * b - a * a) / (s * (s + 2.0));
  }
  for (int k = 1; k < n; ++k) {
    const double s = 2.0 * k + ab;
    const double num = 4.0 * k * (k + a) * (k + b) * (k + ab);
    const double den = s * s * (s + 1.0) * (s - 1.0);
    sub(k - 1) = std::sqrt(num / den);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  const double mu0 = std::exp((ab + 1.0) * std::log(2.0) + std::lgamma(a + 1.0) +
                              std::lgamma(b + 1.0) - std::lgamma(ab + 2.0));
  Rule r;
  r.nodes.resize(static_cast<size_t>(n));
  r.weights.resize(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) {
    r.nodes[static_cast<size_t>(k)] = es.eigenvalues()(k);
    const double v = es.eigenvectors()(0, k);
    r.weights[static_cast<size_t>(k)] = mu0 * v * v;
  }
  return r;
}

}  // namespace

const Rule& gauss_jacobi(int n, double alpha, double beta) {
  if (n < 1 || !(alpha > -1.0) || !(beta > -1.0)) {
    throw Error(ErrorCode::InvalidInput, "invalid Gauss-Jacobi parameters");
  }
  static std::mutex mutex;
  static std::map<std::tuple<int, double, double>, std::unique_ptr<Rule>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[{n, alpha, beta}];
  if (!slot) slot = std::make_unique<Rule>(golub_welsch(n, alpha, beta));
  return *slot;
}

}  // namespace dunkl::quadrature
