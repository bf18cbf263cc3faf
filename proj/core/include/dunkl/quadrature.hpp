#pragma once

#include <vector>

namespace dunkl::quadrature {

struct Rule {
  std::vector<double> nodes;    // in [-1, 1], ascending
  std::vector<double> weights;
};

/// Gauss-Jacobi rule for the weight (1-x)^alpha (1+x)^beta on [-1, 1], alpha, beta > -1.
/// Rules are cached; the returned reference stays valid for the program lifetime.
const Rule& gauss_jacobi(int n, double alpha, double beta);

inline const Rule& gauss_legendre(int n) { return gauss_jacobi(n, 0.0, 0.0); }

}  // namespace dunkl::quadrature
