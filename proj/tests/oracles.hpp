#pragma once

// Independent reference computations for the tests. Nothing here calls into the
// library's lattice, irreducibility or quadrature code.

#include <algorithm>
#include <complex>
#include <set>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using Matrix = Eigen::MatrixXcd;

/// log Gamma(x) for x > 0 by the Lanczos approximation (g = 7, 9 terms).
double log_gamma(double x);
double beta(double a, double b);

/// Rank by full SVD.
int rank(const Matrix& columns, double tol = 1e-9);

/// Member sets of all intersections of subsets of the hyperplanes (normals as
/// columns, Gram matrix gram), each closed under containment.
std::set<std::vector<int>> lattice_members(const Matrix& normals, const Matrix& gram);

/// Finest rank-additive partition of `subset` by splitting along any
/// rank-additive 2-partition found by exhaustive search.
std::vector<std::vector<int>> components(const Matrix& normals, const std::vector<int>& subset);

/// Chains of flats ordered by inclusion, found by testing every subset of `flats`.
/// contains(a, b) reports L_a ⊂ L_b strictly.
template <class Contains>
std::vector<std::vector<int>> chains(const std::vector<int>& flats, Contains contains) {
  std::vector<std::vector<int>> out;
  const int k = static_cast<int>(flats.size());
  for (long mask = 1; mask < (1L << k); ++mask) {
    std::vector<int> pick;
    for (int i = 0; i < k; ++i)
      if (mask & (1L << i)) pick.push_back(flats[static_cast<size_t>(i)]);
    bool total = true;
    for (size_t i = 0; i < pick.size() && total; ++i)
      for (size_t j = i + 1; j < pick.size() && total; ++j)
        total = contains(pick[i], pick[j]) || contains(pick[j], pick[i]);
    if (!total) continue;
    std::sort(pick.begin(), pick.end(), [&](int a, int b) { return contains(a, b); });
    out.push_back(pick);
  }
  return out;
}

}  // namespace oracle
