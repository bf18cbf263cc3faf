#include <algorithm>
#include <cmath>
#include <numeric>

#include "dunkl/lauricella.hpp"

namespace dunkl::lauricella {

SchwarzGroup schwarz_group(const WeightSystem& ws) {
  const int m = ws.points();
  if (m > 10) throw Error(ErrorCode::InvalidInput, "Schwarz group enumeration is limited to 10 points");
  auto same = [&](int i, int j) {
    return std::abs(ws.mu[static_cast<size_t>(i)] - ws.mu[static_cast<size_t>(j)]) <= ws.tol;
  };
  SchwarzGroup g;
  std::vector<int> sigma(static_cast<size_t>(m));
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < m && ok; ++i) ok = same(sigma[static_cast<size_t>(i)], i);
    if (ok) g.elements.push_back(sigma);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  g.order = static_cast<long long>(g.elements.size());
  // adjacent transpositions inside each class of equal weights
  std::vector<bool> seen(static_cast<size_t>(m), false);
  for (int i = 0; i < m; ++i) {
    if (seen[static_cast<size_t>(i)]) continue;
    int prev = i;
    seen[static_cast<size_t>(i)] = true;
    for (int j = i + 1; j < m; ++j) {
      if (seen[static_cast<size_t>(j)] || !same(i, j)) continue;
      seen[static_cast<size_t>(j)] = true;
      std::vector<int> t(static_cast<size_t>(m));
      std::iota(t.begin(), t.end(), 0);
      std::swap(t[static_cast<size_t>(prev)], t[static_cast<size_t>(j)]);
      g.generators.push_back(t);
      prev = j;
    }
  }
  return g;
}

std::vector<std::vector<int>> stabilizer(const SchwarzGroup& g, const std::vector<int>& subset) {
  std::vector<int> s(subset);
  std::sort(s.begin(), s.end());
  std::vector<std::vector<int>> out;
  for (const auto& sigma : g.elements) {
    std::vector<int> image;
    for (int i : s) image.push_back(sigma.at(static_cast<size_t>(i)));
    std::sort(image.begin(), image.end());
    if (image == s) out.push_back(sigma);
  }
  return out;
}

Matrix permutation_action(const std::vector<double>& mu, const std::vector<int>& sigma) {
  const Matrix e = catalog::lauricella_embedding(mu);
  const Eigen::Index m = static_cast<Eigen::Index>(mu.size());
  if (static_cast<Eigen::Index>(sigma.size()) != m) {
    throw Error(ErrorCode::InvalidInput, "permutation size does not match the weights");
  }
  Matrix p = Matrix::Zero(m, m);
  Matrix d = Matrix::Zero(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    p(sigma[static_cast<size_t>(i)], i) = 1.0;  // point i moves to slot sigma(i)
    d(i, i) = mu[static_cast<size_t>(i)];
  }
  return e.adjoint() * d * p * e;
}

}  // namespace dunkl::lauricella
