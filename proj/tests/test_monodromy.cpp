#include <algorithm>
#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "dunkl/lauricella.hpp"

using namespace dunkl;
using namespace dunkl::lauricella;

namespace {

cplx local_eigenvalue(const WeightSystem& ws, int i, int j) {
  return std::polar(1.0, -2.0 * std::numbers::pi * (ws.mu[static_cast<size_t>(i)] + ws.mu[static_cast<size_t>(j)]));
}

// z_1 circling z_0: F_1 picks up the local exponent, F_k (k >= 3) are untouched
// and F_2 follows from the linear relation.
Matrix first_pair_oracle(const WeightSystem& ws) {
  const int d = ws.n() + 1;
  Matrix m = Matrix::Identity(d, d);
  const cplx lambda = local_eigenvalue(ws, 0, 1);
  m(0, 0) = lambda;
  m(1, 0) = -(lambda - 1.0) * ws.w[0].imag() / ws.w[1].imag();
  return m;
}

void expect_spectrum(const MonodromyMatrix& m, cplx lambda, double tol) {
  std::vector<cplx> ev = m.eigenvalues;
  auto nearest = std::min_element(ev.begin(), ev.end(),
                                  [&](cplx a, cplx b) { return std::abs(a - lambda) < std::abs(b - lambda); });
  ASSERT_NE(nearest, ev.end());
  EXPECT_LE(std::abs(*nearest - lambda), tol);
  ev.erase(nearest);
  for (cplx e : ev) EXPECT_LE(std::abs(e - 1.0), tol);
}

}  // namespace

TEST(Monodromy, ThreePointsClosedForm) {
  const auto ws = build_weights({0.3, 0.45, 0.5});
  const Configuration base({0.0, 1.0, 2.0});
  const auto m = monodromy(ws, base, {{1, 0, 0.0}});
  EXPECT_LE((m.M - first_pair_oracle(ws)).norm(), 1e-7);
  expect_spectrum(m, local_eigenvalue(ws, 0, 1), 1e-7);
  EXPECT_LE(m.unitarity_defect, 1e-8);
}

TEST(Monodromy, FourPointsClosedForm) {
  const auto ws = build_weights({0.3, 0.45, 0.5, 0.35});
  const Configuration base({0.0, 1.0, 2.0, 3.0});
  const auto m = monodromy(ws, base, {{1, 0, 0.0}});
  EXPECT_LE((m.M - first_pair_oracle(ws)).norm(), 1e-7);
}

TEST(Monodromy, FourPointsSpectra) {
  const auto ws = build_weights({0.3, 0.45, 0.5, 0.35});
  const Configuration base({0.0, 1.0, 2.0, 3.0});
  for (const Loop& l : {Loop{1, 0, 0.0}, Loop{2, 1, 0.0}, Loop{3, 2, 0.0}, Loop{1, 2, 0.0}, Loop{0, 1, 0.3}}) {
    SCOPED_TRACE(std::to_string(l.mover) + " around " + std::to_string(l.center));
    const auto m = monodromy(ws, base, {l});
    expect_spectrum(m, local_eigenvalue(ws, l.mover, l.center), 1e-6);
    EXPECT_LE(m.unitarity_defect, 1e-6);
  }
}

TEST(Monodromy, CompositionOfLoops) {
  const auto ws = build_weights({0.3, 0.45, 0.5, 0.35});
  const Configuration base({0.0, 1.0, 2.0, 3.0});
  const Loop a{1, 0, 0.0}, b{2, 1, 0.0};
  const auto ma = monodromy(ws, base, {a});
  const auto mb = monodromy(ws, base, {b});
  const auto mab = monodromy(ws, base, {a, b});
  // continuing M_a F along b gives M_a (M_b F)
  EXPECT_LE((mab.M - ma.M * mb.M).norm() / mab.M.norm(), 1e-6);
  EXPECT_LE(mab.unitarity_defect, 1e-6);
}

TEST(Monodromy, ParabolicWeights) {
  const auto ws = build_weights({0.25, 0.25, 0.25, 0.25});
  const Configuration base({0.0, 1.0, 2.0, 3.0});
  const auto m = monodromy(ws, base, {{2, 1, 0.0}});
  expect_spectrum(m, local_eigenvalue(ws, 2, 1), 1e-6);
  EXPECT_LE(m.unitarity_defect, 1e-6);
}

TEST(Monodromy, InvalidLoops) {
  const auto ws = build_weights({0.3, 0.45, 0.5});
  const Configuration base({0.0, 1.0, 2.0});
  EXPECT_THROW(monodromy(ws, base, {{1, 1, 0.0}}), Error);
  EXPECT_THROW(monodromy(ws, base, {{1, 5, 0.0}}), Error);
  EXPECT_THROW(monodromy(ws, base, {}), Error);
}

TEST(Monodromy, OffAxisBase) {
  const auto ws = build_weights({0.3, 0.45, 0.5, 0.35});
  const Configuration base({0.0, 1.0, cplx(0.5, 1.0), 2.0});
  for (const Loop& l : {Loop{2, 0, 0.0}, Loop{3, 2, 0.0}}) {
    SCOPED_TRACE(std::to_string(l.mover) + " around " + std::to_string(l.center));
    const auto m = monodromy(ws, base, {l});
    expect_spectrum(m, local_eigenvalue(ws, l.mover, l.center), 1e-6);
    EXPECT_LE(m.unitarity_defect, 1e-6);
  }
}
