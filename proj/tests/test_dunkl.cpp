#include <algorithm>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "dunkl/dunkl.hpp"
#include "fixtures.hpp"

using namespace dunkl;

namespace {

Matrix random_unitary(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  Matrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = cplx(g(rng), g(rng));
  Eigen::HouseholderQR<Matrix> qr(a);
  return qr.householderQ() * Matrix::Identity(n, n);
}

Arrangement transform(const Arrangement& arr, const Matrix& u) {
  std::vector<Vector> normals;
  std::vector<double> kappas;
  for (const auto& h : arr.hyperplanes()) {
    normals.push_back(u * h.normal);
    kappas.push_back(h.kappa);
  }
  return Arrangement(arr.dim(), normals, kappas);
}

double subset_sum(const std::vector<double>& mu, const std::vector<int>& s) {
  double t = 0.0;
  for (int i : s) t += mu[static_cast<size_t>(i)];
  return t;
}

}  // namespace

TEST(Flatness, CatalogSystemsAreFlat) {
  for (const auto& [name, arr] : fixtures::flat()) {
    SCOPED_TRACE(name);
    const auto r = flatness_check(DunklSystem(arr));
    EXPECT_TRUE(r.flat);
    EXPECT_LE(r.max_relative, 1e-12);
    EXPECT_TRUE(r.violations.empty());
  }
}

TEST(Flatness, GenericWeightsOnThreeLinesFail) {
  int failed = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed)
    if (!flatness_check(DunklSystem(catalog::random_generic(2, 3, seed))).flat) ++failed;
  EXPECT_GE(failed, 19);
  const auto r = flatness_check(DunklSystem(catalog::random_generic(2, 3, 7)));
  ASSERT_FALSE(r.violations.empty());
  EXPECT_EQ(r.violations.front().members.size(), 3u);
  EXPECT_EQ(r.violations.front().relative_norms.size(), 3u);
}

TEST(Flatness, BooleanIsFlatForAnyWeights) {
  EXPECT_TRUE(flatness_check(DunklSystem(catalog::boolean(3, {0.1, 4.0, 0.77}))).flat);
}

TEST(Flatness, UnitaryInvariance) {
  for (const auto& [name, arr] : fixtures::flat()) {
    SCOPED_TRACE(name);
    const DunklSystem a(arr);
    const DunklSystem b(transform(arr, random_unitary(arr.dim(), 3)));
    EXPECT_TRUE(flatness_check(b).flat);
    const auto ta = exponent_table(a), tb = exponent_table(b);
    ASSERT_EQ(ta.kappa.size(), tb.kappa.size());
    for (size_t i = 0; i < ta.kappa.size(); ++i) EXPECT_NEAR(ta.kappa[i], tb.kappa[i], 1e-12);
  }
}

TEST(Flatness, GramChangeOfCoordinates) {
  // normals n in Gram A^*A coordinates are the normals A n in orthonormal ones
  const auto base = catalog::lauricella_arrangement({0.2, 0.3, 0.4, 0.5});
  Matrix a = random_unitary(3, 9);
  a(0, 0) *= 2.0;
  a(2, 1) += cplx(0.5, 0.1);
  const Matrix ainv = a.inverse();
  std::vector<Vector> normals;
  std::vector<double> kappas;
  for (const auto& h : base.hyperplanes()) {
    normals.push_back(ainv * h.normal);
    kappas.push_back(h.kappa);
  }
  const Arrangement skew(a.adjoint() * a, normals, kappas);
  const DunklSystem s(skew);
  EXPECT_TRUE(flatness_check(s).flat);
  EXPECT_NEAR(exponent_table(s).kappa_0, 1.4, 1e-12);
}

TEST(Exponents, LauricellaSubsetSums) {
  const std::vector<double> mu{0.1, 0.7, 0.35, 0.6, 0.45};
  const DunklSystem sys(catalog::lauricella_arrangement(mu));
  const int m = static_cast<int>(mu.size());
  for (int mask = 3; mask < (1 << m); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < m; ++i)
      if (mask & (1 << i)) s.push_back(i);
    if (s.size() < 2 || static_cast<int>(s.size()) == m) continue;
    const int f = sys.lattice.index_of(catalog::lauricella_flat_members(m, s));
    ASSERT_GE(f, 0);
    EXPECT_TRUE(sys.lattice.flat(f).irreducible);
    EXPECT_NEAR(exponent(sys, f), subset_sum(mu, s), 1e-12);
  }
  EXPECT_NEAR(exponent_table(sys).kappa_0, 2.2, 1e-12);
  EXPECT_NEAR(euler_dilatation(sys), -1.2, 1e-12);
}

TEST(Exponents, InclusionReverse) {
  for (const auto& [name, arr] : fixtures::flat()) {
    SCOPED_TRACE(name);
    const DunklSystem sys(arr);
    const auto t = exponent_table(sys);
    const auto irr = sys.lattice.irreducible_flats();
    for (int a : irr)
      for (int b : irr)
        if (a != b && sys.lattice.is_subspace(a, b)) EXPECT_GT(t.kappa[a], t.kappa[b] + 1e-12);
  }
}

TEST(ProjectionIdentity, IrreducibleFlats) {
  for (const auto& [name, arr] : fixtures::flat()) {
    SCOPED_TRACE(name);
    const DunklSystem sys(arr);
    for (int f : sys.lattice.irreducible_flats()) {
      if (f == sys.lattice.whole()) continue;
      EXPECT_LE(verify_projection_identity(sys, f), 1e-10);
    }
  }
}

TEST(ProjectionIdentity, ReducibleFlatRejected) {
  const DunklSystem sys(catalog::boolean(2, {0.3, 0.6}));
  try {
    verify_projection_identity(sys, sys.lattice.origin());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::FlatReducible);
  }
}

TEST(Induced, LongitudinalMergesWeights) {
  const DunklSystem sys(catalog::lauricella_arrangement({0.25, 0.25, 0.25, 0.25}));
  const auto lon = longitudinal_system(sys, sys.lattice.hyperplane_flat(0));
  std::vector<double> k;
  for (const auto& h : lon.system.arrangement.hyperplanes()) k.push_back(h.kappa);
  std::sort(k.begin(), k.end());
  ASSERT_EQ(k.size(), 3u);
  EXPECT_NEAR(k[0], 0.5, 1e-12);
  EXPECT_NEAR(k[1], 0.75, 1e-12);
  EXPECT_NEAR(k[2], 0.75, 1e-12);
  EXPECT_TRUE(flatness_check(lon.system).flat);
}

TEST(Induced, LongitudinalOfLauricellaIsLauricella) {
  // merging points i, j gives the Lauricella system with weight mu_i + mu_j
  const std::vector<double> mu{0.1, 0.7, 0.35, 0.6, 0.45};
  const DunklSystem sys(catalog::lauricella_arrangement(mu));
  const int f = sys.lattice.index_of(catalog::lauricella_flat_members(5, {1, 3}));
  const auto lon = longitudinal_system(sys, f);
  std::vector<double> got, want;
  for (const auto& h : lon.system.arrangement.hyperplanes()) got.push_back(h.kappa);
  const std::vector<double> nu{0.1, 1.3, 0.35, 0.45};
  for (size_t i = 0; i < nu.size(); ++i)
    for (size_t j = i + 1; j < nu.size(); ++j) want.push_back(nu[i] + nu[j]);
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  ASSERT_EQ(got.size(), want.size());
  for (size_t i = 0; i < got.size(); ++i) EXPECT_NEAR(got[i], want[i], 1e-12);
  EXPECT_NEAR(exponent_table(lon.system).kappa_0, 2.2, 1e-12);
}

TEST(Induced, TransversalOfA2Origin) {
  const DunklSystem sys(catalog::coxeter_A(2, 0.4));
  const auto t = transversal_system(sys, sys.lattice.origin());
  EXPECT_EQ(t.system.arrangement.size(), 3);
  EXPECT_NEAR(exponent_table(t.system).kappa_0, 0.6, 1e-12);
  const auto h = transversal_system(sys, sys.lattice.hyperplane_flat(0));
  EXPECT_EQ(h.system.arrangement.dim(), 1);
  EXPECT_NEAR(h.system.arrangement.hyperplane(0).kappa, 0.4, 1e-15);
}
