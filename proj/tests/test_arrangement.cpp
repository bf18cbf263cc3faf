#include <algorithm>
#include <set>

#include <gtest/gtest.h>

#include "dunkl/arrangement.hpp"
#include "dunkl/json.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace dunkl;

namespace {

std::set<std::vector<int>> member_sets(const IntersectionLattice& lat) {
  std::set<std::vector<int>> out;
  for (const auto& f : lat.flats()) out.insert(f.members);
  return out;
}

std::vector<int> all(int m) {
  std::vector<int> v(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) v[static_cast<size_t>(i)] = i;
  return v;
}

}  // namespace

TEST(Arrangement, NormalsAreNormalized) {
  const Arrangement arr(2, {Vector::Unit(2, 0) * cplx(0, -3.0), Vector::Ones(2)}, {0.5, 0.5});
  EXPECT_NEAR(arr.hyperplane(0).normal(0).real(), 1.0, 1e-15);
  EXPECT_NEAR(arr.hyperplane(0).normal(0).imag(), 0.0, 1e-15);
  EXPECT_NEAR(arr.hyperplane(1).normal.norm(), 1.0, 1e-15);
}

TEST(Arrangement, RejectsProportionalNormals) {
  try {
    Arrangement(2, {Vector::Unit(2, 0), Vector::Unit(2, 0) * cplx(0, 2), Vector::Unit(2, 1)}, {0.5, 0.5, 0.5});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegenerateArrangement);
  }
}

TEST(Arrangement, RejectsNonEssential) {
  try {
    Arrangement(2, {Vector::Unit(2, 0)}, {0.5});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotEssential);
  }
}

TEST(Arrangement, RejectsBadGramAndWeights) {
  Matrix g = Matrix::Identity(2, 2);
  g(0, 1) = 2.0;
  EXPECT_THROW(Arrangement(g, {Vector::Unit(2, 0), Vector::Unit(2, 1)}, {0.5, 0.5}), Error);
  EXPECT_THROW(Arrangement(2, {Vector::Unit(2, 0), Vector::Unit(2, 1)}, {0.5, -0.1}), Error);
}

TEST(Lattice, BooleanTwo) {
  const auto lat = build_lattice(catalog::boolean(2, {1.0, 1.0}));
  ASSERT_EQ(lat.size(), 4);
  EXPECT_TRUE(lat.flat(0).members.empty());
  EXPECT_EQ(lat.flat(lat.origin()).members, (std::vector<int>{0, 1}));
  EXPECT_EQ(hyperplanes_containing(lat, lat.origin()), (std::vector<int>{0, 1}));
}

TEST(Lattice, SingleHyperplane) {
  const auto lat = build_lattice(catalog::boolean(1, {0.5}));
  EXPECT_EQ(lat.size(), 2);
  EXPECT_EQ(hyperplanes_containing(lat, 1), (std::vector<int>{0}));
}

TEST(Lattice, A2) {
  const auto lat = build_lattice(catalog::coxeter_A(2, 0.3));
  ASSERT_EQ(lat.size(), 5);
  EXPECT_EQ(lat.flat(lat.origin()).members, (std::vector<int>{0, 1, 2}));
  for (int h = 0; h < 3; ++h) EXPECT_EQ(hyperplanes_containing(lat, lat.hyperplane_flat(h)), std::vector<int>{h});
  EXPECT_THROW(lat.flat(17), Error);
  EXPECT_THROW(hyperplanes_containing(lat, 99), Error);
}

TEST(Lattice, MatchesSubsetEnumeration) {
  for (const auto& [name, arr] : fixtures::small()) {
    SCOPED_TRACE(name);
    const auto lat = build_lattice(arr);
    EXPECT_EQ(member_sets(lat), oracle::lattice_members(arr.normals(), arr.gram()));
  }
}

TEST(Lattice, FlatsAreClosedAndConsistent) {
  for (const auto& [name, arr] : fixtures::small()) {
    SCOPED_TRACE(name);
    const auto lat = build_lattice(arr);
    for (const auto& f : lat.flats()) {
      EXPECT_EQ(f.codim + f.dim(), arr.dim());
      for (int h = 0; h < arr.size(); ++h) {
        const double d = f.dim() ? (arr.hyperplane(h).normal.adjoint() * arr.gram() * f.basis).norm() : 0.0;
        const bool contains = d <= 1e-8;
        EXPECT_EQ(contains, std::binary_search(f.members.begin(), f.members.end(), h));
      }
      if (!f.members.empty()) EXPECT_EQ(oracle::rank(arr.normals(f.members)), f.codim);
    }
  }
}

TEST(Lattice, MeetClosed) {
  for (const auto& [name, arr] : fixtures::small()) {
    SCOPED_TRACE(name);
    const auto lat = build_lattice(arr);
    for (int a = 0; a < lat.size(); ++a)
      for (int b = 0; b < lat.size(); ++b) {
        const int m = lat.meet(a, b);
        EXPECT_TRUE(lat.is_subspace(m, a));
        EXPECT_TRUE(lat.is_subspace(m, b));
      }
  }
}

TEST(Lattice, LauricellaCombinatoricsIndependentOfWeights) {
  const auto a = build_lattice(catalog::lauricella_arrangement({0.1, 0.2, 0.3, 0.4, 0.5}));
  const auto b = build_lattice(catalog::lauricella_arrangement({0.6, 0.6, 0.15, 0.9, 0.33}));
  ASSERT_EQ(a.size(), b.size());
  for (int i = 0; i < a.size(); ++i) EXPECT_EQ(a.flat(i).members, b.flat(i).members);
  // flats are the set partitions of 5 points: Bell(5) = 52
  EXPECT_EQ(a.size(), 52);
}

TEST(Lattice, CoxeterMatchesEqualWeightLauricella) {
  const auto a = build_lattice(catalog::coxeter_A(3, 0.25));
  const auto b = build_lattice(catalog::lauricella_arrangement({0.25, 0.25, 0.25, 0.25}));
  ASSERT_EQ(a.size(), b.size());
  for (int i = 0; i < a.size(); ++i) EXPECT_EQ(a.flat(i).members, b.flat(i).members);
}

TEST(Irreducible, Examples) {
  EXPECT_EQ(irreducible_components(catalog::boolean(2, {1.0, 1.0})).size(), 2u);
  EXPECT_EQ(irreducible_components(catalog::coxeter_A(2, 0.5)).size(), 1u);
  const auto two = catalog::direct_sum(catalog::coxeter_A(2, 0.5), catalog::coxeter_A(2, 0.5));
  EXPECT_EQ(irreducible_components(two),
            (std::vector<std::vector<int>>{{0, 1, 2}, {3, 4, 5}}));
}

TEST(Irreducible, MatchesTwoPartitionSearch) {
  for (const auto& [name, arr] : fixtures::small()) {
    SCOPED_TRACE(name);
    ASSERT_LE(arr.size(), 8);
    const Matrix normals = arr.normals();
    EXPECT_EQ(irreducible_components(arr), oracle::components(normals, all(arr.size())));
    const auto lat = build_lattice(arr);
    for (const auto& f : lat.flats()) {
      if (f.members.empty()) continue;
      auto expected = oracle::components(normals, f.members);
      EXPECT_EQ(f.components, expected);
      EXPECT_EQ(f.irreducible, expected.size() == 1);
    }
  }
}

TEST(Restriction, BooleanThree) {
  const auto arr = catalog::boolean(3, {0.5, 0.5, 0.5});
  const auto lat = build_lattice(arr);
  const auto r = restriction(arr, lat.flat(lat.hyperplane_flat(0)));
  EXPECT_EQ(r.arrangement.size(), 2);
  EXPECT_EQ(r.arrangement.dim(), 2);
}

TEST(Restriction, LauricellaMergesTraces) {
  const auto arr = catalog::lauricella_arrangement({0.2, 0.3, 0.4, 0.5});
  const auto lat = build_lattice(arr);
  const int l01 = lat.hyperplane_flat(0);  // H_01
  const auto r = restriction(arr, lat.flat(l01));
  EXPECT_LT(r.arrangement.size(), arr.size() - 1);
  EXPECT_EQ(r.arrangement.size(), 3);
  // H_02 and H_12 restrict to the same hyperplane of L
  bool merged = false;
  for (const auto& s : r.sources) merged = merged || s == std::vector<int>{1, 3};
  EXPECT_TRUE(merged);
}

TEST(Restriction, WholeSpaceIsIdentity) {
  const auto arr = catalog::coxeter_A(2, 0.4);
  const auto lat = build_lattice(arr);
  const auto r = restriction(arr, lat.flat(0));
  EXPECT_EQ(r.arrangement.size(), arr.size());
  EXPECT_THROW(restriction(arr, lat.flat(lat.origin())), Error);
}

TEST(Restriction, Functorial) {
  const auto arr = catalog::lauricella_arrangement({0.1, 0.2, 0.3, 0.4, 0.5});
  const auto lat = build_lattice(arr);
  for (int m = 1; m < lat.origin(); ++m) {
    for (int l = 1; l < lat.origin(); ++l) {
      if (l == m || !lat.is_subspace(l, m) || lat.flat(l).dim() == 0) continue;
      // restrict to M, then to the image of L inside M
      const auto rm = restriction(arr, lat.flat(m));
      Flat inner;
      inner.basis = rm.embedding.adjoint() * arr.gram() * lat.flat(l).basis;
      inner.codim = rm.arrangement.dim() - lat.flat(l).dim();
      for (int h = 0; h < rm.arrangement.size(); ++h)
        if ((rm.arrangement.hyperplane(h).normal.adjoint() * rm.arrangement.gram() * inner.basis).norm() <= 1e-8)
          inner.members.push_back(h);
      const auto two = restriction(rm.arrangement, inner);
      const auto direct = restriction(arr, lat.flat(l));
      ASSERT_EQ(two.arrangement.size(), direct.arrangement.size());
      // compare the hyperplanes as subspaces of V
      std::set<std::vector<int>> a, b;
      for (const auto& s : direct.sources) a.insert(s);
      for (const auto& s : two.sources) {
        std::set<int> amb;
        for (int h : s)
          for (int g : rm.sources[static_cast<size_t>(h)]) amb.insert(g);
        std::vector<int> v(amb.begin(), amb.end());
        // ambient sources of a hyperplane of L exclude the members of L
        std::vector<int> outside;
        for (int g : v)
          if (!std::binary_search(lat.flat(l).members.begin(), lat.flat(l).members.end(), g)) outside.push_back(g);
        b.insert(outside);
      }
      EXPECT_EQ(a, b) << "L=" << l << " M=" << m;
    }
  }
}

TEST(Transversal, Examples) {
  const auto b2 = catalog::boolean(2, {0.5, 0.7});
  const auto lb = build_lattice(b2);
  const auto t = transversal_arrangement(b2, lb.flat(lb.origin()));
  EXPECT_EQ(t.arrangement.size(), 2);
  EXPECT_EQ(t.arrangement.dim(), 2);

  const auto a2 = catalog::coxeter_A(2, 0.4);
  const auto la = build_lattice(a2);
  const auto h = transversal_arrangement(a2, la.flat(la.hyperplane_flat(1)));
  EXPECT_EQ(h.arrangement.size(), 1);
  EXPECT_EQ(h.arrangement.dim(), 1);
  const auto o = transversal_arrangement(a2, la.flat(la.origin()));
  EXPECT_EQ(o.arrangement.size(), 3);
  EXPECT_EQ(build_lattice(o.arrangement).size(), 5);
}

TEST(Json, RoundTrip) {
  const auto arr = catalog::lauricella_arrangement({0.2, 0.3, 0.4, 0.5});
  const auto j = io::to_json(arr);
  const auto back = io::arrangement_from_json(nlohmann::json::parse(j.dump()));
  ASSERT_EQ(back.size(), arr.size());
  for (int h = 0; h < arr.size(); ++h) {
    EXPECT_NEAR((back.hyperplane(h).normal - arr.hyperplane(h).normal).norm(), 0.0, 1e-15);
    EXPECT_EQ(back.hyperplane(h).kappa, arr.hyperplane(h).kappa);
  }
}

TEST(Json, RejectsMalformed) {
  EXPECT_THROW(io::arrangement_from_json(nlohmann::json::parse(R"({"dim": 2})")), Error);
  EXPECT_THROW(io::arrangement_from_json(nlohmann::json::parse(R"({"dim": 2, "hyperplanes": [{"normal": [1], "kappa": 1}]})")),
               Error);
  EXPECT_THROW(io::arrangement_from_json(nlohmann::json::parse(R"({"dim": 1, "hyperplanes": [{"normal": ["x"], "kappa": 1}]})")),
               Error);
}
