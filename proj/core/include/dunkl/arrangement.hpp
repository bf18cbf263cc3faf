#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "dunkl/error.hpp"
#include "dunkl/linalg.hpp"

namespace dunkl {

struct Hyperplane {
  Vector normal;  // unit G-norm, first nonzero coordinate real positive
  double kappa = 0.0;
};

/// Central hyperplane arrangement in C^dim with Hermitian inner product
/// <x, y> = y^* G x. Validated and normalized on construction.
class Arrangement {
 public:
  Arrangement(Matrix gram, const std::vector<Vector>& normals, const std::vector<double>& kappas,
              double tol = kDefaultTol);

  /// Identity Gram matrix.
  Arrangement(int dim, const std::vector<Vector>& normals, const std::vector<double>& kappas,
              double tol = kDefaultTol);

  int dim() const { return static_cast<int>(gram_.rows()); }
  int size() const { return static_cast<int>(hyperplanes_.size()); }
  const Matrix& gram() const { return gram_; }
  double tol() const { return tol_; }
  const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }
  const Hyperplane& hyperplane(int i) const { return hyperplanes_.at(static_cast<size_t>(i)); }

  /// Normals of the listed hyperplanes as columns.
  Matrix normals(const std::vector<int>& indices) const;
  Matrix normals() const;

  Arrangement with_kappas(const std::vector<double>& kappas) const;

 private:
  Matrix gram_;
  std::vector<Hyperplane> hyperplanes_;
  double tol_;
};

Vector normalize_normal(const Vector& n, const Matrix& gram, double tol = kDefaultTol);

struct Flat {
  std::vector<int> members;  // sorted, closed: every hyperplane containing L
  Matrix basis;              // G-orthonormal basis of L as columns
  int codim = 0;
  bool irreducible = false;
  std::vector<std::vector<int>> components;  // irreducible partition of members

  int dim() const { return static_cast<int>(basis.cols()); }
};

/// Intersection lattice. Flats are sorted by codimension, then by member list;
/// index 0 is V and the last flat is the origin.
class IntersectionLattice {
 public:
  IntersectionLattice(Arrangement arr, std::vector<Flat> flats);

  const Arrangement& arrangement() const { return arr_; }
  const std::vector<Flat>& flats() const { return flats_; }
  const Flat& flat(int i) const;
  int size() const { return static_cast<int>(flats_.size()); }
  int whole() const { return 0; }
  int origin() const { return size() - 1; }

  /// Index of the flat with exactly these (closed) members, or -1.
  int index_of(const std::vector<int>& members) const;
  /// Index of the intersection of the listed hyperplanes (V for an empty list).
  int closure(const std::vector<int>& hyperplanes) const;
  /// Flat of a single hyperplane.
  int hyperplane_flat(int h) const { return closure({h}); }
  /// L_a contained in L_b as subspaces.
  bool is_subspace(int a, int b) const;
  /// Subspace intersection L_a ∩ L_b.
  int meet(int a, int b) const;

  std::vector<int> irreducible_flats() const;
  std::vector<int> flats_of_codim(int codim) const;

 private:
  Arrangement arr_;
  std::vector<Flat> flats_;
  std::map<std::vector<int>, int> index_;
};

IntersectionLattice build_lattice(const Arrangement& arr);

/// Members of a flat; throws FlatNotInLattice when the index or flat is foreign.
std::vector<int> hyperplanes_containing(const IntersectionLattice& lat, int flat);
std::vector<int> hyperplanes_containing(const IntersectionLattice& lat, const Flat& flat);

/// Finest rank-additive partition of the listed hyperplanes, blocks sorted by
/// their smallest index.
std::vector<std::vector<int>> irreducible_components(const Arrangement& arr,
                                                     const std::vector<int>& subset);
std::vector<std::vector<int>> irreducible_components(const Arrangement& arr);

/// Arrangement expressed in coordinates of a subspace, with source bookkeeping.
struct InducedArrangement {
  Arrangement arrangement;
  Matrix embedding;                       // ambient coordinates of the subspace basis
  std::vector<std::vector<int>> sources;  // ambient hyperplanes behind each induced one
};

/// Arrangement H^L on L. Hyperplanes with equal traces are merged; the weight
/// is taken from the first source.
InducedArrangement restriction(const Arrangement& arr, const Flat& flat);

/// Arrangement H_L on V/L, realized on the orthogonal complement of L.
InducedArrangement transversal_arrangement(const Arrangement& arr, const Flat& flat);

namespace catalog {

/// V = C^{n+2}/diagonal realized as {sum mu_i z_i = 0} with <z,w> = sum mu_i z_i conj(w_i).
/// Hyperplanes H_ij (i<j) in lexicographic order, kappa = mu_i + mu_j.
/// Coordinates are with respect to lauricella_embedding(mu), so the Gram matrix is I.
Arrangement lauricella_arrangement(const std::vector<double>& mu);
Matrix lauricella_embedding(const std::vector<double>& mu);
/// Pairs (i, j) in hyperplane order.
std::vector<std::pair<int, int>> lauricella_pairs(int points);
/// Members of the flat L(I) = {z_i equal for i in I}.
std::vector<int> lauricella_flat_members(int points, const std::vector<int>& subset);

/// Reflection arrangement of type A_n on C^{n+1}/diagonal, equal weights.
Arrangement coxeter_A(int n, double kappa);
Arrangement boolean(int dim, const std::vector<double>& kappas);
/// Gaussian complex normals, kappa uniform in [0.2, 0.9].
Arrangement random_generic(int dim, int m, std::uint64_t seed);
/// Orthogonal direct sum.
Arrangement direct_sum(const Arrangement& a, const Arrangement& b);

}  // namespace catalog
}  // namespace dunkl
