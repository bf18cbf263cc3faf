#include "dunkl/arrangement.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <set>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

namespace dunkl {

namespace {

void check_gram(const Matrix& gram, double tol) {
  if (gram.rows() == 0 || gram.rows() != gram.cols()) {
    throw Error(ErrorCode::InvalidInput, "gram matrix must be square with positive size");
  }
  if ((gram - gram.adjoint()).norm() > tol * gram.norm()) {
    throw Error(ErrorCode::InvalidInput, "gram matrix is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (gram + gram.adjoint()), Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() <= tol * std::max(1.0, es.eigenvalues().maxCoeff())) {
    throw Error(ErrorCode::InvalidInput, "gram matrix is not positive definite");
  }
}

bool contains(const Flat& f, int h) {
  return std::binary_search(f.members.begin(), f.members.end(), h);
}

bool subset_of(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Members of the subspace spanned by `basis`: hyperplanes whose normal is G-orthogonal to it.
std::vector<int> containing(const Arrangement& arr, const Matrix& basis) {
  std::vector<int> out;
  for (int h = 0; h < arr.size(); ++h) {
    if (basis.cols() == 0) {
      out.push_back(h);
      continue;
    }
    const Vector proj = basis.adjoint() * arr.gram() * arr.hyperplane(h).normal;
    if (proj.norm() <= arr.tol()) out.push_back(h);
  }
  return out;
}

}  // namespace

Vector normalize_normal(const Vector& n, const Matrix& gram, double tol) {
  const double nn = linalg::norm(n, gram);
  if (!(nn > 0.0) || !std::isfinite(nn)) {
    throw Error(ErrorCode::InvalidInput, "hyperplane normal is zero or not finite");
  }
  Vector u = n / nn;
  const double big = u.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < u.size(); ++i) {
    if (std::abs(u(i)) > tol * big) {
      u *= std::conj(u(i)) / std::abs(u(i));
      u(i) = std::abs(u(i));
      break;
    }
  }
  return u;
}

Arrangement::Arrangement(Matrix gram, const std::vector<Vector>& normals,
                         const std::vector<double>& kappas, double tol)
    : gram_(std::move(gram)), tol_(tol) {
  if (!(tol > 0.0)) throw Error(ErrorCode::InvalidInput, "tolerance must be positive");
  check_gram(gram_, tol);
  if (normals.size() != kappas.size()) {
    throw Error(ErrorCode::InvalidInput, "normals and weights differ in length");
  }
  for (size_t i = 0; i < normals.size(); ++i) {
    if (normals[i].size() != gram_.rows()) {
      throw Error(ErrorCode::InvalidInput, "normal " + std::to_string(i) + " has wrong dimension");
    }
    if (!(kappas[i] > 0.0) || !std::isfinite(kappas[i])) {
      throw Error(ErrorCode::InvalidInput, "weight " + std::to_string(i) + " must be positive");
    }
    hyperplanes_.push_back({normalize_normal(normals[i], gram_, tol), kappas[i]});
  }
  for (int i = 0; i < size(); ++i) {
    for (int j = i + 1; j < size(); ++j) {
      if (linalg::rank(this->normals({i, j}), tol) < 2) {
        throw Error(ErrorCode::DegenerateArrangement,
                    "hyperplanes " + std::to_string(i) + " and " + std::to_string(j) +
                        " are proportional");
      }
    }
  }
  if (size() == 0 || linalg::rank(this->normals(), tol) < dim()) {
    throw Error(ErrorCode::NotEssential, "normals do not span V");
  }
}

Arrangement::Arrangement(int dim, const std::vector<Vector>& normals,
                         const std::vector<double>& kappas, double tol)
    : Arrangement(Matrix::Identity(std::max(dim, 0), std::max(dim, 0)), normals, kappas, tol) {}

Matrix Arrangement::normals(const std::vector<int>& indices) const {
  Matrix m(dim(), static_cast<Eigen::Index>(indices.size()));
  for (size_t c = 0; c < indices.size(); ++c) m.col(static_cast<Eigen::Index>(c)) = hyperplane(indices[c]).normal;
  return m;
}

Matrix Arrangement::normals() const {
  std::vector<int> all(hyperplanes_.size());
  std::iota(all.begin(), all.end(), 0);
  return normals(all);
}

Arrangement Arrangement::with_kappas(const std::vector<double>& kappas) const {
  std::vector<Vector> ns;
  for (const auto& h : hyperplanes_) ns.push_back(h.normal);
  return Arrangement(gram_, ns, kappas, tol_);
}

// ---------------------------------------------------------------------------

std::vector<std::vector<int>> irreducible_components(const Arrangement& arr,
                                                     const std::vector<int>& subset) {
  if (subset.empty()) throw Error(ErrorCode::InvalidInput, "empty hyperplane set");
  for (int h : subset) {
    if (h < 0 || h >= arr.size()) throw Error(ErrorCode::InvalidInput, "hyperplane index out of range");
  }
  const std::set<int> uniq(subset.begin(), subset.end());
  const std::vector<int> elems(uniq.begin(), uniq.end());

  // Two elements share a component iff they lie on a common circuit; the
  // fundamental circuits with respect to one basis already generate this relation.
  std::vector<int> basis;
  std::vector<int> rest;
  for (int h : elems) {
    std::vector<int> trial = basis;
    trial.push_back(h);
    if (linalg::rank(arr.normals(trial), arr.tol()) > static_cast<int>(basis.size())) {
      basis.push_back(h);
    } else {
      rest.push_back(h);
    }
  }
  std::map<int, int> parent;
  for (int h : elems) parent[h] = h;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  const Matrix b = arr.normals(basis);
  Eigen::ColPivHouseholderQR<Matrix> qr(b);
  for (int x : rest) {
    const Vector c = qr.solve(arr.hyperplane(x).normal);
    const double scale = c.cwiseAbs().maxCoeff();
    for (Eigen::Index k = 0; k < c.size(); ++k) {
      if (std::abs(c(k)) > arr.tol() * scale) {
        parent[find(basis[static_cast<size_t>(k)])] = find(x);
      }
    }
  }
  std::map<int, std::vector<int>> groups;
  for (int h : elems) groups[find(h)].push_back(h);
  std::vector<std::vector<int>> blocks;
  for (auto& kv : groups) blocks.push_back(kv.second);
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

std::vector<std::vector<int>> irreducible_components(const Arrangement& arr) {
  std::vector<int> all(static_cast<size_t>(arr.size()));
  std::iota(all.begin(), all.end(), 0);
  return irreducible_components(arr, all);
}

// ---------------------------------------------------------------------------

IntersectionLattice::IntersectionLattice(Arrangement arr, std::vector<Flat> flats)
    : arr_(std::move(arr)), flats_(std::move(flats)) {
  for (int i = 0; i < size(); ++i) index_[flats_[static_cast<size_t>(i)].members] = i;
}

const Flat& IntersectionLattice::flat(int i) const {
  if (i < 0 || i >= size()) {
    throw Error(ErrorCode::FlatNotInLattice, "flat index " + std::to_string(i) + " out of range");
  }
  return flats_[static_cast<size_t>(i)];
}

int IntersectionLattice::index_of(const std::vector<int>& members) const {
  auto it = index_.find(members);
  return it == index_.end() ? -1 : it->second;
}

int IntersectionLattice::closure(const std::vector<int>& hyperplanes) const {
  std::vector<int> s(hyperplanes);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  // flats are sorted by codimension, so the first flat containing all of s is their intersection
  for (int i = 0; i < size(); ++i) {
    if (subset_of(s, flats_[static_cast<size_t>(i)].members)) return i;
  }
  throw Error(ErrorCode::FlatNotInLattice, "hyperplane set has no intersection in the lattice");
}

bool IntersectionLattice::is_subspace(int a, int b) const {
  return subset_of(flat(b).members, flat(a).members);
}

int IntersectionLattice::meet(int a, int b) const {
  std::vector<int> u = flat(a).members;
  u.insert(u.end(), flat(b).members.begin(), flat(b).members.end());
  return closure(u);
}

std::vector<int> IntersectionLattice::irreducible_flats() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i) {
    if (flats_[static_cast<size_t>(i)].irreducible) out.push_back(i);
  }
  return out;
}

std::vector<int> IntersectionLattice::flats_of_codim(int codim) const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i) {
    if (flats_[static_cast<size_t>(i)].codim == codim) out.push_back(i);
  }
  return out;
}

IntersectionLattice build_lattice(const Arrangement& arr) {
  const double tol = arr.tol();
  std::map<std::vector<int>, Flat> found;

  Flat whole;
  whole.basis = linalg::annihilator_basis(Matrix(arr.dim(), 0), arr.gram(), tol);
  whole.codim = 0;
  found[whole.members] = whole;

  std::deque<std::vector<int>> queue{whole.members};
  while (!queue.empty()) {
    const Flat cur = found.at(queue.front());
    queue.pop_front();
    if (cur.basis.cols() == 0) continue;
    for (int h = 0; h < arr.size(); ++h) {
      if (contains(cur, h)) continue;
      std::vector<int> gen = cur.members;
      gen.push_back(h);
      Matrix basis = linalg::annihilator_basis(arr.normals(gen), arr.gram(), tol);
      std::vector<int> members = containing(arr, basis);
      if (found.count(members)) continue;
      // recompute from the closed member set so the basis matches it exactly
      Flat f;
      f.basis = linalg::annihilator_basis(arr.normals(members), arr.gram(), tol);
      f.members = members;
      f.codim = arr.dim() - static_cast<int>(f.basis.cols());
      found[members] = f;
      queue.push_back(members);
    }
  }

  std::vector<Flat> flats;
  for (auto& kv : found) flats.push_back(std::move(kv.second));
  std::sort(flats.begin(), flats.end(), [](const Flat& a, const Flat& b) {
    if (a.codim != b.codim) return a.codim < b.codim;
    return a.members < b.members;
  });
  if (flats.back().codim != arr.dim() ||
      (flats.size() > 1 && flats[flats.size() - 2].codim == arr.dim())) {
    throw Error(ErrorCode::NotEssential, "lattice has no unique origin flat");
  }
  for (auto& f : flats) {
    if (f.members.empty()) continue;
    f.components = irreducible_components(arr, f.members);
    f.irreducible = f.components.size() == 1;
  }
  return IntersectionLattice(arr, std::move(flats));
}

std::vector<int> hyperplanes_containing(const IntersectionLattice& lat, int flat) {
  return lat.flat(flat).members;
}

std::vector<int> hyperplanes_containing(const IntersectionLattice& lat, const Flat& flat) {
  const int i = lat.index_of(flat.members);
  if (i < 0 || lat.flat(i).dim() != flat.dim()) {
    throw Error(ErrorCode::FlatNotInLattice, "flat does not belong to this lattice");
  }
  return lat.flat(i).members;
}

// ---------------------------------------------------------------------------

namespace {

InducedArrangement induce(const Arrangement& arr, const Matrix& basis,
                          const std::vector<int>& candidates) {
  std::vector<Vector> normals;
  std::vector<double> kappas;
  std::vector<std::vector<int>> sources;
  const Eigen::Index k = basis.cols();
  const Matrix id = Matrix::Identity(k, k);
  for (int h : candidates) {
    Vector m = basis.adjoint() * arr.gram() * arr.hyperplane(h).normal;
    m = normalize_normal(m, id, arr.tol());
    bool merged = false;
    for (size_t j = 0; j < normals.size(); ++j) {
      Matrix pair(k, 2);
      pair << normals[j], m;
      if (linalg::rank(pair, arr.tol()) < 2) {
        sources[j].push_back(h);
        merged = true;
        break;
      }
    }
    if (!merged) {
      normals.push_back(m);
      kappas.push_back(arr.hyperplane(h).kappa);
      sources.push_back({h});
    }
  }
  return {Arrangement(id, normals, kappas, arr.tol()), basis, sources};
}

}  // namespace

InducedArrangement restriction(const Arrangement& arr, const Flat& flat) {
  if (flat.dim() == 0) throw Error(ErrorCode::FlatIsOrigin, "cannot restrict to the origin");
  if (flat.members.empty()) {
    std::vector<std::vector<int>> sources;
    for (int h = 0; h < arr.size(); ++h) sources.push_back({h});
    return {arr, Matrix::Identity(arr.dim(), arr.dim()), sources};
  }
  std::vector<int> others;
  for (int h = 0; h < arr.size(); ++h) {
    if (!contains(flat, h)) others.push_back(h);
  }
  return induce(arr, flat.basis, others);
}

InducedArrangement transversal_arrangement(const Arrangement& arr, const Flat& flat) {
  if (flat.members.empty()) {
    throw Error(ErrorCode::InvalidInput, "transversal arrangement of V is empty");
  }
  const Matrix perp = linalg::orthonormal_span(arr.normals(flat.members), arr.gram(), arr.tol());
  return induce(arr, perp, flat.members);
}

}  // namespace dunkl
