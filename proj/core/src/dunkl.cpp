#include "dunkl/dunkl.hpp"

#include <algorithm>
#include <string>

namespace dunkl {

Matrix projection(const Arrangement& arr, int h) {
  const Hyperplane& hp = arr.hyperplane(h);
  // normal has unit G-norm
  return hp.kappa * hp.normal * hp.normal.adjoint() * arr.gram();
}

DunklSystem::DunklSystem(const Arrangement& arr) : arrangement(arr), lattice(build_lattice(arr)) {
  for (int h = 0; h < arr.size(); ++h) projections.push_back(projection(arr, h));
}

FlatnessReport flatness_check(const DunklSystem& sys) {
  FlatnessReport rep;
  rep.tol = sys.tol();
  for (int f : sys.lattice.flats_of_codim(2)) {
    const Flat& flat = sys.lattice.flat(f);
    Matrix s = Matrix::Zero(sys.arrangement.dim(), sys.arrangement.dim());
    for (int h : flat.members) s += sys.projections[static_cast<size_t>(h)];
    FlatnessViolation v;
    v.flat = f;
    v.members = flat.members;
    bool bad = false;
    for (int h : flat.members) {
      const Matrix& rho = sys.projections[static_cast<size_t>(h)];
      const double raw = linalg::commutator_norm(s, rho);
      const double rel = raw / (s.norm() * rho.norm());
      v.commutator_norms.push_back(raw);
      v.relative_norms.push_back(rel);
      rep.max_relative = std::max(rep.max_relative, rel);
      bad = bad || rel > sys.tol();
    }
    ++rep.checked;
    if (bad) rep.violations.push_back(std::move(v));
  }
  rep.flat = rep.violations.empty();
  return rep;
}

double exponent(const DunklSystem& sys, int flat) {
  const Flat& f = sys.lattice.flat(flat);
  if (f.codim == 0) return 0.0;
  double sum = 0.0;
  for (int h : f.members) sum += sys.arrangement.hyperplane(h).kappa;
  return sum / f.codim;
}

ExponentTable exponent_table(const DunklSystem& sys) {
  ExponentTable t;
  for (int i = 0; i < sys.lattice.size(); ++i) {
    const double k = exponent(sys, i);
    t.kappa.push_back(k);
    t.log_exponent.push_back(i == sys.lattice.whole() ? 0.0 : k - 1.0);
  }
  t.kappa_0 = t.kappa[static_cast<size_t>(sys.lattice.origin())];
  return t;
}

double verify_projection_identity(const DunklSystem& sys, int flat) {
  const Flat& f = sys.lattice.flat(flat);
  if (!f.irreducible) {
    throw Error(ErrorCode::FlatReducible, "flat " + std::to_string(flat) + " is not irreducible");
  }
  const Eigen::Index n = sys.arrangement.dim();
  Matrix sum = Matrix::Zero(n, n);
  for (int h : f.members) sum += sys.projections[static_cast<size_t>(h)];
  const Matrix pi = Matrix::Identity(n, n) - linalg::projector(f.basis, sys.arrangement.gram());
  const Matrix target = exponent(sys, flat) * pi;
  return (sum - target).norm() / target.norm();
}

namespace {

// Irreducible component of H_I whose flat meets L exactly in I.
int weight_flat(const IntersectionLattice& lat, int l, int i) {
  int found = -1;
  int count = 0;
  for (const auto& block : lat.flat(i).components) {
    const int m = lat.closure(block);
    if (lat.meet(m, l) == i && m != l) {
      found = m;
      ++count;
    }
  }
  if (count != 1) {
    throw Error(ErrorCode::AmbiguousIrreducibleIntersection,
                "found " + std::to_string(count) + " irreducible candidates for I(L) at flat " +
                    std::to_string(i));
  }
  return found;
}

}  // namespace

InducedSystem longitudinal_system(const DunklSystem& sys, int flat) {
  const Flat& f = sys.lattice.flat(flat);
  InducedArrangement ind = restriction(sys.arrangement, f);
  std::vector<double> kappas;
  std::vector<int> wflats;
  for (const auto& src : ind.sources) {
    if (f.members.empty()) {
      wflats.push_back(sys.lattice.hyperplane_flat(src.front()));
    } else {
      const int i = sys.lattice.meet(flat, sys.lattice.hyperplane_flat(src.front()));
      wflats.push_back(weight_flat(sys.lattice, flat, i));
    }
    kappas.push_back(exponent(sys, wflats.back()));
  }
  Arrangement arr = ind.arrangement.with_kappas(kappas);
  return {DunklSystem(arr), ind.embedding, ind.sources, wflats};
}

InducedSystem transversal_system(const DunklSystem& sys, int flat) {
  InducedArrangement ind = transversal_arrangement(sys.arrangement, sys.lattice.flat(flat));
  std::vector<int> wflats;
  for (const auto& src : ind.sources) wflats.push_back(sys.lattice.hyperplane_flat(src.front()));
  return {DunklSystem(ind.arrangement), ind.embedding, ind.sources, wflats};
}

double euler_dilatation(const DunklSystem& sys) { return 1.0 - exponent_table(sys).kappa_0; }

}  // namespace dunkl
