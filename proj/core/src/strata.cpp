#include "dunkl/strata.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include "dunkl/linalg.hpp"

namespace dunkl::strata {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool in_band(double kappa, double band) { return std::abs(kappa - 1.0) <= band; }

std::string list(const std::vector<int>& v) {
  std::ostringstream os;
  os << '{';
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << '}';
  return os.str();
}

void fail(CompletionPlan& plan, std::string name, std::string detail) {
  plan.checks.push_back({name, false, detail});
  throw Error(ErrorCode::HypothesisViolated, name + ": " + detail);
}

// G-orthonormal basis of the orthogonal complement of span(basis).
Matrix complement(const Matrix& basis, const Matrix& gram, double tol) {
  if (basis.cols() == 0) return Matrix::Identity(gram.rows(), gram.rows());
  return linalg::annihilator_basis(basis, gram, tol);
}

}  // namespace

std::string_view to_string(Side s) noexcept {
  switch (s) {
    case Side::Longitudinal: return "longitudinal";
    case Side::Transversal: return "transversal";
    case Side::Cusp: return "cusp";
  }
  return "?";
}

std::string_view to_string(Action a) noexcept {
  switch (a) {
    case Action::ContractTransversal: return "contract_transversal";
    case Action::ContractLongitudinal: return "contract_longitudinal";
    case Action::Cusp: return "cusp";
  }
  return "?";
}

std::string_view to_string(FactorKind k) noexcept {
  switch (k) {
    case FactorKind::Affine: return "affine";
    case FactorKind::Projective: return "projective";
    case FactorKind::RaySpace: return "ray_space";
  }
  return "?";
}

std::string_view to_string(Curvature c) noexcept {
  switch (c) {
    case Curvature::Positive: return "positive";
    case Curvature::Zero: return "zero";
    case Curvature::Negative: return "negative";
  }
  return "?";
}

GeometryType parse_geometry(std::string_view name) {
  if (name == "elliptic") return GeometryType::Elliptic;
  if (name == "parabolic") return GeometryType::Parabolic;
  if (name == "hyperbolic") return GeometryType::Hyperbolic;
  throw Error(ErrorCode::InvalidInput, "unknown geometry type '" + std::string(name) + "'");
}

StratumDescriptor describe(const DunklSystem& sys, int flat, int p, int N_Q, double band) {
  const Flat& f = sys.lattice.flat(flat);
  if (flat == sys.lattice.whole()) throw Error(ErrorCode::InvalidInput, "V is not a stratum");
  if (p < 1 || N_Q < 1) throw Error(ErrorCode::InvalidInput, "symmetry orders must be positive");
  StratumDescriptor d;
  d.flat = flat;
  d.kappa = exponent(sys, flat);
  d.p = p;
  d.N_Q = N_Q;
  if (in_band(d.kappa, band)) {
    d.side = Side::Cusp;
    d.q = f.codim;
  } else if (d.kappa < 1.0) {
    d.side = Side::Longitudinal;
    d.q = f.codim;
  } else {
    d.side = Side::Transversal;
    d.q = f.dim();
  }
  if (d.q < 1) throw Error(ErrorCode::FlatIsOrigin, "the origin has no stratum in P(V)");
  return d;
}

double scalar_angle(const StratumDescriptor& d) {
  if (d.side == Side::Cusp)
    throw Error(ErrorCode::CuspHasNoAngle, "flat " + std::to_string(d.flat) + " has kappa = 1");
  return kTwoPi * std::abs(1.0 - d.kappa);
}

double cone_angle(const StratumDescriptor& d) { return scalar_angle(d) / d.p; }

LinkFractions link_fractions(const StratumDescriptor& d) {
  const double r = scalar_angle(d) / kTwoPi;
  LinkFractions out;
  out.complex_fraction = std::pow(r, d.q - 1) / d.N_Q;
  out.real_fraction = out.complex_fraction * r;
  return out;
}

const PlanEntry* CompletionPlan::find(int flat) const {
  for (const auto& e : entries)
    if (e.flat == flat) return &e;
  return nullptr;
}

CompletionPlan completion_plan(const DunklSystem& sys, GeometryType type, double band) {
  if (type == GeometryType::OutOfRange) throw Error(ErrorCode::InvalidInput, "no plan for out_of_range");
  CompletionPlan plan;
  plan.type = type;
  plan.band = band;
  const auto& lat = sys.lattice;

  const FlatnessReport fr = flatness_check(sys);
  if (!fr.flat) {
    std::ostringstream os;
    os << "max relative commutator norm " << fr.max_relative << " on flat " << fr.violations.front().flat;
    fail(plan, "flatness", os.str());
  }
  plan.checks.push_back({"flatness", true, ""});

  const ExponentTable table = exponent_table(sys);
  plan.kappa_0 = table.kappa_0;
  for (int f : lat.irreducible_flats()) {
    if (f == lat.whole() || f == lat.origin()) continue;
    const double k = table.kappa[static_cast<size_t>(f)];
    PlanEntry e{f, k, Action::ContractTransversal};
    if (in_band(k, band)) {
      e.action = Action::Cusp;
      plan.cusps.push_back(f);
    } else if (k > 1.0) {
      e.action = Action::ContractLongitudinal;
    }
    plan.entries.push_back(e);
  }

  if (type == GeometryType::Elliptic) {
    if (!plan.cusps.empty()) {
      const int f = plan.cusps.front();
      std::ostringstream os;
      os << "flat " << f << " " << list(lat.flat(f).members) << " has kappa = 1 within " << band;
      fail(plan, "no_cusp", os.str());
    }
    plan.checks.push_back({"no_cusp", true, ""});
  }

  const double k0 = plan.kappa_0;
  std::ostringstream k0s;
  k0s << "kappa_0 = " << k0;
  switch (type) {
    case GeometryType::Elliptic:
      if (!(k0 < 1.0 - band)) fail(plan, "kappa_0", k0s.str() + " is not < 1");
      break;
    case GeometryType::Parabolic:
      if (!in_band(k0, band)) fail(plan, "kappa_0", k0s.str() + " is not 1");
      break;
    case GeometryType::Hyperbolic:
      if (!(k0 > 1.0 + band)) fail(plan, "kappa_0", k0s.str() + " is not > 1");
      break;
    default: break;
  }
  plan.checks.push_back({"kappa_0", true, k0s.str()});

  if (type == GeometryType::Parabolic) {
    for (int h = 0; h < sys.arrangement.size(); ++h) {
      const double k = sys.arrangement.hyperplane(h).kappa;
      if (!(k > 0.0 && k < 1.0)) {
        std::ostringstream os;
        os << "hyperplane " << h << " has kappa " << k;
        fail(plan, "hyperplane_weights", os.str());
      }
    }
    plan.checks.push_back({"hyperplane_weights", true, ""});
  }

  if (type == GeometryType::Elliptic) {
    std::vector<int> big;
    for (const auto& e : plan.entries)
      if (e.kappa > 1.0) big.push_back(e.flat);
    for (size_t i = 0; i < big.size(); ++i) {
      for (size_t j = i + 1; j < big.size(); ++j) {
        const int m = lat.meet(big[i], big[j]);
        if (irreducible_components(sys.arrangement, lat.flat(m).members).size() != 1)
          fail(plan, "pairwise_irreducible",
               "flats " + std::to_string(big[i]) + " and " + std::to_string(big[j]) + " meet in reducible flat " +
                   std::to_string(m));
      }
    }
    plan.checks.push_back({"pairwise_irreducible", true, ""});
  }

  if (type == GeometryType::Hyperbolic)
    plan.checks.push_back({"cusps", true, std::to_string(plan.cusps.size()) + " cusp flat(s)"});
  return plan;
}

std::vector<std::vector<int>> enumerate_flags(const IntersectionLattice& lat) {
  std::vector<int> irr;
  for (int f : lat.irreducible_flats())
    if (f != lat.whole()) irr.push_back(f);
  std::vector<std::vector<int>> out;
  std::vector<int> chain;
  std::function<void()> extend = [&]() {
    out.push_back(chain);
    for (int f : irr) {
      if (f == chain.back() || !lat.is_subspace(chain.back(), f) || lat.is_subspace(f, chain.back())) continue;
      chain.push_back(f);
      extend();
      chain.pop_back();
    }
  };
  for (int f : irr) {
    chain = {f};
    extend();
  }
  return out;
}

std::vector<Factor> stratum_factorization(const IntersectionLattice& lat, const std::vector<int>& chain,
                                          const CompletionPlan* plan) {
  if (chain.empty()) throw Error(ErrorCode::InvalidInput, "empty flag");
  for (size_t i = 0; i + 1 < chain.size(); ++i)
    if (!lat.is_subspace(chain[i], chain[i + 1]) || lat.is_subspace(chain[i + 1], chain[i]))
      throw Error(ErrorCode::InvalidInput, "flag is not strictly increasing");
  auto cusp = [&](int f) {
    if (!plan || plan->type != GeometryType::Hyperbolic) return false;
    return std::find(plan->cusps.begin(), plan->cusps.end(), f) != plan->cusps.end();
  };
  std::vector<Factor> out;
  if (chain.front() != lat.origin()) {
    const int d = lat.flat(chain.front()).dim();
    out.push_back({FactorKind::Affine, -1, chain.front(), d, 2 * d});
  }
  std::vector<int> levels(chain);
  levels.push_back(lat.whole());
  for (size_t i = 0; i + 1 < levels.size(); ++i) {
    const int lo = levels[i], hi = levels[i + 1];
    const int w = lat.flat(hi).dim() - lat.flat(lo).dim();
    Factor f{FactorKind::Projective, lo, hi, w - 1, 2 * (w - 1)};
    if (cusp(lo)) {
      f.kind = FactorKind::RaySpace;
      f.real_dim = 2 * w - 1;
    }
    out.push_back(f);
  }
  return out;
}

int join_dim(int a, int b) { return a + b + 1; }

int TangentConeDescriptor::total_dim() const {
  int d = sphere_dim;
  for (const auto& p : prime_factors) d = join_dim(d, p.real_dim());
  return d;
}

namespace {

Curvature curvature_of(GeometryType type) {
  switch (type) {
    case GeometryType::Elliptic: return Curvature::Positive;
    case GeometryType::Parabolic: return Curvature::Zero;
    default: return Curvature::Negative;
  }
}

TangentConeDescriptor cone_of(const DunklSystem& sys, int flat, GeometryType type, double band, int depth);

// Singular strata inside the projectivized normal space.
std::vector<TangentConeDescriptor> children_of(const DunklSystem& sub, GeometryType type, double band, int depth) {
  std::vector<TangentConeDescriptor> out;
  if (sub.arrangement.dim() < 2) return out;
  for (int f : sub.lattice.irreducible_flats()) {
    if (f == sub.lattice.whole() || f == sub.lattice.origin()) continue;
    if (in_band(exponent(sub, f), band)) continue;
    out.push_back(cone_of(sub, f, type, band, depth + 1));
  }
  return out;
}

PrimeFactor prime_of(const DunklSystem& sys, int flat, GeometryType type, double band, int depth) {
  const Flat& f = sys.lattice.flat(flat);
  const StratumDescriptor d = describe(sys, flat, 1, 1, band);
  PrimeFactor p;
  p.flat = flat;
  p.side = d.side;
  p.circle_length = cone_angle(d);
  if (d.side == Side::Longitudinal) {
    p.complex_link_dim = f.codim - 1;
    if (f.codim >= 2)
      p.children = children_of(transversal_system(sys, flat).system, GeometryType::Elliptic, band, depth);
  } else {
    p.complex_link_dim = f.dim() - 1;
    if (f.dim() >= 2) p.children = children_of(longitudinal_system(sys, flat).system, type, band, depth);
  }
  return p;
}

TangentConeDescriptor cone_of(const DunklSystem& sys, int flat, GeometryType type, double band, int depth) {
  const auto& lat = sys.lattice;
  const Flat& f = lat.flat(flat);
  if (depth > sys.arrangement.dim()) throw Error(ErrorCode::InvalidInput, "tangent cone recursion too deep");
  if (flat == lat.origin()) throw Error(ErrorCode::FlatIsOrigin, "the origin has no stratum in P(V)");
  TangentConeDescriptor t;
  t.local_model.curvature = curvature_of(type);
  if (f.irreducible) {
    const StratumDescriptor d = describe(sys, flat, 1, 1, band);
    if (d.side == Side::Cusp)
      throw Error(ErrorCode::CuspHasNoAngle, "flat " + std::to_string(flat) + " has kappa = 1");
    t.sphere_dim = d.side == Side::Longitudinal ? 2 * f.dim() - 3 : 2 * f.codim - 3;
    t.prime_factors.push_back(prime_of(sys, flat, type, band, depth));
    t.local_model.betas.push_back(std::abs(1.0 - d.kappa));
    return t;
  }
  // product stratum: one normal factor per irreducible component
  t.sphere_dim = 2 * f.dim() - 3;
  for (const auto& block : f.components) {
    const int c = lat.closure(block);
    const StratumDescriptor d = describe(sys, c, 1, 1, band);
    if (d.side == Side::Cusp) throw Error(ErrorCode::CuspHasNoAngle, "flat " + std::to_string(c) + " has kappa = 1");
    PrimeFactor p;
    p.flat = c;
    p.side = Side::Longitudinal;
    p.circle_length = cone_angle(d);
    p.complex_link_dim = lat.flat(c).codim - 1;
    if (lat.flat(c).codim >= 2)
      p.children = children_of(transversal_system(sys, c).system, GeometryType::Elliptic, band, depth);
    t.prime_factors.push_back(std::move(p));
    t.local_model.betas.push_back(std::abs(1.0 - d.kappa));
  }
  return t;
}

}  // namespace

TangentConeDescriptor smooth_point(const DunklSystem& sys, GeometryType type) {
  TangentConeDescriptor t;
  t.sphere_dim = 2 * (sys.arrangement.dim() - 1) - 1;
  t.local_model.curvature = curvature_of(type);
  return t;
}

TangentConeDescriptor tangent_cone(const DunklSystem& sys, int flat, GeometryType type, double band) {
  if (flat == sys.lattice.whole()) return smooth_point(sys, type);
  return cone_of(sys, flat, type, band, 0);
}

std::vector<SymmetryOrders> lauricella_symmetry_orders(const std::vector<double>& mu, const DunklSystem& sys,
                                                       double band) {
  const auto ws = lauricella::build_weights(mu, sys.tol());
  const auto group = lauricella::schwarz_group(ws);
  const auto& lat = sys.lattice;
  const Matrix& gram = sys.arrangement.gram();
  const double tol = 1e-8;
  std::vector<Matrix> actions;
  for (const auto& sigma : group.elements) actions.push_back(lauricella::permutation_action(mu, sigma));
  if (actions.empty() || actions.front().rows() != gram.rows())
    throw Error(ErrorCode::InvalidInput, "system is not the Lauricella arrangement of these weights");

  std::vector<SymmetryOrders> out(static_cast<size_t>(lat.size()));
  for (int fi = 0; fi < lat.size(); ++fi) {
    const Flat& f = lat.flat(fi);
    if (fi == lat.whole() || fi == lat.origin() || !f.irreducible) continue;
    const double k = exponent(sys, fi);
    if (in_band(k, band)) continue;
    const Matrix lb = f.basis;
    const Matrix nb = complement(lb, gram, sys.tol());
    const Matrix& along = k < 1.0 ? lb : nb;   // stratum directions
    const Matrix& normal = k < 1.0 ? nb : lb;  // normal slice
    const Matrix pl = linalg::projector(lb, gram);
    int stab = 0, rotations = 0, trivial = 0;
    for (const Matrix& a : actions) {
      if (((a * lb) - pl * (a * lb)).norm() > tol) continue;
      ++stab;
      const Matrix c = normal.adjoint() * gram * a * normal;
      const bool identity_normal = (c - Matrix::Identity(c.rows(), c.cols())).norm() <= tol;
      const bool scalar_normal = (c - c(0, 0) * Matrix::Identity(c.rows(), c.cols())).norm() <= tol;
      const bool identity_along = (a * along - along).norm() <= tol;
      if (identity_normal) ++trivial;
      if (identity_along && scalar_normal) ++rotations;
    }
    out[static_cast<size_t>(fi)] = {rotations, stab / trivial};
  }
  return out;
}

std::vector<StratumRecord> strata_report(const DunklSystem& sys, const CompletionPlan& plan,
                                         const std::vector<SymmetryOrders>* orders) {
  const auto& lat = sys.lattice;
  if (orders && static_cast<int>(orders->size()) != lat.size())
    throw Error(ErrorCode::InvalidInput, "symmetry orders must list every flat");
  std::vector<StratumRecord> out;
  for (int fi = 0; fi < lat.size(); ++fi) {
    if (fi == lat.whole()) continue;
    const Flat& f = lat.flat(fi);
    StratumRecord r;
    r.flat = fi;
    r.members = f.members;
    r.irreducible = f.irreducible;
    r.kappa = exponent(sys, fi);
    r.components = f.components;
    if (orders) {
      r.p = (*orders)[static_cast<size_t>(fi)].p;
      r.N_Q = (*orders)[static_cast<size_t>(fi)].N_Q;
    }
    if (!f.irreducible) {
      r.action = "product";
      if (fi != lat.origin()) {
        bool cusp = false;
        for (const auto& block : f.components) cusp = cusp || in_band(exponent(sys, lat.closure(block)), plan.band);
        if (!cusp) r.tangent_cone = tangent_cone(sys, fi, plan.type, plan.band);
      }
    } else if (fi == lat.origin()) {
      r.action = "apex";
    } else {
      const PlanEntry* e = plan.find(fi);
      if (!e) throw Error(ErrorCode::InvalidInput, "plan does not cover flat " + std::to_string(fi));
      r.action = std::string(to_string(e->action));
      if (e->action != Action::Cusp) {
        const StratumDescriptor d = describe(sys, fi, r.p, r.N_Q, plan.band);
        r.gamma = cone_angle(d);
        r.gamma_scalar = scalar_angle(d);
        const LinkFractions lf = link_fractions(d);
        r.complex_fraction = lf.complex_fraction;
        r.real_fraction = lf.real_fraction;
        r.tangent_cone = tangent_cone(sys, fi, plan.type, plan.band);
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace dunkl::strata
