#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dunkl/dunkl.hpp"
#include "dunkl/lauricella.hpp"

namespace dunkl::strata {

using lauricella::GeometryType;

/// Cusp band default: |kappa_L - 1| <= band declares kappa_L = 1.
inline constexpr double kCuspBand = 1e-9;

enum class Side { Longitudinal, Transversal, Cusp };
enum class Action { ContractTransversal, ContractLongitudinal, Cusp };

std::string_view to_string(Side s) noexcept;
std::string_view to_string(Action a) noexcept;
GeometryType parse_geometry(std::string_view name);

struct StratumDescriptor {
  int flat = -1;
  Side side = Side::Longitudinal;
  int q = 1;  // codimension of the stratum
  double kappa = 0.0;
  int p = 1;    // rotation symmetry order
  int N_Q = 1;  // transversal Schwarz symmetry order
};

StratumDescriptor describe(const DunklSystem& sys, int flat, int p = 1, int N_Q = 1,
                           double band = kCuspBand);

/// 2 pi |1 - kappa_L| / p_L.
double cone_angle(const StratumDescriptor& d);
/// 2 pi |1 - kappa_L|, before dividing by the rotation symmetry.
double scalar_angle(const StratumDescriptor& d);

struct LinkFractions {
  double complex_fraction = 0.0;  // (gamma/2pi)^{q-1} / N_Q
  double real_fraction = 0.0;     // (gamma/2pi)^q / N_Q
};

/// Uses the scalar angle; the symmetry enters only through N_Q.
LinkFractions link_fractions(const StratumDescriptor& d);

struct HypothesisCheck {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct PlanEntry {
  int flat = -1;
  double kappa = 0.0;
  Action action = Action::ContractTransversal;
};

struct CompletionPlan {
  GeometryType type = GeometryType::Elliptic;
  double band = kCuspBand;
  double kappa_0 = 0.0;
  std::vector<PlanEntry> entries;  // irreducible flats other than V and the origin
  std::vector<int> cusps;
  std::vector<HypothesisCheck> checks;

  const PlanEntry* find(int flat) const;
};

/// Throws HypothesisViolated naming the first failing condition.
CompletionPlan completion_plan(const DunklSystem& sys, GeometryType type, double band = kCuspBand);

/// All strictly increasing chains L_0 ⊂ ... ⊂ L_k of irreducible flats (V excluded),
/// each listed from the smallest subspace up.
std::vector<std::vector<int>> enumerate_flags(const IntersectionLattice& lat);

enum class FactorKind { Affine, Projective, RaySpace };
std::string_view to_string(FactorKind k) noexcept;

struct Factor {
  FactorKind kind = FactorKind::Projective;
  int lower = -1;  // flat below (-1 for the affine factor)
  int upper = -1;  // flat above; V for the top factor
  int complex_dim = 0;
  int real_dim = 0;
};

/// Factors of the stratum of a flag; with a hyperbolic plan the factor above a
/// cusp flat becomes a ray space.
std::vector<Factor> stratum_factorization(const IntersectionLattice& lat, const std::vector<int>& chain,
                                          const CompletionPlan* plan = nullptr);

enum class Curvature { Positive, Zero, Negative };
std::string_view to_string(Curvature c) noexcept;

struct LocalModel {
  Curvature curvature = Curvature::Zero;
  std::vector<double> betas;
};

struct PrimeFactor;

/// Unit tangent cone at a generic point of a stratum: S^{sphere_dim} joined with
/// the normal links. sphere_dim = -1 denotes the empty sphere.
struct TangentConeDescriptor {
  int sphere_dim = -1;
  std::vector<PrimeFactor> prime_factors;
  LocalModel local_model;

  /// Real dimension of the whole join.
  int total_dim() const;
};

struct PrimeFactor {
  int flat = -1;  // in the system the descriptor was built from
  Side side = Side::Longitudinal;
  double circle_length = 0.0;  // reduced cone angle
  int complex_link_dim = 0;    // dimension of the projectivized normal space
  std::vector<TangentConeDescriptor> children;  // singular strata inside the link

  int real_dim() const { return 2 * complex_link_dim + 1; }
};

/// Join of spheres: S^a * S^b = S^{a+b+1}.
int join_dim(int a, int b);

TangentConeDescriptor smooth_point(const DunklSystem& sys, GeometryType type);

/// Tangent cone along the stratum of `flat`; reducible flats join their components.
TangentConeDescriptor tangent_cone(const DunklSystem& sys, int flat, GeometryType type,
                                   double band = kCuspBand);

struct SymmetryOrders {
  int p = 1;
  int N_Q = 1;
};

/// p_L and N_Q for every flat of a Lauricella system, by brute force over the Schwarz group.
std::vector<SymmetryOrders> lauricella_symmetry_orders(const std::vector<double>& mu,
                                                       const DunklSystem& sys, double band = kCuspBand);

struct StratumRecord {
  int flat = -1;
  std::vector<int> members;
  bool irreducible = false;
  double kappa = 0.0;
  std::string action;  // contract_transversal | contract_longitudinal | cusp | product | apex
  std::optional<double> gamma;
  std::optional<double> gamma_scalar;
  int p = 1;
  int N_Q = 1;
  std::optional<double> complex_fraction;
  std::optional<double> real_fraction;
  std::vector<std::vector<int>> components;
  std::optional<TangentConeDescriptor> tangent_cone;
};

/// One record per flat other than V, sorted by flat index.
std::vector<StratumRecord> strata_report(const DunklSystem& sys, const CompletionPlan& plan,
                                         const std::vector<SymmetryOrders>* orders = nullptr);

}  // namespace dunkl::strata
