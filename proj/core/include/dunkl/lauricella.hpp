#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "dunkl/arrangement.hpp"
#include "dunkl/linalg.hpp"

namespace dunkl::lauricella {

enum class GeometryType { Elliptic, Parabolic, Hyperbolic, OutOfRange };

std::string_view to_string(GeometryType t) noexcept;

/// Points are indexed 0..n+1; w[k-1] holds w_k = exp(i pi (mu_0 + ... + mu_{k-1})).
struct WeightSystem {
  std::vector<double> mu;
  double total = 0.0;
  std::vector<cplx> w;
  GeometryType type = GeometryType::OutOfRange;
  double tol = kDefaultTol;

  int points() const { return static_cast<int>(mu.size()); }
  int n() const { return points() - 2; }
  bool integral_total() const;
};

WeightSystem build_weights(const std::vector<double>& mu, double tol = kDefaultTol);

struct HermitianMatrix {
  Matrix h_tilde;       // (n+2)x(n+2), real symmetric
  Matrix lift;          // (n+2)x(n+1): coordinates F_1..F_{n+1} to a vector satisfying the relation
  Matrix h_restricted;  // lift^T h_tilde lift
  linalg::Signature signature;
  std::vector<double> eigenvalues;  // of h_restricted, ascending
};

HermitianMatrix hermitian_form(const WeightSystem& ws);

struct Classification {
  GeometryType type;
  linalg::Signature signature;
  linalg::Signature expected;
  std::vector<double> eigenvalues;
};

/// Threshold tag cross-checked against the signature of the restricted form.
Classification classify(const WeightSystem& ws);

struct Configuration {
  std::vector<cplx> z;
  double min_gap = 0.0;

  Configuration() = default;
  explicit Configuration(std::vector<cplx> points);

  int points() const { return static_cast<int>(z.size()); }
  bool real_increasing() const;
};

/// Arc from z_a to z_{a+1} as a polyline. args[v][i] is the continuous argument
/// of the factor u_i at vertex v, where u_i = xi - z_i for i <= a and z_i - xi
/// for i > a. At an endpoint vertex the entry of its own factor repeats the
/// value along the adjacent segment.
struct Arc {
  std::vector<cplx> vertices;
  std::vector<std::vector<double>> args;
};

struct ArcSystem {
  std::vector<Arc> arcs;  // n+1 arcs, arcs[a] joins z_a and z_{a+1}

  /// Smallest distance from an arc to a point that is not one of its endpoints.
  double clearance(const Configuration& c) const;
};

/// Straight segments, each split into `pieces` parts, with principal arguments.
/// On a real increasing configuration every argument is 0.
ArcSystem canonical_arcs(const Configuration& c, int pieces = 4);

struct QuadratureOptions {
  double eta = 1e-8;
  int jacobi_nodes = 64;
  int legendre_nodes = 32;
  int max_depth = 30;
  double min_clearance_fraction = 0.125;  // ArcTooClose below this times min_gap
  double min_clearance = 0.0;             // absolute floor overriding the fraction when > 0
};

struct PeriodVector {
  std::vector<cplx> F;                 // F_1..F_{n+1}
  std::optional<cplx> last;            // F_{n+2}, only on real increasing configurations
  std::vector<double> error_estimate;  // per finite arc
  std::optional<double> relation_residual;  // |sum Im(w_k) F_k| / max |F_k|
  double clearance = 0.0;
  int evaluations = 0;

  /// F_1..F_{n+1} as a vector.
  Vector finite() const;
};

PeriodVector period(const WeightSystem& ws, const Configuration& c,
                    const std::optional<ArcSystem>& arcs = std::nullopt,
                    const QuadratureOptions& opt = {});

/// Integral of the split-factor integrand over one arc.
cplx arc_integral(const WeightSystem& ws, const Configuration& c, const Arc& arc, int index,
                  const QuadratureOptions& opt, double* error = nullptr, int* evaluations = nullptr);

struct ContinuationOptions {
  double step_fraction = 1.0 / 6.0;     // of the isotopy radius
  double isotopy_fraction = 0.45;       // isotopy radius as a fraction of min_gap
  double max_arg_change = 0.7853981633974483;  // pi/4 per factor per sub-step
  double clearance_fraction = 0.125;    // of min_gap
  int max_halvings = 12;
};

struct ContinuationLog {
  int steps = 0;
  int substeps = 0;
  int refinements = 0;
  double min_clearance = 0.0;
  double clearance_floor = 0.0;
  double max_arg_change = 0.0;
};

/// Transports the arc system and its argument bookkeeping along a path of
/// configurations whose first entry is the configuration the arcs belong to.
/// The clearance floor is the smaller of clearance_fraction times the least
/// min_gap on the path and 90% of the incoming arcs' clearance.
ArcSystem transport(const std::vector<Configuration>& path, const ArcSystem& arcs,
                    const ContinuationOptions& opt = {}, ContinuationLog* log = nullptr);

PeriodVector continue_period(const WeightSystem& ws, const std::vector<Configuration>& path,
                             const ArcSystem& arcs, const QuadratureOptions& qopt = {},
                             const ContinuationOptions& copt = {}, ContinuationLog* log = nullptr);

/// Point `mover` travels radially to distance `radius` from `center`, circles it
/// once counterclockwise and returns. radius <= 0 selects the default.
struct Loop {
  int mover = 0;
  int center = 1;
  double radius = 0.0;
};

double default_radius(const Configuration& c, const Loop& loop);

/// Sampled closed path; the first and last configurations equal `base`.
std::vector<Configuration> loop_path(const Configuration& base, const Loop& loop);

struct MonodromyMatrix {
  Matrix M;  // F_end = M F_start on F_1..F_{n+1}
  std::vector<Loop> loops;
  std::vector<cplx> eigenvalues;
  double unitarity_defect = 0.0;  // ||M^* H M - H|| / ||H||
  double basis_condition = 0.0;
  ContinuationLog log;
};

struct MonodromyOptions {
  QuadratureOptions quadrature{1e-12, 64, 32, 30, 0.125, 0.0};
  ContinuationOptions continuation{};
  double max_condition = 1e6;
};

/// Monodromy of the loops traversed in order, based at `base`.
MonodromyMatrix monodromy(const WeightSystem& ws, const Configuration& base,
                          const std::vector<Loop>& loops, const MonodromyOptions& opt = {});

struct NormIntegral {
  double value = 0.0;  // N(z) = -(area of the flat sphere)
  double error_estimate = 0.0;
};

struct AreaOptions {
  double tol = 1e-9;          // radial quadrature
  double angular_tol = 1e-8;  // inner angular quadrature
  int max_levels = 10;        // adaptive bisection depth
};

NormIntegral norm_integral(const WeightSystem& ws, const Configuration& c,
                           const AreaOptions& opt = {});

/// H(F, F) for the restricted form.
double form_value(const HermitianMatrix& h, const Vector& F);

struct SchwarzGroup {
  long long order = 1;
  std::vector<std::vector<int>> generators;  // permutations as images of 0..n+1
  std::vector<std::vector<int>> elements;
};

SchwarzGroup schwarz_group(const WeightSystem& ws);

/// Elements of the Schwarz group mapping the subset I to itself.
std::vector<std::vector<int>> stabilizer(const SchwarzGroup& g, const std::vector<int>& subset);

/// Matrix of the coordinate permutation sigma on the Lauricella arrangement's coordinates.
Matrix permutation_action(const std::vector<double>& mu, const std::vector<int>& sigma);

}  // namespace dunkl::lauricella
