#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "dunkl/lauricella.hpp"

namespace dunkl::lauricella {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr size_t kMaxVertices = 200000;

cplx factor(const std::vector<cplx>& z, int i, int a, cplx xi) {
  return i <= a ? xi - z[static_cast<size_t>(i)] : z[static_cast<size_t>(i)] - xi;
}

double segment_distance(cplx p, cplx a, cplx b) {
  const cplx d = b - a;
  const double len2 = std::norm(d);
  double t = len2 > 0.0 ? std::real((p - a) * std::conj(d)) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return std::abs(p - (a + t * d));
}

double bump(double r) {
  if (r <= 0.5) return 1.0;
  if (r >= 1.0) return 0.0;
  const double s = 2.0 * (r - 0.5);
  return 1.0 - s * s * (3.0 - 2.0 * s);
}

double min_gap(const std::vector<cplx>& z) {
  double g = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < z.size(); ++i) {
    for (size_t j = i + 1; j < z.size(); ++j) g = std::min(g, std::abs(z[i] - z[j]));
  }
  return g;
}

// Own-endpoint entries carry no information of their own.
bool own_entry(const Arc& arc, int a, size_t v, int i) {
  return (v == 0 && i == a) || (v + 1 == arc.vertices.size() && i == a + 1);
}

void sync_own_entries(Arc& arc, int a) {
  const size_t last = arc.vertices.size() - 1;
  arc.args[0][static_cast<size_t>(a)] = arc.args[1][static_cast<size_t>(a)];
  arc.args[last][static_cast<size_t>(a + 1)] = arc.args[last - 1][static_cast<size_t>(a + 1)];
}

// Argument of u_i at a point inside segment s, continued from vertex s.
double continued_arg(const Arc& arc, const std::vector<cplx>& z, int a, size_t s, int i, cplx xi) {
  const size_t last_seg = arc.vertices.size() - 2;
  if ((s == 0 && i == a) || (s == last_seg && i == a + 1)) return arc.args[s][static_cast<size_t>(i)];
  return arc.args[s][static_cast<size_t>(i)] +
         std::arg(factor(z, i, a, xi) / factor(z, i, a, arc.vertices[s]));
}

bool consistent(const Arc& arc, const std::vector<cplx>& z, int a) {
  const int m = static_cast<int>(z.size());
  for (size_t s = 0; s + 1 < arc.vertices.size(); ++s) {
    for (int i = 0; i < m; ++i) {
      if (own_entry(arc, a, s, i) || own_entry(arc, a, s + 1, i)) continue;
      const double expect = continued_arg(arc, z, a, s, i, arc.vertices[s + 1]);
      if (std::abs(expect - arc.args[s + 1][static_cast<size_t>(i)]) > 1e-6) return false;
    }
  }
  return true;
}

struct StepContext {
  const ContinuationOptions& opt;
  ContinuationLog& log;
  double floor;
};

// Split segments that are long near moving points or subtend a wide angle.
bool refine(Arc& arc, const std::vector<cplx>& z, int a, double radius,
            const std::vector<bool>& moving, StepContext& ctx) {
  const int m = static_cast<int>(z.size());
  size_t s = 0;
  while (s + 1 < arc.vertices.size()) {
    const cplx p = arc.vertices[s];
    const cplx q = arc.vertices[s + 1];
    const double len = std::abs(q - p);
    bool split = false;
    for (int i = 0; i < m && !split; ++i) {
      const double dist = segment_distance(z[static_cast<size_t>(i)], p, q);
      if (moving[static_cast<size_t>(i)] && len > 0.25 * radius && dist < 3.0 * radius) split = true;
      if ((s == 0 && i == a) || (s + 2 == arc.vertices.size() && i == a + 1)) continue;
      const double sub = std::abs(std::arg(factor(z, i, a, q) / factor(z, i, a, p)));
      if (sub > 0.5 * kPi) split = true;
    }
    if (!split) {
      ++s;
      continue;
    }
    if (arc.vertices.size() >= kMaxVertices) return false;
    const cplx mid = 0.5 * (p + q);
    std::vector<double> args(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) args[static_cast<size_t>(i)] = continued_arg(arc, z, a, s, i, mid);
    arc.vertices.insert(arc.vertices.begin() + static_cast<std::ptrdiff_t>(s + 1), mid);
    arc.args.insert(arc.args.begin() + static_cast<std::ptrdiff_t>(s + 1), args);
    ++ctx.log.refinements;
  }
  return true;
}

// One isotopy step from z to z + delta; returns false when the step is not legal.
bool try_step(ArcSystem& arcs, const std::vector<cplx>& z, const std::vector<cplx>& znew,
              StepContext& ctx) {
  const int m = static_cast<int>(z.size());
  const double gap = std::min(min_gap(z), min_gap(znew));
  if (!(gap > 0.0)) return false;
  const double radius = ctx.opt.isotopy_fraction * gap;
  std::vector<cplx> delta(static_cast<size_t>(m));
  std::vector<bool> moving(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) {
    delta[static_cast<size_t>(i)] = znew[static_cast<size_t>(i)] - z[static_cast<size_t>(i)];
    moving[static_cast<size_t>(i)] = std::abs(delta[static_cast<size_t>(i)]) > 0.0;
  }
  ArcSystem next = arcs;
  double worst = 0.0;
  for (size_t a = 0; a < next.arcs.size(); ++a) {
    Arc& arc = next.arcs[a];
    const int ai = static_cast<int>(a);
    for (size_t v = 0; v < arc.vertices.size(); ++v) {
      const cplx old = arc.vertices[v];
      cplx disp = 0.0;
      for (int i = 0; i < m; ++i) {
        if (!moving[static_cast<size_t>(i)]) continue;
        disp += bump(std::abs(old - z[static_cast<size_t>(i)]) / radius) * delta[static_cast<size_t>(i)];
      }
      const cplx fresh = (v == 0) ? znew[a] : (v + 1 == arc.vertices.size()) ? znew[a + 1] : old + disp;
      for (int i = 0; i < m; ++i) {
        if (own_entry(arc, ai, v, i)) continue;
        const cplx before = factor(z, i, ai, old);
        const cplx after = factor(znew, i, ai, fresh);
        const double change = std::arg(after / before);
        if (std::abs(change) >= ctx.opt.max_arg_change) return false;
        worst = std::max(worst, std::abs(change));
        arc.args[v][static_cast<size_t>(i)] += change;
      }
      arc.vertices[v] = fresh;
    }
    sync_own_entries(arc, ai);
    if (!consistent(arc, znew, ai)) return false;
  }
  const double clearance = next.clearance(Configuration(znew));
  if (clearance < ctx.floor) return false;
  const double new_radius = ctx.opt.isotopy_fraction * min_gap(znew);
  for (size_t a = 0; a < next.arcs.size(); ++a) {
    if (!refine(next.arcs[a], znew, static_cast<int>(a), new_radius, moving, ctx)) return false;
  }
  ctx.log.max_arg_change = std::max(ctx.log.max_arg_change, worst);
  ctx.log.min_clearance = std::min(ctx.log.min_clearance, clearance);
  arcs = std::move(next);
  return true;
}

}  // namespace

ArcSystem transport(const std::vector<Configuration>& path, const ArcSystem& arcs,
                    const ContinuationOptions& opt, ContinuationLog* log) {
  if (path.empty()) throw Error(ErrorCode::InvalidInput, "empty path");
  ContinuationLog local;
  local.min_clearance = std::numeric_limits<double>::infinity();
  const int m = path.front().points();
  if (static_cast<int>(arcs.arcs.size()) != m - 1) {
    throw Error(ErrorCode::InvalidInput, "arc system does not match the path");
  }
  double least_gap = path.front().min_gap;
  for (const auto& c : path) least_gap = std::min(least_gap, c.min_gap);
  const double floor = std::min(opt.clearance_fraction * least_gap,
                                m > 2 ? 0.9 * arcs.clearance(path.front()) : std::numeric_limits<double>::infinity());
  local.clearance_floor = floor;
  StepContext ctx{opt, local, floor};
  ArcSystem cur = arcs;
  // make sure the starting arcs are fine enough for the first motion
  std::vector<bool> all(static_cast<size_t>(m), true);
  for (size_t a = 0; a < cur.arcs.size(); ++a) {
    refine(cur.arcs[a], path.front().z, static_cast<int>(a),
           opt.isotopy_fraction * path.front().min_gap, all, ctx);
  }
  for (size_t k = 1; k < path.size(); ++k) {
    const Configuration& from = path[k - 1];
    const Configuration& to = path[k];
    if (to.points() != m) throw Error(ErrorCode::InvalidInput, "path configurations differ in size");
    double biggest = 0.0;
    for (int i = 0; i < m; ++i) biggest = std::max(biggest, std::abs(to.z[static_cast<size_t>(i)] - from.z[static_cast<size_t>(i)]));
    if (biggest >= 0.25 * from.min_gap) {
      throw Error(ErrorCode::StepTooLarge, "path step " + std::to_string(k) + " moves a point by " +
                                               std::to_string(biggest) + ", more than min_gap/4");
    }
    ++local.steps;
    double t = 0.0;
    std::vector<cplx> z = from.z;
    while (t < 1.0) {
      const double gap = min_gap(z);
      const double radius = opt.isotopy_fraction * gap;
      double dt = biggest > 0.0 ? std::min(1.0 - t, opt.step_fraction * radius / biggest) : 1.0 - t;
      bool done = false;
      for (int h = 0; h <= opt.max_halvings && !done; ++h, dt *= 0.5) {
        const double tn = (h == 0 && t + dt >= 1.0) ? 1.0 : t + dt;
        std::vector<cplx> zn(static_cast<size_t>(m));
        for (int i = 0; i < m; ++i) {
          zn[static_cast<size_t>(i)] = from.z[static_cast<size_t>(i)] + tn * (to.z[static_cast<size_t>(i)] - from.z[static_cast<size_t>(i)]);
        }
        if (!(min_gap(zn) > 0.0)) break;
        if (try_step(cur, z, zn, ctx)) {
          z = zn;
          t = tn;
          ++local.substeps;
          done = true;
        }
      }
      if (!done) {
        throw Error(ErrorCode::PathCollision,
                    "no legal arc deformation at path step " + std::to_string(k));
      }
    }
  }
  if (log) *log = local;
  return cur;
}

PeriodVector continue_period(const WeightSystem& ws, const std::vector<Configuration>& path,
                             const ArcSystem& arcs, const QuadratureOptions& qopt,
                             const ContinuationOptions& copt, ContinuationLog* log) {
  ContinuationLog local;
  ArcSystem end = transport(path, arcs, copt, &local);
  QuadratureOptions q = qopt;
  q.min_clearance = q.min_clearance > 0.0 ? std::min(q.min_clearance, local.clearance_floor)
                                          : std::min(q.min_clearance_fraction * path.back().min_gap,
                                                     local.clearance_floor);
  if (log) *log = local;
  return period(ws, path.back(), end, q);
}

double default_radius(const Configuration& c, const Loop& loop) {
  const cplx zi = c.z.at(static_cast<size_t>(loop.mover));
  const cplx zj = c.z.at(static_cast<size_t>(loop.center));
  double near = std::numeric_limits<double>::infinity();
  for (int k = 0; k < c.points(); ++k) {
    if (k == loop.mover || k == loop.center) continue;
    near = std::min(near, std::abs(c.z[static_cast<size_t>(k)] - zj));
  }
  return std::min(std::abs(zi - zj), 0.5 * near);
}

std::vector<Configuration> loop_path(const Configuration& base, const Loop& loop) {
  const int m = base.points();
  if (loop.mover < 0 || loop.mover >= m || loop.center < 0 || loop.center >= m ||
      loop.mover == loop.center) {
    throw Error(ErrorCode::InvalidInput, "loop needs two distinct valid point indices");
  }
  const double r = loop.radius > 0.0 ? loop.radius : default_radius(base, loop);
  const cplx zj = base.z[static_cast<size_t>(loop.center)];
  const cplx v = base.z[static_cast<size_t>(loop.mover)] - zj;
  const double d0 = std::abs(v);
  const cplx dir = v / d0;

  auto place = [&](cplx p) {
    std::vector<cplx> z = base.z;
    z[static_cast<size_t>(loop.mover)] = p;
    double g = std::numeric_limits<double>::infinity();
    for (int k = 0; k < m; ++k) {
      if (k != loop.mover) g = std::min(g, std::abs(z[static_cast<size_t>(k)] - p));
    }
    if (!(g > 1e-9 * base.min_gap)) {
      throw Error(ErrorCode::PathCollision, "loop path runs into another point");
    }
    return Configuration(z);
  };

  std::vector<cplx> radial;  // mover positions from the start to distance r
  {
    double s = d0;
    radial.push_back(zj + dir * s);
    while (std::abs(s - r) > 0.0) {
      const Configuration c = place(zj + dir * s);
      const double step = c.min_gap / 8.0;
      s = (s > r) ? std::max(r, s - step) : std::min(r, s + step);
      radial.push_back(zj + dir * s);
    }
  }
  std::vector<Configuration> path;
  for (cplx p : radial) path.push_back(place(p));
  const Configuration on_circle = place(zj + dir * r);
  const int samples = std::max(64, static_cast<int>(std::ceil(2.0 * kPi * r / (on_circle.min_gap / 8.0))));
  for (int k = 1; k <= samples; ++k) {
    const double theta = 2.0 * kPi * k / samples;
    path.push_back(place(zj + dir * r * std::polar(1.0, theta)));
  }
  for (size_t k = radial.size(); k-- > 1;) path.push_back(place(radial[k - 1]));
  path.back() = base;
  return path;
}

}  // namespace dunkl::lauricella
