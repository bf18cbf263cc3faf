#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "dunkl/lauricella.hpp"
#include "dunkl/quadrature.hpp"

namespace dunkl::lauricella {

namespace {

constexpr double kPi = 3.14159265358979323846;

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

// One polyline segment of arc `a`. Factors listed as singular are evaluated with
// their vanishing modulus stripped, so a Jacobi weight can absorb it.
struct Segment {
  const std::vector<cplx>& z;
  const std::vector<double>& mu;
  int a;
  cplx va, vb;
  const std::vector<double>& args_a;
  int start_factor;  // factor vanishing at va, or -1
  int end_factor;    // factor vanishing at vb, or -1

  cplx eval(double t, bool strip_start, bool strip_end) const {
    const cplx xi = va + t * (vb - va);
    const double len = std::abs(vb - va);
    double log_mod = 0.0;
    double phase = 0.0;
    const int m = static_cast<int>(z.size());
    for (int i = 0; i < m; ++i) {
      const double mi = mu[static_cast<size_t>(i)];
      double mod;
      double theta;
      if (i == start_factor) {
        mod = strip_start ? len : t * len;
        theta = args_a[static_cast<size_t>(i)];
      } else if (i == end_factor) {
        mod = strip_end ? len : (1.0 - t) * len;
        theta = args_a[static_cast<size_t>(i)];
      } else {
        const cplx u = factor(z, i, a, xi);
        mod = std::abs(u);
        theta = args_a[static_cast<size_t>(i)] + std::arg(u / factor(z, i, a, va));
      }
      log_mod += mi * std::log(mod);
      phase += mi * theta;
    }
    return std::polar(std::exp(-log_mod), -phase) * (vb - va);
  }
};

struct PieceResult {
  cplx value;
  double error;
};

// Integral over t in [t0, t1] of one segment using a rule with n nodes.
cplx piece_rule(const Segment& s, double t0, double t1, bool sing0, bool sing1, int nj, int nl,
                int* evals) {
  const double beta = sing0 ? -s.mu[static_cast<size_t>(s.start_factor)] : 0.0;
  const double alpha = sing1 ? -s.mu[static_cast<size_t>(s.end_factor)] : 0.0;
  const int n = (sing0 || sing1) ? nj : nl;
  const quadrature::Rule& r = quadrature::gauss_jacobi(n, alpha, beta);
  const double h = t1 - t0;
  cplx sum = 0.0;
  for (size_t j = 0; j < r.nodes.size(); ++j) {
    const double sv = 0.5 * (1.0 + r.nodes[j]);
    const double t = t0 + h * sv;
    sum += r.weights[j] * s.eval(t, sing0, sing1);
  }
  if (evals) *evals += static_cast<int>(r.nodes.size());
  // (1+x)^beta = 2^beta s^beta, and t - t0 = h s for the start weight; similarly at the end
  double scale = 0.5 * h;
  if (sing0) scale *= std::pow(0.5, beta) * std::pow(t1, beta);
  if (sing1) scale *= std::pow(0.5, alpha) * std::pow(1.0 - t0, alpha);
  return sum * scale;
}

PieceResult adaptive(const Segment& s, double t0, double t1, bool sing0, bool sing1,
                     double tol, const QuadratureOptions& opt, int depth, int* evals) {
  if (sing0 && sing1) {
    const double mid = 0.5 * (t0 + t1);
    PieceResult l = adaptive(s, t0, mid, true, false, 0.5 * tol, opt, depth + 1, evals);
    PieceResult r = adaptive(s, mid, t1, false, true, 0.5 * tol, opt, depth + 1, evals);
    return {l.value + r.value, l.error + r.error};
  }
  const cplx coarse = piece_rule(s, t0, t1, sing0, sing1, opt.jacobi_nodes, opt.legendre_nodes, evals);
  const cplx fine = piece_rule(s, t0, t1, sing0, sing1, 2 * opt.jacobi_nodes, 2 * opt.legendre_nodes, evals);
  const double diff = std::abs(fine - coarse);
  if (diff <= tol) return {fine, diff};
  if (depth >= opt.max_depth) {
    throw Error(ErrorCode::QuadratureNotConverged,
                "segment quadrature stalled at error " + std::to_string(diff));
  }
  const double mid = 0.5 * (t0 + t1);
  PieceResult l = adaptive(s, t0, mid, sing0, false, 0.5 * tol, opt, depth + 1, evals);
  PieceResult r = adaptive(s, mid, t1, false, sing1, 0.5 * tol, opt, depth + 1, evals);
  return {l.value + r.value, l.error + r.error};
}

// Integral over a polyline for arc index a; the last vertex is singular only
// when end_singular is set.
cplx polyline_integral(const std::vector<cplx>& z, const std::vector<double>& mu, int a,
                       const Arc& arc, bool end_singular, const QuadratureOptions& opt,
                       double* error, int* evals) {
  const size_t nv = arc.vertices.size();
  if (nv < 2 || arc.args.size() != nv) throw Error(ErrorCode::InvalidInput, "malformed arc");
  std::vector<Segment> segs;
  for (size_t s = 0; s + 1 < nv; ++s) {
    segs.push_back(Segment{z, mu, a, arc.vertices[s], arc.vertices[s + 1], arc.args[s],
                           s == 0 ? a : -1, (end_singular && s + 2 == nv) ? a + 1 : -1});
  }
  // scale from a crude pass over |integrand|
  double scale = 0.0;
  double total_len = 0.0;
  for (const auto& seg : segs) {
    const bool s0 = seg.start_factor >= 0;
    const bool s1 = seg.end_factor >= 0;
    if (s0 && s1) {
      scale += std::abs(piece_rule(seg, 0.0, 0.5, true, false, opt.jacobi_nodes, opt.legendre_nodes, evals));
      scale += std::abs(piece_rule(seg, 0.5, 1.0, false, true, opt.jacobi_nodes, opt.legendre_nodes, evals));
    } else {
      scale += std::abs(piece_rule(seg, 0.0, 1.0, s0, s1, opt.jacobi_nodes, opt.legendre_nodes, evals));
    }
    total_len += std::abs(seg.vb - seg.va);
  }
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw Error(ErrorCode::QuadratureNotConverged, "arc integrand is not finite");
  }
  cplx sum = 0.0;
  double err = 0.0;
  for (const auto& seg : segs) {
    const double share = std::abs(seg.vb - seg.va) / total_len;
    PieceResult r = adaptive(seg, 0.0, 1.0, seg.start_factor >= 0, seg.end_factor >= 0,
                             opt.eta * scale * share, opt, 0, evals);
    sum += r.value;
    err += r.error;
  }
  if (error) *error = err;
  return sum;
}

}  // namespace

Configuration::Configuration(std::vector<cplx> points) : z(std::move(points)) {
  if (z.size() < 2) throw Error(ErrorCode::InvalidInput, "a configuration needs at least two points");
  min_gap = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < z.size(); ++i) {
    if (!std::isfinite(z[i].real()) || !std::isfinite(z[i].imag())) {
      throw Error(ErrorCode::InvalidInput, "configuration point is not finite");
    }
    for (size_t j = i + 1; j < z.size(); ++j) min_gap = std::min(min_gap, std::abs(z[i] - z[j]));
  }
  if (!(min_gap > 0.0)) throw Error(ErrorCode::InvalidInput, "configuration points must be distinct");
}

bool Configuration::real_increasing() const {
  for (size_t i = 0; i < z.size(); ++i) {
    if (z[i].imag() != 0.0) return false;
    if (i > 0 && !(z[i].real() > z[i - 1].real())) return false;
  }
  return true;
}

double ArcSystem::clearance(const Configuration& c) const {
  double best = std::numeric_limits<double>::infinity();
  for (size_t a = 0; a < arcs.size(); ++a) {
    const auto& v = arcs[a].vertices;
    for (int i = 0; i < c.points(); ++i) {
      if (i == static_cast<int>(a) || i == static_cast<int>(a) + 1) continue;
      for (size_t s = 0; s + 1 < v.size(); ++s) {
        best = std::min(best, segment_distance(c.z[static_cast<size_t>(i)], v[s], v[s + 1]));
      }
    }
  }
  return best;
}

ArcSystem canonical_arcs(const Configuration& c, int pieces) {
  pieces = std::max(pieces, 2);
  const int m = c.points();
  ArcSystem sys;
  for (int a = 0; a + 1 < m; ++a) {
    Arc arc;
    const cplx p = c.z[static_cast<size_t>(a)];
    const cplx q = c.z[static_cast<size_t>(a + 1)];
    for (int j = 0; j <= pieces; ++j) arc.vertices.push_back(p + (q - p) * (double(j) / pieces));
    arc.args.assign(arc.vertices.size(), std::vector<double>(static_cast<size_t>(m), 0.0));
    for (int i = 0; i < m; ++i) {
      // propagate from the first vertex where the factor is nonzero
      const size_t first = (i == a) ? 1 : 0;
      arc.args[first][static_cast<size_t>(i)] = std::arg(factor(c.z, i, a, arc.vertices[first]));
      for (size_t v = first; v + 1 < arc.vertices.size(); ++v) {
        if (i == a + 1 && v + 2 == arc.vertices.size()) {
          arc.args[v + 1][static_cast<size_t>(i)] = arc.args[v][static_cast<size_t>(i)];
          continue;
        }
        const cplx ratio = factor(c.z, i, a, arc.vertices[v + 1]) / factor(c.z, i, a, arc.vertices[v]);
        arc.args[v + 1][static_cast<size_t>(i)] = arc.args[v][static_cast<size_t>(i)] + std::arg(ratio);
      }
      if (i == a) arc.args[0][static_cast<size_t>(i)] = arc.args[1][static_cast<size_t>(i)];
    }
    sys.arcs.push_back(std::move(arc));
  }
  return sys;
}

Vector PeriodVector::finite() const {
  Vector v(static_cast<Eigen::Index>(F.size()));
  for (size_t k = 0; k < F.size(); ++k) v(static_cast<Eigen::Index>(k)) = F[k];
  return v;
}

cplx arc_integral(const WeightSystem& ws, const Configuration& c, const Arc& arc, int index,
                  const QuadratureOptions& opt, double* error, int* evaluations) {
  if (index < 0 || index + 1 >= c.points()) throw Error(ErrorCode::InvalidInput, "arc index out of range");
  return polyline_integral(c.z, ws.mu, index, arc, true, opt, error, evaluations);
}

PeriodVector period(const WeightSystem& ws, const Configuration& c,
                    const std::optional<ArcSystem>& arcs, const QuadratureOptions& opt) {
  if (c.points() != ws.points()) {
    throw Error(ErrorCode::InvalidInput, "configuration size does not match the weights");
  }
  const ArcSystem sys = arcs ? *arcs : canonical_arcs(c);
  if (static_cast<int>(sys.arcs.size()) != c.points() - 1) {
    throw Error(ErrorCode::InvalidInput, "arc system size does not match the configuration");
  }
  PeriodVector pv;
  pv.clearance = sys.clearance(c);
  const double floor = opt.min_clearance > 0.0 ? opt.min_clearance : opt.min_clearance_fraction * c.min_gap;
  if (c.points() > 2 && pv.clearance < floor) {
    throw Error(ErrorCode::ArcTooClose, "arc clearance " + std::to_string(pv.clearance) +
                                            " is below the floor");
  }
  for (size_t a = 0; a < sys.arcs.size(); ++a) {
    double err = 0.0;
    pv.F.push_back(arc_integral(ws, c, sys.arcs[a], static_cast<int>(a), opt, &err, &pv.evaluations));
    pv.error_estimate.push_back(err);
  }
  // F_{n+2} along the ray to +infinity: quadrature up to X, then the expansion at infinity
  if (!arcs && c.real_increasing() && !ws.integral_total()) {
    const int last = c.points() - 1;
    const double cen = c.z.back().real();
    const double rho = cen - c.z.front().real();
    const double R = 2.0 * rho;
    Arc ray;
    for (int j = 0; j <= 4; ++j) ray.vertices.push_back(cplx(cen + R * j / 4.0, 0.0));
    ray.args.assign(ray.vertices.size(), std::vector<double>(static_cast<size_t>(c.points()), 0.0));
    double err = 0.0;
    cplx head = polyline_integral(c.z, ws.mu, last, ray, false, opt, &err, &pv.evaluations);
    std::vector<double> p;  // power sums sum mu_i (a_i / R)^j
    const int terms = 120;
    for (int j = 0; j <= terms; ++j) {
      double s = 0.0;
      for (int i = 0; i < c.points(); ++i) {
        s += ws.mu[static_cast<size_t>(i)] * std::pow((c.z[static_cast<size_t>(i)].real() - cen) / R, j);
      }
      p.push_back(s);
    }
    std::vector<double> d{1.0};
    double tail = 1.0 / (ws.total - 1.0);
    for (int m = 1; m <= terms; ++m) {
      double s = 0.0;
      for (int j = 1; j <= m; ++j) s += p[static_cast<size_t>(j)] * d[static_cast<size_t>(m - j)];
      d.push_back(s / m);
      tail += d.back() / (ws.total + m - 1.0);
    }
    pv.last = head + std::pow(R, 1.0 - ws.total) * tail;
    cplx rel = 0.0;
    double big = 0.0;
    for (size_t k = 0; k < pv.F.size(); ++k) {
      rel += std::imag(ws.w[k]) * pv.F[k];
      big = std::max(big, std::abs(pv.F[k]));
    }
    rel += std::imag(ws.w.back()) * *pv.last;
    big = std::max(big, std::abs(*pv.last));
    pv.relation_residual = std::abs(rel) / big;
  } else if (!arcs && c.real_increasing() && ws.integral_total()) {
    // Im(w_{n+2}) vanishes; at |mu| = 1 the residue at infinity leaves the constant pi
    cplx rel = std::abs(ws.total - 1.0) <= ws.tol ? cplx(-kPi, 0.0) : cplx(0.0, 0.0);
    double big = 0.0;
    for (size_t k = 0; k < pv.F.size(); ++k) {
      rel += std::imag(ws.w[k]) * pv.F[k];
      big = std::max(big, std::abs(pv.F[k]));
    }
    pv.relation_residual = std::abs(rel) / big;
  }
  return pv;
}

}  // namespace dunkl::lauricella
