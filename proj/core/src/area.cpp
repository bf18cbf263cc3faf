#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "dunkl/lauricella.hpp"

namespace dunkl::lauricella {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kPower = 4.0;  // partition of unity exponent

struct Chart {
  const std::vector<cplx>& z;
  const std::vector<double>& mu;
  cplx centre;
  double S;

  double log_density(cplx x) const {
    double lg = 0.0;
    for (size_t i = 0; i < z.size(); ++i) lg -= 2.0 * mu[i] * std::log(std::abs(x - z[i]));
    return lg;
  }

  // Share of chart k (k == z.size() for infinity) at x.
  double share(cplx x, size_t k) const {
    auto dist = [&](size_t l) {
      return l == z.size() ? S * S / std::abs(x - centre) : std::abs(x - z[l]);
    };
    const double dk = dist(k);
    double sum = 0.0;
    for (size_t l = 0; l <= z.size(); ++l) sum += std::pow(dk / dist(l), kPower);
    return 1.0 / sum;
  }
};

}  // namespace

NormIntegral norm_integral(const WeightSystem& ws, const Configuration& c, const AreaOptions& opt) {
  if (ws.type != GeometryType::Hyperbolic) {
    throw Error(ErrorCode::NotHyperbolic, "the area integral converges only for 1 < |mu| < 2");
  }
  if (c.points() != ws.points()) {
    throw Error(ErrorCode::InvalidInput, "configuration size does not match the weights");
  }
  cplx centre = 0.0;
  for (cplx p : c.z) centre += p;
  centre /= static_cast<double>(c.points());
  double spread = 0.0;
  for (cplx p : c.z) spread = std::max(spread, std::abs(p - centre));
  const Chart chart{c.z, ws.mu, centre, spread + 1.0};
  const size_t m = c.z.size();

  double total = 0.0;
  double error = 0.0;
  for (size_t k = 0; k <= m; ++k) {
    const bool at_infinity = k == m;
    const cplx origin = at_infinity ? centre : c.z[k];
    auto point = [&](double r, double t) {
      const cplx u = std::polar(r, t);
      return at_infinity ? centre + chart.S * chart.S / u : origin + u;
    };
    // break points at the other singular points, in angle and in the radial variable
    std::vector<double> cuts{0.0, 2.0 * kPi};
    std::vector<double> breaks{0.0, 1.0};
    for (size_t l = 0; l < m; ++l) {
      if (l == k) continue;
      const cplx d = at_infinity ? chart.S * chart.S / (c.z[l] - centre) : c.z[l] - origin;
      double a = std::arg(d);
      if (a < 0.0) a += 2.0 * kPi;
      cuts.push_back(a);
      const double root = std::sqrt(std::abs(d));
      breaks.push_back(root / (1.0 + root));
    }
    std::sort(cuts.begin(), cuts.end());
    std::sort(breaks.begin(), breaks.end());
    auto ring = [&](double s) -> double {
      if (s <= 0.0 || s >= 1.0) return 0.0;
      // r = s^2/(1-s)^2 maps [0,1) onto [0,inf); everything is assembled in logs
      const double log_r = 2.0 * (std::log(s) - std::log1p(-s));
      const double log_dr = std::log(2.0 * s) - 3.0 * std::log1p(-s);
      const double r = std::exp(log_r);
      if (!(r > 0.0) || !std::isfinite(r)) return 0.0;
      auto f = [&](double t) {
        const cplx x = point(r, t);
        double lg = chart.log_density(x) + log_r + log_dr;
        if (at_infinity) lg += 4.0 * (std::log(chart.S) - log_r);
        const double v = std::exp(lg) * chart.share(x, k);
        return std::isfinite(v) ? v : 0.0;
      };
      double sum = 0.0;
      for (size_t q = 0; q + 1 < cuts.size(); ++q) {
        if (cuts[q + 1] <= cuts[q]) continue;
        sum += boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
            f, cuts[q], cuts[q + 1], opt.max_levels, opt.angular_tol);
      }
      return sum;
    };
    for (size_t q = 0; q + 1 < breaks.size(); ++q) {
      if (breaks[q + 1] <= breaks[q]) continue;
      double err = 0.0;
      double piece;
      if (q == 0) {
        // endpoint singularity of the chart at s = 0
        boost::math::quadrature::tanh_sinh<double> ts(8);
        double l1 = 0.0;
        piece = ts.integrate(ring, breaks[q], breaks[q + 1], opt.tol, &err, &l1);
        err *= l1;
      } else {
        piece = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
            ring, breaks[q], breaks[q + 1], opt.max_levels, opt.tol, &err);
      }
      if (!std::isfinite(piece)) {
        throw Error(ErrorCode::IntegralNotConverged, "area integrand produced a non-finite value");
      }
      total += piece;
      error += err;
    }
  }
  if (error > 1e-6 * std::abs(total)) {
    throw Error(ErrorCode::IntegralNotConverged,
                "area quadrature error estimate " + std::to_string(error) + " is too large");
  }
  return {-total, error};
}

}  // namespace dunkl::lauricella
