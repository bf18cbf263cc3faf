#include <cmath>
#include <string>

#include "dunkl/lauricella.hpp"

namespace dunkl::lauricella {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

std::string_view to_string(GeometryType t) noexcept {
  switch (t) {
    case GeometryType::Elliptic: return "elliptic";
    case GeometryType::Parabolic: return "parabolic";
    case GeometryType::Hyperbolic: return "hyperbolic";
    case GeometryType::OutOfRange: return "out-of-range";
  }
  return "out-of-range";
}

bool WeightSystem::integral_total() const {
  return std::abs(total - std::round(total)) <= tol;
}

WeightSystem build_weights(const std::vector<double>& mu, double tol) {
  if (mu.size() < 2) throw Error(ErrorCode::InvalidInput, "need at least two weights");
  WeightSystem ws;
  ws.mu = mu;
  ws.tol = tol;
  double partial = 0.0;
  for (double m : mu) {
    if (!(m > tol && m < 1.0 - tol)) {
      throw Error(ErrorCode::WeightOutOfRange, "weight " + std::to_string(m) + " is outside (0,1)");
    }
    partial += m;
    ws.w.push_back(std::polar(1.0, kPi * partial));
  }
  ws.total = partial;
  if (std::abs(ws.total - 1.0) <= tol) {
    ws.type = GeometryType::Parabolic;
  } else if (ws.total < 1.0) {
    ws.type = GeometryType::Elliptic;
  } else if (ws.total < 2.0 - tol) {
    ws.type = GeometryType::Hyperbolic;
  } else {
    ws.type = GeometryType::OutOfRange;
  }
  return ws;
}

HermitianMatrix hermitian_form(const WeightSystem& ws) {
  const int m = ws.points();
  HermitianMatrix h;
  h.h_tilde = Matrix::Zero(m, m);
  for (int j = 0; j < m; ++j) {
    for (int k = j + 1; k < m; ++k) {
      const double v = 0.5 * std::imag(ws.w[static_cast<size_t>(j)] * std::conj(ws.w[static_cast<size_t>(k)]));
      h.h_tilde(j, k) = v;
      h.h_tilde(k, j) = v;
    }
  }
  // lift from C^{n+1} to C^{n+2}, landing in the relation hyperplane
  h.lift = Matrix::Zero(m, m - 1);
  if (!ws.integral_total()) {
    h.lift.topRows(m - 1) = Matrix::Identity(m - 1, m - 1);
    const double last = std::imag(ws.w[static_cast<size_t>(m - 1)]);
    for (int k = 0; k < m - 1; ++k) h.lift(m - 1, k) = -std::imag(ws.w[static_cast<size_t>(k)]) / last;
  } else {
    // F_{n+2} drops out; project along the F_{n+1} axis onto the relation
    h.lift.topRows(m - 2) = Matrix::Identity(m - 2, m - 1);
    const double pivot = std::imag(ws.w[static_cast<size_t>(m - 2)]);
    for (int k = 0; k < m - 2; ++k) h.lift(m - 2, k) = -std::imag(ws.w[static_cast<size_t>(k)]) / pivot;
  }
  h.h_restricted = h.lift.transpose() * h.h_tilde * h.lift;
  h.signature = linalg::signature(h.h_restricted, ws.tol, &h.eigenvalues);
  return h;
}

Classification classify(const WeightSystem& ws) {
  if (ws.type == GeometryType::OutOfRange) {
    throw Error(ErrorCode::OutOfRange, "|mu| = " + std::to_string(ws.total) + " is not below 2");
  }
  const HermitianMatrix h = hermitian_form(ws);
  const int n = ws.n();
  Classification c{ws.type, h.signature, {}, h.eigenvalues};
  switch (ws.type) {
    case GeometryType::Elliptic: c.expected = {n + 1, 0, 0}; break;
    case GeometryType::Parabolic: c.expected = {n, 0, 1}; break;
    default: c.expected = {n, 1, 0}; break;
  }
  if (c.signature.positive != c.expected.positive || c.signature.negative != c.expected.negative ||
      c.signature.zero != c.expected.zero) {
    throw Error(ErrorCode::ClassificationMismatch,
                "signature (" + std::to_string(c.signature.positive) + "," +
                    std::to_string(c.signature.negative) + "," + std::to_string(c.signature.zero) +
                    ") disagrees with the " + std::string(to_string(ws.type)) + " threshold");
  }
  return c;
}

double form_value(const HermitianMatrix& h, const Vector& F) {
  return (F.adjoint() * h.h_restricted * F)(0, 0).real();
}

}  // namespace dunkl::lauricella
