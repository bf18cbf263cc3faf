#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "dunkl/lauricella.hpp"

namespace dunkl::lauricella {

namespace {

// Basis of the linear hyperplane sum_{k<=n+1} Im(w_k) x_k = 0.
Matrix relation_kernel(const WeightSystem& ws) {
  const int dim = ws.points() - 1;
  Matrix row(1, dim);
  for (int k = 0; k < dim; ++k) row(0, k) = std::imag(ws.w[static_cast<size_t>(k)]);
  Eigen::JacobiSVD<Matrix> svd(row, Eigen::ComputeFullV);
  return svd.matrixV().rightCols(dim - 1);
}

}  // namespace

MonodromyMatrix monodromy(const WeightSystem& ws, const Configuration& base,
                          const std::vector<Loop>& loops, const MonodromyOptions& opt) {
  if (base.points() != ws.points()) {
    throw Error(ErrorCode::InvalidInput, "configuration size does not match the weights");
  }
  if (loops.empty()) throw Error(ErrorCode::InvalidInput, "no loop given");
  const int dim = ws.points() - 1;
  const ArcSystem start = canonical_arcs(base);

  // nearby configurations whose period vectors frame C^{n+1}
  std::vector<Configuration> frame{base};
  for (int m = 1; m < dim; ++m) {
    std::vector<cplx> z = base.z;
    z[static_cast<size_t>(m)] += cplx(0.0, 0.2 * base.min_gap);
    frame.emplace_back(z);
  }

  auto frame_matrix = [&](const ArcSystem& arcs) {
    Matrix X(dim, dim);
    for (int m = 0; m < dim; ++m) {
      const Configuration& target = frame[static_cast<size_t>(m)];
      if (m == 0) {
        QuadratureOptions q = opt.quadrature;
        q.min_clearance = 0.9 * arcs.clearance(base);
        X.col(m) = period(ws, target, arcs, q).finite();
      } else {
        X.col(m) = continue_period(ws, {base, target}, arcs, opt.quadrature, opt.continuation).finite();
      }
    }
    return X;
  };

  MonodromyMatrix out;
  out.loops = loops;
  std::vector<Configuration> path{base};
  for (const Loop& l : loops) {
    std::vector<Configuration> piece = loop_path(base, l);
    path.insert(path.end(), piece.begin() + 1, piece.end());
  }
  const ArcSystem after = transport(path, start, opt.continuation, &out.log);

  const Matrix X = frame_matrix(start);
  const Matrix Y = frame_matrix(after);
  Eigen::JacobiSVD<Matrix> svd(X);
  const auto& s = svd.singularValues();
  out.basis_condition = s(s.size() - 1) > 0.0 ? s(0) / s(s.size() - 1) : std::numeric_limits<double>::infinity();
  if (!(out.basis_condition < opt.max_condition)) {
    throw Error(ErrorCode::SingularBasis,
                "start vectors are numerically dependent (condition " + std::to_string(out.basis_condition) + ")");
  }
  out.M = Y * X.inverse();

  Eigen::ComplexEigenSolver<Matrix> es(out.M, false);
  for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) out.eigenvalues.push_back(es.eigenvalues()(k));

  const Matrix H = hermitian_form(ws).h_restricted;
  if (ws.integral_total()) {
    const Matrix B = relation_kernel(ws);
    const Matrix MB = out.M * B;
    const Matrix ref = B.adjoint() * H * B;
    out.unitarity_defect = (MB.adjoint() * H * MB - ref).norm() / ref.norm();
  } else {
    out.unitarity_defect = (out.M.adjoint() * H * out.M - H).norm() / H.norm();
  }
  return out;
}

}  // namespace dunkl::lauricella
