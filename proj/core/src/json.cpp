#include "dunkl/json.hpp"

#include <cmath>

namespace dunkl::io {

namespace {

cplx parse_complex(const nlohmann::json& v) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
    return {v[0].get<double>(), v[1].get<double>()};
  throw Error(ErrorCode::InvalidInput, "complex entries must be numbers or [re, im] pairs");
}

Vector parse_vector(const nlohmann::json& v, int dim, const char* what) {
  if (!v.is_array() || static_cast<int>(v.size()) != dim)
    throw Error(ErrorCode::InvalidInput, std::string(what) + " must have " + std::to_string(dim) + " entries");
  Vector out(dim);
  for (int i = 0; i < dim; ++i) out(i) = parse_complex(v[static_cast<size_t>(i)]);
  return out;
}

json ints(const std::vector<int>& v) { return json(v); }

json blocks(const std::vector<std::vector<int>>& b) {
  json out = json::array();
  for (const auto& x : b) out.push_back(ints(x));
  return out;
}

json signature_json(const linalg::Signature& s) {
  return json{{"positive", s.positive}, {"negative", s.negative}, {"zero", s.zero}};
}

}  // namespace

Arrangement arrangement_from_json(const nlohmann::json& j, double tol) {
  if (!j.is_object()) throw Error(ErrorCode::InvalidInput, "arrangement must be a JSON object");
  if (!j.contains("dim") || !j["dim"].is_number_integer() || j["dim"].get<int>() < 1)
    throw Error(ErrorCode::InvalidInput, "\"dim\" must be a positive integer");
  const int dim = j["dim"].get<int>();
  Matrix gram = Matrix::Identity(dim, dim);
  if (j.contains("gram")) {
    const auto& g = j["gram"];
    if (!g.is_array() || static_cast<int>(g.size()) != dim)
      throw Error(ErrorCode::InvalidInput, "\"gram\" must be a dim x dim matrix");
    for (int r = 0; r < dim; ++r) gram.row(r) = parse_vector(g[static_cast<size_t>(r)], dim, "gram row").transpose();
  }
  if (!j.contains("hyperplanes") || !j["hyperplanes"].is_array() || j["hyperplanes"].empty())
    throw Error(ErrorCode::InvalidInput, "\"hyperplanes\" must be a nonempty array");
  std::vector<Vector> normals;
  std::vector<double> kappas;
  for (const auto& h : j["hyperplanes"]) {
    if (!h.is_object() || !h.contains("normal") || !h.contains("kappa") || !h["kappa"].is_number())
      throw Error(ErrorCode::InvalidInput, "each hyperplane needs \"normal\" and numeric \"kappa\"");
    normals.push_back(parse_vector(h["normal"], dim, "normal"));
    kappas.push_back(h["kappa"].get<double>());
  }
  return Arrangement(gram, normals, kappas, tol);
}

json complex_json(cplx z) { return json::array({z.real(), z.imag()}); }

json matrix_json(const Matrix& m) {
  json out = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_json(m(r, c)));
    out.push_back(row);
  }
  return out;
}

json to_json(const Arrangement& arr) {
  json hs = json::array();
  for (const auto& h : arr.hyperplanes()) {
    json n = json::array();
    for (Eigen::Index i = 0; i < h.normal.size(); ++i) n.push_back(complex_json(h.normal(i)));
    hs.push_back(json{{"normal", n}, {"kappa", h.kappa}});
  }
  return json{{"dim", arr.dim()}, {"gram", matrix_json(arr.gram())}, {"hyperplanes", hs}};
}

json lattice_json(const IntersectionLattice& lat) {
  json flats = json::array();
  for (int i = 0; i < lat.size(); ++i) {
    const Flat& f = lat.flat(i);
    flats.push_back(json{{"flat", i},
                         {"members", ints(f.members)},
                         {"codim", f.codim},
                         {"dim", f.dim()},
                         {"irreducible", f.irreducible},
                         {"components", blocks(f.components)}});
  }
  return json{{"dim", lat.arrangement().dim()},
              {"hyperplanes", lat.arrangement().size()},
              {"tol", lat.arrangement().tol()},
              {"count", lat.size()},
              {"irreducible_count", static_cast<int>(lat.irreducible_flats().size())},
              {"flats", flats}};
}

json irreducible_json(const Arrangement& arr) {
  const auto comps = irreducible_components(arr);
  return json{{"hyperplanes", arr.size()},
              {"tol", arr.tol()},
              {"irreducible", comps.size() == 1},
              {"components", blocks(comps)}};
}

json flatness_json(const FlatnessReport& r) {
  json v = json::array();
  for (const auto& x : r.violations)
    v.push_back(json{{"flat", x.flat},
                     {"members", ints(x.members)},
                     {"commutator_norms", x.commutator_norms},
                     {"relative_norms", x.relative_norms}});
  return json{{"flat", r.flat},
              {"checked", r.checked},
              {"max_relative", r.max_relative},
              {"tol", r.tol},
              {"violations", v}};
}

json exponents_json(const DunklSystem& sys, const ExponentTable& t) {
  json rows = json::array();
  for (int i = 1; i < sys.lattice.size(); ++i) {
    const Flat& f = sys.lattice.flat(i);
    rows.push_back(json{{"flat", i},
                        {"members", ints(f.members)},
                        {"irreducible", f.irreducible},
                        {"kappa", t.kappa[static_cast<size_t>(i)]},
                        {"log_exponent", t.log_exponent[static_cast<size_t>(i)]}});
  }
  return json{{"kappa_0", t.kappa_0}, {"flats", rows}};
}

json classification_json(const lauricella::WeightSystem& ws, const lauricella::Classification& c) {
  return json{{"mu", ws.mu},
              {"total", ws.total},
              {"type", std::string(lauricella::to_string(c.type))},
              {"signature", signature_json(c.signature)},
              {"expected", signature_json(c.expected)},
              {"eigenvalues", c.eigenvalues},
              {"tol", ws.tol}};
}

json periods_json(const lauricella::WeightSystem& ws, const lauricella::PeriodVector& p) {
  json F = json::array();
  for (cplx z : p.F) F.push_back(complex_json(z));
  json out{{"mu", ws.mu}, {"F", F}, {"error_estimate", p.error_estimate}};
  out["last"] = p.last ? complex_json(*p.last) : json(nullptr);
  out["relation_residual"] = p.relation_residual ? json(*p.relation_residual) : json(nullptr);
  out["clearance"] = p.clearance;
  out["evaluations"] = p.evaluations;
  return out;
}

json monodromy_json(const lauricella::MonodromyMatrix& m) {
  json loops = json::array();
  for (const auto& l : m.loops) loops.push_back(json{{"mover", l.mover}, {"center", l.center}, {"radius", l.radius}});
  json eig = json::array();
  for (cplx z : m.eigenvalues) eig.push_back(complex_json(z));
  return json{{"loops", loops},
              {"matrix", matrix_json(m.M)},
              {"eigenvalues", eig},
              {"unitarity_defect", m.unitarity_defect},
              {"basis_condition", m.basis_condition},
              {"continuation",
               json{{"steps", m.log.steps},
                    {"substeps", m.log.substeps},
                    {"refinements", m.log.refinements},
                    {"min_clearance", m.log.min_clearance},
                    {"clearance_floor", m.log.clearance_floor},
                    {"max_arg_change", m.log.max_arg_change}}}};
}

json area_json(const lauricella::NormIntegral& n) {
  return json{{"value", n.value}, {"error_estimate", n.error_estimate}};
}

json plan_json(const IntersectionLattice& lat, const strata::CompletionPlan& plan) {
  json entries = json::array();
  for (const auto& e : plan.entries)
    entries.push_back(json{{"flat", e.flat},
                           {"members", ints(lat.flat(e.flat).members)},
                           {"kappa", e.kappa},
                           {"action", std::string(strata::to_string(e.action))}});
  json checks = json::array();
  for (const auto& c : plan.checks)
    checks.push_back(json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return json{{"type", std::string(lauricella::to_string(plan.type))},
              {"band", plan.band},
              {"kappa_0", plan.kappa_0},
              {"cusps", ints(plan.cusps)},
              {"checks", checks},
              {"entries", entries}};
}

json tangent_cone_json(const strata::TangentConeDescriptor& t) {
  json factors = json::array();
  for (const auto& p : t.prime_factors) {
    json children = json::array();
    for (const auto& c : p.children) children.push_back(tangent_cone_json(c));
    factors.push_back(json{{"flat", p.flat},
                           {"side", std::string(strata::to_string(p.side))},
                           {"circle_length", p.circle_length},
                           {"complex_link_dim", p.complex_link_dim},
                           {"real_dim", p.real_dim()},
                           {"children", children}});
  }
  return json{{"sphere_dim", t.sphere_dim},
              {"total_dim", t.total_dim()},
              {"prime_factors", factors},
              {"local_model",
               json{{"curvature", std::string(strata::to_string(t.local_model.curvature))},
                    {"betas", t.local_model.betas}}}};
}

json strata_json(const std::vector<strata::StratumRecord>& records) {
  json out = json::array();
  auto opt = [](const std::optional<double>& v) { return v ? json(*v) : json(nullptr); };
  for (const auto& r : records) {
    out.push_back(json{{"flat", r.flat},
                       {"members", ints(r.members)},
                       {"irreducible", r.irreducible},
                       {"kappa", r.kappa},
                       {"action", r.action},
                       {"gamma", opt(r.gamma)},
                       {"gamma_scalar", opt(r.gamma_scalar)},
                       {"p", r.p},
                       {"N_Q", r.N_Q},
                       {"complex_fraction", opt(r.complex_fraction)},
                       {"real_fraction", opt(r.real_fraction)},
                       {"components", blocks(r.components)},
                       {"tangent_cone", r.tangent_cone ? tangent_cone_json(*r.tangent_cone) : json(nullptr)}});
  }
  return out;
}

json error_json(const Error& e) {
  return json{{"code", std::string(to_string(e.code()))}, {"message", e.what()}, {"internal", is_internal(e.code())}};
}

}  // namespace dunkl::io
