#include "app.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "dunkl/json.hpp"

namespace dunklkit {

namespace {

using namespace dunkl;
using io::json;

struct Settings {
  double tol = kDefaultTol;
  double eta = 1e-8;
  int nodes = 64;
  std::uint64_t seed = 1;
  std::string format = "json";
  std::string input;
  std::string catalog;
  std::string mu;
  std::string config;
  std::vector<std::string> loops;
  std::string type;
  double band = strata::kCuspBand;
  int flat = -1;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  return out;
}

double number(const std::string& s) {
  try {
    size_t used = 0;
    const double v = std::stod(s, &used);
    if (used == s.size() && std::isfinite(v)) return v;
  } catch (const std::exception&) {
  }
  throw Error(ErrorCode::InvalidInput, "not a number: '" + s + "'");
}

int integer(const std::string& s) {
  const double v = number(s);
  if (v != std::floor(v)) throw Error(ErrorCode::InvalidInput, "not an integer: '" + s + "'");
  return static_cast<int>(v);
}

std::vector<double> numbers(const std::string& s) {
  std::vector<double> out;
  for (const auto& t : split(s, ',')) out.push_back(number(t));
  return out;
}

// "0,1:0.2,2" -> 0, 1+0.2i, 2
std::vector<cplx> points(const std::string& s) {
  std::vector<cplx> out;
  for (const auto& t : split(s, ',')) {
    const auto parts = split(t, ':');
    if (parts.size() == 1) out.emplace_back(number(parts[0]), 0.0);
    else if (parts.size() == 2) out.emplace_back(number(parts[0]), number(parts[1]));
    else throw Error(ErrorCode::InvalidInput, "bad point '" + t + "'");
  }
  return out;
}

Arrangement with_tol(const Arrangement& a, double tol) {
  std::vector<Vector> normals;
  std::vector<double> kappas;
  for (const auto& h : a.hyperplanes()) {
    normals.push_back(h.normal);
    kappas.push_back(h.kappa);
  }
  return Arrangement(a.gram(), normals, kappas, tol);
}

Arrangement load_arrangement(const Settings& s) {
  if (!s.input.empty() && !s.catalog.empty())
    throw Error(ErrorCode::InvalidInput, "give either --input or --catalog, not both");
  if (!s.input.empty()) {
    std::ifstream in(s.input);
    if (!in) throw Error(ErrorCode::InvalidInput, "cannot read " + s.input);
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::InvalidInput, std::string("malformed JSON: ") + e.what());
    }
    return io::arrangement_from_json(j, s.tol);
  }
  if (s.catalog.empty()) throw Error(ErrorCode::InvalidInput, "an arrangement is required (--input or --catalog)");
  const auto colon = s.catalog.find(':');
  const std::string name = s.catalog.substr(0, colon);
  const std::string rest = colon == std::string::npos ? "" : s.catalog.substr(colon + 1);
  if (name == "lauricella") return with_tol(catalog::lauricella_arrangement(numbers(rest)), s.tol);
  if (name == "boolean") {
    const auto k = numbers(rest);
    return with_tol(catalog::boolean(static_cast<int>(k.size()), k), s.tol);
  }
  if (name == "coxeter_a") {
    const auto a = numbers(rest);
    if (a.size() != 2) throw Error(ErrorCode::InvalidInput, "coxeter_a:<n>,<kappa>");
    return with_tol(catalog::coxeter_A(static_cast<int>(a[0]), a[1]), s.tol);
  }
  if (name == "random") {
    const auto a = numbers(rest);
    if (a.size() != 2) throw Error(ErrorCode::InvalidInput, "random:<dim>,<hyperplanes>");
    return with_tol(catalog::random_generic(static_cast<int>(a[0]), static_cast<int>(a[1]), s.seed), s.tol);
  }
  throw Error(ErrorCode::InvalidInput, "unknown catalog '" + name + "'");
}

std::vector<double> catalog_mu(const Settings& s) {
  if (s.catalog.rfind("lauricella:", 0) == 0) return numbers(s.catalog.substr(11));
  return {};
}

lauricella::WeightSystem load_weights(const Settings& s) {
  if (s.mu.empty()) throw Error(ErrorCode::InvalidInput, "--mu is required");
  return lauricella::build_weights(numbers(s.mu), s.tol);
}

lauricella::Configuration load_config(const Settings& s, int points) {
  if (s.config.empty()) {
    std::vector<cplx> z;
    for (int i = 0; i < points; ++i) z.emplace_back(i, 0.0);
    return lauricella::Configuration(z);
  }
  const auto z = dunklkit::points(s.config);
  if (static_cast<int>(z.size()) != points)
    throw Error(ErrorCode::InvalidInput, "--config needs " + std::to_string(points) + " points");
  return lauricella::Configuration(z);
}

lauricella::QuadratureOptions quad_options(const Settings& s) {
  lauricella::QuadratureOptions q;
  q.eta = s.eta;
  q.jacobi_nodes = s.nodes;
  q.legendre_nodes = std::max(8, s.nodes / 2);
  return q;
}

void check_settings(const Settings& s) {
  if (!(s.tol > 0.0)) throw Error(ErrorCode::InvalidInput, "--tol must be positive");
  if (!(s.eta > 0.0)) throw Error(ErrorCode::InvalidInput, "--eta must be positive");
  if (s.nodes < 4 || s.nodes > 1024) throw Error(ErrorCode::InvalidInput, "--nodes must be in [4, 1024]");
  if (s.format != "json" && s.format != "text") throw Error(ErrorCode::InvalidInput, "--format is json or text");
  if (!(s.band >= 0.0)) throw Error(ErrorCode::InvalidInput, "--band must be nonnegative");
}

void write_text(std::ostream& out, const json& j, const std::string& indent) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      const bool nested = (it->is_object() && !it->empty()) ||
                          (it->is_array() && !it->empty() && (it->front().is_object() || it->front().is_array()) &&
                           !(it->front().is_array() && it->front().size() == 2 && it->front().front().is_number()));
      if (nested) {
        out << indent << it.key() << ":\n";
        write_text(out, *it, indent + "  ");
      } else {
        out << indent << it.key() << ": " << it->dump() << '\n';
      }
    }
  } else if (j.is_array()) {
    for (const auto& e : j) {
      if (e.is_object()) {
        out << indent << "-\n";
        write_text(out, e, indent + "  ");
      } else {
        out << indent << "- " << e.dump() << '\n';
      }
    }
  } else {
    out << indent << j.dump() << '\n';
  }
}

void emit(std::ostream& out, const std::string& format, const json& doc) {
  if (format == "text") write_text(out, doc, "");
  else out << doc.dump(2) << '\n';
}

json settings_json(const Settings& s) {
  return json{{"tol", s.tol}, {"eta", s.eta}, {"nodes", s.nodes}, {"seed", s.seed}};
}

// Result plus exit status (2 when the report itself records a failed check).
struct Outcome {
  json result;
  int status = 0;
};

Outcome execute(const std::string& group, const std::string& cmd, const Settings& s) {
  if (group == "arr") {
    const Arrangement arr = load_arrangement(s);
    if (cmd == "lattice") return {io::lattice_json(build_lattice(arr))};
    return {io::irreducible_json(arr)};
  }
  if (group == "dunkl") {
    const DunklSystem sys(load_arrangement(s));
    if (cmd == "flat") {
      const FlatnessReport r = flatness_check(sys);
      return {io::flatness_json(r), r.flat ? 0 : 2};
    }
    if (cmd == "exponents") return {io::exponents_json(sys, exponent_table(sys))};
    std::vector<int> targets;
    if (s.flat >= 0) {
      targets.push_back(s.flat);
    } else {
      for (int f : sys.lattice.irreducible_flats())
        if (f != sys.lattice.whole()) targets.push_back(f);
    }
    json rows = json::array();
    double worst = 0.0;
    for (int f : targets) {
      const double r = verify_projection_identity(sys, f);
      worst = std::max(worst, r);
      rows.push_back(json{{"flat", f}, {"kappa", exponent(sys, f)}, {"residual", r}});
    }
    return {json{{"tol", sys.tol()}, {"max_residual", worst}, {"flats", rows}}, worst <= 1e-10 ? 0 : 2};
  }
  if (group == "lauricella") {
    const auto ws = load_weights(s);
    if (cmd == "classify") return {io::classification_json(ws, lauricella::classify(ws))};
    const auto config = load_config(s, ws.points());
    json zs = json::array();
    for (cplx z : config.z) zs.push_back(io::complex_json(z));
    if (cmd == "periods") {
      json r = io::periods_json(ws, lauricella::period(ws, config, std::nullopt, quad_options(s)));
      r["config"] = zs;
      r["eta"] = s.eta;
      return {r};
    }
    if (cmd == "monodromy") {
      if (s.loops.empty()) throw Error(ErrorCode::InvalidInput, "at least one --loop i,j[,r] is required");
      std::vector<lauricella::Loop> loops;
      for (const auto& l : s.loops) {
        const auto parts = split(l, ',');
        if (parts.size() < 2 || parts.size() > 3) throw Error(ErrorCode::InvalidInput, "--loop i,j[,r]");
        lauricella::Loop loop{integer(parts[0]), integer(parts[1]), parts.size() == 3 ? number(parts[2]) : 0.0};
        loops.push_back(loop);
      }
      lauricella::MonodromyOptions opt;
      opt.quadrature.jacobi_nodes = s.nodes;
      opt.quadrature.legendre_nodes = std::max(8, s.nodes / 2);
      if (s.eta < opt.quadrature.eta) opt.quadrature.eta = s.eta;
      json r = io::monodromy_json(lauricella::monodromy(ws, config, loops, opt));
      r["config"] = zs;
      r["eta"] = opt.quadrature.eta;
      return {r};
    }
    const auto n = lauricella::norm_integral(ws, config);
    const auto p = lauricella::period(ws, config, std::nullopt, quad_options(s));
    const double hff = lauricella::form_value(lauricella::hermitian_form(ws), p.finite());
    json r = io::area_json(n);
    r["config"] = zs;
    r["form_value"] = hff;
    r["relative_difference"] = std::abs(hff - n.value) / std::abs(n.value);
    return {r};
  }
  // strata
  if (s.type.empty()) throw Error(ErrorCode::InvalidInput, "--type elliptic|parabolic|hyperbolic is required");
  const auto type = strata::parse_geometry(s.type);
  const DunklSystem sys(load_arrangement(s));
  const auto plan = strata::completion_plan(sys, type, s.band);
  if (cmd == "plan") return {io::plan_json(sys.lattice, plan)};
  const auto mu = catalog_mu(s);
  std::optional<std::vector<strata::SymmetryOrders>> orders;
  if (!mu.empty()) orders = strata::lauricella_symmetry_orders(mu, sys, s.band);
  json r = io::plan_json(sys.lattice, plan);
  r["symmetry"] = orders ? "lauricella" : "trivial";
  r["strata"] = io::strata_json(strata::strata_report(sys, plan, orders ? &*orders : nullptr));
  return {r};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Dunkl systems on hyperplane arrangements", "dunklkit"};
  app.require_subcommand(1);
  auto common = [&](CLI::App* c) {
    c->add_option("--tol", s.tol, "rank and flatness tolerance");
    c->add_option("--eta", s.eta, "quadrature tolerance");
    c->add_option("--nodes", s.nodes, "Gauss-Jacobi nodes per endpoint segment");
    c->add_option("--seed", s.seed, "seed for random fixtures");
    c->add_option("--format", s.format, "json or text");
  };
  auto arrangement_source = [&](CLI::App* c) {
    c->add_option("--input", s.input, "arrangement JSON file");
    c->add_option("--catalog", s.catalog,
                  "lauricella:<mu,...> | boolean:<kappa,...> | coxeter_a:<n>,<kappa> | random:<dim>,<m>");
  };
  std::map<CLI::App*, std::pair<std::string, std::string>> names;
  auto leaf = [&](CLI::App* parent, const std::string& group, const std::string& name, const std::string& what) {
    CLI::App* c = parent->add_subcommand(name, what);
    common(c);
    names[c] = {group, name};
    return c;
  };

  CLI::App* arr = app.add_subcommand("arr", "arrangements and lattices");
  arr->require_subcommand(1);
  for (const auto& [n, w] : {std::pair{"lattice", "intersection lattice"}, {"irreducible", "irreducible components"}})
    arrangement_source(leaf(arr, "arr", n, w));

  CLI::App* dk = app.add_subcommand("dunkl", "Dunkl connection checks");
  dk->require_subcommand(1);
  arrangement_source(leaf(dk, "dunkl", "flat", "codimension-2 flatness check"));
  arrangement_source(leaf(dk, "dunkl", "exponents", "exponent table"));
  CLI::App* verify = leaf(dk, "dunkl", "verify", "projection identity on irreducible flats");
  arrangement_source(verify);
  verify->add_option("--flat", s.flat, "single flat index");

  CLI::App* lau = app.add_subcommand("lauricella", "Lauricella periods and monodromy");
  lau->require_subcommand(1);
  for (const auto& [n, w] : {std::pair{"classify", "geometry type"}, {"periods", "hypergeometric periods"},
                             {"monodromy", "monodromy of point loops"}, {"area", "norm integral N(z)"}}) {
    CLI::App* c = leaf(lau, "lauricella", n, w);
    c->add_option("--mu", s.mu, "weights, comma separated")->required();
    if (std::string(n) != "classify") c->add_option("--config", s.config, "finite points re[:im], comma separated");
    if (std::string(n) == "monodromy") c->add_option("--loop", s.loops, "i,j[,r]: z_i circles z_j");
  }

  CLI::App* st = app.add_subcommand("strata", "cone-manifold strata");
  st->require_subcommand(1);
  for (const auto& [n, w] : {std::pair{"plan", "completion plan"}, {"report", "per-flat strata report"}}) {
    CLI::App* c = leaf(st, "strata", n, w);
    arrangement_source(c);
    c->add_option("--type", s.type, "elliptic | parabolic | hyperbolic")->required();
    c->add_option("--band", s.band, "cusp band around kappa = 1");
  }

  std::string command;
  json doc{{"schema", io::kSchema}};
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    doc["error"] = json{{"code", "InvalidInput"}, {"message", e.what()}, {"internal", false}};
    emit(out, s.format == "text" ? "text" : "json", doc);
    err << e.what() << '\n';
    return 2;
  }
  std::pair<std::string, std::string> which;
  for (const auto& [c, gn] : names)
    if (c->parsed()) which = gn;
  command = which.first + " " + which.second;
  doc["command"] = command;
  try {
    check_settings(s);
    doc["settings"] = settings_json(s);
    Outcome o = execute(which.first, which.second, s);
    doc["result"] = std::move(o.result);
    emit(out, s.format, doc);
    return o.status;
  } catch (const Error& e) {
    doc["error"] = io::error_json(e);
    emit(out, s.format == "text" ? "text" : "json", doc);
    err << command << ": " << e.what() << '\n';
    return is_internal(e.code()) ? 1 : 2;
  } catch (const std::exception& e) {
    doc["error"] = json{{"code", "Internal"}, {"message", e.what()}, {"internal", true}};
    emit(out, s.format == "text" ? "text" : "json", doc);
    err << command << ": " << e.what() << '\n';
    return 1;
  }
}

}  // namespace dunklkit
