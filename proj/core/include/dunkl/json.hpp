#pragma once

#include <nlohmann/json.hpp>

#include "dunkl/dunkl.hpp"
#include "dunkl/lauricella.hpp"
#include "dunkl/strata.hpp"

namespace dunkl::io {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "dunklkit/1";

/// {"dim": n, "gram": [[[re, im], ...], ...] (optional, identity), "hyperplanes":
/// [{"normal": [[re, im], ...], "kappa": k}, ...]}. Plain numbers are accepted for
/// real entries.
Arrangement arrangement_from_json(const nlohmann::json& j, double tol = kDefaultTol);
json to_json(const Arrangement& arr);

json complex_json(cplx z);
json matrix_json(const Matrix& m);

json lattice_json(const IntersectionLattice& lat);
json irreducible_json(const Arrangement& arr);
json flatness_json(const FlatnessReport& r);
json exponents_json(const DunklSystem& sys, const ExponentTable& t);

json classification_json(const lauricella::WeightSystem& ws, const lauricella::Classification& c);
json periods_json(const lauricella::WeightSystem& ws, const lauricella::PeriodVector& p);
json monodromy_json(const lauricella::MonodromyMatrix& m);
json area_json(const lauricella::NormIntegral& n);

json plan_json(const IntersectionLattice& lat, const strata::CompletionPlan& plan);
json tangent_cone_json(const strata::TangentConeDescriptor& t);
json strata_json(const std::vector<strata::StratumRecord>& records);

json error_json(const Error& e);

}  // namespace dunkl::io
