#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dunkl/arrangement.hpp"

namespace fixtures {

using dunkl::Arrangement;
namespace catalog = dunkl::catalog;

/// Arrangements with at most 8 hyperplanes, flat or not.
inline std::vector<std::pair<std::string, Arrangement>> small() {
  std::vector<std::pair<std::string, Arrangement>> out;
  out.emplace_back("boolean2", catalog::boolean(2, {1.0, 1.0}));
  out.emplace_back("boolean3", catalog::boolean(3, {0.3, 0.5, 0.7}));
  out.emplace_back("A1", catalog::coxeter_A(1, 0.5));
  out.emplace_back("A2", catalog::coxeter_A(2, 0.4));
  out.emplace_back("A3", catalog::coxeter_A(3, 0.3));
  out.emplace_back("A2+A2", catalog::direct_sum(catalog::coxeter_A(2, 0.4), catalog::coxeter_A(2, 0.2)));
  out.emplace_back("A1+A2", catalog::direct_sum(catalog::coxeter_A(1, 0.6), catalog::coxeter_A(2, 0.3)));
  out.emplace_back("lauricella_quarter", catalog::lauricella_arrangement({0.25, 0.25, 0.25, 0.25}));
  out.emplace_back("lauricella_mixed", catalog::lauricella_arrangement({0.2, 0.3, 0.4, 0.5}));
  out.emplace_back("lauricella_3", catalog::lauricella_arrangement({0.3, 0.45, 0.5}));
  out.emplace_back("random_2_3", catalog::random_generic(2, 3, 7));
  out.emplace_back("random_3_5", catalog::random_generic(3, 5, 11));
  out.emplace_back("random_3_4", catalog::random_generic(3, 4, 5));
  return out;
}

/// Systems satisfying the flatness criterion.
inline std::vector<std::pair<std::string, Arrangement>> flat() {
  std::vector<std::pair<std::string, Arrangement>> out;
  out.emplace_back("boolean2", catalog::boolean(2, {1.0, 1.0}));
  out.emplace_back("boolean3", catalog::boolean(3, {0.3, 0.5, 0.7}));
  out.emplace_back("A2", catalog::coxeter_A(2, 0.4));
  out.emplace_back("A3", catalog::coxeter_A(3, 0.3));
  out.emplace_back("A4", catalog::coxeter_A(4, 0.35));
  out.emplace_back("A2+A2", catalog::direct_sum(catalog::coxeter_A(2, 0.4), catalog::coxeter_A(2, 0.2)));
  out.emplace_back("lauricella_quarter", catalog::lauricella_arrangement({0.25, 0.25, 0.25, 0.25}));
  out.emplace_back("lauricella_mixed", catalog::lauricella_arrangement({0.2, 0.3, 0.4, 0.5}));
  out.emplace_back("lauricella_5", catalog::lauricella_arrangement({0.1, 0.7, 0.35, 0.6, 0.45}));
  out.emplace_back("lauricella_6", catalog::lauricella_arrangement({0.3, 0.3, 0.3, 0.3, 0.3, 0.3}));
  return out;
}

}  // namespace fixtures
