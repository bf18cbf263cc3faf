#pragma once

#include <vector>

#include "dunkl/arrangement.hpp"

namespace dunkl {

/// rho_H = kappa_H times the G-orthogonal projection onto the normal line of H.
Matrix projection(const Arrangement& arr, int h);

struct DunklSystem {
  Arrangement arrangement;
  IntersectionLattice lattice;
  std::vector<Matrix> projections;  // projections[i] belongs to hyperplane i

  explicit DunklSystem(const Arrangement& arr);

  double tol() const { return arrangement.tol(); }
};

struct FlatnessViolation {
  int flat = -1;
  std::vector<int> members;
  std::vector<double> commutator_norms;  // ||[S, rho_H]||_F per member
  std::vector<double> relative_norms;    // divided by ||S|| ||rho_H||
};

struct FlatnessReport {
  bool flat = true;
  int checked = 0;  // codimension-2 flats examined
  double max_relative = 0.0;
  double tol = kDefaultTol;
  std::vector<FlatnessViolation> violations;  // sorted by flat index
};

/// Codimension-2 criterion: S = sum of rho_H over H_L commutes with each rho_H.
FlatnessReport flatness_check(const DunklSystem& sys);

/// kappa_L = codim(L)^{-1} sum_{H in H_L} kappa_H.
double exponent(const DunklSystem& sys, int flat);

struct ExponentTable {
  std::vector<double> kappa;         // per flat; 0 for V
  std::vector<double> log_exponent;  // kappa_L - 1; 0 for V
  double kappa_0 = 0.0;
};

ExponentTable exponent_table(const DunklSystem& sys);

/// Relative residual of sum rho_H = kappa_L pi_L on an irreducible flat.
double verify_projection_identity(const DunklSystem& sys, int flat);

struct InducedSystem {
  DunklSystem system;
  Matrix embedding;
  std::vector<std::vector<int>> sources;
  std::vector<int> weight_flats;  // ambient flat whose exponent weights each hyperplane
};

/// System on L: hyperplanes H^L, each I weighted by kappa of the irreducible
/// component of H_I whose flat meets L in exactly I.
InducedSystem longitudinal_system(const DunklSystem& sys, int flat);

/// System on V/L (realized as L-perp) with the members of H_L and their weights.
InducedSystem transversal_system(const DunklSystem& sys, int flat);

double euler_dilatation(const DunklSystem& sys);

}  // namespace dunkl
