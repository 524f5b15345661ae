#pragma once

#include <optional>
#include <vector>

#include "nilorb/algebra.hpp"
#include "nilorb/orbit_catalog.hpp"
#include "nilorb/triple.hpp"

namespace nilorb {

struct CentralizerReport {
  int dim_z_triple = 0;
  int dim_z_X = 0;
  int dim_g = 0;
  int dim_orbit = 0;
  int expected_reductive = 0;
  int expected_compact = 0;
  bool match = false;  // dim_z_triple == expected_reductive

  friend bool operator==(const CentralizerReport&, const CentralizerReport&) = default;
};

// Real dimension of {Z in g : [Z, M] = 0 for every M in `commute_with`}.
// `gram` is required exactly when the family carries a form.
int solve_centralizer_dim(const AlgebraSpec& a, const Matrix* gram,
                          const std::vector<const Matrix*>& commute_with);

// dim of g computed as a kernel (cross-check of AlgebraSpec::dim_g)
int algebra_dim_by_kernel(const AlgebraSpec& a);

int centralizer_dim_triple(const Triple& t, const AlgebraSpec& a);
int centralizer_dim_nilpotent(const Triple& t, const AlgebraSpec& a);
int orbit_dim(const AlgebraSpec& a, const OrbitDatum& d);

int expected_reductive_dim(const AlgebraSpec& a, const OrbitDatum& d);
// dimension of a maximal compact subgroup of the reductive centralizer
int expected_compact_dim(const AlgebraSpec& a, const OrbitDatum& d);

// Zero orbit: the centralizer is all of g.
CentralizerReport centralizer_report(const AlgebraSpec& a, const OrbitDatum& d);

}  // namespace nilorb
