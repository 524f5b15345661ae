#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nilorb/algebra.hpp"
#include "nilorb/matrix.hpp"
#include "nilorb/orbit_catalog.hpp"

namespace nilorb {

struct ZeroOrbitError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Ordered basis of V: parts in increasing size d, and within a part the
// vectors X^l v_j listed level by level (l = 0..d-1, j = 1..t_d). Each v_j is
// a lowest weight vector, so H acts on X^l v_j by 2l + 1 - d.
std::size_t basis_index(const Partition& p, int d, int l, int j);
// "X^l.v[d][j]" in basis order
std::vector<std::string> basis_labels(const Partition& p);

struct Triple {
  Matrix X, H, Y;
  std::optional<Matrix> gram;
  std::optional<FormKind> form;
  std::vector<std::string> basis_labels;

  friend bool operator==(const Triple&, const Triple&) = default;
};

// X, H, Y of the standard weight blocks for any partition; all zero for [1^n].
Triple weight_blocks(const AlgebraSpec& a, const Partition& p);

// Throws ZeroOrbitError on [1^n] and NotInParametrizingSet on foreign data.
Triple build_triple(const AlgebraSpec& a, const OrbitDatum& d);

// Form (v_i, v_j)_d on the lowest weight vectors of part d (t_d x t_d).
Matrix lowest_weight_form(const AlgebraSpec& a, const OrbitDatum& datum, int d);

// Gram matrix of the invariant form in the basis above. Defined for the
// zero orbit too. Precondition: a.has_form().
Matrix gram_matrix(const AlgebraSpec& a, const OrbitDatum& datum);

// transpose for bilinear forms, conjugate transpose for sesquilinear ones
Matrix form_adjoint(const Matrix& m, FormKind f);

// Columns are the adapted orthonormal / symplectic basis vectors in the
// coordinates of the basis above. Supported for so_c, so_pq, sp_c, sp_pq.
Matrix adapted_change_of_basis(const AlgebraSpec& a, const OrbitDatum& datum);

// What form_adjoint(T) * S * T must equal: I_n (so_c), I_{p,q} (so_pq,
// sp_pq), or [[0, I_n], [-I_n, 0]] (sp_c).
Matrix standard_form(const AlgebraSpec& a);

bool has_adapted_basis(Family f);

// Sizes of the Jordan blocks of a nilpotent matrix, from ranks of its powers.
Partition jordan_type(const Matrix& x);

}  // namespace nilorb
