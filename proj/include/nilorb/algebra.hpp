#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "nilorb/scalar.hpp"

namespace nilorb {

enum class Family { sl_r, sl_c, sl_h, so_c, so_pq, sp_c, sp_pq, so_star };

std::string_view family_name(Family f);
Family family_from_name(std::string_view s);  // throws std::invalid_argument

struct InvalidAlgebra : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// sign and conjugation of an eps-sigma Hermitian form: <v,u> = eps * sigma(<u,v>)
struct FormKind {
  int epsilon = 1;
  bool sigma_conj = false;
  friend bool operator==(const FormKind&, const FormKind&) = default;
};

// A family plus its parameters. For sp_c, n is the half-rank; for so_pq and
// sp_pq the parameters are (p, q).
struct AlgebraSpec {
  Family family = Family::sl_r;
  int n = 0;
  int p = 0, q = 0;

  static AlgebraSpec make(Family f, int n);
  static AlgebraSpec make_pq(Family f, int p, int q);

  bool uses_signature() const { return family == Family::so_pq || family == Family::sp_pq; }
  bool is_sl() const;
  bool has_form() const { return !is_sl(); }
  // so families below rank 5 are accepted but flagged
  bool low_rank() const;

  Field scalar_field() const;
  // dimension over the scalar field of the defining module V
  int module_dim() const;
  std::string name() const;  // e.g. "so_pq(2,1)", "sp_c(2)"
  FormKind form() const;     // precondition: has_form()
  // real dimension of the Lie algebra
  int dim_g() const;

  friend bool operator==(const AlgebraSpec&, const AlgebraSpec&) = default;
};

// throws InvalidAlgebra with a readable reason
void validate(const AlgebraSpec& a);

}  // namespace nilorb
