#pragma once

#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nilorb/algebra.hpp"
#include "nilorb/matrix.hpp"
#include "nilorb/orbit_catalog.hpp"
#include "nilorb/triple.hpp"

namespace nilorb {

struct Unsupported : std::logic_error {
  using std::logic_error::logic_error;
};

// U(k): complex unitary; O(k): real orthogonal; Sp(k): quaternion unitary
enum class FactorKind { U, O, Sp };

std::string_view factor_kind_name(FactorKind k);
FactorKind factor_kind_from_name(std::string_view s);

struct FactorSpec {
  FactorKind kind = FactorKind::O;
  int size = 0;
  int part = 0;    // the part d this factor acts on
  char role = 'G'; // A: even-part factor; C/D and E/F: p/q rows of odd parts; G: sl blocks
  std::string multiplicity_pattern;

  Field field() const;
  int real_dim() const;
  std::string to_string() const;  // "Sp(2)"
  friend bool operator==(const FactorSpec&, const FactorSpec&) = default;
};

enum class Constraint { None, Chi, ChiPQ };
std::string_view constraint_name(Constraint c);
Constraint constraint_from_name(std::string_view s);

struct HomotopyType {
  std::string ambient;
  std::vector<FactorSpec> factors;
  Constraint constraint = Constraint::None;
  int dim_M = 0;
  int dim_K = 0;
  int dim_quotient = 0;
  bool embedding_available = true;
  // so_pq only: the same quotient written over S(O(p) x O(q))
  std::string auxiliary;

  std::string render() const;
  friend bool operator==(const HomotopyType&, const HomotopyType&) = default;
};

HomotopyType compact_pair(const AlgebraSpec& a, const OrbitDatum& d);
int quotient_dim(const AlgebraSpec& a, const OrbitDatum& d);

// One matrix per factor of compact_pair(a, d).factors, same order.
struct KElement {
  std::vector<Matrix> factors;
  friend bool operator==(const KElement&, const KElement&) = default;
};

KElement identity_element(const AlgebraSpec& a, const OrbitDatum& d);
// factorwise product
KElement operator*(const KElement& g, const KElement& h);

// (I - A)(I + A)^-1
Matrix cayley(const Matrix& skew);
// random rational point of O(k), U(k) or Sp(k); O(k) points of determinant -1 included
Matrix random_factor_point(FactorKind kind, int size, std::mt19937_64& rng);
KElement random_element(const AlgebraSpec& a, const OrbitDatum& d, std::mt19937_64& rng);
// arbitrary (not unitary) matrices of the right shapes, for homomorphism tests
KElement random_factor_matrices(const AlgebraSpec& a, const OrbitDatum& d, std::mt19937_64& rng);

// D-map into the ambient group: block diagonal with the repetition pattern
// of the factor table. For so_pq and sp_pq this is D_p (+) D_q.
Matrix embed_K(const AlgebraSpec& a, const OrbitDatum& d, const KElement& e);
// so_pq / sp_pq: (D_p, D_q)
std::pair<Matrix, Matrix> embed_K_pq(const AlgebraSpec& a, const OrbitDatum& d, const KElement& e);
// the element acting on V, in adapted coordinates (basis coordinates for sl)
Matrix embed_K_on_module(const AlgebraSpec& a, const OrbitDatum& d, const KElement& e);

// chi for sl_r, sl_c, so_c; (chi_p, chi_q) for so_pq; empty when unconstrained
std::vector<Scalar> chi(const AlgebraSpec& a, const OrbitDatum& d, const KElement& e);

struct MembershipResult {
  bool ok = true;
  std::string failure;  // first identity that failed
  explicit operator bool() const { return ok; }
};

// g = T * embed_K_on_module(e) * T^-1 must commute with X, H, Y, preserve the
// Gram matrix, be unitary in adapted coordinates, and have determinant (or
// reduced norm) 1 exactly when the chi constraint holds. `T` is ignored for
// the sl families.
MembershipResult verify_K_membership(const AlgebraSpec& a, const OrbitDatum& d, const KElement& e,
                                     const Triple& t, const Matrix& T);

}  // namespace nilorb
