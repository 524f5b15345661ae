#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nilorb/algebra.hpp"
#include "nilorb/partitions.hpp"
#include "nilorb/signed_diagrams.hpp"

namespace nilorb {

// Combinatorial label of an orbit: a partition, plus sign data for the
// families parametrized by signed Young diagrams (so_pq, sp_pq, so_star).
struct OrbitDatum {
  Partition partition;
  std::optional<SignedYoungDiagram> signs;

  static OrbitDatum plain(Partition p) { return {std::move(p), std::nullopt}; }
  static OrbitDatum with_signs(SignedYoungDiagram d) { return {d.partition(), std::move(d)}; }

  // p_d for part d; requires signs
  int p_of(int d) const { return signs->p_of(d); }
  bool is_zero_orbit() const { return partition.is_zero_orbit(); }
  std::string to_string() const { return signs ? signs->to_string() : partition.to_string(); }

  friend bool operator==(const OrbitDatum&, const OrbitDatum&) = default;
};

struct OrbitRecord {
  OrbitDatum datum;
  int fiber_count = 1;
  bool is_zero_orbit = false;

  friend bool operator==(const OrbitRecord&, const OrbitRecord&) = default;
};

struct NotInParametrizingSet : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Size of the partitions labelling orbits of `a` (2n for sp_c).
int partition_size(const AlgebraSpec& a);

bool uses_signed_diagrams(Family f);

// Orbits in increasing lexicographic order of the part sequence (zero orbit
// first), then by the p_d tuple.
std::vector<OrbitRecord> enumerate_orbits(const AlgebraSpec& a);

// Reason the datum is outside the parametrizing set of `a`, or nullopt.
std::optional<std::string> membership_violation(const AlgebraSpec& a, const OrbitDatum& d);

// throws NotInParametrizingSet
int fiber_count(const AlgebraSpec& a, const OrbitDatum& d);

int total_orbit_count(const AlgebraSpec& a);

// "3,2,2,1" or "3,2^2,1", optionally followed by ";d:p_d,..." sign data.
// Sign entries forced by the family may be omitted. Throws
// std::invalid_argument on malformed text and NotInParametrizingSet when
// the datum is not a label of `a`.
OrbitDatum parse_datum(const AlgebraSpec& a, const std::string& text);

}  // namespace nilorb
