#pragma once

#include <compare>
#include <string>
#include <vector>

namespace nilorb {

struct Part {
  int d = 0;  // part size
  int t = 0;  // multiplicity
  friend auto operator<=>(const Part&, const Part&) = default;
};

// A partition as (part, multiplicity) pairs, strictly increasing in part size.
class Partition {
 public:
  Partition() = default;
  // from part sizes in any order, e.g. {3,2,2,1}
  static Partition from_sizes(std::vector<int> sizes);
  // from (d, t) pairs; validates ordering and positivity
  static Partition from_parts(std::vector<Part> parts);

  const std::vector<Part>& parts() const { return parts_; }
  int n() const;
  int multiplicity(int d) const;  // 0 if d is not a part
  int largest() const;            // 0 for the empty partition
  bool is_zero_orbit() const;     // [1^n]
  // part sizes in decreasing order
  std::vector<int> sizes() const;
  // "[3,2^2,1]"
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<Part> parts_;
};

struct PartitionClasses {
  std::vector<int> N, E, O, O1, O3;
  bool is_even = false;
  bool is_very_even = false;
  bool in_P1 = false;       // even parts have even multiplicity
  bool in_Pminus1 = false;  // odd parts have even multiplicity
};

constexpr int kMaxPartitionN = 64;

// All partitions of n, in decreasing lexicographic order of their decreasing
// size sequences ([n] first, [1^n] last). n = 0 gives the empty partition.
std::vector<Partition> enumerate_partitions(int n);
PartitionClasses classify(const Partition& p);

}  // namespace nilorb
