#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nilorb/linalg.hpp"
#include "nilorb/partitions.hpp"

namespace nilorb {

// Sign matrix of a part: t rows of length d. Rows 1..p start with +1, the
// rest with -1, and signs alternate along each row, except that for
// d = 3 mod 4 the last entry repeats the sign of the one before it.
struct SignMatrix {
  int d = 0, t = 0, p = 0;

  int q() const { return t - p; }
  // 1-based row i, column j
  int entry(int i, int j) const;
  std::vector<std::vector<int>> materialize() const;
  // (number of +1, number of -1) over the whole matrix
  std::pair<int, int> sgn_counts() const;
  // (l+, l-) of row i
  std::pair<int, int> row_plus_minus(int i) const;

  friend bool operator==(const SignMatrix&, const SignMatrix&) = default;
};

SignMatrix make_sign_matrix(int d, int t, int p);

class SignedYoungDiagram {
 public:
  SignedYoungDiagram() = default;
  // one p_d per part of `partition`, in the same order
  SignedYoungDiagram(Partition partition, const std::vector<int>& p_values);

  const Partition& partition() const { return partition_; }
  const std::vector<SignMatrix>& signs() const { return signs_; }
  const SignMatrix& sign_of(int d) const;
  int p_of(int d) const { return sign_of(d).p; }
  Signature signature() const;
  // "[3,1^2] p=(3:0,1:2)"
  std::string to_string() const;

  friend bool operator==(const SignedYoungDiagram&, const SignedYoungDiagram&) = default;

 private:
  Partition partition_;
  std::vector<SignMatrix> signs_;
};

// all: no constraint; even: even parts start +1; odd: odd parts start +1;
// even1: even plus partition in P_1; oddm1: odd plus partition in P_-1.
enum class SydVariant { All, Even, Odd, Even1, OddM1 };

std::vector<SignedYoungDiagram> enumerate_syd(const Partition& p, SydVariant variant,
                                              std::optional<Signature> signature = std::nullopt);

// Either every odd-part row has an even number of +1, or every odd-part row
// has an even number of -1.
bool in_S_prime(const SignedYoungDiagram& d);

}  // namespace nilorb
