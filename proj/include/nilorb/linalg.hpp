#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "nilorb/matrix.hpp"

namespace nilorb {

struct DegenerateForm : std::domain_error {
  using std::domain_error::domain_error;
};

// Rank and nullity of a rational matrix by fraction-free (Bareiss) elimination.
std::size_t rank(const Matrix& a);
std::size_t kernel_dim(const Matrix& a);

struct Signature {
  int p = 0, q = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

// Signature of a nondegenerate symmetric (real) or Hermitian (complex or
// quaternionic) matrix. Non-real inputs are realified first and the counts
// divided by the realification degree. Throws DegenerateForm if singular and
// std::invalid_argument if S is not Hermitian.
Signature congruence_signature(const Matrix& s);

// Incremental rank of a sparse integer system. Rows are reduced on their
// leading column only (semi-echelon form), with content removal after each step
// to keep the integers small.
class SparseRank {
 public:
  using Row = std::vector<std::pair<std::size_t, Integer>>;

  explicit SparseRank(std::size_t cols);

  // Entries may be unsorted and may repeat a column (they are summed).
  // Returns true when the row is independent of the rows added so far.
  bool add_row(Row row);
  std::size_t rank() const { return rank_; }
  std::size_t cols() const { return cols_; }
  std::size_t nullity() const { return cols_ - rank_; }

 private:
  std::size_t cols_;
  std::size_t rank_ = 0;
  std::vector<Row> pivot_;       // pivot_[c]: stored row with leading column c, or empty
  std::vector<bool> forced_zero_;  // a singleton pivot fixes this column to zero
};

}  // namespace nilorb
