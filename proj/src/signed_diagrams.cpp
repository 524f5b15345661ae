#include "nilorb/signed_diagrams.hpp"

#include <stdexcept>

namespace nilorb {

int SignMatrix::entry(int i, int j) const
{
  if (i < 1 || i > t || j < 1 || j > d) throw std::out_of_range("sign matrix index");
  int first = i <= p ? 1 : -1;
  if (d % 4 == 3 && j == d) return -first;
  return (j % 2 == 1) ? first : -first;
}

std::vector<std::vector<int>> SignMatrix::materialize() const
{
  std::vector<std::vector<int>> m(t, std::vector<int>(d));
  for (int i = 1; i <= t; ++i)
    for (int j = 1; j <= d; ++j) m[i - 1][j - 1] = entry(i, j);
  return m;
}

std::pair<int, int> SignMatrix::row_plus_minus(int i) const
{
  int plus = 0;
  for (int j = 1; j <= d; ++j) plus += entry(i, j) > 0;
  return {plus, d - plus};
}

std::pair<int, int> SignMatrix::sgn_counts() const
{
  int plus = 0;
  for (int i = 1; i <= t; ++i) plus += row_plus_minus(i).first;
  return {plus, t * d - plus};
}

SignMatrix make_sign_matrix(int d, int t, int p)
{
  if (d < 1 || t < 1) throw std::invalid_argument("sign matrix: d and t must be positive");
  if (p < 0 || p > t)
    throw std::out_of_range("sign matrix: p_" + std::to_string(d) + " = " + std::to_string(p) +
                            " outside [0, " + std::to_string(t) + "]");
  return {d, t, p};
}

SignedYoungDiagram::SignedYoungDiagram(Partition partition, const std::vector<int>& p_values)
    : partition_(std::move(partition))
{
  if (p_values.size() != partition_.parts().size())
    throw std::invalid_argument("signed diagram: one p_d per part required");
  for (std::size_t k = 0; k < p_values.size(); ++k) {
    const Part& part = partition_.parts()[k];
    signs_.push_back(make_sign_matrix(part.d, part.t, p_values[k]));
  }
}

const SignMatrix& SignedYoungDiagram::sign_of(int d) const
{
  for (const auto& m : signs_)
    if (m.d == d) return m;
  throw std::out_of_range("signed diagram has no part " + std::to_string(d));
}

Signature SignedYoungDiagram::signature() const
{
  Signature s;
  for (const auto& m : signs_) {
    auto [plus, minus] = m.sgn_counts();
    s.p += plus;
    s.q += minus;
  }
  return s;
}

std::string SignedYoungDiagram::to_string() const
{
  std::string s = partition_.to_string() + " p=(";
  for (auto it = signs_.rbegin(); it != signs_.rend(); ++it) {
    if (it != signs_.rbegin()) s += ",";
    s += std::to_string(it->d) + ":" + std::to_string(it->p);
  }
  return s + ")";
}

std::vector<SignedYoungDiagram> enumerate_syd(const Partition& p, SydVariant variant,
                                              std::optional<Signature> signature)
{
  PartitionClasses cls = classify(p);
  if (variant == SydVariant::Even1 && !cls.in_P1)
    throw std::invalid_argument("partition " + p.to_string() + " is not in P_1");
  if (variant == SydVariant::OddM1 && !cls.in_Pminus1)
    throw std::invalid_argument("partition " + p.to_string() + " is not in P_-1");
  if (signature && signature->p + signature->q != p.n())
    throw std::invalid_argument("signature does not sum to the partition size");

  bool force_even = variant == SydVariant::Even || variant == SydVariant::Even1;
  bool force_odd = variant == SydVariant::Odd || variant == SydVariant::OddM1;
  const auto& parts = p.parts();
  std::vector<int> lo(parts.size()), hi(parts.size());
  for (std::size_t k = 0; k < parts.size(); ++k) {
    bool forced = parts[k].d % 2 == 0 ? force_even : force_odd;
    lo[k] = forced ? parts[k].t : 0;
    hi[k] = parts[k].t;
  }

  std::vector<SignedYoungDiagram> out;
  std::vector<int> cur(lo);
  // odometer over p_d choices, first part varying slowest
  while (true) {
    SignedYoungDiagram d(p, cur);
    if (!signature || d.signature() == *signature) out.push_back(std::move(d));
    int k = static_cast<int>(parts.size()) - 1;
    while (k >= 0 && cur[k] == hi[k]) {
      cur[k] = lo[k];
      --k;
    }
    if (k < 0) break;
    ++cur[k];
  }
  return out;
}

bool in_S_prime(const SignedYoungDiagram& d)
{
  bool plus_even = true, minus_even = true;
  for (const auto& m : d.signs()) {
    if (m.d % 2 == 0) continue;
    for (int i = 1; i <= m.t; ++i) {
      auto [lp, lm] = m.row_plus_minus(i);
      plus_even = plus_even && lp % 2 == 0;
      minus_even = minus_even && lm % 2 == 0;
    }
  }
  return plus_even || minus_even;
}

}  // namespace nilorb
