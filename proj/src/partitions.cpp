#include "nilorb/partitions.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace nilorb {

Partition Partition::from_sizes(std::vector<int> sizes)
{
  std::map<int, int> count;
  for (int d : sizes) {
    if (d < 1) throw std::invalid_argument("partition parts must be positive");
    ++count[d];
  }
  Partition p;
  for (auto [d, t] : count) p.parts_.push_back({d, t});
  return p;
}

Partition Partition::from_parts(std::vector<Part> parts)
{
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (parts[k].d < 1 || parts[k].t < 1)
      throw std::invalid_argument("partition parts and multiplicities must be positive");
    if (k && parts[k].d <= parts[k - 1].d)
      throw std::invalid_argument("partition parts must be strictly increasing");
  }
  Partition p;
  p.parts_ = std::move(parts);
  return p;
}

int Partition::n() const
{
  int s = 0;
  for (const auto& [d, t] : parts_) s += d * t;
  return s;
}

int Partition::multiplicity(int d) const
{
  for (const auto& part : parts_)
    if (part.d == d) return part.t;
  return 0;
}

int Partition::largest() const { return parts_.empty() ? 0 : parts_.back().d; }

bool Partition::is_zero_orbit() const { return parts_.size() == 1 && parts_[0].d == 1; }

std::vector<int> Partition::sizes() const
{
  std::vector<int> s;
  for (auto it = parts_.rbegin(); it != parts_.rend(); ++it) s.insert(s.end(), it->t, it->d);
  return s;
}

std::string Partition::to_string() const
{
  std::string s = "[";
  for (auto it = parts_.rbegin(); it != parts_.rend(); ++it) {
    if (it != parts_.rbegin()) s += ",";
    s += std::to_string(it->d);
    if (it->t > 1) s += "^" + std::to_string(it->t);
  }
  return s + "]";
}

namespace {

void extend(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out)
{
  if (remaining == 0) {
    out.push_back(Partition::from_sizes(cur));
    return;
  }
  for (int d = std::min(remaining, max_part); d >= 1; --d) {
    cur.push_back(d);
    extend(remaining - d, d, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n)
{
  if (n < 0) throw std::invalid_argument("enumerate_partitions: negative n");
  if (n > kMaxPartitionN) throw std::invalid_argument("enumerate_partitions: n above 64");
  std::vector<Partition> out;
  std::vector<int> cur;
  extend(n, n, cur, out);
  return out;
}

PartitionClasses classify(const Partition& p)
{
  PartitionClasses c;
  c.is_even = c.is_very_even = c.in_P1 = c.in_Pminus1 = true;
  for (const auto& [d, t] : p.parts()) {
    c.N.push_back(d);
    if (d % 2 == 0) {
      c.E.push_back(d);
      if (t % 2) c.in_P1 = false;
    } else {
      c.O.push_back(d);
      (d % 4 == 1 ? c.O1 : c.O3).push_back(d);
      c.is_even = false;
      if (t % 2) c.in_Pminus1 = false;
    }
    if (t % 2) c.is_very_even = false;
  }
  c.is_very_even = c.is_very_even && c.is_even;
  return c;
}

}  // namespace nilorb
