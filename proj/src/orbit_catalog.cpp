#include "nilorb/orbit_catalog.hpp"

#include <algorithm>
#include <charconv>
#include <map>

namespace nilorb {

namespace {

std::string set_name(const AlgebraSpec& a)
{
  std::string n = std::to_string(partition_size(a));
  std::string pq = "(" + std::to_string(a.p) + "," + std::to_string(a.q) + ")";
  switch (a.family) {
    case Family::so_c: return "𝒫₁(" + n + ")";
    case Family::sp_c: return "𝒫₋₁(" + n + ")";
    case Family::so_pq: return "𝒴^even₁" + pq;
    case Family::sp_pq: return "𝒴^even" + pq;
    case Family::so_star: return "𝒴^odd(" + n + ")";
    default: return "𝒫(" + n + ")";
  }
}

// even parts forced to start + for so_pq/sp_pq, odd parts for so_star
bool forced_part(Family f, int d)
{
  if (f == Family::so_pq || f == Family::sp_pq) return d % 2 == 0;
  if (f == Family::so_star) return d % 2 == 1;
  return false;
}

int int_field(std::string_view s, const std::string& what)
{
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw std::invalid_argument("malformed " + what + ": '" + std::string(s) + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep)
{
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t k = s.find(sep, start);
    out.push_back(s.substr(start, k == std::string_view::npos ? k : k - start));
    if (k == std::string_view::npos) break;
    start = k + 1;
  }
  return out;
}

std::string_view trim(std::string_view s)
{
  while (!s.empty() && (s.front() == ' ' || s.front() == '[')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == ']')) s.remove_suffix(1);
  return s;
}

}  // namespace

int partition_size(const AlgebraSpec& a) { return a.module_dim(); }

bool uses_signed_diagrams(Family f)
{
  return f == Family::so_pq || f == Family::sp_pq || f == Family::so_star;
}

std::optional<std::string> membership_violation(const AlgebraSpec& a, const OrbitDatum& d)
{
  const Partition& p = d.partition;
  std::string head = "partition " + p.to_string() + " ∉ " + set_name(a) + ": ";
  if (p.n() != partition_size(a))
    return head + "size " + std::to_string(p.n()) + " differs from " +
           std::to_string(partition_size(a));
  if (d.signs && !(d.signs->partition() == p)) return head + "sign data belongs to another partition";

  for (const auto& [part, t] : p.parts()) {
    if (a.family == Family::so_c || a.family == Family::so_pq) {
      if (part % 2 == 0 && t % 2)
        return head + "even part " + std::to_string(part) + " has odd multiplicity " +
               std::to_string(t);
    }
    if (a.family == Family::sp_c && part % 2 == 1 && t % 2)
      return head + "odd part " + std::to_string(part) + " has odd multiplicity " +
             std::to_string(t);
  }

  if (!uses_signed_diagrams(a.family)) {
    if (d.signs) return head + "sign data is not used by " + std::string(family_name(a.family));
    return std::nullopt;
  }
  if (!d.signs) return head + "sign data required";
  for (const auto& m : d.signs->signs())
    if (forced_part(a.family, m.d) && m.p != m.t)
      return head + "rows of part " + std::to_string(m.d) + " must start with +1 (p_" +
             std::to_string(m.d) + " = " + std::to_string(m.p) + " < " + std::to_string(m.t) +
             ")";
  if (a.uses_signature()) {
    Signature s = d.signs->signature();
    if (s.p != a.p || s.q != a.q)
      return head + "sign count (" + std::to_string(s.p) + "," + std::to_string(s.q) +
             ") differs from (" + std::to_string(a.p) + "," + std::to_string(a.q) + ")";
  }
  return std::nullopt;
}

int fiber_count(const AlgebraSpec& a, const OrbitDatum& d)
{
  if (auto why = membership_violation(a, d)) throw NotInParametrizingSet(*why);
  PartitionClasses cls = classify(d.partition);
  switch (a.family) {
    case Family::sl_r: return cls.is_even ? 2 : 1;
    case Family::so_c: return cls.is_very_even ? 2 : 1;
    case Family::so_pq:
      // {0} is a single orbit even when the sign rule would split it (p or q = 0)
      if (d.is_zero_orbit()) return 1;
      if (cls.is_very_even) return 4;
      return in_S_prime(*d.signs) ? 2 : 1;
    default: return 1;
  }
}

std::vector<OrbitRecord> enumerate_orbits(const AlgebraSpec& a)
{
  validate(a);
  std::vector<Partition> parts = enumerate_partitions(partition_size(a));
  std::reverse(parts.begin(), parts.end());

  std::vector<OrbitRecord> out;
  auto push = [&](OrbitDatum d) {
    OrbitRecord r;
    r.fiber_count = fiber_count(a, d);
    r.is_zero_orbit = d.is_zero_orbit();
    r.datum = std::move(d);
    out.push_back(std::move(r));
  };

  for (const Partition& p : parts) {
    PartitionClasses cls = classify(p);
    switch (a.family) {
      case Family::so_c:
        if (cls.in_P1) push(OrbitDatum::plain(p));
        break;
      case Family::sp_c:
        if (cls.in_Pminus1) push(OrbitDatum::plain(p));
        break;
      case Family::so_pq:
        if (!cls.in_P1) break;
        for (auto& s : enumerate_syd(p, SydVariant::Even1, Signature{a.p, a.q}))
          push(OrbitDatum::with_signs(std::move(s)));
        break;
      case Family::sp_pq:
        for (auto& s : enumerate_syd(p, SydVariant::Even, Signature{a.p, a.q}))
          push(OrbitDatum::with_signs(std::move(s)));
        break;
      case Family::so_star:
        for (auto& s : enumerate_syd(p, SydVariant::Odd)) push(OrbitDatum::with_signs(std::move(s)));
        break;
      default: push(OrbitDatum::plain(p));
    }
  }
  return out;
}

int total_orbit_count(const AlgebraSpec& a)
{
  int total = 0;
  for (const auto& r : enumerate_orbits(a)) total += r.fiber_count;
  return total;
}

OrbitDatum parse_datum(const AlgebraSpec& a, const std::string& text)
{
  auto halves = split(text, ';');
  if (halves.size() > 2) throw std::invalid_argument("datum: at most one ';' allowed");

  std::vector<int> sizes;
  for (auto tok : split(trim(halves[0]), ',')) {
    tok = trim(tok);
    std::size_t caret = tok.find('^');
    int d = int_field(tok.substr(0, caret), "part");
    int mult = caret == std::string_view::npos ? 1 : int_field(tok.substr(caret + 1), "multiplicity");
    if (d < 1 || mult < 1) throw std::invalid_argument("datum: parts must be positive");
    sizes.insert(sizes.end(), mult, d);
  }
  Partition p = Partition::from_sizes(sizes);

  std::map<int, int> given;
  if (halves.size() == 2) {
    for (auto tok : split(trim(halves[1]), ',')) {
      tok = trim(tok);
      if (tok.empty()) continue;
      std::size_t colon = tok.find(':');
      if (colon == std::string_view::npos)
        throw std::invalid_argument("datum: sign entry must read d:p_d, got '" + std::string(tok) + "'");
      int d = int_field(tok.substr(0, colon), "sign part");
      if (!given.emplace(d, int_field(tok.substr(colon + 1), "p_d")).second)
        throw std::invalid_argument("datum: repeated sign entry for part " + std::to_string(d));
    }
  }

  OrbitDatum out;
  if (!uses_signed_diagrams(a.family)) {
    if (!given.empty())
      throw NotInParametrizingSet("sign data is not used by " + std::string(family_name(a.family)));
    out = OrbitDatum::plain(p);
  } else {
    std::vector<int> pv;
    for (const auto& [d, t] : p.parts()) {
      auto it = given.find(d);
      if (it != given.end()) {
        pv.push_back(it->second);
        given.erase(it);
      } else if (forced_part(a.family, d)) {
        pv.push_back(t);
      } else {
        throw std::invalid_argument("datum: missing p_" + std::to_string(d) + " for part " +
                                    std::to_string(d));
      }
    }
    if (!given.empty())
      throw std::invalid_argument("datum: sign entry for absent part " +
                                  std::to_string(given.begin()->first));
    try {
      out = OrbitDatum::with_signs(SignedYoungDiagram(p, pv));
    } catch (const std::out_of_range& e) {
      throw NotInParametrizingSet(e.what());
    }
  }
  if (auto why = membership_violation(a, out)) throw NotInParametrizingSet(*why);
  return out;
}

}  // namespace nilorb
