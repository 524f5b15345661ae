#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nilorb/centralizer.hpp"
#include "nilorb/homotopy.hpp"
#include "nilorb/json_io.hpp"
#include "nilorb/verify.hpp"

namespace nilorb {

struct ListEntry {
  OrbitRecord record;
  CentralizerReport centralizer;
  HomotopyType homotopy;
  friend bool operator==(const ListEntry&, const ListEntry&) = default;
};

struct ListDocument {
  AlgebraSpec algebra;
  bool low_rank_warning = false;
  int total_orbit_count = 0;
  std::vector<ListEntry> orbits;
  friend bool operator==(const ListDocument&, const ListDocument&) = default;
};

struct DescribeDocument {
  AlgebraSpec algebra;
  bool low_rank_warning = false;
  OrbitRecord record;
  std::optional<Triple> triple;            // none for the zero orbit
  std::optional<Matrix> change_of_basis;   // columns: adapted basis in X^l.v coordinates
  CentralizerReport centralizer;
  HomotopyType homotopy;
  friend bool operator==(const DescribeDocument&, const DescribeDocument&) = default;
};

ListEntry make_list_entry(const AlgebraSpec& a, const OrbitRecord& r);
ListDocument make_list(const AlgebraSpec& a, unsigned threads = 1);
// throws NotInParametrizingSet
DescribeDocument make_describe(const AlgebraSpec& a, const OrbitDatum& d);

void to_json(json& j, const ListEntry& e);
void from_json(const json& j, ListEntry& e);
void to_json(json& j, const ListDocument& d);
void from_json(const json& j, ListDocument& d);
void to_json(json& j, const DescribeDocument& d);
void from_json(const json& j, DescribeDocument& d);
void to_json(json& j, const CheckResult& c);
void from_json(const json& j, CheckResult& c);
// threads and fault are run settings and are not written
void to_json(json& j, const VerifyReport& r);
void from_json(const json& j, VerifyReport& r);

std::string render_table(const ListDocument& d);
std::string render_table(const DescribeDocument& d);
std::string render_table(const VerifyReport& r);

// "<orbit>: <check> FAILED" lines, one per failed check
std::vector<std::string> failure_lines(const VerifyReport& r);

}  // namespace nilorb
