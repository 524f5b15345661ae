#include "nilorb/report.hpp"

#include <algorithm>
#include <sstream>

namespace nilorb {

namespace {

// Left-aligned columns separated by two spaces; no trailing blanks.
class Table {
 public:
  explicit Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  std::string str() const
  {
    std::vector<std::size_t> w;
    for (const auto& r : rows_)
      for (std::size_t c = 0; c < r.size(); ++c) {
        if (w.size() <= c) w.push_back(0);
        w[c] = std::max(w[c], display_width(r[c]));
      }
    std::ostringstream os;
    for (const auto& r : rows_) {
      std::string line;
      for (std::size_t c = 0; c < r.size(); ++c) {
        line += r[c];
        if (c + 1 < r.size()) line += std::string(w[c] - display_width(r[c]) + 2, ' ');
      }
      line.erase(line.find_last_not_of(' ') + 1);
      os << line << "\n";
    }
    return os.str();
  }

 private:
  // code points, so that labels with non-ASCII symbols still line up
  static std::size_t display_width(const std::string& s)
  {
    return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char ch) {
      return (static_cast<unsigned char>(ch) & 0xC0) != 0x80;
    }));
  }

  std::vector<std::vector<std::string>> rows_;
};

std::string str(int v) { return std::to_string(v); }

void write_header(json& j, const char* command, const AlgebraSpec& a)
{
  j["schema"] = kSchemaVersion;
  j["command"] = command;
  json aj = a;
  j["algebra"] = aj["algebra"];
  j["params"] = aj["params"];
}

AlgebraSpec read_algebra(const json& j, const char* command)
{
  if (j.at("schema").get<int>() != kSchemaVersion)
    throw std::invalid_argument("unsupported schema version " + j.at("schema").dump());
  if (j.at("command").get<std::string>() != command)
    throw std::invalid_argument("expected a '" + std::string(command) + "' document");
  return json{{"algebra", j.at("algebra")}, {"params", j.at("params")}}.get<AlgebraSpec>();
}

std::string low_rank_note(const AlgebraSpec& a)
{
  return "warning: " + a.name() + " is below the simple range (n >= 5); accepted for isomorphism cross-checks\n";
}

void matrix_block(std::ostringstream& os, const std::string& title, const Matrix& m)
{
  os << title << " (" << field_name(m.field()) << ", " << m.rows() << "x" << m.cols() << ")\n";
  Table t({});
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::vector<std::string> row;
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    t.add(std::move(row));
  }
  std::string body = t.str();
  // drop the empty header line
  os << body.substr(body.find('\n') + 1);
}

}  // namespace

ListEntry make_list_entry(const AlgebraSpec& a, const OrbitRecord& r)
{
  return {r, centralizer_report(a, r.datum), compact_pair(a, r.datum)};
}

ListDocument make_list(const AlgebraSpec& a, unsigned threads)
{
  ListDocument d;
  d.algebra = a;
  d.low_rank_warning = a.low_rank();
  std::vector<OrbitRecord> recs = enumerate_orbits(a);
  d.orbits.resize(recs.size());
  parallel_for(recs.size(), threads, [&](std::size_t i) { d.orbits[i] = make_list_entry(a, recs[i]); });
  for (const auto& e : d.orbits) d.total_orbit_count += e.record.fiber_count;
  return d;
}

DescribeDocument make_describe(const AlgebraSpec& a, const OrbitDatum& datum)
{
  if (auto why = membership_violation(a, datum)) throw NotInParametrizingSet(*why);
  DescribeDocument d;
  d.algebra = a;
  d.low_rank_warning = a.low_rank();
  d.record = {datum, fiber_count(a, datum), datum.is_zero_orbit()};
  if (!datum.is_zero_orbit()) {
    d.triple = build_triple(a, datum);
    if (has_adapted_basis(a.family)) d.change_of_basis = adapted_change_of_basis(a, datum);
  }
  d.centralizer = centralizer_report(a, datum);
  d.homotopy = compact_pair(a, datum);
  return d;
}

void to_json(json& j, const ListEntry& e)
{
  j = e.record;
  j["centralizer"] = e.centralizer;
  j["homotopy"] = e.homotopy;
}

void from_json(const json& j, ListEntry& e)
{
  e.record = j.get<OrbitRecord>();
  e.centralizer = j.at("centralizer").get<CentralizerReport>();
  e.homotopy = j.at("homotopy").get<HomotopyType>();
}

void to_json(json& j, const ListDocument& d)
{
  j = json::object();
  write_header(j, "list", d.algebra);
  j["low_rank_warning"] = d.low_rank_warning;
  j["total_orbit_count"] = d.total_orbit_count;
  j["orbits"] = d.orbits;
}

void from_json(const json& j, ListDocument& d)
{
  d.algebra = read_algebra(j, "list");
  d.low_rank_warning = j.at("low_rank_warning").get<bool>();
  d.total_orbit_count = j.at("total_orbit_count").get<int>();
  d.orbits = j.at("orbits").get<std::vector<ListEntry>>();
}

void to_json(json& j, const DescribeDocument& d)
{
  j = json::object();
  write_header(j, "describe", d.algebra);
  j["low_rank_warning"] = d.low_rank_warning;
  j["record"] = d.record;
  j["triple"] = d.triple ? json(*d.triple) : json(nullptr);
  j["change_of_basis"] = d.change_of_basis ? json(*d.change_of_basis) : json(nullptr);
  j["centralizer"] = d.centralizer;
  j["homotopy"] = d.homotopy;
}

void from_json(const json& j, DescribeDocument& d)
{
  d.algebra = read_algebra(j, "describe");
  d.low_rank_warning = j.at("low_rank_warning").get<bool>();
  d.record = j.at("record").get<OrbitRecord>();
  d.triple.reset();
  d.change_of_basis.reset();
  if (!j.at("triple").is_null()) d.triple = j["triple"].get<Triple>();
  if (!j.at("change_of_basis").is_null()) d.change_of_basis = j["change_of_basis"].get<Matrix>();
  d.centralizer = j.at("centralizer").get<CentralizerReport>();
  d.homotopy = j.at("homotopy").get<HomotopyType>();
}

void to_json(json& j, const CheckResult& c)
{
  j = json{{"orbit", c.orbit}, {"check", c.check}, {"status", check_status_name(c.status)}, {"detail", c.detail}};
}

void from_json(const json& j, CheckResult& c)
{
  c.orbit = j.at("orbit").get<std::string>();
  c.check = j.at("check").get<std::string>();
  std::string s = j.at("status").get<std::string>();
  if (s == "PASS") c.status = CheckStatus::Pass;
  else if (s == "FAIL") c.status = CheckStatus::Fail;
  else if (s == "SKIP") c.status = CheckStatus::Skip;
  else throw std::invalid_argument("unknown check status " + s);
  c.detail = j.at("detail").get<std::string>();
}

void to_json(json& j, const VerifyReport& r)
{
  j = json::object();
  write_header(j, "verify", r.algebra);
  j["seed"] = r.options.seed;
  j["max_verify_n"] = r.options.max_verify_n;
  j["samples"] = r.options.samples;
  j["checks"] = r.checks;
  j["summary"] = {{"pass", r.count(CheckStatus::Pass)},
                  {"fail", r.count(CheckStatus::Fail)},
                  {"skip", r.count(CheckStatus::Skip)}};
  j["ok"] = r.ok();
}

void from_json(const json& j, VerifyReport& r)
{
  r.algebra = read_algebra(j, "verify");
  r.options = VerifyOptions{};
  r.options.seed = j.at("seed").get<std::uint64_t>();
  r.options.max_verify_n = j.at("max_verify_n").get<int>();
  r.options.samples = j.at("samples").get<int>();
  r.checks = j.at("checks").get<std::vector<CheckResult>>();
}

std::string render_table(const ListDocument& d)
{
  std::ostringstream os;
  if (d.low_rank_warning) os << low_rank_note(d.algebra);
  os << d.algebra.name() << ": " << d.orbits.size() << " data, " << d.total_orbit_count << " orbits\n";
  // one row per orbit: a datum with fiber f contributes rows 1/f .. f/f
  Table t({"#", "orbit", "copy", "fiber", "dim_orbit", "dim_z_triple", "dim_K", "dim_quotient", "homotopy"});
  int k = 0;
  for (const auto& e : d.orbits)
    for (int c = 1; c <= e.record.fiber_count; ++c)
      t.add({str(++k), e.record.datum.to_string(), str(c) + "/" + str(e.record.fiber_count),
             str(e.record.fiber_count), str(e.centralizer.dim_orbit), str(e.centralizer.dim_z_triple),
             str(e.homotopy.dim_K), str(e.homotopy.dim_quotient), e.homotopy.render()});
  os << t.str();
  return os.str();
}

std::string render_table(const DescribeDocument& d)
{
  std::ostringstream os;
  if (d.low_rank_warning) os << low_rank_note(d.algebra);
  const CentralizerReport& c = d.centralizer;
  const HomotopyType& h = d.homotopy;
  Table t({"algebra", d.algebra.name()});
  t.add({"orbit", d.record.datum.to_string()});
  t.add({"fiber", str(d.record.fiber_count)});
  t.add({"zero orbit", d.record.is_zero_orbit ? "yes" : "no"});
  t.add({"dim_g", str(c.dim_g)});
  t.add({"dim_z_triple", str(c.dim_z_triple)});
  t.add({"dim_z_X", str(c.dim_z_X)});
  t.add({"dim_orbit", str(c.dim_orbit)});
  t.add({"expected_reductive", str(c.expected_reductive)});
  t.add({"expected_compact", str(c.expected_compact)});
  t.add({"match", c.match ? "yes" : "no"});
  t.add({"dim_M", str(h.dim_M)});
  t.add({"dim_K", str(h.dim_K)});
  t.add({"dim_quotient", str(h.dim_quotient)});
  t.add({"homotopy", h.render()});
  if (!h.auxiliary.empty()) t.add({"homotopy (S(O x O))", h.auxiliary});
  t.add({"embedding", h.embedding_available ? "available" : "not available"});
  os << t.str();
  if (d.triple) {
    os << "\nbasis: ";
    for (std::size_t i = 0; i < d.triple->basis_labels.size(); ++i) os << (i ? " " : "") << d.triple->basis_labels[i];
    os << "\n\n";
    matrix_block(os, "X", d.triple->X);
    matrix_block(os, "H", d.triple->H);
    matrix_block(os, "Y", d.triple->Y);
  }
  if (d.triple && d.triple->gram) matrix_block(os, "Gram", *d.triple->gram);
  if (d.change_of_basis) matrix_block(os, "change of basis", *d.change_of_basis);
  return os.str();
}

std::string render_table(const VerifyReport& r)
{
  std::ostringstream os;
  os << r.algebra.name() << ": verify, seed " << r.options.seed << ", max_verify_n " << r.options.max_verify_n
     << ", samples " << r.options.samples << "\n";
  Table t({"orbit", "check", "status", "detail"});
  for (const auto& c : r.checks) t.add({c.orbit, c.check, std::string(check_status_name(c.status)), c.detail});
  os << t.str();
  os << r.count(CheckStatus::Pass) << " passed, " << r.count(CheckStatus::Fail) << " failed, "
     << r.count(CheckStatus::Skip) << " skipped\n";
  return os.str();
}

std::vector<std::string> failure_lines(const VerifyReport& r)
{
  std::vector<std::string> out;
  for (const auto& c : r.checks)
    if (c.status == CheckStatus::Fail)
      out.push_back(c.orbit + ": " + c.check + " FAILED" + (c.detail.empty() ? "" : " (" + c.detail + ")"));
  return out;
}

}  // namespace nilorb
