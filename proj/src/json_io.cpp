#include "nilorb/json_io.hpp"

#include <algorithm>

namespace nilorb {

namespace {

std::vector<int> components(Field f)
{
  switch (f) {
    case Field::Rational: return {Scalar::kOne};
    case Field::RealSqrt2: return {Scalar::kOne, Scalar::kR};
    case Field::Gauss: return {Scalar::kOne, Scalar::kI};
    case Field::Tower: return {Scalar::kOne, Scalar::kI, Scalar::kR, Scalar::kIR};
    case Field::Quat: return {Scalar::kOne, Scalar::kI, Scalar::kJ, Scalar::kK};
    case Field::QuatSqrt2:
      return {Scalar::kOne, Scalar::kI, Scalar::kJ, Scalar::kK,
              Scalar::kR,   Scalar::kIR, Scalar::kJR, Scalar::kKR};
  }
  return {};
}

}  // namespace

json scalar_components_to_json(const Scalar& s, Field f)
{
  if (!contains(f, s.field()))
    throw FieldMismatch("scalar " + s.to_string() + " outside " + std::string(field_name(f)));
  auto idx = components(f);
  if (idx.size() == 1) return rational_to_string(s[Scalar::kOne]);
  json arr = json::array();
  for (int k : idx) arr.push_back(rational_to_string(s[k]));
  return arr;
}

Scalar scalar_components_from_json(const json& j, Field f)
{
  auto idx = components(f);
  Scalar s;
  if (idx.size() == 1) {
    s.set(Scalar::kOne, rational_from_string(j.get<std::string>()));
    return s;
  }
  if (!j.is_array() || j.size() != idx.size())
    throw std::invalid_argument("scalar: expected " + std::to_string(idx.size()) + " components");
  for (std::size_t k = 0; k < idx.size(); ++k) s.set(idx[k], rational_from_string(j[k].get<std::string>()));
  return s;
}

void to_json(json& j, const Scalar& s)
{
  j = json{{"field", field_name(s.field())}, {"value", scalar_components_to_json(s, s.field())}};
}

void from_json(const json& j, Scalar& s)
{
  s = scalar_components_from_json(j.at("value"), field_from_name(j.at("field").get<std::string>()));
}

void to_json(json& j, const Matrix& m)
{
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_components_to_json(m(r, c), m.field()));
    rows.push_back(std::move(row));
  }
  j = json{{"field", field_name(m.field())}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

void from_json(const json& j, Matrix& m)
{
  Field f = field_from_name(j.at("field").get<std::string>());
  auto rows = j.at("rows").get<std::size_t>(), cols = j.at("cols").get<std::size_t>();
  const json& e = j.at("entries");
  if (e.size() != rows) throw ShapeError("matrix json: row count");
  m = Matrix(rows, cols, f);
  for (std::size_t r = 0; r < rows; ++r) {
    if (e[r].size() != cols) throw ShapeError("matrix json: column count");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, scalar_components_from_json(e[r][c], f));
  }
}

void to_json(json& j, const AlgebraSpec& a)
{
  json params = a.uses_signature() ? json{{"p", a.p}, {"q", a.q}} : json{{"n", a.n}};
  j = json{{"algebra", family_name(a.family)}, {"params", params}};
}

void from_json(const json& j, AlgebraSpec& a)
{
  Family f = family_from_name(j.at("algebra").get<std::string>());
  const json& p = j.at("params");
  a = p.contains("p") ? AlgebraSpec::make_pq(f, p.at("p").get<int>(), p.at("q").get<int>())
                      : AlgebraSpec::make(f, p.at("n").get<int>());
}

void to_json(json& j, const Partition& p)
{
  j = json::array();
  for (const auto& part : p.parts()) j.push_back({part.d, part.t});
}

void from_json(const json& j, Partition& p)
{
  std::vector<Part> parts;
  for (const auto& e : j) parts.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
  p = Partition::from_parts(parts);
}

void to_json(json& j, const OrbitDatum& d)
{
  json signs = nullptr;
  if (d.signs) {
    signs = json::array();
    for (const auto& part : d.partition.parts()) signs.push_back({part.d, d.signs->p_of(part.d)});
  }
  j = json{{"label", d.to_string()}, {"partition", d.partition}, {"p", signs}};
}

void from_json(const json& j, OrbitDatum& d)
{
  Partition p = j.at("partition").get<Partition>();
  const json& s = j.at("p");
  if (s.is_null()) {
    d = OrbitDatum::plain(p);
    return;
  }
  std::vector<int> pv;
  for (const auto& part : p.parts()) {
    auto it = std::find_if(s.begin(), s.end(), [&](const json& e) { return e.at(0).get<int>() == part.d; });
    if (it == s.end()) throw std::invalid_argument("datum json: missing p entry for part " + std::to_string(part.d));
    pv.push_back(it->at(1).get<int>());
  }
  d = OrbitDatum::with_signs(SignedYoungDiagram(p, pv));
}

void to_json(json& j, const OrbitRecord& r)
{
  j = json{{"datum", r.datum}, {"fiber_count", r.fiber_count}, {"is_zero_orbit", r.is_zero_orbit}};
}

void from_json(const json& j, OrbitRecord& r)
{
  r.datum = j.at("datum").get<OrbitDatum>();
  r.fiber_count = j.at("fiber_count").get<int>();
  r.is_zero_orbit = j.at("is_zero_orbit").get<bool>();
}

void to_json(json& j, const Triple& t)
{
  json form = nullptr;
  if (t.form) form = {{"epsilon", t.form->epsilon}, {"sigma", t.form->sigma_conj ? "conj" : "id"}};
  j = json{{"X", t.X}, {"H", t.H}, {"Y", t.Y}, {"gram", t.gram ? json(*t.gram) : json(nullptr)},
           {"form_kind", form}, {"basis_layout", t.basis_labels}};
}

void from_json(const json& j, Triple& t)
{
  t.X = j.at("X").get<Matrix>();
  t.H = j.at("H").get<Matrix>();
  t.Y = j.at("Y").get<Matrix>();
  t.gram.reset();
  t.form.reset();
  if (!j.at("gram").is_null()) t.gram = j.at("gram").get<Matrix>();
  if (!j.at("form_kind").is_null())
    t.form = FormKind{j["form_kind"].at("epsilon").get<int>(), j["form_kind"].at("sigma").get<std::string>() == "conj"};
  t.basis_labels = j.at("basis_layout").get<std::vector<std::string>>();
}

void to_json(json& j, const CentralizerReport& r)
{
  j = json{{"dim_z_triple", r.dim_z_triple},
           {"dim_z_X", r.dim_z_X},
           {"dim_g", r.dim_g},
           {"dim_orbit", r.dim_orbit},
           {"expected_reductive", r.expected_reductive},
           {"expected_compact", r.expected_compact},
           {"match", r.match}};
}

void from_json(const json& j, CentralizerReport& r)
{
  r.dim_z_triple = j.at("dim_z_triple").get<int>();
  r.dim_z_X = j.at("dim_z_X").get<int>();
  r.dim_g = j.at("dim_g").get<int>();
  r.dim_orbit = j.at("dim_orbit").get<int>();
  r.expected_reductive = j.at("expected_reductive").get<int>();
  r.expected_compact = j.at("expected_compact").get<int>();
  r.match = j.at("match").get<bool>();
}

void to_json(json& j, const FactorSpec& f)
{
  j = json{{"kind", factor_kind_name(f.kind)},
           {"size", f.size},
           {"part", f.part},
           {"role", std::string(1, f.role)},
           {"multiplicity_pattern", f.multiplicity_pattern}};
}

void from_json(const json& j, FactorSpec& f)
{
  f.kind = factor_kind_from_name(j.at("kind").get<std::string>());
  f.size = j.at("size").get<int>();
  f.part = j.at("part").get<int>();
  std::string role = j.at("role").get<std::string>();
  if (role.size() != 1) throw std::invalid_argument("factor role must be one letter");
  f.role = role[0];
  f.multiplicity_pattern = j.at("multiplicity_pattern").get<std::string>();
}

void to_json(json& j, const HomotopyType& h)
{
  j = json{{"ambient", h.ambient},
           {"factors", h.factors},
           {"constraint", constraint_name(h.constraint)},
           {"dim_M", h.dim_M},
           {"dim_K", h.dim_K},
           {"dim_quotient", h.dim_quotient},
           {"embedding_available", h.embedding_available},
           {"auxiliary", h.auxiliary},
           {"rendered", h.render()}};
}

void from_json(const json& j, HomotopyType& h)
{
  h.ambient = j.at("ambient").get<std::string>();
  h.factors = j.at("factors").get<std::vector<FactorSpec>>();
  h.constraint = constraint_from_name(j.at("constraint").get<std::string>());
  h.dim_M = j.at("dim_M").get<int>();
  h.dim_K = j.at("dim_K").get<int>();
  h.dim_quotient = j.at("dim_quotient").get<int>();
  h.embedding_available = j.at("embedding_available").get<bool>();
  h.auxiliary = j.at("auxiliary").get<std::string>();
}

void to_json(json& j, const KElement& e) { j = json{{"factors", e.factors}}; }

void from_json(const json& j, KElement& e) { e.factors = j.at("factors").get<std::vector<Matrix>>(); }

}  // namespace nilorb
