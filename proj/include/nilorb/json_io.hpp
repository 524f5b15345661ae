#pragma once

#include <json.hpp>

#include "nilorb/algebra.hpp"
#include "nilorb/centralizer.hpp"
#include "nilorb/homotopy.hpp"
#include "nilorb/matrix.hpp"
#include "nilorb/orbit_catalog.hpp"
#include "nilorb/scalar.hpp"
#include "nilorb/triple.hpp"

namespace nilorb {

using json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// Scalars inside a matrix are written with the matrix field's component
// list: rational "n/d"; real_sqrt2 [1, r2]; gauss [re, im];
// tower [1, i, r2, i r2]; quat [1, i, j, k]; quat_sqrt2 all eight.
json scalar_components_to_json(const Scalar& s, Field f);
Scalar scalar_components_from_json(const json& j, Field f);

void to_json(json& j, const Scalar& s);    // {"field": ..., "value": ...}
void from_json(const json& j, Scalar& s);
void to_json(json& j, const Matrix& m);    // {"field", "rows", "cols", "entries"}
void from_json(const json& j, Matrix& m);

void to_json(json& j, const AlgebraSpec& a);  // {"algebra", "params"}
void from_json(const json& j, AlgebraSpec& a);
void to_json(json& j, const Partition& p);
void from_json(const json& j, Partition& p);
void to_json(json& j, const OrbitDatum& d);
// "p" holds [d, p_d] pairs, or null for unsigned data
void from_json(const json& j, OrbitDatum& d);
void to_json(json& j, const OrbitRecord& r);
void from_json(const json& j, OrbitRecord& r);
void to_json(json& j, const Triple& t);
void from_json(const json& j, Triple& t);
void to_json(json& j, const CentralizerReport& r);
void from_json(const json& j, CentralizerReport& r);
void to_json(json& j, const FactorSpec& f);
void from_json(const json& j, FactorSpec& f);
void to_json(json& j, const HomotopyType& h);
void from_json(const json& j, HomotopyType& h);
void to_json(json& j, const KElement& e);
void from_json(const json& j, KElement& e);

}  // namespace nilorb
