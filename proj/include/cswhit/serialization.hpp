#pragma once

#include <json.hpp>

#include "cswhit/characters.hpp"
#include "cswhit/hecke.hpp"
#include "cswhit/lattice.hpp"
#include "cswhit/whittaker.hpp"

namespace cswhit {

// Canonical JSON forms. Every document carries schema_version and a kind
// tag; term lists are emitted in the canonical storage order, so identical
// values serialize to identical bytes.

inline constexpr int kSchemaVersion = 1;

nlohmann::json scalar_to_json(const Scalar& c);
Scalar scalar_from_json(const nlohmann::json& j);

nlohmann::json lattice_to_json(const CartanType& type, const LatticeElement& f);
LatticeElement lattice_from_json(const nlohmann::json& j);

nlohmann::json multiset_to_json(const WeightMultiset& w);
WeightMultiset multiset_from_json(const nlohmann::json& j);

nlohmann::json hecke_to_json(const RootDatum& datum, const HeckeElement& x);
HeckeElement hecke_from_json(const RootDatum& datum, const nlohmann::json& j);

nlohmann::json table_to_json(const WhittakerTable& t);
WhittakerTable table_from_json(const nlohmann::json& j);
std::string table_to_csv(const WhittakerTable& t);

// Shared validation: throws ParseError unless j is an object with the
// expected kind and schema version.
void require_document(const nlohmann::json& j, const std::string& kind);

}  // namespace cswhit
