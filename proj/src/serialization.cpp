#include "cswhit/serialization.hpp"

#include <sstream>

namespace cswhit {

using nlohmann::json;

namespace {

std::vector<int> int_array(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw ParseError(std::string(what) + " must contain integers");
    out.push_back(x.get<int>());
  }
  return out;
}

}  // namespace

void require_document(const json& j, const std::string& kind) {
  if (!j.is_object()) throw ParseError("expected a JSON object for " + kind);
  if (!j.contains("schema_version") || !j["schema_version"].is_number_integer() ||
      j["schema_version"].get<int>() != kSchemaVersion)
    throw ParseError("unsupported schema_version in " + kind + " document");
  if (!j.contains("kind") || j["kind"] != kind)
    throw ParseError("expected document kind '" + kind + "'");
}

json scalar_to_json(const Scalar& c) {
  return json{{"num", c.num().to_string()}, {"den", c.den().to_string()}};
}

Scalar scalar_from_json(const json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den"))
    throw ParseError("scalar must be an object with 'num' and 'den'");
  return Scalar::parse(j["num"].get<std::string>(), j["den"].get<std::string>());
}

json lattice_to_json(const CartanType& type, const LatticeElement& f) {
  json terms = json::array();
  for (const auto& [mu, c] : f.terms())
    terms.push_back(json{{"exponent", mu.coords()}, {"coeff", scalar_to_json(c)}});
  return json{{"schema_version", kSchemaVersion},
              {"kind", "lattice_element"},
              {"type", type.to_string()},
              {"terms", std::move(terms)}};
}

LatticeElement lattice_from_json(const json& j) {
  require_document(j, "lattice_element");
  const int rank = CartanType::parse(j.at("type").get<std::string>()).rank;
  LatticeElement f;
  for (const auto& term : j.at("terms")) {
    Coweight mu(int_array(term.at("exponent"), "exponent"));
    if (mu.rank() != rank) throw ParseError("exponent rank does not match the document type");
    f.add_term(mu, scalar_from_json(term.at("coeff")));
  }
  return f;
}

json multiset_to_json(const WeightMultiset& w) {
  json mults = json::array();
  for (const auto& [nu, m] : w.dominant_mults)
    mults.push_back(json{{"weight", nu.coords()}, {"mult", m.str()}});
  return json{{"schema_version", kSchemaVersion},
              {"kind", "weight_multiset"},
              {"type", w.type.to_string()},
              {"lambda", w.lambda.coords()},
              {"dominant_mults", std::move(mults)}};
}

WeightMultiset multiset_from_json(const json& j) {
  require_document(j, "weight_multiset");
  WeightMultiset w{CartanType::parse(j.at("type").get<std::string>()),
                   Coweight(int_array(j.at("lambda"), "lambda")),
                   {}};
  for (const auto& entry : j.at("dominant_mults")) {
    Coweight nu(int_array(entry.at("weight"), "weight"));
    Int m(entry.at("mult").get<std::string>());
    if (m <= 0) throw ParseError("weight multiplicity must be positive");
    w.dominant_mults.emplace(std::move(nu), std::move(m));
  }
  return w;
}

json hecke_to_json(const RootDatum& datum, const HeckeElement& x) {
  json terms = json::array();
  for (const auto& [k, c] : x.terms()) {
    std::vector<int> word;
    for (int i : datum.weyl(k.w_id).word) word.push_back(i + 1);  // 1-based on the wire
    terms.push_back(json{{"w", std::move(word)}, {"mu", k.mu.coords()}, {"coeff", scalar_to_json(c)}});
  }
  return json{{"schema_version", kSchemaVersion},
              {"kind", "hecke_element"},
              {"type", datum.type().to_string()},
              {"terms", std::move(terms)}};
}

HeckeElement hecke_from_json(const RootDatum& datum, const json& j) {
  require_document(j, "hecke_element");
  if (j.at("type").get<std::string>() != datum.type().to_string())
    throw ParseError("hecke_element type does not match the requested root datum");
  HeckeElement x;
  for (const auto& term : j.at("terms")) {
    int w_id = 0;
    for (int letter : int_array(term.at("w"), "w")) {
      if (letter < 1 || letter > datum.rank()) throw ParseError("simple index out of range in 'w'");
      w_id = datum.mult_simple_right(w_id, letter - 1);
    }
    Coweight mu(int_array(term.at("mu"), "mu"));
    if (mu.rank() != datum.rank()) throw ParseError("mu rank does not match the root datum");
    x.add_term(w_id, mu, scalar_from_json(term.at("coeff")));
  }
  return x;
}

json table_to_json(const WhittakerTable& t) {
  json rows = json::array();
  for (const auto& row : t.rows)
    rows.push_back(json{{"lambda", row.lambda.coords()},
                        {"lambda_plus_rho", row.lambda_plus_rho.coords()},
                        {"value", row.value}});
  return json{{"schema_version", kSchemaVersion},
              {"kind", "whittaker_table"},
              {"type", t.type.to_string()},
              {"gamma", t.gamma},
              {"q", t.q},
              {"rows", std::move(rows)}};
}

WhittakerTable table_from_json(const json& j) {
  require_document(j, "whittaker_table");
  WhittakerTable t{CartanType::parse(j.at("type").get<std::string>()),
                   j.at("gamma").get<std::vector<std::string>>(),
                   j.at("q").get<std::string>(),
                   {}};
  for (const auto& row : j.at("rows")) {
    Coweight lambda(int_array(row.at("lambda"), "lambda"));
    Coweight shifted(int_array(row.at("lambda_plus_rho"), "lambda_plus_rho"));
    if (!shifted.is_strictly_dominant())
      throw ParseError("whittaker_table row key is not strictly dominant");
    t.rows.push_back(WhittakerTableRow{lambda, shifted, row.at("value").get<std::string>()});
  }
  return t;
}

std::string table_to_csv(const WhittakerTable& t) {
  std::ostringstream out;
  out << "lambda,lambda_plus_rho,value\n";
  for (const auto& row : t.rows) {
    auto join = [](const std::vector<int>& v) {
      std::ostringstream s;
      for (size_t i = 0; i < v.size(); ++i) {
        if (i) s << " ";
        s << v[i];
      }
      return s.str();
    };
    out << join(row.lambda.coords()) << "," << join(row.lambda_plus_rho.coords()) << ","
        << row.value << "\n";
  }
  return out.str();
}

}  // namespace cswhit
