// Command-line front end: characters and weight multisets, Hecke products,
// Whittaker tables, the identity-verification suites, and the on-disk
// multiplicity cache. Exit codes: 0 ok, 1 verification failure,
// 2 usage/parse error, 3 domain error.

#include <CLI11.hpp>

#include <complex>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "cswhit/cache.hpp"
#include "cswhit/characters.hpp"
#include "cswhit/hecke.hpp"
#include "cswhit/serialization.hpp"
#include "cswhit/verification.hpp"
#include "cswhit/whittaker.hpp"

namespace {

using namespace cswhit;
using nlohmann::json;

constexpr int kHardBoundDefault = 8;

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ParseError("cannot parse integer list entry '" + item + "'");
    }
  }
  if (out.empty()) throw ParseError("empty integer list");
  return out;
}

Coweight parse_lambda(const RootDatum& datum, const std::string& s) {
  std::vector<int> coords = parse_int_list(s);
  if (static_cast<int>(coords.size()) != datum.rank())
    throw ParseError("lambda has " + std::to_string(coords.size()) + " coordinates, expected " +
                     std::to_string(datum.rank()) + " for " + datum.type().to_string());
  return Coweight(std::move(coords));
}

bool looks_rational(const std::string& tok) {
  if (tok.empty()) return false;
  size_t i = (tok[0] == '+' || tok[0] == '-') ? 1 : 0;
  bool digits = false, slash = false;
  for (; i < tok.size(); ++i) {
    if (std::isdigit(static_cast<unsigned char>(tok[i]))) {
      digits = true;
    } else if (tok[i] == '/' && !slash && digits) {
      slash = true;
      digits = false;
    } else {
      return false;
    }
  }
  return digits;
}

std::complex<double> parse_complex(const std::string& tok) {
  if (tok.empty()) throw ParseError("empty gamma coordinate");
  if (tok.find('i') == std::string::npos) {
    try {
      return {std::stod(tok), 0.0};
    } catch (const std::exception&) {
      throw ParseError("cannot parse '" + tok + "' as a number");
    }
  }
  std::string body = tok.substr(0, tok.size() - 1);
  if (tok.back() != 'i') throw ParseError("cannot parse complex number '" + tok + "'");
  // find the split between the real part and the imaginary coefficient
  size_t split = std::string::npos;
  for (size_t p = body.size(); p-- > 1;) {
    if ((body[p] == '+' || body[p] == '-') && body[p - 1] != 'e' && body[p - 1] != 'E') {
      split = p;
      break;
    }
  }
  auto coeff = [&](std::string s) -> double {
    if (s.empty() || s == "+") return 1.0;
    if (s == "-") return -1.0;
    try {
      return std::stod(s);
    } catch (const std::exception&) {
      throw ParseError("cannot parse complex number '" + tok + "'");
    }
  };
  if (split == std::string::npos) return {0.0, coeff(body)};
  return {coeff(body.substr(0, split + 0).empty() ? "0" : body.substr(0, split)),
          coeff(body.substr(split))};
}

struct GammaSpec {
  std::optional<SatakeParameter> exact;
  std::optional<ComplexSatakeParameter> complex_coords;
};

GammaSpec parse_gamma(const RootDatum& datum, const std::string& s) {
  std::vector<std::string> toks;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) toks.push_back(item);
  if (static_cast<int>(toks.size()) != datum.rank())
    throw ParseError("gamma has " + std::to_string(toks.size()) + " coordinates, expected " +
                     std::to_string(datum.rank()));
  const bool all_rational =
      std::all_of(toks.begin(), toks.end(), [](const std::string& t) { return looks_rational(t); });
  GammaSpec out;
  if (all_rational) {
    std::vector<Rational> xs;
    for (const auto& t : toks) {
      Rational x = parse_rational(t);
      if (x == 0) throw DomainError("gamma coordinate must be nonzero");
      xs.push_back(std::move(x));
    }
    out.exact = SatakeParameter::from_rationals(xs);
  } else {
    std::vector<std::complex<double>> xs;
    for (const auto& t : toks) {
      std::complex<double> x = parse_complex(t);
      if (x == std::complex<double>(0.0, 0.0)) throw DomainError("gamma coordinate must be nonzero");
      xs.push_back(x);
    }
    out.complex_coords = ComplexSatakeParameter(std::move(xs));
  }
  return out;
}

std::optional<Rational> rational_sqrt(const Rational& x) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (x < 0) return std::nullopt;
  const Int n = Int(numerator(x)), d = Int(denominator(x));
  const Int sn = boost::multiprecision::sqrt(n), sd = boost::multiprecision::sqrt(d);
  if (sn * sn != n || sd * sd != d) return std::nullopt;
  return Rational(sn) / Rational(sd);
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
  if (!out) throw DomainError("cannot open output file " + out_path);
  out << text;
}

// --- hecke element expressions ---------------------------------------------
//
// expr   := term (('+'|'-') term)*
// term   := factor ('*' factor)*
// factor := integer | 'q' ['^' int] | 'v' ['^' int]
//         | 't' index | 'th' '[' int (',' int)* ']' | '(' expr ')'
struct HeckeExprParser {
  const RootDatum& datum;
  const std::string& s;
  size_t i = 0;

  HeckeExprParser(const RootDatum& d, const std::string& str) : datum(d), s(str) {}

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }

  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }

  long parse_int() {
    skip_ws();
    size_t start = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
      throw ParseError("expected integer at position " + std::to_string(start) + " in '" + s + "'");
    return std::stol(s.substr(start, i - start));
  }

  HeckeElement parse_factor() {
    skip_ws();
    if (i >= s.size()) throw ParseError("unexpected end of hecke expression '" + s + "'");
    if (eat('(')) {
      HeckeElement inner = parse_expr();
      if (!eat(')')) throw ParseError("missing ')' in '" + s + "'");
      return inner;
    }
    const char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return HeckeElement::identity(datum.rank()) * Scalar(parse_int());
    }
    if (c == 'q' || c == 'v') {
      ++i;
      long e = 1;
      if (eat('^')) e = parse_int();
      return HeckeElement::identity(datum.rank()) *
             (c == 'q' ? Scalar::q_power(e) : Scalar::v_power(e));
    }
    if (c == 't' && i + 1 < s.size() && s[i + 1] == 'h') {
      i += 2;
      if (!eat('[')) throw ParseError("expected '[' after 'th' in '" + s + "'");
      std::vector<int> coords;
      coords.push_back(static_cast<int>(parse_int()));
      while (eat(',')) coords.push_back(static_cast<int>(parse_int()));
      if (!eat(']')) throw ParseError("missing ']' in '" + s + "'");
      if (static_cast<int>(coords.size()) != datum.rank())
        throw ParseError("theta exponent needs " + std::to_string(datum.rank()) + " coordinates");
      return theta(Coweight(std::move(coords)));
    }
    if (c == 't') {
      ++i;
      long idx = parse_int();
      if (idx < 1 || idx > datum.rank())
        throw ParseError("simple index " + std::to_string(idx) + " out of range in '" + s + "'");
      return t_simple(datum, static_cast<int>(idx) - 1);
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "' in hecke expression '" + s + "'");
  }

  HeckeElement parse_term() {
    HeckeElement acc = parse_factor();
    while (eat('*')) acc = hecke_mul(datum, acc, parse_factor());
    return acc;
  }

  HeckeElement parse_expr() {
    skip_ws();
    int sign = 1;
    if (eat('-')) sign = -1;
    else eat('+');
    HeckeElement acc = parse_term();
    if (sign < 0) acc = -acc;
    while (true) {
      skip_ws();
      if (i >= s.size() || s[i] == ')') break;
      if (eat('+')) sign = 1;
      else if (eat('-')) sign = -1;
      else throw ParseError("expected '+' or '-' at position " + std::to_string(i) + " in '" + s + "'");
      HeckeElement t = parse_term();
      acc = sign > 0 ? acc + t : acc - t;
    }
    return acc;
  }

  HeckeElement parse() {
    HeckeElement out = parse_expr();
    skip_ws();
    if (i != s.size()) throw ParseError("trailing input in hecke expression '" + s + "'");
    return out;
  }
};

// --- command options ---------------------------------------------------------

struct CharacterOpts {
  std::string type;
  std::string lambda;
  std::string format = "pretty";
  std::string cache;
  std::string out;
};

struct HeckeOpts {
  std::string type;
  std::string lhs;
  std::string rhs;
  std::string format = "pretty";
  std::string out;
};

struct WhittakerOpts {
  std::string type;
  std::string gamma;
  std::string q = "formal";
  std::string v;
  int bound = 2;
  int max_bound = kHardBoundDefault;
  std::string format = "pretty";
  std::string out;
};

struct VerifyOpts {
  std::string type;
  int bound = 3;
  unsigned seed = 20240601;
  int random_instances = 200;
  std::string cache;
  std::string format = "pretty";
  std::string out;
};

void add_format_option(CLI::App* cmd, std::string& fmt) {
  cmd->add_option("--format", fmt, "output format: pretty, json or csv")
      ->check(CLI::IsMember({"pretty", "json", "csv"}));
}

int run_character(const CharacterOpts& o, bool weights_only) {
  const RootDatum datum(CartanType::parse(o.type));
  const Coweight lambda = parse_lambda(datum, o.lambda);
  std::optional<MultiplicityCache> cache;
  if (!o.cache.empty()) cache.emplace(o.cache);
  const WeightMultiset weights =
      cached_multiplicities(datum, lambda, cache ? &*cache : nullptr);
  const Int dim = weights.dimension(datum);

  std::ostringstream text;
  if (o.format == "json") {
    json doc{{"schema_version", kSchemaVersion},
             {"kind", weights_only ? "weights" : "character"},
             {"type", datum.type().to_string()},
             {"lambda", lambda.coords()},
             {"dimension", dim.str()},
             {"weights", multiset_to_json(weights)}};
    if (!weights_only)
      doc["character"] = lattice_to_json(datum.type(), orbit_expansion(datum, weights));
    text << doc.dump(2) << "\n";
  } else if (o.format == "csv") {
    text << "weight,mult\n";
    for (const auto& [nu, m] : weights.dominant_mults) {
      for (int k = 0; k < nu.rank(); ++k) text << (k ? " " : "") << nu[k];
      text << "," << m.str() << "\n";
    }
  } else {
    text << "type " << datum.type().to_string() << "  lambda " << lambda.to_string()
         << "  dimension " << dim.str() << "\n";
    if (!weights_only)
      text << "character = " << orbit_expansion(datum, weights).to_string() << "\n";
    text << "dominant weight multiplicities:\n";
    for (const auto& [nu, m] : weights.dominant_mults)
      text << "  " << nu.to_string() << " x " << m.str() << "\n";
  }
  write_output(text.str(), o.out);
  return 0;
}

int run_hecke_mul(const HeckeOpts& o) {
  const RootDatum datum(CartanType::parse(o.type));
  const HeckeElement lhs = HeckeExprParser(datum, o.lhs).parse();
  const HeckeElement rhs = HeckeExprParser(datum, o.rhs).parse();
  const HeckeElement product = hecke_mul(datum, lhs, rhs);
  std::ostringstream text;
  if (o.format == "json") {
    text << hecke_to_json(datum, product).dump(2) << "\n";
  } else if (o.format == "csv") {
    text << "w,mu,num,den\n";
    for (const auto& [k, c] : product.terms()) {
      const auto& word = datum.weyl(k.w_id).word;
      for (size_t j = 0; j < word.size(); ++j) text << (j ? " " : "") << word[j] + 1;
      text << ",";
      for (int j = 0; j < k.mu.rank(); ++j) text << (j ? " " : "") << k.mu[j];
      text << "," << c.num().to_string() << "," << c.den().to_string() << "\n";
    }
  } else {
    text << product.to_string(datum) << "\n";
  }
  write_output(text.str(), o.out);
  return 0;
}

int run_whittaker(const WhittakerOpts& o) {
  const RootDatum datum(CartanType::parse(o.type));
  if (o.bound < 0) throw ParseError("bound must be nonnegative");
  if (o.bound > o.max_bound)
    throw ParseError("bound " + std::to_string(o.bound) + " exceeds the limit " +
                     std::to_string(o.max_bound) + " (raise it with --max-bound)");
  const GammaSpec gamma = parse_gamma(datum, o.gamma);

  WhittakerTable table{datum.type(), {}, "", {}};
  if (gamma.exact) {
    std::optional<Rational> v0;
    if (!o.v.empty()) {
      v0 = parse_rational(o.v);
      if (*v0 == 0) throw DomainError("v must be nonzero");
    } else if (o.q != "formal") {
      const Rational qv = parse_rational(o.q);
      if (qv <= 0) throw DomainError("q must be positive");
      v0 = rational_sqrt(qv);
      if (!v0)
        throw DomainError("q = " + o.q +
                          " has no rational square root; pass --v explicitly");
    }
    table = whittaker_table(datum, o.bound, *gamma.exact, v0);
  } else {
    std::complex<double> v0;
    if (!o.v.empty()) {
      v0 = parse_complex(o.v);
    } else if (o.q != "formal") {
      v0 = std::sqrt(parse_complex(o.q));
    } else {
      throw ParseError("complex gamma requires a numeric --q or --v");
    }
    if (v0 == std::complex<double>(0.0, 0.0)) throw DomainError("v must be nonzero");
    table = whittaker_table(datum, o.bound, *gamma.complex_coords, v0);
  }

  std::ostringstream text;
  if (o.format == "json") {
    text << table_to_json(table).dump(2) << "\n";
  } else if (o.format == "csv") {
    text << table_to_csv(table);
  } else {
    text << "type " << table.type.to_string() << "  q " << table.q << "  gamma";
    for (const auto& g : table.gamma) text << " " << g;
    text << "\n";
    for (const auto& row : table.rows)
      text << "  W(t_" << row.lambda_plus_rho.to_string() << ") = " << row.value << "\n";
  }
  write_output(text.str(), o.out);
  return 0;
}

int run_verify(const VerifyOpts& o) {
  const RootDatum datum(CartanType::parse(o.type));
  VerifyOptions opts;
  opts.bound = o.bound;
  opts.seed = o.seed;
  opts.random_instances = o.random_instances;
  if (!o.cache.empty()) opts.cache_dir = o.cache;
  const VerificationReport report = run_verification(datum, opts);
  std::ostringstream text;
  if (o.format == "json")
    text << report.to_json().dump(2) << "\n";
  else
    text << report.to_text();
  write_output(text.str(), o.out);
  return report.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cswhit: exact lattice-algebra computations for unramified Whittaker functions"};
  app.require_subcommand(1);

  int exit_code = 0;
  CharacterOpts copts, wopts_weights, exp_copts, exp_wopts;
  HeckeOpts hopts, exp_hopts;
  WhittakerOpts vopts, exp_vopts;
  VerifyOpts veropts;

  auto add_character = [&](CLI::App* parent, CharacterOpts& o, bool out_required) {
    parent->add_option("type", o.type, "Cartan type, e.g. A2")->required();
    parent->add_option("--lambda", o.lambda, "dominant coweight, comma separated")->required();
    add_format_option(parent, o.format);
    parent->add_option("--cache", o.cache, "weight-multiset cache directory");
    auto* out = parent->add_option("--out", o.out, "write output to this file");
    if (out_required) out->required();
  };
  auto add_hecke = [&](CLI::App* parent, HeckeOpts& o, bool out_required) {
    parent->add_option("type", o.type, "Cartan type, e.g. A2")->required();
    parent->add_option("--lhs", o.lhs, "left factor, e.g. 't1*th[1,0]'")->required();
    parent->add_option("--rhs", o.rhs, "right factor")->required();
    add_format_option(parent, o.format);
    auto* out = parent->add_option("--out", o.out, "write output to this file");
    if (out_required) out->required();
  };
  auto add_whittaker = [&](CLI::App* parent, WhittakerOpts& o, bool out_required) {
    parent->add_option("type", o.type, "Cartan type, e.g. A2")->required();
    parent->add_option("--gamma", o.gamma, "Satake parameter coordinates, comma separated")
        ->required();
    parent->add_option("--q", o.q, "'formal' or a numeric value of q");
    parent->add_option("--v", o.v, "explicit value of v with q = v^2");
    parent->add_option("--bound", o.bound, "coordinate-sum bound on lambda");
    parent->add_option("--max-bound", o.max_bound, "raise the hard bound limit");
    add_format_option(parent, o.format);
    auto* out = parent->add_option("--out", o.out, "write output to this file");
    if (out_required) out->required();
  };

  auto* character_cmd = app.add_subcommand("character", "irreducible dual-group character a_lambda");
  add_character(character_cmd, copts, false);
  character_cmd->callback([&] { exit_code = run_character(copts, false); });

  auto* weights_cmd = app.add_subcommand("weights", "weight multiset of V_lambda");
  add_character(weights_cmd, wopts_weights, false);
  weights_cmd->callback([&] { exit_code = run_character(wopts_weights, true); });

  auto* hecke_cmd = app.add_subcommand("hecke", "Iwahori-Hecke algebra computations");
  hecke_cmd->require_subcommand(1);
  auto* hecke_mul_cmd = hecke_cmd->add_subcommand("mul", "multiply two elements in normal form");
  add_hecke(hecke_mul_cmd, hopts, false);
  hecke_mul_cmd->callback([&] { exit_code = run_hecke_mul(hopts); });

  auto* whittaker_cmd = app.add_subcommand("whittaker", "table of spherical Whittaker values");
  add_whittaker(whittaker_cmd, vopts, false);
  whittaker_cmd->callback([&] { exit_code = run_whittaker(vopts); });

  auto* verify_cmd = app.add_subcommand("verify", "run the identity verification suites");
  verify_cmd->add_option("type", veropts.type, "Cartan type, e.g. A2")->required();
  verify_cmd->add_option("--bound", veropts.bound, "coordinate-sum bound for the suites");
  verify_cmd->add_option("--seed", veropts.seed, "seed for randomized suites");
  verify_cmd->add_option("--random", veropts.random_instances,
                         "random instances per simple reflection");
  verify_cmd->add_option("--cache", veropts.cache, "check this cache directory for integrity");
  verify_cmd->add_option("--format", veropts.format, "output format: pretty or json")
      ->check(CLI::IsMember({"pretty", "json"}));
  verify_cmd->add_option("--out", veropts.out, "write the report to this file");
  verify_cmd->callback([&] { exit_code = run_verify(veropts); });

  auto* export_cmd = app.add_subcommand("export", "compute and write results to a file");
  export_cmd->require_subcommand(1);
  auto* exp_character = export_cmd->add_subcommand("character", "export a character");
  add_character(exp_character, exp_copts, true);
  exp_character->callback([&] { exit_code = run_character(exp_copts, false); });
  auto* exp_weights = export_cmd->add_subcommand("weights", "export a weight multiset");
  add_character(exp_weights, exp_wopts, true);
  exp_weights->callback([&] { exit_code = run_character(exp_wopts, true); });
  auto* exp_hecke = export_cmd->add_subcommand("hecke-product", "export a Hecke product");
  add_hecke(exp_hecke, exp_hopts, true);
  exp_hecke->callback([&] { exit_code = run_hecke_mul(exp_hopts); });
  auto* exp_whittaker = export_cmd->add_subcommand("whittaker", "export a Whittaker table");
  add_whittaker(exp_whittaker, exp_vopts, true);
  exp_whittaker->callback([&] { exit_code = run_whittaker(exp_vopts); });

  // export subcommands default to machine-readable output
  exp_copts.format = exp_wopts.format = exp_hopts.format = exp_vopts.format = "json";

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return exit_code;
}
