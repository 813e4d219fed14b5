#include "cswhit/verification.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <sstream>

#include "cswhit/cache.hpp"
#include "cswhit/characters.hpp"
#include "cswhit/hecke.hpp"
#include "cswhit/lattice.hpp"
#include "cswhit/serialization.hpp"
#include "cswhit/whittaker.hpp"

namespace cswhit {

bool VerificationReport::all_passed() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.passed; });
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& s : suites)
    rows.push_back(nlohmann::json{{"name", s.name},
                                  {"description", s.description},
                                  {"instances", s.instances},
                                  {"passed", s.passed},
                                  {"counterexample", s.counterexample},
                                  {"millis", s.millis}});
  return nlohmann::json{{"schema_version", kSchemaVersion},
                        {"kind", "verification_report"},
                        {"type", type},
                        {"bound", bound},
                        {"suites", std::move(rows)},
                        {"all_passed", all_passed()}};
}

std::string VerificationReport::to_text() const {
  std::ostringstream out;
  for (const auto& s : suites) {
    out << (s.passed ? "PASS" : "FAIL") << "  " << s.name << "  (" << s.instances
        << " instances, " << s.millis << " ms)";
    if (!s.passed) out << "\n      counterexample: " << s.counterexample;
    out << "\n";
  }
  out << (all_passed() ? "all suites passed" : "verification FAILED") << "\n";
  return out.str();
}

Scalar random_scalar(std::mt19937& rng) {
  std::uniform_int_distribution<int> coin(0, 3);
  std::uniform_int_distribution<int> small(-5, 5);
  int c0 = small(rng);
  if (c0 == 0) c0 = 1;
  switch (coin(rng)) {
    case 0: return Scalar(static_cast<long>(c0));
    case 1: return Scalar(static_cast<long>(c0)) * Scalar::q();
    case 2: return Scalar(static_cast<long>(c0)) + Scalar::v_power(1);
    default: return Scalar(static_cast<long>(c0)) * Scalar::v_power(-1);
  }
}

LatticeElement random_lattice_element(std::mt19937& rng, int rank, int coord_bound, int max_terms) {
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<int> coord(-coord_bound, coord_bound);
  LatticeElement f;
  const int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    std::vector<int> c(static_cast<size_t>(rank));
    for (auto& x : c) x = coord(rng);
    f.add_term(Coweight(std::move(c)), random_scalar(rng));
  }
  return f;
}

namespace {

using Clock = std::chrono::steady_clock;

struct SuiteRunner {
  VerificationReport& report;
  unsigned seed;

  void run(const std::string& name, const std::string& description,
           const std::function<void(SuiteResult&, std::mt19937&)>& body) {
    SuiteResult result;
    result.name = name;
    result.description = description;
    std::mt19937 rng(seed + std::hash<std::string>{}(name) % 100000);
    const auto start = Clock::now();
    try {
      body(result, rng);
    } catch (const std::exception& e) {
      result.passed = false;
      if (result.counterexample.empty()) result.counterexample = e.what();
    }
    result.millis =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
    report.suites.push_back(std::move(result));
  }
};

void fail(SuiteResult& r, const std::string& counterexample) {
  r.passed = false;
  if (r.counterexample.empty()) r.counterexample = counterexample;
}

std::vector<Coweight> box_coweights(int rank, int coord_bound) {
  std::vector<Coweight> out;
  std::vector<int> c(static_cast<size_t>(rank), -coord_bound);
  while (true) {
    out.push_back(Coweight(c));
    int pos = rank - 1;
    while (pos >= 0) {
      if (++c[static_cast<size_t>(pos)] <= coord_bound) break;
      c[static_cast<size_t>(pos)] = -coord_bound;
      --pos;
    }
    if (pos < 0) break;
  }
  return out;
}

std::vector<Coweight> strict_box(int rank, int coord_bound) {
  std::vector<Coweight> out;
  std::vector<int> c(static_cast<size_t>(rank), 1);
  if (coord_bound < 1) return out;
  while (true) {
    out.push_back(Coweight(c));
    int pos = rank - 1;
    while (pos >= 0) {
      if (++c[static_cast<size_t>(pos)] <= coord_bound) break;
      c[static_cast<size_t>(pos)] = 1;
      --pos;
    }
    if (pos < 0) break;
  }
  return out;
}

// A deterministic "generic" rational Satake parameter: distinct primes over
// distinct offsets keep the coordinates multiplicatively independent.
SatakeParameter generic_gamma(int rank) {
  static const int primes[] = {2, 3, 5, 7, 11, 13, 17, 19};
  std::vector<Rational> xs;
  for (int i = 0; i < rank; ++i)
    xs.push_back(Rational(primes[i % 8]) / Rational(i + 1));
  return SatakeParameter::from_rationals(xs);
}

ComplexSatakeParameter generic_complex_gamma(int rank) {
  std::vector<std::complex<double>> xs;
  for (int i = 0; i < rank; ++i)
    xs.emplace_back(0.7 + 0.31 * i, 0.4 - 0.17 * i);
  return ComplexSatakeParameter(std::move(xs));
}

LatticeElement random_invariant(const RootDatum& datum, std::mt19937& rng, int coord_bound) {
  std::uniform_int_distribution<int> coord(0, coord_bound);
  std::uniform_int_distribution<int> nterms(1, 2);
  LatticeElement h;
  const int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    std::vector<int> c(static_cast<size_t>(datum.rank()));
    for (auto& x : c) x = coord(rng);
    const Scalar s = random_scalar(rng);
    for (const auto& x : datum.orbit_set(Coweight(c))) h.add_term(x, s);
  }
  return h;
}

HeckeElement random_hecke_monomial(const RootDatum& datum, std::mt19937& rng, int coord_bound) {
  std::uniform_int_distribution<int> wpick(0, datum.weyl_order() - 1);
  std::uniform_int_distribution<int> coord(-coord_bound, coord_bound);
  std::vector<int> c(static_cast<size_t>(datum.rank()));
  for (auto& x : c) x = coord(rng);
  return HeckeElement::monomial(wpick(rng), Coweight(std::move(c)), random_scalar(rng));
}

}  // namespace

VerificationReport run_verification(const RootDatum& datum, const VerifyOptions& opts) {
  VerificationReport report;
  report.type = datum.type().to_string();
  report.bound = opts.bound;
  SuiteRunner runner{report, opts.seed};
  const int rank = datum.rank();
  const Coweight rho = Coweight::rho(rank);
  const Scalar q = Scalar::q();
  const Scalar one = Scalar::one();

  const std::vector<Coweight> lambdas = dominant_coweights_up_to(rank, opts.bound);

  // --- root datum structure -------------------------------------------
  runner.run("weyl-structure",
             "reduced words, matrices, lengths and inversion counts agree; signs sum to zero",
             [&](SuiteResult& r, std::mt19937&) {
               long long sign_sum = 0;
               for (const auto& w : datum.weyl_group()) {
                 ++r.instances;
                 sign_sum += w.sign();
                 if (static_cast<int>(w.word.size()) != w.length)
                   return fail(r, "word length mismatch at id " + std::to_string(w.id));
                 if (datum.inversion_count(w) != w.length)
                   return fail(r, "inversion count mismatch at id " + std::to_string(w.id));
                 // Apply the reduced word letterwise and compare with the matrix.
                 for (const auto& mu : box_coweights(rank, 1)) {
                   Coweight image = mu;
                   for (auto it = w.word.rbegin(); it != w.word.rend(); ++it)
                     image = datum.reflect_simple(*it, image);
                   if (!(image == datum.act(w, mu)))
                     return fail(r, "matrix/word mismatch at id " + std::to_string(w.id) +
                                        " on " + mu.to_string());
                 }
               }
               if (datum.weyl_order() > 1 && sign_sum != 0)
                 return fail(r, "sum of signs is " + std::to_string(sign_sum));
             });

  runner.run("two-rho-linearity",
             "<2 rho_G, .> is linear and matches the sum over positive roots",
             [&](SuiteResult& r, std::mt19937& rng) {
               std::uniform_int_distribution<int> coord(-4, 4);
               for (int t = 0; t < 50; ++t) {
                 ++r.instances;
                 std::vector<int> a(static_cast<size_t>(rank)), b(static_cast<size_t>(rank));
                 for (auto& x : a) x = coord(rng);
                 for (auto& x : b) x = coord(rng);
                 Coweight mu{a}, nu{b};
                 if (datum.pairing_two_rho(mu + nu) !=
                     datum.pairing_two_rho(mu) + datum.pairing_two_rho(nu))
                   return fail(r, "additivity fails at " + mu.to_string() + ", " + nu.to_string());
                 long long direct = 0;
                 for (const auto& root : datum.positive_roots())
                   for (int j = 0; j < rank; ++j)
                     direct += static_cast<long long>(root[static_cast<size_t>(j)]) * mu[j];
                 if (direct != datum.pairing_two_rho(mu))
                   return fail(r, "linear form mismatch at " + mu.to_string());
               }
             });

  // --- lattice ring ------------------------------------------------------
  runner.run("ring-axioms", "associativity and distributivity of the lattice algebra, exactly",
             [&](SuiteResult& r, std::mt19937& rng) {
               for (int t = 0; t < 40; ++t) {
                 ++r.instances;
                 LatticeElement f = random_lattice_element(rng, rank, 3, 4);
                 LatticeElement g = random_lattice_element(rng, rank, 3, 4);
                 LatticeElement h = random_lattice_element(rng, rank, 3, 4);
                 if (!((f * g) * h == f * (g * h)))
                   return fail(r, "associativity: f=" + f.to_string() + " g=" + g.to_string() +
                                      " h=" + h.to_string());
                 if (!(f * (g + h) == f * g + f * h))
                   return fail(r, "distributivity: f=" + f.to_string() + " g=" + g.to_string() +
                                      " h=" + h.to_string());
                 if (!(f * LatticeElement::unit(rank) == f))
                   return fail(r, "unit: f=" + f.to_string());
               }
             });

  runner.run("exact-division", "exact_divide(g*h, g) recovers h; non-divisible inputs are rejected",
             [&](SuiteResult& r, std::mt19937& rng) {
               for (int t = 0; t < 40; ++t) {
                 ++r.instances;
                 LatticeElement g = random_lattice_element(rng, rank, 3, 4);
                 LatticeElement h = random_lattice_element(rng, rank, 3, 4);
                 if (g.is_zero() || h.is_zero()) continue;
                 LatticeElement quotient = exact_divide(g * h, g);
                 if (!(quotient == h))
                   return fail(r, "round trip: g=" + g.to_string() + " h=" + h.to_string());
               }
             });

  runner.run("truncated-geometric",
             "(1 - e^{-alpha_i^vee}) * tg(mu, i) = e^{s_i mu} - e^mu over the coordinate box",
             [&](SuiteResult& r, std::mt19937&) {
               for (const auto& mu : box_coweights(rank, 4))
                 for (int i = 0; i < rank; ++i) {
                   ++r.instances;
                   const LatticeElement tg = truncated_geometric(datum, mu, i);
                   const LatticeElement factor = LatticeElement::unit(rank) -
                       LatticeElement::monomial(-datum.simple_coroot(i));
                   const LatticeElement want =
                       LatticeElement::monomial(datum.reflect_simple(i, mu)) -
                       LatticeElement::monomial(mu);
                   if (!(factor * tg == want))
                     return fail(r, "mu=" + mu.to_string() + " i=" + std::to_string(i + 1));
                 }
             });

  runner.run("alt-equivariance",
             "alt(w f) = (-1)^{l(w)} alt(f) and alt(h f) = h alt(f) for invariant h",
             [&](SuiteResult& r, std::mt19937& rng) {
               for (int t = 0; t < 10; ++t) {
                 LatticeElement f = random_lattice_element(rng, rank, 3, 4);
                 LatticeElement altf = alt(datum, f);
                 if (!is_skew_invariant(datum, altf))
                   return fail(r, "alt image not skew: f=" + f.to_string());
                 for (const auto& w : datum.weyl_group()) {
                   ++r.instances;
                   LatticeElement lhs = alt(datum, weyl_act(datum, w, f));
                   LatticeElement rhs = w.sign() > 0 ? altf : -altf;
                   if (!(lhs == rhs))
                     return fail(r, "w id " + std::to_string(w.id) + " f=" + f.to_string());
                 }
                 LatticeElement h = random_invariant(datum, rng, 2);
                 ++r.instances;
                 if (!(alt(datum, h * f) == h * altf))
                   return fail(r, "module map: h=" + h.to_string() + " f=" + f.to_string());
               }
             });

  // --- characters ---------------------------------------------------------
  runner.run("character-oracle",
             "bialternant quotient equals the Freudenthal orbit expansion; dimensions agree",
             [&](SuiteResult& r, std::mt19937&) {
               for (const auto& lambda : lambdas) {
                 ++r.instances;
                 const WeightMultiset weights = freudenthal_multiplicities(datum, lambda);
                 const LatticeElement from_mults = orbit_expansion(datum, weights);
                 const LatticeElement from_quotient = weyl_character(datum, lambda);
                 if (!(from_mults == from_quotient))
                   return fail(r, "lambda=" + lambda.to_string());
                 if (!is_invariant(datum, from_quotient))
                   return fail(r, "character not invariant: lambda=" + lambda.to_string());
                 if (weights.dimension(datum) != weyl_dimension(datum, lambda))
                   return fail(r, "dimension mismatch: lambda=" + lambda.to_string());
                 auto top = weights.dominant_mults.find(lambda);
                 if (top == weights.dominant_mults.end() || top->second != 1)
                   return fail(r, "highest weight multiplicity != 1: lambda=" + lambda.to_string());
               }
             });

  runner.run("weyl-character-formula",
             "alt(e^{lambda+rho}) = alt(e^rho) * a_lambda",
             [&](SuiteResult& r, std::mt19937&) {
               const LatticeElement weyl_denominator = alt(datum, LatticeElement::monomial(rho));
               for (const auto& lambda : lambdas) {
                 ++r.instances;
                 const LatticeElement lhs = alt(datum, LatticeElement::monomial(lambda + rho));
                 const LatticeElement rhs = weyl_denominator * weyl_character(datum, lambda);
                 if (!(lhs == rhs)) return fail(r, "lambda=" + lambda.to_string());
               }
             });

  runner.run("tensor-decomposition",
             "products of characters decompose with nonnegative integer coefficients",
             [&](SuiteResult& r, std::mt19937&) {
               const auto small = dominant_coweights_up_to(rank, std::min(opts.bound, 3));
               for (const auto& a : small)
                 for (const auto& b : small) {
                   if (b < a) continue;
                   ++r.instances;
                   const LatticeElement product =
                       weyl_character(datum, a) * weyl_character(datum, b);
                   Int total(0);
                   for (const auto& [nu, c] : decompose_invariant(datum, product)) {
                     if (!c.is_nonnegative_integer())
                       return fail(r, "coefficient " + c.to_string() + " at " + nu.to_string() +
                                          " in " + a.to_string() + " x " + b.to_string());
                     total += Int(boost::multiprecision::numerator(c.to_rational())) *
                              weyl_dimension(datum, nu);
                   }
                   if (total != weyl_dimension(datum, a) * weyl_dimension(datum, b))
                     return fail(r, "dimension count in " + a.to_string() + " x " + b.to_string());
                 }
             });

  runner.run("evaluation-homomorphism",
             "evaluation at a Satake parameter is multiplicative and counts dimensions at 1",
             [&](SuiteResult& r, std::mt19937& rng) {
               const SatakeParameter gamma = generic_gamma(rank);
               for (int t = 0; t < 25; ++t) {
                 ++r.instances;
                 LatticeElement f = random_lattice_element(rng, rank, 2, 3);
                 LatticeElement g = random_lattice_element(rng, rank, 2, 3);
                 if (!(evaluate_at(f * g, gamma) == evaluate_at(f, gamma) * evaluate_at(g, gamma)))
                   return fail(r, "f=" + f.to_string() + " g=" + g.to_string());
               }
               const SatakeParameter ones = SatakeParameter::from_rationals(
                   std::vector<Rational>(static_cast<size_t>(rank), Rational(1)));
               for (const auto& lambda : dominant_coweights_up_to(rank, std::min(opts.bound, 2))) {
                 ++r.instances;
                 if (!(evaluate_at(weyl_character(datum, lambda), ones) ==
                       Scalar(weyl_dimension(datum, lambda))))
                   return fail(r, "dimension at gamma=1: lambda=" + lambda.to_string());
               }
             });

  // --- Hecke algebra -------------------------------------------------------
  runner.run("hecke-quadratic", "t_s^2 = (q-1) t_s + q for every simple reflection",
             [&](SuiteResult& r, std::mt19937&) {
               for (int i = 0; i < rank; ++i) {
                 ++r.instances;
                 const HeckeElement ts = t_simple(datum, i);
                 const HeckeElement lhs = hecke_mul(datum, ts, ts);
                 const HeckeElement rhs =
                     ts * (q - one) + HeckeElement::identity(rank) * q;
                 if (!(lhs == rhs)) return fail(r, "i=" + std::to_string(i + 1));
               }
             });

  runner.run("hecke-braid", "braid relations for every rank-2 pair of simple reflections",
             [&](SuiteResult& r, std::mt19937&) {
               for (int i = 0; i < rank; ++i)
                 for (int j = i + 1; j < rank; ++j) {
                   ++r.instances;
                   const int prod = datum.cartan(i, j) * datum.cartan(j, i);
                   const int m = prod == 0 ? 2 : prod == 1 ? 3 : prod == 2 ? 4 : 6;
                   HeckeElement lhs = HeckeElement::identity(rank);
                   HeckeElement rhs = HeckeElement::identity(rank);
                   for (int k = 0; k < m; ++k) {
                     lhs = hecke_mul(datum, lhs, t_simple(datum, k % 2 == 0 ? i : j));
                     rhs = hecke_mul(datum, rhs, t_simple(datum, k % 2 == 0 ? j : i));
                   }
                   if (!(lhs == rhs))
                     return fail(r, "pair (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                        ") order " + std::to_string(m));
                 }
             });

  runner.run("hecke-bernstein",
             "t_s theta_mu = theta_{s mu} t_s + (1-q) (theta_{s mu} - theta_mu)/(1 - theta_{-alpha^vee})",
             [&](SuiteResult& r, std::mt19937&) {
               for (const auto& mu : box_coweights(rank, 3))
                 for (int i = 0; i < rank; ++i) {
                   ++r.instances;
                   const HeckeElement lhs = hecke_mul(datum, t_simple(datum, i), theta(mu));
                   HeckeElement geometric;
                   const LatticeElement tg = truncated_geometric(datum, mu, i);
                   for (const auto& [kappa, c] : tg.terms()) geometric.add_term(0, kappa, c);
                   const HeckeElement rhs =
                       hecke_mul(datum, theta(datum.reflect_simple(i, mu)), t_simple(datum, i)) +
                       geometric * (one - q);
                   if (!(lhs == rhs))
                     return fail(r, "mu=" + mu.to_string() + " i=" + std::to_string(i + 1));
                 }
             });

  runner.run("hecke-commutation",
             "t_s commutes with theta_{k alpha^vee} + theta_{-k alpha^vee} and with theta_mu when s mu = mu",
             [&](SuiteResult& r, std::mt19937&) {
               for (int i = 0; i < rank; ++i) {
                 const HeckeElement ts = t_simple(datum, i);
                 for (int k = 0; k <= 3; ++k) {
                   ++r.instances;
                   const Coweight a = datum.simple_coroot(i) * k;
                   const HeckeElement sym = theta(a) + theta(-a);
                   if (!(hecke_mul(datum, ts, sym) == hecke_mul(datum, sym, ts)))
                     return fail(r, "k=" + std::to_string(k) + " i=" + std::to_string(i + 1));
                 }
                 for (const auto& mu : box_coweights(rank, 2)) {
                   if (!(datum.reflect_simple(i, mu) == mu)) continue;
                   ++r.instances;
                   if (!(hecke_mul(datum, ts, theta(mu)) == hecke_mul(datum, theta(mu), ts)))
                     return fail(r, "fixed mu=" + mu.to_string() + " i=" + std::to_string(i + 1));
                 }
               }
             });

  runner.run("hecke-center", "z_lambda commutes with every t_s; z_0 is the identity",
             [&](SuiteResult& r, std::mt19937&) {
               if (!(central_element(datum, Coweight::zero(rank)) == HeckeElement::identity(rank)))
                 return fail(r, "z_0 is not the identity");
               for (const auto& lambda : dominant_coweights_up_to(rank, std::min(opts.bound, 2))) {
                 const HeckeElement z = central_element(datum, lambda);
                 for (int i = 0; i < rank; ++i) {
                   ++r.instances;
                   if (!(hecke_mul(datum, z, t_simple(datum, i)) ==
                         hecke_mul(datum, t_simple(datum, i), z)))
                     return fail(r, "lambda=" + lambda.to_string() + " i=" + std::to_string(i + 1));
                 }
               }
             });

  runner.run("hecke-associativity", "hecke_mul is associative on random monomial triples",
             [&](SuiteResult& r, std::mt19937& rng) {
               for (int t = 0; t < 20; ++t) {
                 ++r.instances;
                 const HeckeElement x = random_hecke_monomial(datum, rng, 2);
                 const HeckeElement y = random_hecke_monomial(datum, rng, 2);
                 const HeckeElement z = random_hecke_monomial(datum, rng, 2);
                 if (!(hecke_mul(datum, hecke_mul(datum, x, y), z) ==
                       hecke_mul(datum, x, hecke_mul(datum, y, z))))
                   return fail(r, "x=" + x.to_string(datum) + " y=" + y.to_string(datum) +
                                      " z=" + z.to_string(datum));
               }
             });

  runner.run("hecke-module",
             "the polynomial action is multiplicative: (xy) f = x (y f)",
             [&](SuiteResult& r, std::mt19937& rng) {
               for (int t = 0; t < 20; ++t) {
                 ++r.instances;
                 const HeckeElement x = random_hecke_monomial(datum, rng, 2);
                 const HeckeElement y = random_hecke_monomial(datum, rng, 2);
                 const LatticeElement f = random_lattice_element(rng, rank, 2, 3);
                 const LatticeElement lhs = polynomial_action(datum, hecke_mul(datum, x, y), f);
                 const LatticeElement rhs = polynomial_action(datum, x, polynomial_action(datum, y, f));
                 if (!(lhs == rhs))
                   return fail(r, "x=" + x.to_string(datum) + " y=" + y.to_string(datum) +
                                      " f=" + f.to_string());
               }
             });

  // --- Whittaker model ------------------------------------------------------
  runner.run("kernel-vanishing",
             "alt((1 + T_s) f) = 0 and alt(T_s f) = -alt(f) for every simple s",
             [&](SuiteResult& r, std::mt19937& rng) {
               for (int i = 0; i < rank; ++i) {
                 const HeckeElement unit_plus_ts = iota(datum, i);
                 for (int t = 0; t < opts.random_instances; ++t) {
                   ++r.instances;
                   const LatticeElement f = random_lattice_element(rng, rank, 3, 4);
                   const LatticeElement acted = polynomial_action(datum, unit_plus_ts, f);
                   if (!alt(datum, acted).is_zero())
                     return fail(r, "i=" + std::to_string(i + 1) + " f=" + f.to_string());
                   if (!(alt(datum, demazure_lusztig(datum, i, f)) == -alt(datum, f)))
                     return fail(r, "sign rule: i=" + std::to_string(i + 1) + " f=" + f.to_string());
                 }
               }
             });

  runner.run("module-map",
             "alt(f a_lambda) = alt(f) a_lambda, compatibility with the spherical action",
             [&](SuiteResult& r, std::mt19937& rng) {
               const auto small = dominant_coweights_up_to(rank, std::min(opts.bound, 2));
               std::uniform_int_distribution<size_t> pick(0, small.size() - 1);
               for (int t = 0; t < 100; ++t) {
                 ++r.instances;
                 const LatticeElement f = random_lattice_element(rng, rank, 3, 4);
                 const Coweight lambda = small[pick(rng)];
                 const LatticeElement a = weyl_character(datum, lambda);
                 if (!(alt(datum, f * a) == alt(datum, f) * a))
                   return fail(r, "lambda=" + lambda.to_string() + " f=" + f.to_string());
               }
             });

  runner.run("rho-shift", "alt(e^rho a_lambda) = alt(e^{lambda+rho}) = phi(lambda+rho)",
             [&](SuiteResult& r, std::mt19937&) {
               for (const auto& lambda : lambdas) {
                 ++r.instances;
                 if (!rho_shift_holds(datum, lambda)) return fail(r, "lambda=" + lambda.to_string());
                 const auto lhs =
                     alt(datum, LatticeElement::monomial(rho) * weyl_character(datum, lambda));
                 if (!(lhs == phi(datum, lambda + rho).value))
                   return fail(r, "phi mismatch: lambda=" + lambda.to_string());
               }
             });

  runner.run("skew-basis",
             "alt(e^mu), mu strictly dominant, form an independent spanning set; the action is torsion free",
             [&](SuiteResult& r, std::mt19937& rng) {
               const auto basis = strict_box(rank, std::min(opts.bound + 1, 4));
               // independence: recover random coordinates exactly
               std::uniform_int_distribution<int> coeff(1, 7);
               LatticeElement combo;
               std::map<Coweight, Scalar> expected;
               for (const auto& mu : basis) {
                 const Scalar c(static_cast<long>(coeff(rng)));
                 expected.emplace(mu, c);
                 combo = combo + alt(datum, LatticeElement::monomial(mu)) * c;
               }
               ++r.instances;
               if (!(skew_expand(datum, combo) == expected))
                 return fail(r, "independent-combination expansion mismatch");
               // span: every alt(e^nu) over the box expands with remainder zero
               for (const auto& nu : box_coweights(rank, std::min(opts.bound + 1, 4))) {
                 ++r.instances;
                 const LatticeElement a = alt(datum, LatticeElement::monomial(nu));
                 const auto expansion = skew_expand(datum, a);
                 LatticeElement rebuilt;
                 for (const auto& [mu, c] : expansion)
                   rebuilt = rebuilt + alt(datum, LatticeElement::monomial(mu)) * c;
                 if (!(rebuilt == a)) return fail(r, "span failure at nu=" + nu.to_string());
               }
               // torsion-freeness: multiplication by a_lambda has full column rank
               for (const auto& lambda : dominant_coweights_up_to(rank, 1)) {
                 if (lambda.is_zero()) continue;
                 ++r.instances;
                 const LatticeElement a = weyl_character(datum, lambda);
                 std::map<Coweight, size_t> row_index;
                 std::vector<std::vector<Rational>> columns;
                 for (const auto& mu : basis) {
                   const auto image = skew_expand(datum, alt(datum, LatticeElement::monomial(mu)) * a);
                   std::vector<std::pair<size_t, Rational>> entries;
                   for (const auto& [nu, c] : image) {
                     auto [it, inserted] = row_index.emplace(nu, row_index.size());
                     entries.emplace_back(it->second, c.to_rational());
                   }
                   std::vector<Rational> col(row_index.size(), Rational(0));
                   for (auto& [idx, val] : entries) col[idx] = val;
                   columns.push_back(std::move(col));
                 }
                 const size_t rows = row_index.size();
                 for (auto& col : columns) col.resize(rows, Rational(0));
                 // column-wise exact elimination
                 size_t rank_count = 0;
                 std::vector<size_t> pivot_of_row;
                 for (size_t c = 0; c < columns.size(); ++c) {
                   auto& col = columns[c];
                   for (size_t k = 0; k < rank_count; ++k) {
                     const size_t prow = pivot_of_row[k];
                     if (col[prow] == 0) continue;
                     const Rational f = col[prow] / columns[k][prow];
                     for (size_t rix = 0; rix < rows; ++rix) col[rix] -= f * columns[k][rix];
                   }
                   size_t nonzero = rows;
                   for (size_t rix = 0; rix < rows; ++rix)
                     if (col[rix] != 0) {
                       nonzero = rix;
                       break;
                     }
                   if (nonzero == rows)
                     return fail(r, "kernel vector for a_" + lambda.to_string());
                   std::swap(columns[rank_count], columns[c]);
                   pivot_of_row.push_back(nonzero);
                   ++rank_count;
                 }
               }
             });

  runner.run("whittaker-cross-check",
             "Whittaker values via the bialternant path equal the weight-multiset path",
             [&](SuiteResult& r, std::mt19937&) {
               const SatakeParameter gamma = generic_gamma(rank);
               const ComplexSatakeParameter cgamma = generic_complex_gamma(rank);
               const std::complex<double> v0(1.7320508075688772, 0.0);
               for (const auto& lambda : lambdas) {
                 ++r.instances;
                 const WeightMultiset weights = freudenthal_multiplicities(datum, lambda);
                 const Scalar d = delta_half(datum, lambda + rho);
                 const Scalar via_character = whittaker_value(datum, lambda, gamma);
                 const Scalar via_multiset = d * trace_at(datum, weights, gamma);
                 if (!(via_character == via_multiset))
                   return fail(r, "exact: lambda=" + lambda.to_string());
                 const std::complex<double> cchar = whittaker_value(datum, lambda, cgamma, v0);
                 const std::complex<double> cmult = d.specialize(v0) * trace_at(datum, weights, cgamma);
                 const double scale = std::max(1.0, std::abs(cmult));
                 if (std::abs(cchar - cmult) > 1e-9 * scale)
                   return fail(r, "complex: lambda=" + lambda.to_string());
               }
             });

  if (datum.type().family == Family::A && rank == 1) {
    runner.run("rank-one-closed-form",
               "Whittaker values match v^{-(n+1)} (x^{n+1}-x^{-(n+1)})/(x-x^{-1}) and its x=1 limit",
               [&](SuiteResult& r, std::mt19937&) {
                 const std::vector<Rational> xs = {Rational(2), Rational(1) / 2, Rational(2) / 3,
                                                   Rational(-3) / 2, Rational(5)};
                 const std::vector<long> vs = {2, 3, 5};
                 for (long v0 : vs) {
                   const Rational vr(v0);
                   for (const auto& x : xs)
                     for (int n = 0; n <= 10; ++n) {
                       ++r.instances;
                       const Coweight lambda{{n}};
                       const SatakeParameter gamma = SatakeParameter::from_rationals({x});
                       const Rational got = whittaker_value(datum, lambda, gamma).specialize(vr);
                       Rational xp(1);
                       for (int k = 0; k <= n; ++k) xp *= x;  // x^{n+1}
                       const Rational numer = xp - 1 / xp;
                       const Rational denom = x - 1 / x;
                       Rational vp(1);
                       for (int k = 0; k <= n; ++k) vp *= vr;
                       const Rational want = numer / denom / vp;
                       if (got != want)
                         return fail(r, "n=" + std::to_string(n) + " x=" + to_string(x) +
                                            " v=" + std::to_string(v0));
                     }
                   for (int n = 0; n <= 10; ++n) {
                     ++r.instances;
                     const Coweight lambda{{n}};
                     const WeightMultiset weights = freudenthal_multiplicities(datum, lambda);
                     const SatakeParameter ones = SatakeParameter::from_rationals({Rational(1)});
                     const Rational got =
                         (delta_half(datum, lambda + rho) * trace_at(datum, weights, ones))
                             .specialize(Rational(v0));
                     Rational vp(1);
                     for (int k = 0; k <= n; ++k) vp *= Rational(v0);
                     if (got != Rational(n + 1) / vp)
                       return fail(r, "singular x=1, n=" + std::to_string(n));
                   }
                 }
               });
  }

  if (opts.cache_dir) {
    runner.run("cache-integrity",
               "every cache entry matches a byte-identical recomputation",
               [&](SuiteResult& r, std::mt19937&) {
                 const MultiplicityCache cache(*opts.cache_dir);
                 for (const auto& entry : std::filesystem::directory_iterator(*opts.cache_dir)) {
                   if (entry.path().extension() != ".json") continue;
                   ++r.instances;
                   std::ifstream in(entry.path(), std::ios::binary);
                   std::ostringstream buf;
                   buf << in.rdbuf();
                   std::optional<WeightMultiset> stored;
                   try {
                     stored = multiset_from_json(nlohmann::json::parse(buf.str()));
                   } catch (const std::exception& e) {
                     return fail(r, entry.path().filename().string() + ": " + e.what());
                   }
                   if (!(stored->type == datum.type())) continue;  // another datum's entries
                   const WeightMultiset fresh = freudenthal_multiplicities(datum, stored->lambda);
                   if (MultiplicityCache::canonical_bytes(fresh) != buf.str())
                     return fail(r, "stale or corrupt entry " + entry.path().filename().string());
                 }
               });
  }

  return report;
}

}  // namespace cswhit
