#include "cswhit/characters.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <shared_mutex>

namespace cswhit {

Int WeightMultiset::multiplicity(const RootDatum& datum, const Coweight& nu) const {
  auto it = dominant_mults.find(datum.dominant_representative(nu));
  return it == dominant_mults.end() ? Int(0) : it->second;
}

Int WeightMultiset::dimension(const RootDatum& datum) const {
  Int total(0);
  for (const auto& [nu, m] : dominant_mults)
    total += m * Int(datum.orbit_set(nu).size());
  return total;
}

namespace {

struct MultisetCacheKey {
  std::string type;
  std::vector<int> lambda;
  auto operator<=>(const MultisetCacheKey&) const = default;
};

std::shared_mutex multiset_cache_mutex;
std::map<MultisetCacheKey, WeightMultiset>& multiset_cache() {
  static std::map<MultisetCacheKey, WeightMultiset> cache;
  return cache;
}

WeightMultiset compute_freudenthal(const RootDatum& datum, const Coweight& lambda) {
  const Coweight rho = Coweight::rho(datum.rank());

  // Dominant weights below lambda: breadth-first closure subtracting
  // positive coroots (dominance covers between dominant weights differ by
  // a positive root of the dual system).
  std::set<Coweight> dom{lambda};
  std::vector<Coweight> queue{lambda};
  while (!queue.empty()) {
    Coweight mu = std::move(queue.back());
    queue.pop_back();
    for (const auto& co : datum.positive_coroots()) {
      Coweight nu = mu - datum.coroot_as_coweight(co);
      if (nu.is_dominant() && dom.insert(nu).second) queue.push_back(nu);
    }
  }

  // Process in decreasing height <2 rho_G, .>; lambda first.
  std::vector<Coweight> order(dom.begin(), dom.end());
  std::sort(order.begin(), order.end(), [&](const Coweight& a, const Coweight& b) {
    long long ha = datum.pairing_two_rho(a), hb = datum.pairing_two_rho(b);
    if (ha != hb) return ha > hb;
    return a < b;
  });

  WeightMultiset result{datum.type(), lambda, {}};
  auto lookup = [&](const Coweight& nu) -> Int {
    auto it = result.dominant_mults.find(datum.dominant_representative(nu));
    return it == result.dominant_mults.end() ? Int(0) : it->second;
  };

  for (const auto& mu : order) {
    if (mu == lambda) {
      result.dominant_mults.emplace(mu, Int(1));
      continue;
    }
    // denominator |lambda+rho|^2 - |mu+rho|^2 = (lambda+mu+2rho, lambda-mu)
    std::vector<Int> diff;
    if (!datum.in_coroot_lattice(lambda - mu, diff)) continue;  // different coset, not a weight
    const Coweight both = lambda + mu + rho + rho;
    Int denom(0);
    for (int i = 0; i < datum.rank(); ++i)
      denom += Int(datum.symmetrizers()[static_cast<size_t>(i)]) * Int(both[i]) * diff[static_cast<size_t>(i)];
    if (denom.is_zero())
      throw DomainError("internal: vanishing Freudenthal denominator at " + mu.to_string());

    Int numer(0);
    const long long height_gap = datum.pairing_two_rho(lambda - mu);
    for (const auto& co : datum.positive_coroots()) {
      const Coweight step = datum.coroot_as_coweight(co);
      const long long step_height = datum.pairing_two_rho(step);
      for (long long k = 1; k * step_height <= height_gap; ++k) {
        const Coweight nu = mu + step * static_cast<int>(k);
        Int m = lookup(nu);
        if (m.is_zero()) continue;
        numer += m * Int(datum.coroot_pairing(nu, co));
      }
    }
    numer *= 2;
    if (numer % denom != 0)
      throw DomainError("internal: non-integral Freudenthal multiplicity at " + mu.to_string());
    Int m = numer / denom;
    if (m < 0) throw DomainError("internal: negative Freudenthal multiplicity at " + mu.to_string());
    if (!m.is_zero()) result.dominant_mults.emplace(mu, std::move(m));
  }
  return result;
}

}  // namespace

WeightMultiset freudenthal_multiplicities(const RootDatum& datum, const Coweight& lambda) {
  datum.require_rank(lambda, "freudenthal_multiplicities");
  if (!lambda.is_dominant())
    throw DomainError("freudenthal_multiplicities: lambda " + lambda.to_string() + " is not dominant");

  MultisetCacheKey key{datum.type().to_string(), lambda.coords()};
  {
    std::shared_lock lock(multiset_cache_mutex);
    auto it = multiset_cache().find(key);
    if (it != multiset_cache().end()) return it->second;
  }
  WeightMultiset computed = compute_freudenthal(datum, lambda);
  std::unique_lock lock(multiset_cache_mutex);
  // Idempotent on concurrent insertion: first writer wins.
  auto [it, inserted] = multiset_cache().emplace(std::move(key), std::move(computed));
  return it->second;
}

LatticeElement orbit_expansion(const RootDatum& datum, const WeightMultiset& weights) {
  LatticeElement f;
  for (const auto& [nu, m] : weights.dominant_mults) {
    const Scalar c{Int(m)};
    for (const auto& x : datum.orbit_set(nu)) f.add_term(x, c);
  }
  return f;
}

LatticeElement weyl_character(const RootDatum& datum, const Coweight& lambda) {
  datum.require_rank(lambda, "weyl_character");
  if (!lambda.is_dominant())
    throw DomainError("weyl_character: lambda " + lambda.to_string() + " is not dominant");
  const Coweight rho = Coweight::rho(datum.rank());
  const LatticeElement numer = alt(datum, LatticeElement::monomial(lambda + rho));
  const LatticeElement denom = alt(datum, LatticeElement::monomial(rho));
  return exact_divide(numer, denom);
}

std::map<Coweight, Scalar> decompose_invariant(const RootDatum& datum, const LatticeElement& f) {
  if (!is_invariant(datum, f))
    throw DomainError("decompose_invariant: input is not Weyl invariant");
  std::map<Coweight, Scalar> out;
  LatticeElement r = f;
  while (!r.is_zero()) {
    // The exponents of maximal <2 rho_G, .> in an invariant element are
    // dominant and dominance-maximal; take the lex-greatest for determinism.
    const Coweight* best = nullptr;
    long long best_h = 0;
    for (const auto& [mu, c] : r.terms()) {
      (void)c;
      long long h = datum.pairing_two_rho(mu);
      if (!best || h > best_h || (h == best_h && *best < mu)) {
        best = &mu;
        best_h = h;
      }
    }
    const Coweight mu = *best;
    if (!mu.is_dominant())
      throw DomainError("decompose_invariant: internal: maximal exponent not dominant");
    const Scalar c = r.coeff(mu);
    r = r - weyl_character(datum, mu) * c;
    out.emplace(mu, c);
  }
  return out;
}

Int weyl_dimension(const RootDatum& datum, const Coweight& lambda) {
  datum.require_rank(lambda, "weyl_dimension");
  if (!lambda.is_dominant())
    throw DomainError("weyl_dimension: lambda " + lambda.to_string() + " is not dominant");
  const Coweight rho = Coweight::rho(datum.rank());
  const Coweight shifted = lambda + rho;
  Int numer(1), denom(1);
  for (const auto& co : datum.positive_coroots()) {
    numer *= Int(datum.coroot_pairing(shifted, co));
    denom *= Int(datum.coroot_pairing(rho, co));
  }
  if (numer % denom != 0)
    throw DomainError("internal: Weyl dimension is not integral");
  return numer / denom;
}

// ---------------------------------------------------------------------------
// Satake parameters and evaluation

SatakeParameter::SatakeParameter(std::vector<Scalar> xs) : coords(std::move(xs)) {
  for (const auto& x : coords)
    if (x.is_zero()) throw DomainError("Satake parameter has a zero coordinate");
}

SatakeParameter SatakeParameter::from_rationals(const std::vector<Rational>& xs) {
  std::vector<Scalar> c;
  c.reserve(xs.size());
  for (const auto& x : xs) c.emplace_back(x);
  return SatakeParameter(std::move(c));
}

Scalar SatakeParameter::value(const Coweight& mu) const {
  Scalar acc = Scalar::one();
  for (int i = 0; i < rank(); ++i) acc = acc * coords[static_cast<size_t>(i)].pow(mu[i]);
  return acc;
}

ComplexSatakeParameter::ComplexSatakeParameter(std::vector<std::complex<double>> xs)
    : coords(std::move(xs)) {
  for (const auto& x : coords)
    if (x == std::complex<double>(0.0, 0.0))
      throw DomainError("Satake parameter has a zero coordinate");
}

std::complex<double> ComplexSatakeParameter::value(const Coweight& mu) const {
  std::complex<double> acc(1.0, 0.0);
  for (int i = 0; i < rank(); ++i) {
    int e = mu[i];
    std::complex<double> base = coords[static_cast<size_t>(i)];
    if (e < 0) {
      base = std::complex<double>(1.0, 0.0) / base;
      e = -e;
    }
    for (int k = 0; k < e; ++k) acc *= base;
  }
  return acc;
}

Scalar evaluate_at(const LatticeElement& f, const SatakeParameter& gamma) {
  Scalar acc = Scalar::zero();
  for (const auto& [mu, c] : f.terms()) {
    if (mu.rank() != gamma.rank())
      throw DomainError("evaluate_at: rank mismatch between element and Satake parameter");
    acc = acc + c * gamma.value(mu);
  }
  return acc;
}

std::complex<double> evaluate_at(const LatticeElement& f, const ComplexSatakeParameter& gamma,
                                 const std::complex<double>& v0) {
  std::complex<double> acc(0.0, 0.0);
  for (const auto& [mu, c] : f.terms()) {
    if (mu.rank() != gamma.rank())
      throw DomainError("evaluate_at: rank mismatch between element and Satake parameter");
    acc += c.specialize(v0) * gamma.value(mu);
  }
  return acc;
}

Scalar trace_at(const RootDatum& datum, const WeightMultiset& weights, const SatakeParameter& gamma) {
  Scalar acc = Scalar::zero();
  for (const auto& [nu, m] : weights.dominant_mults) {
    Scalar orbit_sum = Scalar::zero();
    for (const auto& x : datum.orbit_set(nu)) orbit_sum = orbit_sum + gamma.value(x);
    acc = acc + Scalar(Int(m)) * orbit_sum;
  }
  return acc;
}

std::complex<double> trace_at(const RootDatum& datum, const WeightMultiset& weights,
                              const ComplexSatakeParameter& gamma) {
  std::complex<double> acc(0.0, 0.0);
  for (const auto& [nu, m] : weights.dominant_mults) {
    std::complex<double> orbit_sum(0.0, 0.0);
    for (const auto& x : datum.orbit_set(nu)) orbit_sum += gamma.value(x);
    acc += m.convert_to<double>() * orbit_sum;
  }
  return acc;
}

}  // namespace cswhit
