#pragma once

#include <complex>
#include <map>
#include <vector>

#include "cswhit/lattice.hpp"
#include "cswhit/root_datum.hpp"

namespace cswhit {

// Weight multiplicities of the irreducible dual-group module with highest
// weight lambda, indexed by the dominant orbit representatives. The full
// multiset is recovered by expanding each dominant weight over its orbit.
struct WeightMultiset {
  CartanType type;
  Coweight lambda;
  std::map<Coweight, Int> dominant_mults;

  Int multiplicity(const RootDatum& datum, const Coweight& nu) const;
  Int dimension(const RootDatum& datum) const;
};

// Weight multiplicities by the Freudenthal recursion on the dual root
// system (roots = positive coroots, inner product = symmetrized Cartan
// form). Serves as the oracle independent of the bialternant path.
// Results are memoized per (type, lambda); the cache is thread safe.
WeightMultiset freudenthal_multiplicities(const RootDatum& datum, const Coweight& lambda);

// sum over nu of m_nu * (orbit sum of e^mu), the character as a lattice element.
LatticeElement orbit_expansion(const RootDatum& datum, const WeightMultiset& weights);

// a_lambda via the bialternant quotient alt(e^{lambda+rho}) / alt(e^rho).
LatticeElement weyl_character(const RootDatum& datum, const Coweight& lambda);

// Writes a W-invariant element as sum c_lambda a_lambda by repeatedly
// stripping a dominance-maximal dominant exponent.
std::map<Coweight, Scalar> decompose_invariant(const RootDatum& datum, const LatticeElement& f);

// Weyl dimension formula over the dual root system; an independent
// cross-check for the two multiplicity paths.
Int weyl_dimension(const RootDatum& datum, const Coweight& lambda);

// A Satake parameter: nonzero scalar coordinates on the coordinate basis of
// the lattice, evaluated multiplicatively. Exact coordinates live in Q(v)
// (rationals embed as constants); a complex variant supports float gamma.
struct SatakeParameter {
  std::vector<Scalar> coords;

  explicit SatakeParameter(std::vector<Scalar> xs);
  static SatakeParameter from_rationals(const std::vector<Rational>& xs);
  int rank() const { return static_cast<int>(coords.size()); }
  Scalar value(const Coweight& mu) const;
};

struct ComplexSatakeParameter {
  std::vector<std::complex<double>> coords;

  explicit ComplexSatakeParameter(std::vector<std::complex<double>> xs);
  int rank() const { return static_cast<int>(coords.size()); }
  std::complex<double> value(const Coweight& mu) const;
};

// Ring homomorphism e^mu -> gamma(mu), extended linearly.
Scalar evaluate_at(const LatticeElement& f, const SatakeParameter& gamma);
// Numeric path: coefficients are specialized at v = v0 first.
std::complex<double> evaluate_at(const LatticeElement& f, const ComplexSatakeParameter& gamma,
                                 const std::complex<double>& v0);

// Trace of the module at gamma computed from the weight multiset alone:
// sum m_nu gamma(nu) over the full orbit expansion.
Scalar trace_at(const RootDatum& datum, const WeightMultiset& weights, const SatakeParameter& gamma);
std::complex<double> trace_at(const RootDatum& datum, const WeightMultiset& weights,
                              const ComplexSatakeParameter& gamma);

}  // namespace cswhit
