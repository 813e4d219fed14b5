#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cswhit/characters.hpp"
#include "cswhit/lattice.hpp"

namespace cswhit {

// A skew-invariant lattice element: the combinatorial model of a spherical
// Whittaker vector. Uniquely a sum of r_mu = alt(e^mu) over strictly
// dominant mu.
struct WhittakerModelElement {
  LatticeElement value;
};

// The model of the twisted Satake map on the polynomial module: alt(f).
// Surjects onto the skew-invariants; its kernel is spanned by the elements
// e^mu - (-1)^{l(w)} e^{w mu}.
WhittakerModelElement twisted_satake_model(const RootDatum& datum, const LatticeElement& f);

// The basis vector alt(e^mu) for strictly dominant mu; the image of the
// characteristic-function basis. Throws DomainError off the strict cone.
WhittakerModelElement phi(const RootDatum& datum, const Coweight& mu);

// Right action of the spherical algebra: multiplication by a_lambda.
WhittakerModelElement hk_action(const RootDatum& datum, const WhittakerModelElement& x,
                                const Coweight& lambda);

// Checks alt(e^rho * a_lambda) = alt(e^{lambda+rho}), the rho-shifted form
// of the spherical compatibility of the twisted Satake map.
bool rho_shift_holds(const RootDatum& datum, const Coweight& lambda);

// delta_B^{1/2}(t_mu) = v^{-<2 rho_G, mu>}.
Scalar delta_half(const RootDatum& datum, const Coweight& mu);

// Whittaker value at t_{lambda+rho}: delta_half(lambda+rho) * tr V_lambda(gamma)
// for dominant lambda, and 0 otherwise.
Scalar whittaker_value(const RootDatum& datum, const Coweight& lambda, const SatakeParameter& gamma);
std::complex<double> whittaker_value(const RootDatum& datum, const Coweight& lambda,
                                     const ComplexSatakeParameter& gamma,
                                     const std::complex<double>& v0);

// Expansion of a skew-invariant element in the basis {alt(e^mu)}, mu
// strictly dominant. Throws DomainError when the input is not skew.
std::map<Coweight, Scalar> skew_expand(const RootDatum& datum, const LatticeElement& f);

struct WhittakerTableRow {
  Coweight lambda;
  Coweight lambda_plus_rho;
  std::string value;  // exact scalar or rational string; complex in float mode
};

// Batch evaluation over all dominant lambda with coordinate sum <= bound.
// Row keys lambda+rho are strictly dominant; values vanish off that cone.
struct WhittakerTable {
  CartanType type;
  std::vector<std::string> gamma;
  std::string q;  // "formal" or the numeric value
  std::vector<WhittakerTableRow> rows;  // sorted by lambda
};

// Exact table; when v0 is given every value is specialized at v = v0
// (so q = v0^2), otherwise values are rational functions of v.
WhittakerTable whittaker_table(const RootDatum& datum, int bound, const SatakeParameter& gamma,
                               const std::optional<Rational>& v0);
WhittakerTable whittaker_table(const RootDatum& datum, int bound, const ComplexSatakeParameter& gamma,
                               const std::complex<double>& v0);

}  // namespace cswhit
