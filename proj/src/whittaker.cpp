#include "cswhit/whittaker.hpp"

#include <iomanip>
#include <sstream>

namespace cswhit {

WhittakerModelElement twisted_satake_model(const RootDatum& datum, const LatticeElement& f) {
  return WhittakerModelElement{alt(datum, f)};
}

WhittakerModelElement phi(const RootDatum& datum, const Coweight& mu) {
  datum.require_rank(mu, "phi");
  if (!mu.is_strictly_dominant())
    throw DomainError("phi: " + mu.to_string() + " is not strictly dominant");
  return WhittakerModelElement{alt(datum, LatticeElement::monomial(mu))};
}

WhittakerModelElement hk_action(const RootDatum& datum, const WhittakerModelElement& x,
                                const Coweight& lambda) {
  return WhittakerModelElement{x.value * weyl_character(datum, lambda)};
}

bool rho_shift_holds(const RootDatum& datum, const Coweight& lambda) {
  const Coweight rho = Coweight::rho(datum.rank());
  const LatticeElement lhs =
      alt(datum, LatticeElement::monomial(rho) * weyl_character(datum, lambda));
  const LatticeElement rhs = alt(datum, LatticeElement::monomial(lambda + rho));
  return lhs == rhs;
}

Scalar delta_half(const RootDatum& datum, const Coweight& mu) {
  return Scalar::v_power(-datum.pairing_two_rho(mu));
}

Scalar whittaker_value(const RootDatum& datum, const Coweight& lambda, const SatakeParameter& gamma) {
  datum.require_rank(lambda, "whittaker_value");
  if (!lambda.is_dominant()) return Scalar::zero();
  const Coweight rho = Coweight::rho(datum.rank());
  return delta_half(datum, lambda + rho) * evaluate_at(weyl_character(datum, lambda), gamma);
}

std::complex<double> whittaker_value(const RootDatum& datum, const Coweight& lambda,
                                     const ComplexSatakeParameter& gamma,
                                     const std::complex<double>& v0) {
  datum.require_rank(lambda, "whittaker_value");
  if (!lambda.is_dominant()) return {0.0, 0.0};
  const Coweight rho = Coweight::rho(datum.rank());
  return delta_half(datum, lambda + rho).specialize(v0) *
         evaluate_at(weyl_character(datum, lambda), gamma, v0);
}

std::map<Coweight, Scalar> skew_expand(const RootDatum& datum, const LatticeElement& f) {
  if (!is_skew_invariant(datum, f))
    throw DomainError("skew_expand: input is not skew-invariant");
  std::map<Coweight, Scalar> out;
  LatticeElement r = f;
  while (!r.is_zero()) {
    // Max-height exponents of a skew element are strictly dominant.
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
    if (!mu.is_strictly_dominant())
      throw DomainError("skew_expand: internal: maximal exponent not strictly dominant");
    const Scalar c = r.coeff(mu);
    r = r - alt(datum, LatticeElement::monomial(mu)) * c;
    out.emplace(mu, c);
  }
  return out;
}

WhittakerTable whittaker_table(const RootDatum& datum, int bound, const SatakeParameter& gamma,
                               const std::optional<Rational>& v0) {
  if (bound < 0) throw DomainError("whittaker_table: negative bound");
  WhittakerTable table{datum.type(), {}, v0 ? to_string((*v0) * (*v0)) : "formal", {}};
  for (const auto& x : gamma.coords) table.gamma.push_back(x.to_string());
  const Coweight rho = Coweight::rho(datum.rank());
  for (const auto& lambda : dominant_coweights_up_to(datum.rank(), bound)) {
    const Scalar value = whittaker_value(datum, lambda, gamma);
    std::string rendered = v0 ? to_string(value.specialize(*v0)) : value.to_string();
    table.rows.push_back(WhittakerTableRow{lambda, lambda + rho, std::move(rendered)});
  }
  return table;
}

WhittakerTable whittaker_table(const RootDatum& datum, int bound, const ComplexSatakeParameter& gamma,
                               const std::complex<double>& v0) {
  if (bound < 0) throw DomainError("whittaker_table: negative bound");
  WhittakerTable table{datum.type(), {}, "", {}};
  {
    std::ostringstream q;
    q << std::setprecision(17) << (v0 * v0).real();
    if ((v0 * v0).imag() != 0.0) q << (((v0 * v0).imag() < 0) ? "" : "+") << (v0 * v0).imag() << "i";
    table.q = q.str();
  }
  for (const auto& x : gamma.coords) {
    std::ostringstream s;
    s << std::setprecision(17) << x.real();
    if (x.imag() != 0.0) s << (x.imag() < 0 ? "" : "+") << x.imag() << "i";
    table.gamma.push_back(s.str());
  }
  const Coweight rho = Coweight::rho(datum.rank());
  for (const auto& lambda : dominant_coweights_up_to(datum.rank(), bound)) {
    const std::complex<double> value = whittaker_value(datum, lambda, gamma, v0);
    std::ostringstream s;
    s << std::setprecision(17) << value.real();
    if (value.imag() != 0.0) s << (value.imag() < 0 ? "" : "+") << value.imag() << "i";
    table.rows.push_back(WhittakerTableRow{lambda, lambda + rho, s.str()});
  }
  return table;
}

}  // namespace cswhit
