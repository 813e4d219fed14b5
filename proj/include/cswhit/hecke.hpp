#pragma once

#include <map>
#include <string>
#include <utility>

#include "cswhit/characters.hpp"
#include "cswhit/lattice.hpp"
#include "cswhit/root_datum.hpp"

namespace cswhit {

// Basis label t_w theta_mu of the Iwahori-Hecke algebra in Bernstein form.
struct HeckeTermKey {
  int w_id = 0;
  Coweight mu;
  auto operator<=>(const HeckeTermKey&) const = default;
};

// An element of the Iwahori-Hecke algebra stored in the normal form
// sum c_{w,mu} t_w theta_mu (finite part on the left, lattice part on the
// right); theta_0 = t_e is the identity. No zero coefficients are kept.
class HeckeElement {
 public:
  HeckeElement() = default;

  static HeckeElement zero() { return HeckeElement(); }
  static HeckeElement monomial(int w_id, Coweight mu, Scalar c = Scalar::one());
  static HeckeElement identity(int rank);

  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  const std::map<HeckeTermKey, Scalar>& terms() const { return terms_; }
  Scalar coeff(int w_id, const Coweight& mu) const;

  void add_term(int w_id, const Coweight& mu, const Scalar& c);

  HeckeElement operator+(const HeckeElement& o) const;
  HeckeElement operator-(const HeckeElement& o) const;
  HeckeElement operator-() const;
  HeckeElement operator*(const Scalar& c) const;
  bool operator==(const HeckeElement&) const = default;

  std::string to_string(const RootDatum& datum) const;

 private:
  std::map<HeckeTermKey, Scalar> terms_;
};

inline HeckeElement operator*(const Scalar& c, const HeckeElement& x) { return x * c; }

// Lattice generator theta_mu.
HeckeElement theta(const Coweight& mu);
// Finite generator t_{s_i}.
HeckeElement t_simple(const RootDatum& datum, int i);
// Basis element t_w; equals the product of t_{s_i} along any reduced word.
HeckeElement t_word(const RootDatum& datum, const WeylElement& w);

// Exact product in normal form. Right multiplication by theta_nu extends
// the lattice part; right multiplication by t_s uses
//   theta_mu t_s = t_s theta_{s mu} - (1-q) * tg(s mu)
// (the rearranged commutation relation, tg the truncated geometric sum)
// followed by t_w t_s = t_{ws} or q t_{ws} + (q-1) t_w.
HeckeElement hecke_mul(const RootDatum& datum, const HeckeElement& x, const HeckeElement& y);

// Action on the polynomial model of the spherical-vector module: theta_nu
// acts by multiplication with e^nu, t_s by the Demazure-Lusztig operator
//   T_s(e^mu) = q e^{s mu} + (1-q) tg(mu).
LatticeElement polynomial_action(const RootDatum& datum, const HeckeElement& x, const LatticeElement& f);

// The Demazure-Lusztig operator for one simple reflection.
LatticeElement demazure_lusztig(const RootDatum& datum, int i, const LatticeElement& f);

// z_lambda = sum over the weight multiset of V_lambda of theta_nu; central.
HeckeElement central_element(const RootDatum& datum, const Coweight& lambda);

// 1 + t_{s_i}, the parahoric indicator; alt annihilates its action.
HeckeElement iota(const RootDatum& datum, int i);

}  // namespace cswhit
