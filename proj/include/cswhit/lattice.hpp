#pragma once

#include <map>
#include <string>

#include "cswhit/root_datum.hpp"
#include "cswhit/scalar.hpp"

namespace cswhit {

// An element of the group algebra of the coweight lattice over Q(v): a
// sparse finite sum of exponentials e^mu with nonzero Scalar coefficients.
// Terms are kept in lexicographic exponent order and zero coefficients are
// purged eagerly, so equality is structural.
class LatticeElement {
 public:
  LatticeElement() = default;

  static LatticeElement zero() { return LatticeElement(); }
  static LatticeElement monomial(Coweight mu, Scalar c = Scalar::one());
  static LatticeElement unit(int rank) { return monomial(Coweight::zero(rank)); }

  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  Scalar coeff(const Coweight& mu) const;
  const std::map<Coweight, Scalar>& terms() const { return terms_; }

  void add_term(const Coweight& mu, const Scalar& c);

  LatticeElement operator+(const LatticeElement& o) const;
  LatticeElement operator-(const LatticeElement& o) const;
  LatticeElement operator-() const;
  LatticeElement operator*(const LatticeElement& o) const;
  LatticeElement operator*(const Scalar& c) const;
  bool operator==(const LatticeElement&) const = default;

  std::string to_string() const;

 private:
  std::map<Coweight, Scalar> terms_;
};

inline LatticeElement operator*(const Scalar& c, const LatticeElement& f) { return f * c; }

// e^mu -> e^{w mu}, extended linearly; an algebra automorphism.
LatticeElement weyl_act(const RootDatum& datum, const WeylElement& w, const LatticeElement& f);
LatticeElement weyl_act(const RootDatum& datum, int w_id, const LatticeElement& f);

// alt(f) = sum over W of (-1)^{l(w)} w(f); lands in the skew-invariants.
LatticeElement alt(const RootDatum& datum, const LatticeElement& f);

// Checked against every simple reflection (sufficient: they generate W).
bool is_invariant(const RootDatum& datum, const LatticeElement& f);
bool is_skew_invariant(const RootDatum& datum, const LatticeElement& f);

// Raised by exact_divide when no quotient exists in the lattice algebra;
// carries the first irreducible remainder.
class NotDivisibleError : public DomainError {
 public:
  explicit NotDivisibleError(LatticeElement remainder)
      : DomainError("lattice element is not divisible; remainder " + remainder.to_string()),
        remainder_(std::move(remainder)) {}
  const LatticeElement& remainder() const { return remainder_; }

 private:
  LatticeElement remainder_;
};

// Returns h with f = g*h, by cancelling lexicographically-greatest terms.
// Quotient exponents are confined to the coordinatewise Minkowski bound
// box(f) - box(g), which both certifies failure and forces termination.
// Throws DomainError when g = 0 and NotDivisibleError when no h exists.
LatticeElement exact_divide(const LatticeElement& f, const LatticeElement& g);

// The finite closed form of (e^{s_i mu} - e^mu) / (1 - e^{-alpha_i^vee}):
// with k = <alpha_i, mu> it is -(e^mu + ... + e^{mu-(k-1)a}) for k > 0,
// zero for k = 0, and e^{s mu} + ... + e^{s mu-(-k-1)a} for k < 0.
LatticeElement truncated_geometric(const RootDatum& datum, const Coweight& mu, int i);

}  // namespace cswhit
