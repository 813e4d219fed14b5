#include "cswhit/lattice.hpp"

#include <algorithm>
#include <sstream>

namespace cswhit {

LatticeElement LatticeElement::monomial(Coweight mu, Scalar c) {
  LatticeElement f;
  if (!c.is_zero()) f.terms_.emplace(std::move(mu), std::move(c));
  return f;
}

Scalar LatticeElement::coeff(const Coweight& mu) const {
  auto it = terms_.find(mu);
  return it == terms_.end() ? Scalar::zero() : it->second;
}

void LatticeElement::add_term(const Coweight& mu, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(mu, c);
  if (!inserted) {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LatticeElement LatticeElement::operator+(const LatticeElement& o) const {
  LatticeElement r = *this;
  for (const auto& [mu, c] : o.terms_) r.add_term(mu, c);
  return r;
}

LatticeElement LatticeElement::operator-(const LatticeElement& o) const {
  LatticeElement r = *this;
  for (const auto& [mu, c] : o.terms_) r.add_term(mu, -c);
  return r;
}

LatticeElement LatticeElement::operator-() const {
  LatticeElement r;
  for (const auto& [mu, c] : terms_) r.terms_.emplace(mu, -c);
  return r;
}

LatticeElement LatticeElement::operator*(const LatticeElement& o) const {
  LatticeElement r;
  for (const auto& [mu, c] : terms_)
    for (const auto& [nu, d] : o.terms_) r.add_term(mu + nu, c * d);
  return r;
}

LatticeElement LatticeElement::operator*(const Scalar& c) const {
  if (c.is_zero()) return LatticeElement();
  LatticeElement r;
  for (const auto& [mu, a] : terms_) r.terms_.emplace(mu, a * c);
  return r;
}

std::string LatticeElement::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [mu, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    if (c.is_one())
      out << "e" << mu.to_string();
    else
      out << "(" << c.to_string() << ")*e" << mu.to_string();
  }
  return out.str();
}

LatticeElement weyl_act(const RootDatum& datum, const WeylElement& w, const LatticeElement& f) {
  LatticeElement r;
  for (const auto& [mu, c] : f.terms()) r.add_term(datum.act(w, mu), c);
  return r;
}

LatticeElement weyl_act(const RootDatum& datum, int w_id, const LatticeElement& f) {
  return weyl_act(datum, datum.weyl(w_id), f);
}

LatticeElement alt(const RootDatum& datum, const LatticeElement& f) {
  LatticeElement r;
  for (const auto& w : datum.weyl_group()) {
    const Scalar sign(static_cast<long>(w.sign()));
    for (const auto& [mu, c] : f.terms()) r.add_term(datum.act(w, mu), c * sign);
  }
  return r;
}

bool is_invariant(const RootDatum& datum, const LatticeElement& f) {
  for (int i = 0; i < datum.rank(); ++i) {
    LatticeElement g;
    for (const auto& [mu, c] : f.terms()) g.add_term(datum.reflect_simple(i, mu), c);
    if (!(g == f)) return false;
  }
  return true;
}

bool is_skew_invariant(const RootDatum& datum, const LatticeElement& f) {
  for (int i = 0; i < datum.rank(); ++i) {
    LatticeElement g;
    for (const auto& [mu, c] : f.terms()) g.add_term(datum.reflect_simple(i, mu), c);
    if (!(g == -f)) return false;
  }
  return true;
}

LatticeElement exact_divide(const LatticeElement& f, const LatticeElement& g) {
  if (g.is_zero()) throw DomainError("exact_divide: division by zero");
  if (f.is_zero()) return LatticeElement();

  const int rank = f.terms().begin()->first.rank();
  // Minkowski bound: any quotient exponent lies in box(f) - box(g),
  // coordinatewise.
  std::vector<int> lo(static_cast<size_t>(rank)), hi(static_cast<size_t>(rank));
  for (int d = 0; d < rank; ++d) {
    int fmin = 0, fmax = 0, gmin = 0, gmax = 0;
    bool first = true;
    for (const auto& [mu, c] : f.terms()) {
      (void)c;
      if (first || mu[d] < fmin) fmin = mu[d];
      if (first || mu[d] > fmax) fmax = mu[d];
      first = false;
    }
    first = true;
    for (const auto& [mu, c] : g.terms()) {
      (void)c;
      if (first || mu[d] < gmin) gmin = mu[d];
      if (first || mu[d] > gmax) gmax = mu[d];
      first = false;
    }
    lo[static_cast<size_t>(d)] = fmin - gmin;
    hi[static_cast<size_t>(d)] = fmax - gmax;
  }
  auto in_box = [&](const Coweight& e) {
    for (int d = 0; d < rank; ++d)
      if (e[d] < lo[static_cast<size_t>(d)] || e[d] > hi[static_cast<size_t>(d)]) return false;
    return true;
  };

  const auto& glead = *g.terms().rbegin();
  LatticeElement h;
  LatticeElement r = f;
  while (!r.is_zero()) {
    const auto& rlead = *r.terms().rbegin();
    Coweight e = rlead.first - glead.first;
    if (!in_box(e)) throw NotDivisibleError(r);
    Scalar c = rlead.second / glead.second;
    h.add_term(e, c);
    r = r - g * LatticeElement::monomial(e, c);
  }
  return h;
}

LatticeElement truncated_geometric(const RootDatum& datum, const Coweight& mu, int i) {
  if (i < 0 || i >= datum.rank()) throw DomainError("truncated_geometric: index out of range");
  const int k = mu[i];
  if (k == 0) return LatticeElement();
  const Coweight a = datum.simple_coroot(i);
  LatticeElement r;
  if (k > 0) {
    Coweight e = mu;
    for (int j = 0; j < k; ++j) {
      r.add_term(e, Scalar(-1L));
      e = e - a;
    }
  } else {
    Coweight e = datum.reflect_simple(i, mu);
    for (int j = 0; j < -k; ++j) {
      r.add_term(e, Scalar::one());
      e = e - a;
    }
  }
  return r;
}

}  // namespace cswhit
