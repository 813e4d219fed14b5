#include "cswhit/hecke.hpp"

#include <sstream>

namespace cswhit {

HeckeElement HeckeElement::monomial(int w_id, Coweight mu, Scalar c) {
  HeckeElement x;
  if (!c.is_zero()) x.terms_.emplace(HeckeTermKey{w_id, std::move(mu)}, std::move(c));
  return x;
}

HeckeElement HeckeElement::identity(int rank) {
  return monomial(0, Coweight::zero(rank));
}

Scalar HeckeElement::coeff(int w_id, const Coweight& mu) const {
  auto it = terms_.find(HeckeTermKey{w_id, mu});
  return it == terms_.end() ? Scalar::zero() : it->second;
}

void HeckeElement::add_term(int w_id, const Coweight& mu, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(HeckeTermKey{w_id, mu}, c);
  if (!inserted) {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HeckeElement HeckeElement::operator+(const HeckeElement& o) const {
  HeckeElement r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k.w_id, k.mu, c);
  return r;
}

HeckeElement HeckeElement::operator-(const HeckeElement& o) const {
  HeckeElement r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k.w_id, k.mu, -c);
  return r;
}

HeckeElement HeckeElement::operator-() const {
  HeckeElement r;
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}

HeckeElement HeckeElement::operator*(const Scalar& c) const {
  if (c.is_zero()) return HeckeElement();
  HeckeElement r;
  for (const auto& [k, a] : terms_) r.terms_.emplace(k, a * c);
  return r;
}

std::string HeckeElement::to_string(const RootDatum& datum) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << "(" << c.to_string() << ")*";
    const auto& word = datum.weyl(k.w_id).word;
    if (word.empty()) {
      out << "1";
    } else {
      out << "t[";
      for (size_t j = 0; j < word.size(); ++j) {
        if (j) out << ",";
        out << word[j] + 1;
      }
      out << "]";
    }
    out << "*th" << k.mu.to_string();
  }
  return out.str();
}

HeckeElement theta(const Coweight& mu) { return HeckeElement::monomial(0, mu); }

HeckeElement t_simple(const RootDatum& datum, int i) {
  if (i < 0 || i >= datum.rank()) throw DomainError("t_simple: index out of range");
  const int id = datum.mult_simple_right(0, i);
  return HeckeElement::monomial(id, Coweight::zero(datum.rank()));
}

HeckeElement t_word(const RootDatum& datum, const WeylElement& w) {
  return HeckeElement::monomial(w.id, Coweight::zero(datum.rank()));
}

namespace {

// x * t_{s_i} for x in normal form.
HeckeElement right_mul_ts(const RootDatum& datum, const HeckeElement& x, int i) {
  const Scalar q = Scalar::q();
  const Scalar q_minus_1 = q - Scalar::one();
  const Scalar one_minus_q = Scalar::one() - q;
  HeckeElement out;
  for (const auto& [k, c] : x.terms()) {
    const Coweight nu = datum.reflect_simple(i, k.mu);
    // t_w (t_s theta_nu) part
    const int ws = datum.mult_simple_right(k.w_id, i);
    if (datum.weyl(ws).length > datum.weyl(k.w_id).length) {
      out.add_term(ws, nu, c);
    } else {
      out.add_term(ws, nu, c * q);
      out.add_term(k.w_id, nu, c * q_minus_1);
    }
    // -(1-q) t_w tg(nu) part
    const LatticeElement tg = truncated_geometric(datum, nu, i);
    const Scalar factor = c * one_minus_q;
    for (const auto& [kappa, d] : tg.terms()) out.add_term(k.w_id, kappa, -(factor * d));
  }
  return out;
}

HeckeElement right_mul_theta(const HeckeElement& x, const Coweight& nu) {
  HeckeElement out;
  for (const auto& [k, c] : x.terms()) out.add_term(k.w_id, k.mu + nu, c);
  return out;
}

}  // namespace

HeckeElement hecke_mul(const RootDatum& datum, const HeckeElement& x, const HeckeElement& y) {
  HeckeElement out;
  for (const auto& [k, c] : y.terms()) {
    HeckeElement acc = x * c;
    for (int i : datum.weyl(k.w_id).word) acc = right_mul_ts(datum, acc, i);
    acc = right_mul_theta(acc, k.mu);
    out = out + acc;
  }
  return out;
}

LatticeElement demazure_lusztig(const RootDatum& datum, int i, const LatticeElement& f) {
  const Scalar q = Scalar::q();
  const Scalar one_minus_q = Scalar::one() - q;
  LatticeElement out;
  for (const auto& [mu, c] : f.terms()) {
    out.add_term(datum.reflect_simple(i, mu), c * q);
    const LatticeElement tg = truncated_geometric(datum, mu, i);
    const Scalar factor = c * one_minus_q;
    for (const auto& [kappa, d] : tg.terms()) out.add_term(kappa, factor * d);
  }
  return out;
}

LatticeElement polynomial_action(const RootDatum& datum, const HeckeElement& x, const LatticeElement& f) {
  LatticeElement out;
  for (const auto& [k, c] : x.terms()) {
    LatticeElement g = f * LatticeElement::monomial(k.mu);
    const auto& word = datum.weyl(k.w_id).word;
    for (auto it = word.rbegin(); it != word.rend(); ++it) g = demazure_lusztig(datum, *it, g);
    out = out + g * c;
  }
  return out;
}

HeckeElement central_element(const RootDatum& datum, const Coweight& lambda) {
  const WeightMultiset weights = freudenthal_multiplicities(datum, lambda);
  HeckeElement z;
  for (const auto& [nu, m] : weights.dominant_mults) {
    const Scalar c{Int(m)};
    for (const auto& x : datum.orbit_set(nu)) z.add_term(0, x, c);
  }
  return z;
}

HeckeElement iota(const RootDatum& datum, int i) {
  return HeckeElement::identity(datum.rank()) + t_simple(datum, i);
}

}  // namespace cswhit
